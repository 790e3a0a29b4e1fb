#pragma once

#include "feuler/dirichlet.hpp"
#include "feuler/fe_engine.hpp"

namespace feuler {

// p-adic integer known modulo p^precision, residue kept in [0, p^precision).
// Ring operations work at the minimum precision of the operands; inversion
// needs a unit; dividing by p^v costs v digits of precision.
class PadicInt {
public:
    PadicInt(long p, int precision, const BigInt& value);

    static PadicInt from_rational(const Rational& q, long p, int precision);

    long prime() const { return p_; }
    int precision() const { return prec_; }
    const BigInt& residue() const { return res_; }
    const BigInt& modulus() const { return mod_; }

    // largest v <= precision with p^v | residue; valuation of 0 is precision
    // ("at least this many")
    int valuation() const;
    bool is_unit() const { return valuation() == 0; }
    bool is_zero() const { return res_ == 0; }

    PadicInt with_precision(int precision) const;

    PadicInt operator-() const;
    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt& operator+=(const PadicInt& o) { return *this = *this + o; }
    PadicInt& operator-=(const PadicInt& o) { return *this = *this - o; }
    PadicInt& operator*=(const PadicInt& o) { return *this = *this * o; }

    PadicInt inverse() const;
    // exact quotient: strips p^v from the divisor, requires p^v to divide
    // this residue as well; result loses v digits of precision
    PadicInt operator/(const PadicInt& o) const;

    // equality of residues at the common precision
    bool operator==(const PadicInt& o) const;
    bool operator!=(const PadicInt& o) const { return !(*this == o); }

    // base-p digits, least significant first, precision() of them
    std::vector<long> digits() const;
    std::string to_string() const;

private:
    long p_;
    int prec_;
    BigInt res_;
    BigInt mod_;

    void reduce();
};

inline PadicInt one_like(const PadicInt& x) {
    return PadicInt(x.prime(), x.precision(), BigInt(1));
}

// number of agreeing low-order digits (valuation of the difference, capped at
// the common precision)
int agree_digits(const PadicInt& a, const PadicInt& b);

template <>
struct UContext<PadicInt> {
    PadicInt u;
    PadicInt from_q(const Rational& q) const {
        return PadicInt::from_rational(q, u.prime(), u.precision());
    }
};

inline UContext<PadicInt> padic_ctx(const PadicInt& u) { return {u}; }

// num(u)/den(u) with exact rational coefficients mapped mod p^precision
PadicInt urat_eval_padic(const URational& f, const PadicInt& u);

// checks that u is a unit with u != 1 (mod p), the implementable reading of
// |1-u|_p >= 1; throws invalid_u_error otherwise
void require_euler_unit(const PadicInt& u);

// --- the invariant p-adic Euler integral and its variants -------------------

struct EulerIntegralRequest {
    UPoly integrand;      // polynomial g with p-integral rational coefficients
    PadicInt u;           // unit, u != 1 mod p
    int level = 1;        // Riemann-sum level p^level
};

// level-N Riemann sum (1/(1-u^{p^N})) sum_{j<p^N} g(j) u^{p^N-j}; the exact
// finite sum, not the limit
PadicInt euler_integral_poly(const EulerIntegralRequest& req);

// the n-th moment's closed form (u/(1-u)) H_n(u), exactly or p-adically
Rational moment_exact(int n, const Rational& u_val);
PadicInt moment_exact(int n, const PadicInt& u);

// level-N truncation of the r-fold integral of (sum a_j x_j + w)^n
PadicInt multi_moment(int n, int r, const Rational& w, const std::vector<long>& weights,
                      const PadicInt& u, int level);

struct WittResult {
    PadicInt lhs;  // H_{n,chi}^{(r)}(u) / (1-u^d)^r, exact side evaluated
    PadicInt rhs;  // level-N Riemann sum
    int agree_digits;
};

// Witt-type formula comparison at level N; chi must be {±1}-valued or trivial
WittResult witt_check(int n, int r, const PadicInt& u, int level, const DirichletCharacter& chi);

// level-N sum restricted to tuples with x_1+...+x_r ≡ 0 (mod p)
PadicInt restricted_moment(int n, int r, const PadicInt& u, int level);

// closed form the restricted Riemann sums converge to:
// p^n (u^p/(1-u^p))^r sum_{a in J} u^{-sum a} H_n^{(r)}((sum a)/p, u^p | 1..1)
PadicInt restricted_closed_form(int n, int r, const PadicInt& u);

// zeta_{p,r}(u, -k): full moment closed form minus restricted closed form
PadicInt padic_zeta_negk(int k, int r, const PadicInt& u);

} // namespace feuler
