#include "feuler/padic.hpp"

#include "feuler/frobenius.hpp"

namespace feuler {

PadicInt::PadicInt(long p, int precision, const BigInt& value) : p_(p), prec_(precision), res_(value) {
    if (p < 2) throw invalid_input("p-adic prime must be at least 2");
    if (precision < 1) throw invalid_input("p-adic precision must be at least 1");
    mod_ = bigint_pow(p, static_cast<unsigned long>(precision));
    reduce();
}

void PadicInt::reduce() {
    mpz_mod(res_.get_mpz_t(), res_.get_mpz_t(), mod_.get_mpz_t());
}

PadicInt PadicInt::from_rational(const Rational& q, long p, int precision) {
    BigInt den = q.den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        throw invalid_input("rational " + q.to_string() + " is not a p-adic integer for p = " +
                            std::to_string(p));
    PadicInt r(p, precision, q.num());
    BigInt dinv = mod_inverse(den, r.mod_);
    r.res_ = r.res_ * dinv;
    r.reduce();
    return r;
}

int PadicInt::valuation() const {
    return int_valuation(res_, p_, prec_);
}

PadicInt PadicInt::with_precision(int precision) const {
    if (precision > prec_) throw invalid_input("cannot raise p-adic precision");
    return PadicInt(p_, precision, res_);
}

PadicInt PadicInt::operator-() const {
    PadicInt r = *this;
    r.res_ = mod_ - res_;
    r.reduce();
    return r;
}

namespace {
void check_same_prime(const PadicInt& a, const PadicInt& b) {
    if (a.prime() != b.prime())
        throw invalid_input("p-adic operands with different primes");
}
} // namespace

PadicInt PadicInt::operator+(const PadicInt& o) const {
    check_same_prime(*this, o);
    PadicInt r(p_, std::min(prec_, o.prec_), res_ + o.res_);
    return r;
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    check_same_prime(*this, o);
    return PadicInt(p_, std::min(prec_, o.prec_), res_ - o.res_);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    check_same_prime(*this, o);
    return PadicInt(p_, std::min(prec_, o.prec_), res_ * o.res_);
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw non_invertible("p-adic inverse of a non-unit");
    return PadicInt(p_, prec_, mod_inverse(res_, mod_));
}

PadicInt PadicInt::operator/(const PadicInt& o) const {
    check_same_prime(*this, o);
    int v = o.valuation();
    if (v >= o.prec_) throw non_invertible("p-adic division by zero (to working precision)");
    if (v == 0) return *this * o.inverse();
    BigInt pv = bigint_pow(p_, static_cast<unsigned long>(v));
    if (!mpz_divisible_p(res_.get_mpz_t(), pv.get_mpz_t()))
        throw non_invertible("p-adic quotient is not an integer");
    int prec = std::min(prec_, o.prec_) - v;
    if (prec < 1) throw non_invertible("p-adic division exhausts the working precision");
    PadicInt unit(p_, prec, o.res_ / pv);
    return PadicInt(p_, prec, res_ / pv) * unit.inverse();
}

bool PadicInt::operator==(const PadicInt& o) const {
    if (p_ != o.p_) return false;
    int prec = std::min(prec_, o.prec_);
    BigInt m = bigint_pow(p_, static_cast<unsigned long>(prec));
    return (res_ - o.res_) % m == 0;
}

std::vector<long> PadicInt::digits() const {
    std::vector<long> ds;
    ds.reserve(static_cast<std::size_t>(prec_));
    BigInt rest = res_;
    for (int i = 0; i < prec_; ++i) {
        BigInt digit = rest % p_;
        ds.push_back(digit.get_si());
        rest /= p_;
    }
    return ds;
}

std::string PadicInt::to_string() const {
    return res_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(prec_);
}

int agree_digits(const PadicInt& a, const PadicInt& b) {
    return (a - b).valuation();
}

PadicInt urat_eval_padic(const URational& f, const PadicInt& u) {
    auto eval_poly = [&u](const UPoly& p) {
        PadicInt acc(u.prime(), u.precision(), BigInt(0));
        for (int i = p.degree(); i >= 0; --i)
            acc = acc * u + PadicInt::from_rational(p.coeff(i), u.prime(), u.precision());
        return acc;
    };
    PadicInt den = eval_poly(f.den());
    if (!den.is_unit())
        throw non_invertible("denominator evaluates to a non-unit at u = " + u.to_string());
    return eval_poly(f.num()) * den.inverse();
}

void require_euler_unit(const PadicInt& u) {
    if (!u.is_unit())
        throw invalid_u_error("u must be a p-adic unit");
    BigInt r = u.residue() % u.prime();
    if (r == 1)
        throw invalid_u_error("u ≡ 1 (mod p) violates |1-u|_p >= 1");
}

PadicInt euler_integral_poly(const EulerIntegralRequest& req) {
    require_euler_unit(req.u);
    if (req.level < 0) throw invalid_input("negative Riemann-sum level");
    const PadicInt& u = req.u;
    const long p = u.prime();
    long levels = 1;
    for (int i = 0; i < req.level; ++i) levels *= p;

    std::vector<PadicInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(req.integrand.degree()) + 1);
    for (int i = 0; i <= req.integrand.degree(); ++i)
        coeffs.push_back(PadicInt::from_rational(req.integrand.coeff(i), p, u.precision()));

    PadicInt sum(p, u.precision(), BigInt(0));
    PadicInt upow = pow_k(u, levels); // u^{p^N - j}, starting at j = 0
    PadicInt uinv = u.inverse();
    for (long j = 0; j < levels; ++j) {
        PadicInt gj(p, u.precision(), BigInt(0));
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            gj = gj * PadicInt(p, u.precision(), BigInt(j)) + *it;
        sum += gj * upow;
        upow *= uinv;
    }
    if (req.integrand.is_zero()) return sum; // zero either way
    PadicInt denom = one_like(u) - pow_k(u, levels);
    return sum * denom.inverse();
}

Rational moment_exact(int n, const Rational& u_val) {
    const URational u = URational::indeterminate();
    URational m = u / (URational(1) - u) * fe_number(n);
    return m.eval_at(u_val);
}

PadicInt moment_exact(int n, const PadicInt& u) {
    require_euler_unit(u);
    const URational sym = URational::indeterminate();
    URational m = sym / (URational(1) - sym) * fe_number(n);
    return urat_eval_padic(m, u);
}

PadicInt multi_moment(int n, int r, const Rational& w, const std::vector<long>& weights,
                      const PadicInt& u, int level) {
    require_euler_unit(u);
    if (static_cast<int>(weights.size()) != r) throw invalid_input("weights length must equal the order");
    const long p = u.prime();
    long per = 1;
    for (int i = 0; i < level; ++i) per *= p;

    auto counts = tuple_sum_pair_counts(r, per, weights);
    PadicInt sum(p, u.precision(), BigInt(0));
    for (const auto& [key, cnt] : counts) {
        const auto [s, t] = key;
        Rational integrand = (Rational(t) + w).pow(n) * Rational(cnt);
        sum += PadicInt::from_rational(integrand, p, u.precision()) *
               pow_k(u, static_cast<long>(r) * per - s);
    }
    return sum * pow_k(one_like(u) - pow_k(u, per), -static_cast<long>(r));
}

WittResult witt_check(int n, int r, const PadicInt& u, int level, const DirichletCharacter& chi) {
    require_euler_unit(u);
    if (!chi.is_pm_one())
        throw unsupported_character("p-adic Witt comparison needs a {±1}-valued character");
    const long p = u.prime();
    const int d = chi.modulus();
    long per = d;
    for (int i = 0; i < level; ++i) per *= p;

    // level-N Riemann sum with per-coordinate weight u^{per - x_j}
    std::vector<BigInt> counts = tuple_sum_counts(r, per);
    PadicInt sum(p, u.precision(), BigInt(0));
    for (long s = 0; s < static_cast<long>(counts.size()); ++s) {
        Rational chi_s = chi.value_pm(s);
        if (chi_s.is_zero()) continue;
        Rational coeff = chi_s * Rational(BigInt(s)).pow(n) * Rational(counts[static_cast<std::size_t>(s)]);
        sum += PadicInt::from_rational(coeff, p, u.precision()) *
               pow_k(u, static_cast<long>(r) * per - s);
    }
    PadicInt rhs = sum * pow_k(one_like(u) - pow_k(u, per), -static_cast<long>(r));

    CycloURational twisted = fe_gen_chi(n, r, chi);
    URational exact = twisted.scalar_value(); // order <= 2 rings are scalar
    PadicInt denom = one_like(u) - pow_k(u, d);
    if (!denom.is_unit())
        throw invalid_u_error("1 - u^d is not a unit for d = " + std::to_string(d));
    PadicInt lhs = urat_eval_padic(exact, u) * pow_k(denom, -static_cast<long>(r));

    return {lhs, rhs, agree_digits(lhs, rhs)};
}

PadicInt restricted_moment(int n, int r, const PadicInt& u, int level) {
    require_euler_unit(u);
    const long p = u.prime();
    long per = 1;
    for (int i = 0; i < level; ++i) per *= p;

    std::vector<BigInt> counts = tuple_sum_counts(r, per);
    PadicInt sum(p, u.precision(), BigInt(0));
    for (long s = 0; s < static_cast<long>(counts.size()); ++s) {
        if (s % p != 0) continue;
        Rational coeff = Rational(BigInt(s)).pow(n) * Rational(counts[static_cast<std::size_t>(s)]);
        sum += PadicInt::from_rational(coeff, p, u.precision()) *
               pow_k(u, static_cast<long>(r) * per - s);
    }
    return sum * pow_k(one_like(u) - pow_k(u, per), -static_cast<long>(r));
}

PadicInt restricted_closed_form(int n, int r, const PadicInt& u) {
    require_euler_unit(u);
    const long p = u.prime();
    UContext<PadicInt> ctx_up{pow_k(u, p)};
    HValues<PadicInt> hup(ctx_up);

    std::vector<BigInt> counts = tuple_sum_counts(r, p);
    PadicInt sum(p, u.precision(), BigInt(0));
    for (long s = 0; s < static_cast<long>(counts.size()); ++s) {
        if (s % p != 0) continue;
        // H_n^{(r)}((s/p), u^p | 1..1) via the binomial shift expansion
        Rational beta(s / p);
        PadicInt h(p, u.precision(), BigInt(0));
        for (int i = 0; i <= n; ++i)
            h += hup.get(i, r) * ctx_up.from_q(Rational(binomial(n, i)) * beta.pow(n - i));
        sum += h * ctx_up.from_q(Rational(counts[static_cast<std::size_t>(s)])) *
               pow_k(u, -s);
    }
    PadicInt measure = pow_k(ctx_up.u * (one_like(u) - ctx_up.u).inverse(), static_cast<long>(r));
    return ctx_up.from_q(Rational(p).pow(n)) * measure * sum;
}

PadicInt padic_zeta_negk(int k, int r, const PadicInt& u) {
    require_euler_unit(u);
    UContext<PadicInt> ctx{u};
    HValues<PadicInt> hu(ctx);
    PadicInt full = pow_k(u * (one_like(u) - u).inverse(), static_cast<long>(r)) * hu.get(k, r);
    return full - restricted_closed_form(k, r, u);
}

} // namespace feuler
