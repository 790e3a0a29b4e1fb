#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "feuler/rational.hpp"

namespace feuler {

// Dense univariate polynomial over a field K, coefficients indexed by degree,
// trailing zeros trimmed (the zero polynomial has an empty coefficient vector).
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<K> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<K> cs) : c_(std::move(cs)) { trim(); }
    explicit Poly(const K& constant) : c_{constant} { trim(); }

    static Poly monomial(int deg, const K& coeff) {
        std::vector<K> cs(static_cast<std::size_t>(deg) + 1, K(0));
        cs.back() = coeff;
        Poly p(std::move(cs));
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    const K& coeff(int i) const {
        static const K zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }

    const K& leading() const {
        if (is_zero()) throw invalid_input("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<K> cs(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return Poly(std::move(cs));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> cs(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                cs[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(cs));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& s) const {
        if (s == K(0)) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    K eval(const K& v) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    // p(u) -> p(u^d), spreading coefficients to degree d*i.
    Poly subst_pow(int d) const {
        if (is_zero()) return Poly();
        std::vector<K> cs(static_cast<std::size_t>(degree()) * d + 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) cs[i * d] = c_[i];
        return Poly(std::move(cs));
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        K inv = K(1) / leading();
        return scaled(inv);
    }

    // Euclidean division; requires divisor nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw invalid_input("polynomial division by zero");
        Poly q;
        std::vector<K> rem = a.c_;
        const int db = b.degree();
        const K lead_inv = K(1) / b.leading();
        std::vector<K> qc;
        if (static_cast<int>(rem.size()) - 1 >= db)
            qc.assign(rem.size() - static_cast<std::size_t>(db), K(0));
        for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
            K factor = rem[static_cast<std::size_t>(i)] * lead_inv;
            if (!(factor == K(0))) {
                qc[static_cast<std::size_t>(i - db)] = factor;
                for (int j = 0; j <= db; ++j)
                    rem[static_cast<std::size_t>(i - db + j)] -= factor * b.c_[static_cast<std::size_t>(j)];
            }
            rem[static_cast<std::size_t>(i)] = K(0);
        }
        return {Poly(std::move(qc)), Poly(std::move(rem))};
    }

    // number of trailing zero coefficients (multiplicity of the root u = 0)
    int trailing_zeros() const {
        int k = 0;
        while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)] == K(0)) ++k;
        return k;
    }

    Poly shifted_down(int k) const { // divide by u^k; requires u^k | p
        if (is_zero()) return Poly();
        std::vector<K> cs(c_.begin() + k, c_.end());
        return Poly(std::move(cs));
    }

private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
};

// Monic Euclidean gcd; fine for the tiny degrees seen over non-rational fields.
template <class K>
Poly<K> poly_gcd_euclid(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = Poly<K>::divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// Extended gcd: returns (g, s, t) with a*s + b*t = g, g monic (or zero).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_ext_gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0{K(1)}, s1;
    Poly<K> t0, t1{K(1)};
    while (!r1.is_zero()) {
        auto [q, r2] = Poly<K>::divmod(r0, r1);
        Poly<K> s2 = s0 - q * s1;
        Poly<K> t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = K(1) / r0.leading();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// --- integer-coefficient machinery for the Rational specialization ---------

using UPoly = Poly<Rational>;

namespace detail {

inline std::vector<BigInt> to_integer_primitive(const UPoly& p) {
    // clear denominators, then strip content; sign normalized to positive leading
    if (p.is_zero()) return {};
    BigInt lcm_den(1);
    for (const auto& c : p.coeffs()) {
        BigInt d = c.den();
        BigInt g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    BigInt content(0);
    for (const auto& c : p.coeffs()) {
        BigInt v = c.num() * (lcm_den / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    for (auto& v : out) v /= content;
    if (out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

inline void strip_content(std::vector<BigInt>& p) {
    BigInt content(0);
    for (const auto& v : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content == 0 || content == 1) {
        if (!p.empty() && p.back() < 0)
            for (auto& v : p) v = -v;
        return;
    }
    for (auto& v : p) v /= content;
    if (p.back() < 0)
        for (auto& v : p) v = -v;
}

// Pseudo-remainder of primitive integer polynomials, content-stripped each
// step (primitive PRS keeps the coefficient growth tame for degrees in the
// hundreds, where naive rational Euclid blows up).
inline std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const BigInt& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        BigInt factor = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(da - db + j)] -= factor * b[static_cast<std::size_t>(j)];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

} // namespace detail

// gcd over Q via a primitive PRS over Z; result monic (or zero).
inline UPoly poly_gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<BigInt> pa = detail::to_integer_primitive(a);
    std::vector<BigInt> pb = detail::to_integer_primitive(b);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
        std::vector<BigInt> r = detail::pseudo_rem(pa, pb);
        detail::strip_content(r);
        pa = std::move(pb);
        pb = std::move(r);
    }
    std::vector<Rational> cs;
    cs.reserve(pa.size());
    const BigInt& lead = pa.back();
    for (const auto& v : pa) cs.emplace_back(v, lead);
    return UPoly(std::move(cs));
}

template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
    return poly_gcd_euclid(a, b);
}

// exact quotient; throws if the division leaves a remainder
template <class K>
Poly<K> poly_div_exact(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = Poly<K>::divmod(a, b);
    if (!r.is_zero()) throw internal_consistency_error("inexact polynomial division");
    return q;
}

} // namespace feuler
