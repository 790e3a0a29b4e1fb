#pragma once

#include "feuler/scalar.hpp"

namespace feuler {

// Truncated power series sum_{n<=T} c_n t^n over a coefficient field K.
// Coefficients are stored plain (not pre-multiplied by n!); egf_coeff applies
// the n! on read. Binary operations truncate to the smaller T of the operands.
template <class K>
class Series {
public:
    explicit Series(int trunc) : trunc_(trunc), c_(static_cast<std::size_t>(trunc) + 1, K(0)) {
        if (trunc < 0) throw invalid_input("negative series truncation");
    }

    static Series constant(int trunc, const K& v) {
        Series s(trunc);
        s.c_[0] = v;
        return s;
    }

    static Series one(int trunc) { return constant(trunc, K(1)); }

    int trunc() const { return trunc_; }

    const K& coeff(int n) const {
        if (n < 0 || n > trunc_) throw truncation_error("series coefficient index " + std::to_string(n) +
                                                        " beyond truncation " + std::to_string(trunc_));
        return c_[static_cast<std::size_t>(n)];
    }

    void set_coeff(int n, const K& v) {
        if (n < 0 || n > trunc_) throw truncation_error("series coefficient index out of range");
        c_[static_cast<std::size_t>(n)] = v;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Series operator+(const Series& o) const {
        Series r(std::min(trunc_, o.trunc_));
        for (int n = 0; n <= r.trunc_; ++n) r.c_[static_cast<std::size_t>(n)] = coeff(n) + o.coeff(n);
        return r;
    }

    Series operator-(const Series& o) const { return *this + (-o); }

    Series scaled(const K& s) const {
        Series r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

private:
    int trunc_;
    std::vector<K> c_;
};

// Cauchy product truncated at min(T_a, T_b).
template <class K>
Series<K> ps_mul(const Series<K>& a, const Series<K>& b) {
    Series<K> r(std::min(a.trunc(), b.trunc()));
    for (int n = 0; n <= r.trunc(); ++n) {
        K acc(0);
        for (int k = 0; k <= n; ++k) acc += a.coeff(k) * b.coeff(n - k);
        r.set_coeff(n, acc);
    }
    return r;
}

// Multiplicative inverse by forward substitution; requires invertible c_0.
template <class K>
Series<K> ps_inv(const Series<K>& a) {
    if (a.coeff(0) == K(0)) throw non_invertible("series with zero constant term");
    Series<K> b(a.trunc());
    K c0_inv = K(1) / a.coeff(0);
    b.set_coeff(0, c0_inv);
    for (int n = 1; n <= a.trunc(); ++n) {
        K acc(0);
        for (int k = 1; k <= n; ++k) acc += a.coeff(k) * b.coeff(n - k);
        b.set_coeff(n, -(acc * c0_inv));
    }
    return b;
}

// e^{a t}: coefficients a^n / n!.
template <class K>
Series<K> ps_exp_linear(const K& a, int trunc) {
    Series<K> r(trunc);
    K apow(1);
    for (int n = 0; n <= trunc; ++n) {
        if (n > 0) apow = apow * a;
        r.set_coeff(n, apow * scalar_from_rational<K>(Rational(BigInt(1), factorial(static_cast<unsigned long>(n)))));
    }
    return r;
}

// n-th exponential-generating-function coefficient: n! * c_n.
template <class K>
K egf_coeff(const Series<K>& a, int n) {
    return a.coeff(n) * scalar_from_rational<K>(Rational(factorial(static_cast<unsigned long>(n))));
}

template <class K>
Series<K> ps_pow(const Series<K>& a, int e) {
    if (e < 0) throw invalid_input("negative series power");
    Series<K> acc = Series<K>::one(a.trunc());
    for (int i = 0; i < e; ++i) acc = ps_mul(acc, a);
    return acc;
}

} // namespace feuler
