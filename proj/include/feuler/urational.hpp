#pragma once

#include <string>

#include "feuler/poly.hpp"

namespace feuler {

// Rational function in the indeterminate u over Q, kept in canonical form:
// monic denominator, gcd(num, den) = 1, zero represented as 0/1. Equality is
// structural comparison of the canonical parts.
class URational {
public:
    URational() : den_{Rational(1)} {}
    URational(const Rational& c) : num_(c), den_{Rational(1)} {} // NOLINT
    URational(long c) : URational(Rational(c)) {}                // NOLINT
    URational(UPoly num, UPoly den);

    static URational indeterminate() {
        return URational(UPoly{Rational(0), Rational(1)}, UPoly{Rational(1)});
    }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const;

    bool operator==(const URational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const URational& o) const { return !(*this == o); }

    URational operator-() const;
    URational operator+(const URational& o) const;
    URational operator-(const URational& o) const;
    URational operator*(const URational& o) const;
    URational operator/(const URational& o) const;
    URational& operator+=(const URational& o) { return *this = *this + o; }
    URational& operator-=(const URational& o) { return *this = *this - o; }
    URational& operator*=(const URational& o) { return *this = *this * o; }
    URational& operator/=(const URational& o) { return *this = *this / o; }

    URational inverse() const;
    URational pow(long e) const;

    Rational eval_at(const Rational& v) const;
    URational subst_inv() const;     // f(u) -> f(1/u)
    URational subst_pow(int d) const; // f(u) -> f(u^d)

    std::string to_string() const;
    static URational parse(const std::string& s);

private:
    UPoly num_, den_;
    void normalize();
};

inline URational urat_normalize(UPoly num, UPoly den) {
    return URational(std::move(num), std::move(den));
}

inline URational urat_subst_inv(const URational& f) { return f.subst_inv(); }
inline Rational urat_eval_at(const URational& f, const Rational& v) { return f.eval_at(v); }

std::string upoly_to_string(const UPoly& p);
UPoly upoly_parse(const std::string& s);

inline std::ostream& operator<<(std::ostream& os, const URational& f) {
    return os << f.to_string();
}

} // namespace feuler
