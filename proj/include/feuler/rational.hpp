#pragma once

#include <ostream>
#include <string>

#include "feuler/numeric.hpp"

namespace feuler {

// Exact rational scalar. Canonical form is maintained by GMP's mpq layer:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                // NOLINT: implicit by design
    Rational(const BigInt& n) : q_(n) {}       // NOLINT
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw invalid_input("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_negative() const { return q_ < 0; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw invalid_input("rational division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational inverse() const {
        if (is_zero()) throw invalid_input("inverse of zero");
        return Rational(q_.get_den(), q_.get_num());
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational base = *this, acc = 1;
        // binary powering; exponents stay small but cheap anyway
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // v_p of a nonzero rational; may be negative.
    int valuation(long p) const {
        if (is_zero()) throw invalid_input("valuation of zero rational");
        return int_valuation(num(), p) - int_valuation(den(), p);
    }

    double to_double() const { return q_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    // Accepts "a" or "a/b" with optional leading minus.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw invalid_input("cannot parse rational: '" + s + "'");
        }
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
}

} // namespace feuler
