#pragma once

#include <map>
#include <mutex>
#include <sstream>

#include "feuler/scalar.hpp"

namespace feuler {

// m-th cyclotomic polynomial over Q, computed by dividing x^m - 1 by the
// cyclotomic polynomials of the proper divisors; cached.
inline const UPoly& cyclotomic_poly(int m) {
    static std::mutex mu;
    static std::map<int, UPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // iterative fill so recursion never re-enters the lock
    for (int k = 1; k <= m; ++k) {
        if (m % k != 0 || cache.count(k)) continue;
        std::vector<Rational> cs(static_cast<std::size_t>(k) + 1, Rational(0));
        cs[0] = Rational(-1);
        cs[static_cast<std::size_t>(k)] = Rational(1);
        UPoly p(std::move(cs)); // x^k - 1
        for (int d = 1; d < k; ++d)
            if (k % d == 0) p = poly_div_exact(p, cache.at(d));
        cache.emplace(k, std::move(p));
    }
    return cache.at(m);
}

// Element of Q(zeta_m) (coefficients in K): coordinates with respect to
// 1, z, ..., z^{phi(m)-1}, always reduced modulo the m-th cyclotomic
// polynomial. Rings of order 1 or 2 collapse to scalars (phi = 1) and embed
// into any other order, which lets Cyclo serve as a series coefficient field.
template <class K>
class Cyclo {
public:
    Cyclo() : Cyclo(0L) {}
    Cyclo(long v) : order_(1), coords_{K(v)} {}        // NOLINT
    explicit Cyclo(const K& v) : order_(1), coords_{v} {}

    static Cyclo from_scalar(int m, const K& v) {
        Cyclo c = zero(m);
        c.coords_[0] = v;
        return c;
    }

    static Cyclo zero(int m) {
        Cyclo c;
        c.order_ = m;
        c.coords_.assign(static_cast<std::size_t>(euler_phi(m)), K(0));
        return c;
    }

    // zeta_m^e
    static Cyclo zeta_pow(int m, long e) {
        e %= m;
        if (e < 0) e += m;
        return from_poly(m, Poly<K>::monomial(static_cast<int>(e), K(1)));
    }

    static Cyclo from_poly(int m, const Poly<K>& p) {
        Cyclo c = zero(m);
        auto [q, rem] = Poly<K>::divmod(p, modulus(m));
        (void)q;
        for (int i = 0; i <= rem.degree(); ++i) c.coords_[static_cast<std::size_t>(i)] = rem.coeff(i);
        return c;
    }

    int order() const { return order_; }
    const std::vector<K>& coords() const { return coords_; }
    bool is_zero() const {
        for (const auto& c : coords_)
            if (!(c == K(0))) return false;
        return true;
    }
    // true when the ring itself is a copy of the ground field (m = 1 or 2)
    bool is_scalar() const { return coords_.size() == 1; }
    const K& scalar_value() const {
        if (!is_scalar()) throw invalid_input("cyclotomic element of order > 2 is not scalar");
        return coords_[0];
    }

    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& c : r.coords_) c = -c;
        return r;
    }

    Cyclo operator+(const Cyclo& o) const {
        auto [a, b] = aligned(*this, o);
        for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
        return a;
    }

    Cyclo operator-(const Cyclo& o) const { return *this + (-o); }

    Cyclo operator*(const Cyclo& o) const {
        auto [a, b] = aligned(*this, o);
        return from_poly(a.order_, a.to_poly() * b.to_poly());
    }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    Cyclo inverse() const {
        auto [g, s, t] = poly_ext_gcd(to_poly(), modulus(order_));
        (void)t;
        if (g.degree() != 0) throw non_invertible("cyclotomic element has no inverse");
        return from_poly(order_, s);
    }

    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

    bool operator==(const Cyclo& o) const {
        auto [a, b] = aligned(*this, o);
        return a.coords_ == b.coords_;
    }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Poly<K> to_poly() const { return Poly<K>(coords_); }

    std::string to_string() const {
        std::ostringstream os;
        os << "[m=" << order_ << ";";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ",";
            os << to_display(coords_[i]);
        }
        os << "]";
        return os.str();
    }

private:
    int order_ = 1;
    std::vector<K> coords_;

    static const Poly<K>& modulus(int m) {
        static std::mutex mu;
        static std::map<int, Poly<K>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it == cache.end()) {
            const UPoly& phi = cyclotomic_poly(m);
            std::vector<K> cs;
            cs.reserve(static_cast<std::size_t>(phi.degree()) + 1);
            for (int i = 0; i <= phi.degree(); ++i) cs.push_back(scalar_from_rational<K>(phi.coeff(i)));
            it = cache.emplace(m, Poly<K>(std::move(cs))).first;
        }
        return it->second;
    }

    // bring two operands into a common ring; scalar rings embed anywhere
    static std::pair<Cyclo, Cyclo> aligned(const Cyclo& x, const Cyclo& y) {
        if (x.order_ == y.order_) return {x, y};
        if (x.is_scalar()) {
            Cyclo xe = zero(y.order_);
            xe.coords_[0] = x.coords_[0];
            return {xe, y};
        }
        if (y.is_scalar()) {
            Cyclo ye = zero(x.order_);
            ye.coords_[0] = y.coords_[0];
            return {x, ye};
        }
        throw invalid_input("cyclotomic order mismatch: " + std::to_string(x.order_) + " vs " +
                            std::to_string(y.order_));
    }

    static std::string to_display(const Rational& v) { return v.to_string(); }
    static std::string to_display(const URational& v) { return v.to_string(); }
};

using CycloElem = Cyclo<Rational>;
using CycloURational = Cyclo<URational>;

inline CycloElem cyclo_mul(const CycloElem& a, const CycloElem& b) { return a * b; }

inline CycloURational embed_cyclo(const CycloElem& c) {
    std::vector<URational> cs;
    cs.reserve(c.coords().size());
    for (const auto& q : c.coords()) cs.emplace_back(q);
    return CycloURational::from_poly(c.order(), Poly<URational>(std::move(cs)));
}

template <class K>
struct ScalarOps<Cyclo<K>> {
    static Cyclo<K> from_rational(const Rational& q) {
        return Cyclo<K>(scalar_from_rational<K>(q));
    }
};

} // namespace feuler
