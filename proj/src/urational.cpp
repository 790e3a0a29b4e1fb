#include "feuler/urational.hpp"

#include <sstream>

namespace feuler {

URational::URational(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw invalid_input("urational with zero denominator");
    normalize();
}

void URational::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly{Rational(1)};
        return;
    }
    UPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    Rational lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

Rational URational::constant_value() const {
    if (!is_constant()) throw invalid_input("urational is not constant");
    return num_.coeff(0);
}

URational URational::operator-() const {
    URational r = *this;
    r.num_ = -r.num_;
    return r;
}

URational URational::operator+(const URational& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    UPoly g = poly_gcd(den_, o.den_);
    UPoly b = poly_div_exact(den_, g);
    UPoly d = poly_div_exact(o.den_, g);
    return URational(num_ * d + o.num_ * b, den_ * d);
}

URational URational::operator-(const URational& o) const { return *this + (-o); }

URational URational::operator*(const URational& o) const {
    if (is_zero() || o.is_zero()) return URational();
    // cross-reduce before multiplying to keep the gcds small
    UPoly g1 = poly_gcd(num_, o.den_);
    UPoly g2 = poly_gcd(o.num_, den_);
    UPoly n = poly_div_exact(num_, g1) * poly_div_exact(o.num_, g2);
    UPoly d = poly_div_exact(den_, g2) * poly_div_exact(o.den_, g1);
    return URational(std::move(n), std::move(d));
}

URational URational::operator/(const URational& o) const { return *this * o.inverse(); }

URational URational::inverse() const {
    if (is_zero()) throw invalid_input("inverse of zero rational function");
    return URational(den_, num_);
}

URational URational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    URational base = *this, acc = URational(Rational(1));
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational URational::eval_at(const Rational& v) const {
    Rational d = den_.eval(v);
    if (d.is_zero()) throw pole_error(v.to_string());
    return num_.eval(v) / d;
}

URational URational::subst_inv() const {
    const int L = std::max(num_.degree(), den_.degree());
    auto reverse_to = [L](const UPoly& p) {
        std::vector<Rational> cs(static_cast<std::size_t>(L) + 1, Rational(0));
        for (int i = 0; i <= p.degree(); ++i) cs[static_cast<std::size_t>(L - i)] = p.coeff(i);
        return UPoly(std::move(cs));
    };
    return URational(reverse_to(num_), reverse_to(den_));
}

URational URational::subst_pow(int d) const {
    if (d < 1) throw invalid_input("substitution power must be positive");
    return URational(num_.subst_pow(d), den_.subst_pow(d));
}

std::string upoly_to_string(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << c.to_string() << "*u^" << i;
        first = false;
    }
    return os.str();
}

UPoly upoly_parse(const std::string& s) {
    if (s == "0") return UPoly();
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::size_t star = term.find("*u^");
        if (star == std::string::npos) throw invalid_input("cannot parse polynomial term: '" + term + "'");
        Rational c = Rational::parse(term.substr(0, star));
        long deg = std::stol(term.substr(star + 3));
        if (deg < 0) throw invalid_input("negative degree in polynomial: '" + term + "'");
        if (static_cast<std::size_t>(deg) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(deg) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(deg)] += c;
        pos = next == std::string::npos ? s.size() : next + 3;
    }
    return UPoly(std::move(coeffs));
}

std::string URational::to_string() const {
    return "(" + upoly_to_string(num_) + ") / (" + upoly_to_string(den_) + ")";
}

URational URational::parse(const std::string& s) {
    if (s.empty() || s.front() != '(')
        throw invalid_input("cannot parse rational function: '" + s + "'");
    std::size_t close = s.find(')');
    if (close == std::string::npos) throw invalid_input("unbalanced parens in: '" + s + "'");
    std::string num_part = s.substr(1, close - 1);
    std::size_t sep = s.find(" / (", close);
    if (sep != close + 1 || s.back() != ')')
        throw invalid_input("cannot parse rational function: '" + s + "'");
    std::string den_part = s.substr(close + 5, s.size() - close - 6);
    return URational(upoly_parse(num_part), upoly_parse(den_part));
}

} // namespace feuler
