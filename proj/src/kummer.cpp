#include "feuler/kummer.hpp"

namespace feuler {

void KummerInstance::validate_basic() const {
    if (p < 2) throw invalid_instance("p must be a prime >= 2");
    if (r < 1 || static_cast<int>(kbar.size()) != r)
        throw invalid_instance("kbar must have exactly r positive entries");
    if (alpha < 0) throw invalid_instance("alpha must be nonnegative");
    if (level < 0) throw invalid_instance("level N must be nonnegative");
    for (long k : kbar) {
        if (k <= 0) throw invalid_instance("kbar entries must be positive");
        if (gcd_long(k, p) != 1) throw invalid_instance("kbar entries must be coprime to p");
    }
    if (u.valuation(p) != 0) throw invalid_instance("u must be a p-adic unit");
    if ((u - Rational(1)).is_zero() || (u - Rational(1)).valuation(p) > 0)
        throw invalid_instance("u ≡ 1 (mod p) violates |1-u|_p >= 1");
}

void KummerInstance::validate_integrality() const {
    validate_basic();
    if (p < 2L * r + 1) throw invalid_instance("integrality checks need p >= 2r+1");
}

void KummerInstance::validate_congruence() const {
    validate_integrality();
    if (n < 1 || m < 1) throw invalid_instance("n and m must be positive");
    if (gcd_long(m, p - 1) != 1) throw invalid_instance("congruence check needs gcd(m, p-1) = 1");
    BigInt modulus = bigint_pow(p, static_cast<unsigned long>(level + 1)) * (p - 1);
    if ((BigInt(m) - BigInt(n)) % modulus != 0)
        throw invalid_instance("congruence check needs m ≡ n (mod p^{N+1}(p-1))");
}

I0Enumeration enum_i0(long alpha, const std::vector<long>& kbar, long p) {
    for (long k : kbar)
        if (gcd_long(k, p) != 1) throw invalid_instance("kbar entries must be coprime to p");
    const int r = static_cast<int>(kbar.size());
    I0Enumeration out;
    std::vector<int> tuple(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int idx, long x) -> void {
        if (idx == r) {
            if (x % p == 0) out.entries.push_back({tuple, x / p});
            return;
        }
        for (int v = 0; v < p; ++v) {
            tuple[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, x + kbar[static_cast<std::size_t>(idx)] * v);
        }
    };
    rec(rec, 0, alpha);
    return out;
}

URational phi_expression(const KummerInstance& inst, int n) {
    inst.validate_basic();
    return kummer_detail::phi_generic(inst, n, symbolic_ctx(), false);
}

Rational phi_value(const KummerInstance& inst, int n) {
    inst.validate_basic();
    return kummer_detail::phi_generic(inst, n, rational_ctx(inst.u), false);
}

PadicInt phi_padic(const KummerInstance& inst, int n, int precision) {
    inst.validate_basic();
    PadicInt u = PadicInt::from_rational(inst.u, inst.p, precision);
    require_euler_unit(u);
    // umbral route only: the series route divides by factorials, which are
    // not units in Z_p
    return kummer_detail::phi_generic(inst, n, padic_ctx(u), true);
}

URational t_term(const KummerInstance& inst, int l, int n) {
    inst.validate_basic();
    if (l < 0 || l > n) throw invalid_input("t_term needs 0 <= l <= n");
    return kummer_detail::t_term_generic(inst, l, n, symbolic_ctx());
}

Rational t_value(const KummerInstance& inst, int l, int n) {
    inst.validate_basic();
    if (l < 0 || l > n) throw invalid_input("t_term needs 0 <= l <= n");
    return kummer_detail::t_term_generic(inst, l, n, rational_ctx(inst.u));
}

bool check_sum_identity(const KummerInstance& inst, int n) {
    URational phi = phi_expression(inst, n);
    URational sum;
    for (int l = 0; l <= n; ++l) sum += t_term(inst, l, n);
    return phi == sum;
}

int valuation_or_cap(const Rational& q, long p, int cap) {
    if (q.is_zero()) return cap;
    int v = q.valuation(p);
    return v < cap ? v : cap;
}

int phi_valuation(const KummerInstance& inst, int n) {
    return valuation_or_cap(phi_value(inst, n), inst.p);
}

bool check_integrality(const KummerInstance& inst, int n) {
    inst.validate_integrality();
    return phi_valuation(inst, n) >= 0;
}

bool check_congruence(const KummerInstance& inst) {
    inst.validate_congruence();
    Rational diff = phi_value(inst, inst.n) - phi_value(inst, inst.m);
    return valuation_or_cap(diff, inst.p) >= inst.level + 1;
}

std::vector<int> t_valuations(const KummerInstance& inst, int n) {
    std::vector<int> vs;
    vs.reserve(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) vs.push_back(valuation_or_cap(t_value(inst, l, n), inst.p));
    return vs;
}

} // namespace feuler
