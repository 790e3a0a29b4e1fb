#pragma once

#include <type_traits>

#include "feuler/padic.hpp"

namespace feuler {

// Parameter bundle for one Euler-factor-removal / Kummer-congruence run.
// The exact path treats u as the indeterminate; the p-adic path evaluates at
// the rational integer u (which must be a unit with u != 1 mod p).
struct KummerInstance {
    long p = 3;
    int r = 1;
    long alpha = 0;
    std::vector<long> kbar{1};
    Rational u = Rational(2);
    int level = 0; // Riemann/congruence level N
    int n = 1;
    int m = 1;

    void validate_basic() const;    // r, kbar shape, gcd(k_i, p) = 1, u unit != 1 mod p
    void validate_integrality() const; // adds p >= 2r+1
    void validate_congruence() const; // adds gcd(m, p-1) = 1 and m ≡ n mod p^{N+1}(p-1)
};

struct I0Entry {
    std::vector<int> tuple; // (i_1..i_r), 0 <= i_j <= p-1
    long beta;              // (alpha + sum k_j i_j) / p
};

// exhaustive lexicographic enumeration of the tuples with
// alpha + sum k_j i_j ≡ 0 (mod p)
struct I0Enumeration {
    std::vector<I0Entry> entries;
};

I0Enumeration enum_i0(long alpha, const std::vector<long>& kbar, long p);

// Phi_n: u^r/(1-u)^r H_n^{(r)}(alpha, u | kbar)
//        - p^n u^{pr}/(1-u^p)^r sum_{I_0} H_n^{(r)}(beta, u^p | kbar) u^{-sum i_j}
URational phi_expression(const KummerInstance& inst, int n);
Rational phi_value(const KummerInstance& inst, int n); // evaluated at inst.u
PadicInt phi_padic(const KummerInstance& inst, int n, int precision);

// T_l(n) = C(n,l) (p^{N+1})^l A_l(u^{p^{N+1}})
//          * (u^{p^{N+1}})^r/(1-u^{p^{N+1}})^r
//          * sum over j in [0,p^{N+1})^r with gcd(alpha+sum k_j j_j, p) = 1
//                of u^{-sum j} (alpha + sum k_j j_j)^{n-l}
URational t_term(const KummerInstance& inst, int l, int n);
Rational t_value(const KummerInstance& inst, int l, int n);

// Phi_n == sum_{l=0}^n T_l(n), exactly, as canonical rational functions
bool check_sum_identity(const KummerInstance& inst, int n);

// v_p(Phi_n(u)) >= 0 (requires p >= 2r+1)
bool check_integrality(const KummerInstance& inst, int n);

// Phi_n ≡ Phi_m (mod p^{N+1}) under the congruence preconditions
bool check_congruence(const KummerInstance& inst);

// valuation of a rational, with zero mapped to `cap`
int valuation_or_cap(const Rational& q, long p, int cap = 1 << 20);

// v_p(Phi_n(u)) without precondition checks (exploratory runs)
int phi_valuation(const KummerInstance& inst, int n);

// v_p(T_l(n)(u)) for l = 0..n
std::vector<int> t_valuations(const KummerInstance& inst, int n);

// --- generic implementations (shared by the symbolic, rational-evaluated and
// --- capped p-adic paths) ---------------------------------------------------

namespace kummer_detail {

template <class K>
K weighted_value(int n, const KummerInstance& inst, const Rational& shift, HValues<K>& hv,
                 bool umbral_only) {
    if constexpr (std::is_same_v<K, PadicInt>) {
        // the series route divides by factorials, which are not p-adic units
        (void)umbral_only;
        return fe_weighted_umbral_k(n, inst.r, shift, inst.kbar, hv);
    } else {
        return umbral_only ? fe_weighted_umbral_k(n, inst.r, shift, inst.kbar, hv)
                           : fe_weighted_k(n, inst.r, shift, inst.kbar, hv);
    }
}

template <class K>
K phi_generic(const KummerInstance& inst, int n, const UContext<K>& ctx, bool umbral_only) {
    HValues<K> hu(ctx);
    UContext<K> ctx_p{pow_k(ctx.u, inst.p)};
    HValues<K> hup(ctx_p);
    const K one = ctx.from_q(Rational(1));

    K term1 = pow_k(ctx.u * (one - ctx.u).inverse(), static_cast<long>(inst.r)) *
              weighted_value(n, inst, Rational(inst.alpha), hu, umbral_only);

    I0Enumeration i0 = enum_i0(inst.alpha, inst.kbar, inst.p);
    std::map<std::pair<long, long>, long> groups; // (beta, sum i_j) -> count
    for (const auto& e : i0.entries) {
        long si = 0;
        for (int i : e.tuple) si += i;
        ++groups[{e.beta, si}];
    }
    std::map<long, K> h_at_beta;
    K isum = ctx.from_q(Rational(0));
    for (const auto& [key, cnt] : groups) {
        const auto [beta, si] = key;
        auto it = h_at_beta.find(beta);
        if (it == h_at_beta.end())
            it = h_at_beta.emplace(beta, weighted_value(n, inst, Rational(beta), hup, umbral_only)).first;
        isum += it->second * pow_k(ctx.u, -si) * ctx.from_q(Rational(cnt));
    }
    K term2 = ctx.from_q(Rational(inst.p).pow(n)) *
              pow_k(ctx.u, static_cast<long>(inst.p) * inst.r) *
              pow_k(one - pow_k(ctx.u, inst.p), -static_cast<long>(inst.r)) * isum;
    return term1 - term2;
}

template <class K>
K t_term_generic(const KummerInstance& inst, int l, int n, const UContext<K>& ctx) {
    long q = 1;
    for (int i = 0; i <= inst.level; ++i) q *= inst.p; // p^{N+1}
    UContext<K> ctx_q{pow_k(ctx.u, q)};
    HValues<K> hq(ctx_q);
    const K one = ctx.from_q(Rational(1));

    K a_l = umbral_a_k(l, inst.kbar, hq);
    auto counts = tuple_sum_pair_counts(inst.r, q, inst.kbar); // (sum j, sum k_j j_j)
    K power_sum = ctx.from_q(Rational(0));
    for (const auto& [key, cnt] : counts) {
        const auto [sj, t] = key;
        long y = inst.alpha + t;
        if (y % inst.p == 0) continue; // keep only gcd(y, p) = 1
        power_sum += ctx.from_q(Rational(BigInt(y)).pow(n - l) * Rational(cnt)) *
                     pow_k(ctx.u, -sj);
    }
    K front = ctx.from_q(Rational(binomial(n, l)) * Rational(q).pow(l)) * a_l *
              pow_k(ctx_q.u, static_cast<long>(inst.r)) *
              pow_k(one - ctx_q.u, -static_cast<long>(inst.r));
    return front * power_sum;
}

} // namespace kummer_detail

} // namespace feuler
