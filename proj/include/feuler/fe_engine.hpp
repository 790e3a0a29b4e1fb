#pragma once

#include <map>

#include "feuler/series.hpp"

namespace feuler {

template <class K>
K one_like(const K&) {
    return K(1);
}

template <class K>
K pow_k(const K& base, long e) {
    if (e < 0) return pow_k(base.inverse(), -e);
    K acc = one_like(base);
    K b = base;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// Evaluation context: the value of the indeterminate u in the coefficient
// domain K, plus the embedding of rational scalars. The symbolic context uses
// K = URational with u the indeterminate itself.
template <class K>
struct UContext {
    K u;
    K from_q(const Rational& q) const { return scalar_from_rational<K>(q); }
};

inline UContext<URational> symbolic_ctx() { return {URational::indeterminate()}; }
inline UContext<Rational> rational_ctx(const Rational& u) { return {u}; }

// Frobenius-Euler numbers H_n^{(r)} over K at a fixed u, memoized.
// Order 1 comes from the recurrence (1-u) H_n = -sum_{k<n} C(n,k) H_k with
// H_0 = 1; higher orders by binomial convolution with the order-1 sequence.
template <class K>
class HValues {
public:
    explicit HValues(UContext<K> ctx)
        : ctx_(std::move(ctx)), neg_inv_one_minus_u_(-(ctx_.from_q(1) - ctx_.u).inverse()) {}

    const UContext<K>& ctx() const { return ctx_; }

    const K& get(int n, int r) {
        if (n < 0 || r < 1) throw invalid_input("H_n^{(r)} needs n >= 0, r >= 1");
        auto key = std::make_pair(n, r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        K value = ctx_.from_q(0);
        if (n == 0) {
            value = ctx_.from_q(1);
        } else if (r == 1) {
            K acc = ctx_.from_q(0);
            for (int k = 0; k < n; ++k)
                acc += ctx_.from_q(Rational(binomial(n, k))) * get(k, 1);
            value = acc * neg_inv_one_minus_u_;
        } else {
            K acc = ctx_.from_q(0);
            for (int k = 0; k <= n; ++k)
                acc += ctx_.from_q(Rational(binomial(n, k))) * get(k, r - 1) * get(n - k, 1);
            value = acc;
        }
        return memo_.emplace(key, std::move(value)).first->second;
    }

private:
    UContext<K> ctx_;
    K neg_inv_one_minus_u_;
    std::map<std::pair<int, int>, K> memo_;
};

// A_l = (H(u)k_1 + ... + H(u)k_r)^l in the umbral sense: the multinomial
// expansion with H^j replaced by H_j.
template <class K>
K umbral_a_k(int l, const std::vector<long>& weights, HValues<K>& hv) {
    const int r = static_cast<int>(weights.size());
    K total = hv.ctx().from_q(0);
    std::vector<int> parts(static_cast<std::size_t>(r), 0);
    // lexicographic walk over compositions of l into r nonnegative parts
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == r - 1) {
            parts[static_cast<std::size_t>(idx)] = remaining;
            K term = hv.ctx().from_q(Rational(multinomial(parts)));
            for (int j = 0; j < r; ++j) {
                int lj = parts[static_cast<std::size_t>(j)];
                term = term * hv.get(lj, 1) *
                       hv.ctx().from_q(Rational(weights[static_cast<std::size_t>(j)]).pow(lj));
            }
            total += term;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            parts[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    rec(rec, 0, l);
    return total;
}

// Umbral route for H_n^{(r)}(w, u | a_1..a_r): sum_l C(n,l) A_l w^{n-l}.
template <class K>
K fe_weighted_umbral_k(int n, int r, const Rational& w, const std::vector<long>& weights,
                       HValues<K>& hv) {
    if (static_cast<int>(weights.size()) != r) throw invalid_input("weights length must equal the order");
    K total = hv.ctx().from_q(0);
    for (int l = 0; l <= n; ++l)
        total += hv.ctx().from_q(Rational(binomial(n, l)) * w.pow(n - l)) * umbral_a_k(l, weights, hv);
    return total;
}

// Series route: coefficient n of (1-u)^r e^{wt} / prod_j (e^{a_j t} - u),
// read off as an EGF coefficient. Requires K to be a field of characteristic
// zero (divides by factorials); not usable with capped p-adic arithmetic.
template <class K>
K fe_weighted_series_k(int n, int r, const Rational& w, const std::vector<long>& weights,
                       const UContext<K>& ctx) {
    if (static_cast<int>(weights.size()) != r) throw invalid_input("weights length must equal the order");
    for (long a : weights)
        if (a == 0) throw invalid_input("weights must be nonzero");
    const int T = n + 2; // two guard coefficients
    Series<K> g = ps_exp_linear(ctx.from_q(w), T);
    for (long a : weights) {
        Series<K> factor = ps_exp_linear(ctx.from_q(Rational(a)), T) - Series<K>::constant(T, ctx.u);
        g = ps_mul(g, ps_inv(factor));
    }
    g = g.scaled(pow_k(ctx.from_q(1) - ctx.u, r));
    return egf_coeff(g, n);
}

// Both routes with mandatory agreement; disagreement is an implementation bug
// and must abort the computation.
template <class K>
K fe_weighted_k(int n, int r, const Rational& w, const std::vector<long>& weights,
                HValues<K>& hv) {
    K series = fe_weighted_series_k(n, r, w, weights, hv.ctx());
    K umbral = fe_weighted_umbral_k(n, r, w, weights, hv);
    if (!(series == umbral))
        throw internal_consistency_error("weighted Frobenius-Euler routes disagree at n=" +
                                         std::to_string(n) + ", r=" + std::to_string(r));
    return series;
}

// --- tuple-sum enumeration helpers -----------------------------------------

// counts[s] = #{ (x_1..x_r) in [0,P)^r : sum x_i = s }
inline std::vector<BigInt> tuple_sum_counts(int r, long per_index) {
    std::vector<BigInt> counts{BigInt(1)};
    for (int i = 0; i < r; ++i) {
        std::vector<BigInt> next(counts.size() + static_cast<std::size_t>(per_index) - 1, BigInt(0));
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (counts[s] == 0) continue;
            for (long v = 0; v < per_index; ++v) next[s + static_cast<std::size_t>(v)] += counts[s];
        }
        counts = std::move(next);
    }
    return counts;
}

// counts[(s, t)] = #{ x in [0,P)^r : sum x_i = s, sum w_i x_i = t }
inline std::map<std::pair<long, long>, BigInt> tuple_sum_pair_counts(int r, long per_index,
                                                                     const std::vector<long>& weights) {
    std::map<std::pair<long, long>, BigInt> counts{{{0, 0}, BigInt(1)}};
    for (int i = 0; i < r; ++i) {
        std::map<std::pair<long, long>, BigInt> next;
        for (const auto& [key, cnt] : counts)
            for (long v = 0; v < per_index; ++v)
                next[{key.first + v, key.second + weights[static_cast<std::size_t>(i)] * v}] += cnt;
        counts = std::move(next);
    }
    return counts;
}

} // namespace feuler
