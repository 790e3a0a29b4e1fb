#pragma once

#include "feuler/frobenius.hpp"

namespace feuler {

// Truncation M for each summation index: every index ranges over [0, M).
struct TruncationPlan {
    int terms_per_index = 60;
};

// Floating-point sum with a rigorous total error: geometric truncation tail
// (valid for |u| > 1) plus a forward rounding envelope for the summation.
struct ZetaValue {
    double value = 0.0;
    double error = 0.0;
};

// Geometric envelope for the tail discarded by the box truncation: every
// discarded tuple has coordinate sum >= M and the per-sum composition count
// majorizes the discarded multiplicities. Valid for |u| > 1.
double zeta_tail_bound(double s, const Rational& shift, const std::vector<long>& kbar, double u,
                       int r, const TruncationPlan& plan);

// Euler multiple zeta: sum over mu in [0,M)^r of u^{-sum mu} / (sum mu + x)^s.
ZetaValue mzeta_trunc(double s, const Rational& x, double u, int r, const TruncationPlan& plan);

// Euler-Barnes multiple zeta: sum of u^{-sum mu} / (alpha + sum k_j mu_j)^s.
ZetaValue barnes_trunc(double s, const Rational& alpha, const std::vector<long>& kbar, double u,
                       int r, const TruncationPlan& plan);

// zeta_r(u|s) with all indices starting at 1, truncated to [1, M]^r.
ZetaValue zeta_from_one_trunc(double s, double u, int r, const TruncationPlan& plan);

// zeta_r(u|s, r) == u^r zeta_r(u|s) within the combined carried errors.
// (The index shift n_j = mu_j + 1 turns one truncated sum into the other.)
bool check_shift_identity(double s, double u, int r, const TruncationPlan& plan);

// Exact special value at s = -n: u^r/(u-1)^r H_n^{(r)}(alpha, u | kbar).
URational special_value(int n, const Rational& alpha, const std::vector<long>& kbar);

} // namespace feuler
