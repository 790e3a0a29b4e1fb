#include "feuler/zeta.hpp"

#include <cmath>
#include <limits>

namespace feuler {

namespace {

double binom_d(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

// Upper bound for sum_{nu >= start} C(nu+r-1, r-1) g(nu) |u|^{-nu}, where
// g(nu) = (alpha + kmin*nu)^{-s} for s >= 0 and (alpha + kmax*nu)^{|s|} for
// s < 0. Every discarded tuple has coordinate sum >= start and the
// composition count C(nu+r-1, r-1) dominates the number of discarded tuples
// at each nu, so this majorizes any box-truncation tail.
double tail_envelope(int start, int r, double u, double s, double alpha, double kmin, double kmax) {
    const double au = std::abs(u);
    double base = s >= 0 ? alpha + kmin * start : alpha + kmax * start;
    if (base <= 0.0) throw invalid_input("tail envelope undefined: nonpositive base at the cut");
    double first = binom_d(start + r - 1, r - 1) * std::pow(base, -s) * std::pow(au, -start);
    double ratio = (static_cast<double>(start + r) / static_cast<double>(start + 1)) / au;
    if (s < 0) {
        double growth = (alpha + kmax * (start + 1)) / (alpha + kmax * start);
        ratio *= std::pow(growth, -s);
    }
    if (ratio >= 1.0)
        throw invalid_input("truncation plan too small for a convergent tail envelope");
    return first / (1.0 - ratio);
}

double kbar_min(const std::vector<long>& kbar) {
    long m = kbar.front();
    for (long k : kbar) m = std::min(m, k);
    return static_cast<double>(m);
}

double kbar_max(const std::vector<long>& kbar) {
    long m = kbar.front();
    for (long k : kbar) m = std::max(m, k);
    return static_cast<double>(m);
}

struct SumAccum {
    double value = 0.0;
    double abs_sum = 0.0;
    long terms = 0;

    void add(double t) {
        value += t;
        abs_sum += std::abs(t);
        ++terms;
    }

    double rounding() const {
        // forward bound for naive summation of evaluated terms
        return 4.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(terms + 8) * abs_sum;
    }
};

} // namespace

double zeta_tail_bound(double s, const Rational& shift, const std::vector<long>& kbar, double u,
                       int r, const TruncationPlan& plan) {
    if (kbar.empty() || static_cast<int>(kbar.size()) != r)
        throw invalid_input("kbar length must equal the order");
    return tail_envelope(plan.terms_per_index, r, u, s, shift.to_double(), kbar_min(kbar),
                         kbar_max(kbar));
}

ZetaValue barnes_trunc(double s, const Rational& alpha, const std::vector<long>& kbar, double u,
                       int r, const TruncationPlan& plan) {
    if (static_cast<int>(kbar.size()) != r) throw invalid_input("kbar length must equal the order");
    if (std::abs(u) <= 1.0) throw divergence_error("|u| <= 1: the series diverges");
    if (plan.terms_per_index < 1) throw invalid_input("truncation must be at least 1");
    const double a = alpha.to_double();
    if (alpha.is_zero() && s > 0) throw invalid_input("singular term at mu = 0 with alpha = 0, s > 0");
    if (a < 0 && s != std::floor(s))
        throw invalid_input("negative shift with non-integer exponent is undefined over the reals");

    const int M = plan.terms_per_index;
    for (long k : kbar)
        if (k <= 0) throw invalid_input("kbar entries must be positive");

    SumAccum acc;
    // lexicographic nested sum over [0, M)^r
    std::vector<int> mu(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int idx, long sum_mu, double weighted) -> void {
        if (idx == r) {
            double base = a + weighted;
            if (base == 0.0 && s > 0) throw invalid_input("singular term in truncated sum");
            acc.add(std::pow(u, -static_cast<double>(sum_mu)) * std::pow(base, -s));
            return;
        }
        for (int v = 0; v < M; ++v) {
            mu[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, sum_mu + v, weighted + static_cast<double>(kbar[static_cast<std::size_t>(idx)]) * v);
        }
    };
    rec(rec, 0, 0, 0.0);

    double tail = zeta_tail_bound(s, alpha, kbar, u, r, plan);
    return {acc.value, tail + acc.rounding()};
}

ZetaValue mzeta_trunc(double s, const Rational& x, double u, int r, const TruncationPlan& plan) {
    if (x.is_zero() && s > 0) throw invalid_input("singular term: x = 0 with s > 0");
    std::vector<long> ones(static_cast<std::size_t>(r), 1);
    return barnes_trunc(s, x, ones, u, r, plan);
}

ZetaValue zeta_from_one_trunc(double s, double u, int r, const TruncationPlan& plan) {
    if (std::abs(u) <= 1.0) throw divergence_error("|u| <= 1: the series diverges");
    const int M = plan.terms_per_index;
    SumAccum acc;
    std::vector<int> idx(static_cast<std::size_t>(r), 1);
    auto rec = [&](auto&& self, int pos, long total) -> void {
        if (pos == r) {
            acc.add(std::pow(u, -static_cast<double>(total)) *
                    std::pow(static_cast<double>(total), -s));
            return;
        }
        for (int v = 1; v <= M; ++v) {
            idx[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, total + v);
        }
    };
    rec(rec, 0, 0);
    double tail = tail_envelope(M + r, r, u, s, 0.0, 1.0, 1.0);
    return {acc.value, tail + acc.rounding()};
}

bool check_shift_identity(double s, double u, int r, const TruncationPlan& plan) {
    ZetaValue lhs = mzeta_trunc(s, Rational(r), u, r, plan);
    ZetaValue rhs = zeta_from_one_trunc(s, u, r, plan);
    double scale = std::pow(u, r);
    double diff = std::abs(lhs.value - scale * rhs.value);
    return diff <= lhs.error + std::abs(scale) * rhs.error;
}

URational special_value(int n, const Rational& alpha, const std::vector<long>& kbar) {
    const int r = static_cast<int>(kbar.size());
    const URational u = URational::indeterminate();
    return pow_k(u / (u - URational(1)), static_cast<long>(r)) * fe_weighted(n, r, alpha, kbar);
}

} // namespace feuler
