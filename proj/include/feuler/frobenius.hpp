#pragma once

#include <mutex>

#include "feuler/dirichlet.hpp"
#include "feuler/fe_engine.hpp"

namespace feuler {

// Process-wide memo of the symbolic H_n^{(r)}(u). Reads are cheap under a
// coarse lock; get_uncached recomputes from scratch and must agree with the
// cached value (cache transparency).
class HTable {
public:
    static HTable& global();

    URational get(int n, int r);
    URational get_uncached(int n, int r) const;

private:
    HTable() : values_(symbolic_ctx()) {}
    mutable std::mutex mu_;
    HValues<URational> values_;
};

// Parameter bundle for the shifted/weighted families: the order r, the
// weights a_1..a_r (empty means all ones), and the additive shift (the x, w
// or alpha of the various guises).
struct FrobeniusParams {
    int order = 1;
    std::vector<long> weights{};
    Rational shift = Rational(0);

    std::vector<long> effective_weights() const {
        return weights.empty() ? std::vector<long>(static_cast<std::size_t>(order), 1) : weights;
    }
    void validate() const;
};

// H_n(u)
URational fe_number(int n);
// H_n^{(r)}(u)
URational fe_number_r(int n, int r);
// H_n^{(r)}(u, x) by the binomial expansion in the shift x
URational fe_poly(int n, int r, const Rational& x);
// H_n^{(r)}(u^d, beta): substitute u -> u^d coefficient-wise, rational shift
URational fe_poly_pow(int n, int r, const Rational& beta, int d);

// umbral A_l for the weight vector (k_1..k_r)
URational umbral_a(int l, const std::vector<long>& weights);

// H_n^{(r)}(w, u | a_1..a_r); computes the generating-series route and the
// umbral route and aborts if they disagree
URational fe_weighted(int n, int r, const Rational& w, const std::vector<long>& weights);
URational fe_weighted(int n, const FrobeniusParams& params);
URational fe_weighted_series(int n, int r, const Rational& w, const std::vector<long>& weights);
URational fe_weighted_umbral(int n, int r, const Rational& w, const std::vector<long>& weights);

// character-twisted H_{n,chi}^{(r)}(u): closed finite sum over residue tuples.
// Note the normalization: the residue-tuple sum carries the weight
// u^{rd - sum n_i}, so the principal character of modulus 1 yields
// u^r H_n^{(r)}(u), not the bare H_n^{(r)}(u). No silent rescaling is done.
CycloURational fe_gen_chi(int n, int r, const DirichletCharacter& chi);
// the same value read off the twisted generating function by series division
CycloURational fe_gen_chi_series(int n, int r, const DirichletCharacter& chi);

// H_n^{(r)}(u, r-x) == (-1)^n H_n^{(r)}(1/u, x)
bool check_reflection(int n, int r, const Rational& x);
// multiplication-by-p distribution relation for H_n^{(r)}(u, x)
bool check_distribution(int n, int r, long p, const Rational& x);

// rendered "H(n,r)" -> canonical string, rows n = 0..nmax at fixed r
std::map<std::string, std::string> h_table_render(int nmax, int r);

} // namespace feuler
