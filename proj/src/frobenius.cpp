#include "feuler/frobenius.hpp"

namespace feuler {

HTable& HTable::global() {
    static HTable table;
    return table;
}

URational HTable::get(int n, int r) {
    std::lock_guard<std::mutex> lock(mu_);
    return values_.get(n, r);
}

URational HTable::get_uncached(int n, int r) const {
    HValues<URational> fresh(symbolic_ctx());
    return fresh.get(n, r);
}

URational fe_number(int n) { return HTable::global().get(n, 1); }

URational fe_number_r(int n, int r) { return HTable::global().get(n, r); }

URational fe_poly(int n, int r, const Rational& x) {
    URational total;
    for (int i = 0; i <= n; ++i)
        total += fe_number_r(i, r) * URational(Rational(binomial(n, i)) * x.pow(n - i));
    return total;
}

URational fe_poly_pow(int n, int r, const Rational& beta, int d) {
    URational total;
    for (int i = 0; i <= n; ++i)
        total += fe_number_r(i, r).subst_pow(d) * URational(Rational(binomial(n, i)) * beta.pow(n - i));
    return total;
}

URational umbral_a(int l, const std::vector<long>& weights) {
    HValues<URational> hv(symbolic_ctx());
    return umbral_a_k(l, weights, hv);
}

void FrobeniusParams::validate() const {
    if (order < 1) throw invalid_input("order must be at least 1");
    if (!weights.empty() && static_cast<int>(weights.size()) != order)
        throw invalid_input("weights length must equal the order");
    for (long a : weights)
        if (a == 0) throw invalid_input("weights must be nonzero");
}

URational fe_weighted(int n, int r, const Rational& w, const std::vector<long>& weights) {
    HValues<URational> hv(symbolic_ctx());
    return fe_weighted_k(n, r, w, weights, hv);
}

URational fe_weighted(int n, const FrobeniusParams& params) {
    params.validate();
    return fe_weighted(n, params.order, params.shift, params.effective_weights());
}

URational fe_weighted_series(int n, int r, const Rational& w, const std::vector<long>& weights) {
    return fe_weighted_series_k(n, r, w, weights, symbolic_ctx());
}

URational fe_weighted_umbral(int n, int r, const Rational& w, const std::vector<long>& weights) {
    HValues<URational> hv(symbolic_ctx());
    return fe_weighted_umbral_k(n, r, w, weights, hv);
}

CycloURational fe_gen_chi(int n, int r, const DirichletCharacter& chi) {
    const int d = chi.modulus();
    const URational u = URational::indeterminate();
    const Rational dn = Rational(d).pow(n);
    std::vector<BigInt> counts = tuple_sum_counts(r, d);
    CycloURational total = CycloURational::zero(chi.order());
    for (long s = 0; s < static_cast<long>(counts.size()); ++s) {
        const CycloElem& chi_s = chi(s);
        if (chi_s.is_zero()) continue;
        URational term = URational(Rational(counts[static_cast<std::size_t>(s)]) * dn) *
                         u.pow(static_cast<long>(r) * d - s) * fe_poly_pow(n, r, Rational(s, d), d);
        total += embed_cyclo(chi_s) * CycloURational(term);
    }
    return total;
}

CycloURational fe_gen_chi_series(int n, int r, const DirichletCharacter& chi) {
    const int d = chi.modulus();
    const int T = n + 2;
    const URational u = URational::indeterminate();
    const URational u_d = u.pow(d);

    // 1 / (e^{dt} - u^d)^r, a scalar (non-twisted) series
    Series<URational> edt = ps_exp_linear(URational(Rational(d)), T) - Series<URational>::constant(T, u_d);
    Series<URational> base = ps_pow(ps_inv(edt), r).scaled(pow_k(URational(1) - u_d, static_cast<long>(r)));

    // sum over residue tuples of chi(s) u^{rd-s} e^{st}, coefficients twisted
    std::vector<BigInt> counts = tuple_sum_counts(r, d);
    Series<CycloURational> twisted(T);
    for (long s = 0; s < static_cast<long>(counts.size()); ++s) {
        const CycloElem& chi_s = chi(s);
        if (chi_s.is_zero()) continue;
        URational scale = URational(Rational(counts[static_cast<std::size_t>(s)])) *
                          u.pow(static_cast<long>(r) * d - s);
        Series<URational> est = ps_exp_linear(URational(Rational(s)), T).scaled(scale);
        CycloURational chi_emb = embed_cyclo(chi_s);
        for (int j = 0; j <= T; ++j)
            twisted.set_coeff(j, twisted.coeff(j) + chi_emb * CycloURational(est.coeff(j)));
    }

    Series<CycloURational> base_emb(T);
    for (int j = 0; j <= T; ++j) base_emb.set_coeff(j, CycloURational(base.coeff(j)));
    return egf_coeff(ps_mul(twisted, base_emb), n);
}

bool check_reflection(int n, int r, const Rational& x) {
    URational lhs = fe_poly(n, r, Rational(r) - x);
    URational rhs = fe_poly(n, r, x).subst_inv();
    if (n % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

bool check_distribution(int n, int r, long p, const Rational& x) {
    if (p < 2) throw invalid_input("distribution relation needs p >= 2");
    const URational u = URational::indeterminate();
    URational lhs = pow_k(u / (u - URational(1)), static_cast<long>(r)) * fe_poly(n, r, x);
    std::vector<BigInt> counts = tuple_sum_counts(r, p);
    URational sum;
    for (long s = 0; s < static_cast<long>(counts.size()); ++s)
        sum += URational(Rational(counts[static_cast<std::size_t>(s)])) *
               u.pow(static_cast<long>(r) * p - s) *
               fe_poly_pow(n, r, (Rational(s) + x) / Rational(p), static_cast<int>(p));
    URational rhs = URational(Rational(p).pow(n)) *
                    pow_k(u.pow(p) - URational(1), -static_cast<long>(r)) * sum;
    return lhs == rhs;
}

std::map<std::string, std::string> h_table_render(int nmax, int r) {
    std::map<std::string, std::string> out;
    for (int n = 0; n <= nmax; ++n)
        out["H(" + std::to_string(n) + "," + std::to_string(r) + ")"] = fe_number_r(n, r).to_string();
    return out;
}

} // namespace feuler
