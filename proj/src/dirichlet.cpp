#include "feuler/dirichlet.hpp"

namespace feuler {

namespace {

long mul_mod(long a, long b, long m) { return (a * b) % m; }

long element_order(long g, long q, long phi) {
    long x = g % q, ord = 1;
    while (x != 1) {
        x = mul_mod(x, g, q);
        if (++ord > phi) return -1; // not a unit
    }
    return ord;
}

// generator of the cyclic group (Z/qZ)^* for q an odd prime power or 4
long find_generator(long q, long phi) {
    for (long g = 2; g < q; ++g) {
        if (gcd_long(g, q) != 1) continue;
        if (element_order(g, q, phi) == phi) return g;
    }
    throw internal_consistency_error("no primitive root mod " + std::to_string(q));
}

} // namespace

DirichletGroup::DirichletGroup(int modulus) : modulus_(modulus) {
    if (modulus < 1) throw invalid_input("character modulus must be positive");
    size_ = static_cast<int>(euler_phi(modulus));
    for (auto [p, e] : factorize(modulus)) {
        long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e == 1) continue; // (Z/2)^* trivial
            if (e == 2) {
                Factor f{q, 3, 2, {}};
                f.dlog = {{1, 0}, {3, 1}};
                factors_.push_back(std::move(f));
            } else {
                // units mod 2^e are ±5^k; one sign factor, one factor from 5
                Factor sign{q, q - 1, 2, {}};
                Factor five{q, 5, q / 4, {}};
                long x = 1;
                for (long k = 0; k < q / 4; ++k) {
                    five.dlog.emplace(x, k);
                    five.dlog.emplace(q - x, k);
                    sign.dlog.emplace(x, 0);
                    sign.dlog.emplace(q - x, 1);
                    x = mul_mod(x, 5, q);
                }
                factors_.push_back(std::move(sign));
                factors_.push_back(std::move(five));
            }
        } else {
            long phi = q / p * (p - 1);
            Factor f{q, find_generator(q, phi), phi, {}};
            long x = 1;
            for (long k = 0; k < phi; ++k) {
                f.dlog.emplace(x, k);
                x = mul_mod(x, f.gen, q);
            }
            factors_.push_back(std::move(f));
        }
    }
}

DirichletCharacter DirichletGroup::character(int index) const {
    if (index < 0 || index >= size_) throw invalid_input("character index out of range");
    std::vector<long> exps(factors_.size());
    long rest = index;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        exps[i] = rest % factors_[i].order;
        rest /= factors_[i].order;
    }

    long big = 1;
    for (const auto& f : factors_) big = lcm_long(big, f.order);

    // exponent of chi(a) as a power of zeta_big, for each unit a
    std::vector<long> raw(static_cast<std::size_t>(modulus_), -1);
    long common = big;
    for (long a = 0; a < modulus_; ++a) {
        if (modulus_ > 1 && gcd_long(a, modulus_) != 1) continue;
        long e = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const Factor& f = factors_[i];
            long t = f.dlog.at(a % f.q);
            e = (e + (big / f.order) * ((exps[i] * t) % f.order)) % big;
        }
        raw[static_cast<std::size_t>(a)] = e;
        common = gcd_long(common, e);
    }
    if (common == 0) common = big;

    long order = big / common;
    DirichletCharacter chi;
    chi.modulus_ = modulus_;
    chi.order_ = static_cast<int>(order);
    chi.values_.assign(static_cast<std::size_t>(modulus_), CycloElem::zero(static_cast<int>(order)));
    for (long a = 0; a < modulus_; ++a) {
        if (raw[static_cast<std::size_t>(a)] < 0) continue;
        chi.values_[static_cast<std::size_t>(a)] =
            CycloElem::zeta_pow(static_cast<int>(order), raw[static_cast<std::size_t>(a)] / common);
    }
    return chi;
}

std::vector<DirichletCharacter> DirichletGroup::all() const {
    std::vector<DirichletCharacter> cs;
    cs.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < size_; ++i) cs.push_back(character(i));
    return cs;
}

DirichletCharacter DirichletCharacter::principal(int modulus) {
    return DirichletGroup(modulus).character(0);
}

} // namespace feuler
