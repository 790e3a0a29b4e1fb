#pragma once

#include <unordered_map>

#include "feuler/cyclotomic.hpp"

namespace feuler {

// Dirichlet character of modulus (conductor) d with values in the cyclotomic
// ring of order equal to the character's multiplicative order. Non-unit
// residues map to the zero element.
class DirichletCharacter {
public:
    int modulus() const { return modulus_; }
    int order() const { return order_; }

    const CycloElem& operator()(long a) const {
        long r = a % modulus_;
        if (r < 0) r += modulus_;
        return values_[static_cast<std::size_t>(r)];
    }

    bool is_principal() const { return order_ == 1; }
    bool is_pm_one() const { return order_ <= 2; }

    // value as a plain rational (-1, 0, or 1); only for {±1}-valued characters
    Rational value_pm(long a) const {
        if (!is_pm_one())
            throw unsupported_character("character of order " + std::to_string(order_) +
                                        " is not {±1}-valued");
        return (*this)(a).scalar_value();
    }

    static DirichletCharacter principal(int modulus);

private:
    friend class DirichletGroup;
    int modulus_ = 1;
    int order_ = 1;
    std::vector<CycloElem> values_;
};

// The group of Dirichlet characters mod d, built from the cyclic decomposition
// of (Z/dZ)^*. character(0) is the principal character.
class DirichletGroup {
public:
    explicit DirichletGroup(int modulus);

    int modulus() const { return modulus_; }
    int size() const { return size_; } // phi(d)

    DirichletCharacter character(int index) const;
    std::vector<DirichletCharacter> all() const;

private:
    struct Factor {
        long q;     // prime-power component of the modulus
        long gen;   // generator of this cyclic factor
        long order; // order of gen
        std::unordered_map<long, long> dlog;
    };

    int modulus_;
    int size_;
    std::vector<Factor> factors_;
};

} // namespace feuler
