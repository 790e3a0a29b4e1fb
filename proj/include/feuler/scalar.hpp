#pragma once

#include "feuler/rational.hpp"
#include "feuler/urational.hpp"

namespace feuler {

// Uniform embedding of rational scalars into the coefficient fields the
// generic polynomial/series code is instantiated with.
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct ScalarOps<URational> {
    static URational from_rational(const Rational& q) { return URational(q); }
};

template <class K>
K scalar_from_rational(const Rational& q) {
    return ScalarOps<K>::from_rational(q);
}

} // namespace feuler
