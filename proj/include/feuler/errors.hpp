#pragma once

#include <stdexcept>
#include <string>

namespace feuler {

// Base for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: zero denominator, order mismatch, unknown suite, ...
struct invalid_input : error {
    using error::error;
};

// Evaluation of a rational function at a root of its denominator.
struct pole_error : error {
    std::string at;
    explicit pole_error(const std::string& point)
        : error("pole at u = " + point), at(point) {}
};

// Series inversion with non-invertible constant term, non-unit p-adic inverse.
struct non_invertible : error {
    using error::error;
};

// Coefficient requested beyond the truncation order.
struct truncation_error : error {
    using error::error;
};

// |u| <= 1 in an archimedean zeta sum.
struct divergence_error : error {
    using error::error;
};

// p-adic u with u ≡ 1 (mod p) or non-unit where a unit is required.
struct invalid_u_error : error {
    using error::error;
};

// Character outside the {±1}-valued range supported by the p-adic path.
struct unsupported_character : error {
    using error::error;
};

// Kummer-congruence instance violating its preconditions.
struct invalid_instance : error {
    using error::error;
};

// Two supposedly-equal computation routes disagreed; always a bug, never recoverable.
struct internal_consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace feuler
