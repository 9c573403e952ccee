#pragma once

#include "extremal/families.hpp"
#include "extremal/gram.hpp"
#include "extremal/quadext.hpp"
#include "extremal/rational.hpp"

#include <cstddef>
#include <cstdint>

namespace extremal {

/// Parameters (n, k', lambda') of a symmetric design; lambda'(n-1) = k'(k'-1).
struct SymmetricDesignParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
};

/// n blocks of one size on n points with constant pairwise intersection.
/// Throws HypothesisViolation naming the failed property.
SymmetricDesignParams symmetric_design_params(const SetFamily& design);

/// PG(2, r) from homogeneous coordinates over F_r: r^2+r+1 points and lines.
/// r prime, r <= 31.
SetFamily projective_plane(std::uint32_t r);

/// Paley (4v-1, 2v-1, v-1) design: translates of the quadratic residues mod
/// 4v-1. Requires 4v-1 prime.
SetFamily hadamard_design(std::uint32_t v);

/// The Hadamard design plus the full ground set: 4v sets on [4v-1] with all
/// pairwise Hamming distances equal to 2v.
SetFamily hadamard_plus_full(std::uint32_t v);

/// Keeps block `block_index` of a symmetric design and replaces every other
/// block by its symmetric difference with it.
SetFamily lambda_design_type1(const SetFamily& design, std::size_t block_index);

/// lambda_design_type1(PG(2, r), 0) for r = dp+1 prime. p must be a prime
/// >= 5: for p = 3 the plane has n = r^2+r+1 divisible by 3.
SetFamily lambda_design_from_plane(std::uint32_t r, std::uint32_t p);

/// {1,x} for x = 2..n together with {2,...,n}; n >= 3.
SetFamily near_pencil(std::size_t n);

/// Regular pentagon on S^1 over Q(sqrt 5): a = (sqrt5-1)/4, b = -(sqrt5+1)/4.
GramTwoDistance<QuadExt> pentagon();

/// The 27 lines on a cubic surface as unit vectors in R^6: Gram entry -1/2
/// for meeting lines, 1/4 otherwise.
GramTwoDistance<Rational> schlafli27();

/// (e_i + e_j)/sqrt(2) for i < j in R^m: inner products 1/2 and 0.
GramTwoDistance<Rational> johnson_pairs(std::size_t m);

} // namespace extremal
