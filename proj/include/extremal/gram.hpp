#pragma once

#include "extremal/linalg.hpp"
#include "extremal/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace extremal {

/// A spherical two-distance configuration given by its Gram matrix: unit
/// diagonal, off-diagonal entries in {a, b}. Coordinates are an optional
/// floating attachment used only for coordinate-level checks.
template <class T>
struct GramTwoDistance {
    std::size_t ambient_dim = 0;
    std::size_t point_count = 0;
    T a;
    T b;
    Matrix<T> gram;
    std::optional<std::vector<std::vector<double>>> coords;
    /// Dimension of the affine span when it is smaller than ambient_dim.
    std::optional<std::size_t> affine_dim;
};

/// Every violated invariant, as readable messages; empty when valid.
template <class T>
std::vector<std::string> gram_issues(const GramTwoDistance<T>& g) {
    std::vector<std::string> issues;
    const auto one = one_like(g.a);
    if (!g.gram.is_square()) {
        issues.emplace_back("gram matrix is not square");
        return issues;
    }
    if (g.gram.rows() != g.point_count) {
        issues.push_back("gram has " + std::to_string(g.gram.rows()) + " rows but N=" + std::to_string(g.point_count));
    }
    if (g.a == one || g.b == one) {
        issues.emplace_back("an inner-product value equals 1");
    }
    if (g.a == g.b) {
        issues.emplace_back("a equals b");
    }
    for (std::size_t i = 0; i < g.gram.rows(); ++i) {
        if (!(g.gram(i, i) == one)) {
            issues.push_back("diagonal entry " + std::to_string(i) + " is not 1");
        }
        for (std::size_t j = 0; j < g.gram.cols(); ++j) {
            if (i != j && !(g.gram(i, j) == g.a) && !(g.gram(i, j) == g.b)) {
                issues.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is neither a nor b");
                return issues;
            }
        }
    }
    if (!g.gram.is_symmetric()) {
        issues.emplace_back("gram matrix is not symmetric");
        return issues;
    }
    const Inertia inertia = inertia_psd_rank(g.gram);
    if (!inertia.is_psd) {
        issues.emplace_back("gram matrix is not positive semidefinite");
    }
    if (inertia.rank > g.ambient_dim) {
        issues.push_back("gram rank " + std::to_string(inertia.rank) + " exceeds dimension " +
                         std::to_string(g.ambient_dim));
    }
    return issues;
}

} // namespace extremal
