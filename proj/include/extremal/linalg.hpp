#pragma once

#include "extremal/matrix.hpp"
#include "extremal/modp.hpp"
#include "extremal/quadext.hpp"
#include "extremal/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace extremal {

/// Exact rank. Over Q this runs fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix; over F_p and Q(sqrt d) ordinary
/// Gaussian elimination.
template <class T>
std::size_t rank(const Matrix<T>& m);

template <class T>
T determinant(const Matrix<T>& m);

/// Unique solution of M x = rhs for square nonsingular M.
/// Throws SingularSystem carrying the rank otherwise.
template <class T>
std::vector<T> solve_linear(const Matrix<T>& m, std::span<const T> rhs);

/// Column-wise solve of M X = B.
template <class T>
Matrix<T> solve_linear(const Matrix<T>& m, const Matrix<T>& rhs);

struct Inertia {
    bool is_psd = false;
    std::size_t rank = 0;
};

/// Diagonally pivoted LDL^T of a symmetric matrix over an ordered field.
/// PSD iff every pivot is nonnegative and no zero pivot hides a nonzero
/// off-diagonal entry.
template <class T>
Inertia inertia_psd_rank(const Matrix<T>& g);

template <>
std::size_t rank(const Matrix<Rational>& m);
template <>
Rational determinant(const Matrix<Rational>& m);
template <>
Matrix<Rational> solve_linear(const Matrix<Rational>& m, const Matrix<Rational>& rhs);

extern template std::size_t rank(const Matrix<ModP>&);
extern template std::size_t rank(const Matrix<QuadExt>&);
extern template ModP determinant(const Matrix<ModP>&);
extern template QuadExt determinant(const Matrix<QuadExt>&);
extern template std::vector<Rational> solve_linear(const Matrix<Rational>&, std::span<const Rational>);
extern template std::vector<ModP> solve_linear(const Matrix<ModP>&, std::span<const ModP>);
extern template std::vector<QuadExt> solve_linear(const Matrix<QuadExt>&, std::span<const QuadExt>);
extern template Matrix<ModP> solve_linear(const Matrix<ModP>&, const Matrix<ModP>&);
extern template Matrix<QuadExt> solve_linear(const Matrix<QuadExt>&, const Matrix<QuadExt>&);
extern template Inertia inertia_psd_rank(const Matrix<Rational>&);
extern template Inertia inertia_psd_rank(const Matrix<QuadExt>&);

} // namespace extremal
