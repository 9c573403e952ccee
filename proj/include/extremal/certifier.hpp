#pragma once

#include "extremal/families.hpp"
#include "extremal/gram.hpp"
#include "extremal/matrix.hpp"
#include "extremal/modp.hpp"
#include "extremal/poly.hpp"
#include "extremal/quadext.hpp"
#include "extremal/rational.hpp"
#include "extremal/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace extremal {

enum class CertificateKind { independence, hamming_tight, two_distance, neumaier, mod_design, ryser };
enum class Verdict { pass, fail, not_applicable };

std::string_view to_string(CertificateKind kind);
std::string_view to_string(Verdict verdict);

struct Clause {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// One checked identity. Both sides are rendered from independently
/// computed values; `holds` is the exact (or toleranced, for floating
/// coordinate checks) comparison result.
struct Identity {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

struct Certificate {
    CertificateKind kind = CertificateKind::independence;
    std::vector<Clause> hypotheses;
    std::vector<ExactScalar> coefficients;
    std::vector<Identity> identities;
    /// Extra named results (rank, classification, degrees) in insertion order.
    std::vector<std::pair<std::string, std::string>> facts;
    Verdict verdict = Verdict::fail;

    void add_clause(std::string name, bool holds, std::string detail = {});
    void add_fact(std::string key, std::string value);

    template <class T>
    bool add_identity(std::string name, const T& lhs, const T& rhs) {
        const bool ok = lhs == rhs;
        identities.push_back({std::move(name), lhs.to_string(), rhs.to_string(), ok});
        return ok;
    }
    void add_identity(std::string name, std::string lhs, std::string rhs, bool holds);
    /// |lhs - rhs| <= tolerance * max(1, |lhs|, |rhs|).
    bool add_float_identity(std::string name, double lhs, double rhs, double tolerance);

    /// Sets verdict to pass iff every clause and identity holds.
    void finalize();
    void mark_not_applicable(std::string reason);

    const Identity* find_identity(std::string_view name) const;
    const std::string* find_fact(std::string_view key) const;
};

/// Relative tolerance for coordinate-level floating checks.
inline constexpr double kCoordinateTolerance = 1e-9;

/// Determinant criterion: the functions behind B[i][j] = f_i(v_j) are
/// independent when B is nonsingular.
template <class T>
Certificate certify_independence(const Matrix<T>& b);

/// Minimal-degree l_a over F_p with l_a(a) = 0 and l_a(b) = 1 for the other
/// symbols b of [0, q-1]. Coefficients low to high.
std::vector<ModP> indicator_poly(std::uint32_t a, std::uint32_t q, const PrimeFieldCtx& field);

/// Basis-property certificate for a vector system of the extremal size
/// n(q-1)+1 whose pairwise distances are all lambda mod p.
Certificate hamming_tight_certificate(const VectorSystem& system, const PrimeFieldCtx& field, std::uint32_t lambda);

/// Two-distance relation N(ab + 1/n) = (1-a)(1-b) for maximal spherical
/// two-distance sets, with coefficient extraction from the Gram matrix.
template <class T>
Certificate two_distance_certificate(const GramTwoDistance<T>& g);

/// Squared-distance ratio test d1^2/d2^2 = (m-1)/m for two-distance sets of
/// more than max(2n+1, 5) points.
template <class T>
Certificate neumaier_check(std::size_t n, std::size_t count, const T& d1sq, const T& d2sq);

/// Same check with n, N and the squared distances 2-2a, 2-2b read from a
/// Gram configuration (affine dimension when recorded).
template <class T>
Certificate neumaier_check(const GramTwoDistance<T>& g);

/// Modular symmetric-design congruences for n sets on n points with sizes k
/// and pairwise intersections lambda mod p.
Certificate mod_design_certificate(const SetFamily& family, const PrimeFieldCtx& field);

/// Decomposition x_i = sum_j theta_ij f_j + kappa_i for n sets on n points
/// with constant intersection lambda, and the resulting uniform/two-degree
/// dichotomy.
Certificate ryser_decompose(const SetFamily& family, std::size_t lambda);

extern template Certificate certify_independence(const Matrix<Rational>&);
extern template Certificate certify_independence(const Matrix<ModP>&);
extern template Certificate certify_independence(const Matrix<QuadExt>&);
extern template Certificate two_distance_certificate(const GramTwoDistance<Rational>&);
extern template Certificate two_distance_certificate(const GramTwoDistance<QuadExt>&);
extern template Certificate neumaier_check(std::size_t, std::size_t, const Rational&, const Rational&);
extern template Certificate neumaier_check(std::size_t, std::size_t, const QuadExt&, const QuadExt&);
extern template Certificate neumaier_check(const GramTwoDistance<Rational>&);
extern template Certificate neumaier_check(const GramTwoDistance<QuadExt>&);

} // namespace extremal
