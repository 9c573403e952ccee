#pragma once

#include "extremal/families.hpp"
#include "extremal/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace extremal {

/// Pairwise distances must lie in `allowed` (values in [1, n]).
struct DistanceWithin {
    std::vector<std::size_t> allowed;
};

/// Pairwise distances congruent to lambda mod p, 0 < lambda < p.
struct DistanceCongruent {
    std::uint32_t lambda = 0;
    std::uint32_t p = 0;
};

/// Every pairwise distance equals lambda.
struct ConstantDistance {
    std::size_t lambda = 0;
};

/// Binary tuples read as sets; every pairwise intersection has size lambda.
struct IntersectionConstant {
    std::size_t lambda = 0;
};

using Predicate = std::variant<DistanceWithin, DistanceCongruent, ConstantDistance, IntersectionConstant>;

std::string describe(const Predicate& predicate);

struct SearchProblem {
    std::size_t n = 0;
    std::uint32_t q = 2;
    Predicate predicate;
    /// Stop as soon as a family of this size is found.
    std::optional<std::size_t> target;
};

/// Throws MalformedInput when n, q or the predicate parameters are out of range.
void validate(const SearchProblem& problem);

/// Whether two distinct tuples may both belong to a family.
bool compatible(const SearchProblem& problem, std::span<const std::uint8_t> u, std::span<const std::uint8_t> v);

/// Default cap on q^n.
inline constexpr std::uint64_t kDefaultMaxSpace = std::uint64_t{1} << 20;

struct SearchOptions {
    unsigned jobs = 1;
    /// Overrides the q^n cap; otherwise EXTREMAL_MAX_SPACE, otherwise 2^20.
    std::optional<std::uint64_t> max_space;
    /// Test hook: enumerate candidates in a seeded random order instead of
    /// lexicographically. The maximum is unchanged; the witness may differ.
    std::optional<std::uint64_t> permutation_seed;
};

struct SearchResult {
    std::size_t max_size = 0;
    /// Lexicographically least maximum family (unpermuted runs).
    VectorSystem witness{0, 2, {}};
    std::uint64_t nodes = 0;
    /// False when the run stopped early at the target size.
    bool exhaustive = true;
    bool target_reached = false;
};

/// Exact maximum family over [0, q-1]^n under the predicate. Throws
/// ResourceGuard when q^n exceeds the cap.
SearchResult search_max(const SearchProblem& problem, const SearchOptions& options = {});

/// Largest family whose distance set has at most s elements: the best of
/// search_max over every s-subset L of [n].
SearchResult search_max_distance_count(std::size_t n, std::uint32_t q, std::size_t s,
                                       const SearchOptions& options = {});

struct SweepRow {
    /// "modular-distance" or "distance-count".
    std::string family;
    std::size_t n = 0;
    std::uint32_t q = 0;
    std::uint32_t p = 0;      // modular rows only
    std::uint32_t lambda = 0; // modular rows only
    std::size_t s = 0;        // distance-count rows only
    /// "ok", "violation" or "excluded(<clause>)".
    std::string status;
    std::optional<BigInt> bound;
    std::optional<std::size_t> exact_max;
    bool tight = false;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::size_t violations = 0;

    const SweepRow* find_modular(std::size_t n, std::uint32_t q, std::uint32_t p, std::uint32_t lambda) const;
    /// Fixed-width text table.
    std::string table() const;
};

/// Compares exact maxima with the modular-distance bound n(q-1) for every
/// n <= n_max, 2 <= q <= q_max, odd prime p <= p_max and 0 < lambda < p,
/// and with Delsarte's bound for every s <= min(n, s_max).
SweepReport sweep_bound_grid(std::size_t n_max, std::uint32_t q_max, std::uint32_t p_max, std::size_t s_max = 2,
                             const SearchOptions& options = {});

} // namespace extremal
