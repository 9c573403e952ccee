#pragma once

#include "extremal/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace extremal {

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Delsarte's bound sum_{i=0}^{s} C(n,i) (q-1)^i for codes with at most s
/// distinct Hamming distances.
BigInt delsarte_bound(std::uint64_t n, std::uint64_t q, std::uint64_t s);

/// C(n+s-1, s) + C(n+s-2, s-1), the spherical s-distance bound.
BigInt msd_bound(std::uint64_t n, std::uint64_t s);

/// n(n+3)/2.
BigInt two_distance_max(std::uint64_t n);

/// C(n-w+2, 2).
BigInt uniform_two_intersection_conjecture(std::uint64_t n, std::uint64_t w);

/// Clause-by-clause verdict for the modular constant-distance bound
/// |H| <= n(q-1): p prime, p >= q, n != 0, lambda != 0 and
/// q*lambda != n(q-1)+1, all mod p.
struct ModularDistanceHypotheses {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    std::uint64_t lambda = 0;
    bool p_prime = false;
    bool p_geq_q = false;
    bool n_nonzero_mod_p = false;
    bool lambda_nonzero_mod_p = false;
    bool q_lambda_clause = false;

    bool holds() const {
        return p_prime && p_geq_q && n_nonzero_mod_p && lambda_nonzero_mod_p && q_lambda_clause;
    }
    /// n(q-1) when every clause holds.
    std::optional<BigInt> implied_bound() const;
    /// (clause name, holds) in a fixed order.
    std::vector<std::pair<std::string, bool>> clauses() const;
    /// Name of the first failing clause, if any.
    std::optional<std::string> first_failure() const;
};

ModularDistanceHypotheses check_modular_distance_hypotheses(std::uint64_t n, std::uint64_t q, std::uint64_t p,
                                                            std::uint64_t lambda);

} // namespace extremal
