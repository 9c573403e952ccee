#include "extremal/bounds.hpp"
#include "extremal/error.hpp"

#include <gtest/gtest.h>

using namespace extremal;

namespace {

// Pascal's triangle, independent of the library's binomial.
std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint64_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (std::uint64_t j = 1; j <= i; ++j) {
            c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
    }
    return k > n ? 0 : c[n][k];
}

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

} // namespace

TEST(Binomial, MatchesPascal) {
    for (std::uint64_t n = 0; n <= 40; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            EXPECT_EQ(binomial(n, k), BigInt(std::to_string(choose(n, k))));
        }
    }
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(to_string(binomial(100, 50)), "100891344545564193334812497256");
}

TEST(Delsarte, Examples) {
    EXPECT_EQ(delsarte_bound(4, 2, 4), 16);
    EXPECT_EQ(delsarte_bound(3, 2, 1), 4);
    EXPECT_EQ(delsarte_bound(2, 3, 2), 9);
    EXPECT_THROW(delsarte_bound(3, 2, 0), HypothesisViolation);
    EXPECT_THROW(delsarte_bound(3, 2, 4), HypothesisViolation);
    EXPECT_THROW(delsarte_bound(3, 1, 1), HypothesisViolation);
}

TEST(Delsarte, FullRangeIsWholeSpace) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
        for (std::uint64_t q = 2; q <= 4; ++q) {
            EXPECT_EQ(delsarte_bound(n, q, n), BigInt(std::to_string(power(q, n))));
        }
    }
}

TEST(Delsarte, MatchesDirectSum) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t q = 2; q <= 5; ++q) {
            std::uint64_t total = 0;
            for (std::uint64_t s = 1; s <= n; ++s) {
                if (s == 1) {
                    total = 1;
                }
                total += choose(n, s) * power(q - 1, s);
                EXPECT_EQ(delsarte_bound(n, q, s), BigInt(std::to_string(total)));
            }
        }
    }
}

TEST(Msd, Examples) {
    EXPECT_EQ(msd_bound(2, 2), 5);
    EXPECT_EQ(msd_bound(6, 2), 27);
    for (std::uint64_t n = 1; n <= 30; ++n) {
        EXPECT_EQ(msd_bound(n, 1), BigInt(static_cast<unsigned long>(n + 1)));
    }
    EXPECT_EQ(msd_bound(3, 3), BigInt(static_cast<unsigned long>(choose(5, 3) + choose(4, 2))));
    EXPECT_THROW(msd_bound(0, 2), HypothesisViolation);
}

TEST(TwoDistanceMax, ExamplesAndAgreementWithMsd) {
    EXPECT_EQ(two_distance_max(2), 5);
    EXPECT_EQ(two_distance_max(6), 27);
    EXPECT_EQ(two_distance_max(22), 275);
    for (std::uint64_t n = 1; n <= 50; ++n) {
        EXPECT_EQ(two_distance_max(n), msd_bound(n, 2));
    }
    EXPECT_THROW(two_distance_max(0), HypothesisViolation);
}

TEST(UniformTwoIntersection, Examples) {
    for (std::uint64_t n = 2; n <= 10; ++n) {
        EXPECT_EQ(uniform_two_intersection_conjecture(n, n), 1);
    }
    EXPECT_EQ(uniform_two_intersection_conjecture(6, 3), 10);
    EXPECT_EQ(uniform_two_intersection_conjecture(5, 2), 10);
    EXPECT_THROW(uniform_two_intersection_conjecture(5, 1), HypothesisViolation);
    EXPECT_THROW(uniform_two_intersection_conjecture(5, 6), HypothesisViolation);
}

TEST(ModularDistanceHypotheses, Examples) {
    const auto tight = check_modular_distance_hypotheses(4, 2, 3, 2);
    EXPECT_TRUE(tight.holds());
    EXPECT_EQ(tight.implied_bound(), 4);
    EXPECT_FALSE(tight.first_failure().has_value());

    const auto hadamard = check_modular_distance_hypotheses(3, 2, 5, 2);
    EXPECT_FALSE(hadamard.holds());
    EXPECT_FALSE(hadamard.q_lambda_clause);
    EXPECT_EQ(hadamard.first_failure(), "qLambdaClause");
    EXPECT_FALSE(hadamard.implied_bound().has_value());

    const auto divisible = check_modular_distance_hypotheses(3, 2, 3, 1);
    EXPECT_FALSE(divisible.n_nonzero_mod_p);
    EXPECT_EQ(divisible.first_failure(), "nNonzeroModP");

    EXPECT_EQ(check_modular_distance_hypotheses(4, 2, 4, 1).first_failure(), "pPrime");
    EXPECT_EQ(check_modular_distance_hypotheses(4, 5, 3, 1).first_failure(), "pGeqQ");
    EXPECT_EQ(check_modular_distance_hypotheses(4, 2, 3, 3).first_failure(), "lambdaNonzeroModP");
    EXPECT_THROW(check_modular_distance_hypotheses(4, 1, 3, 1), HypothesisViolation);
    EXPECT_THROW(check_modular_distance_hypotheses(4, 2, 3, 0), HypothesisViolation);
}

TEST(ModularDistanceHypotheses, ClausesMatchDirectArithmetic) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t q = 2; q <= 5; ++q) {
            for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
                for (std::uint64_t lambda = 1; lambda <= 12; ++lambda) {
                    const auto h = check_modular_distance_hypotheses(n, q, p, lambda);
                    EXPECT_EQ(h.p_geq_q, p >= q);
                    EXPECT_EQ(h.n_nonzero_mod_p, n % p != 0);
                    EXPECT_EQ(h.lambda_nonzero_mod_p, lambda % p != 0);
                    EXPECT_EQ(h.q_lambda_clause, (q * lambda) % p != (n * (q - 1) + 1) % p);
                    EXPECT_EQ(h.holds(), h.p_prime && h.p_geq_q && h.n_nonzero_mod_p && h.lambda_nonzero_mod_p &&
                                             h.q_lambda_clause);
                    EXPECT_EQ(h.clauses().size(), 5u);
                }
            }
        }
    }
}
