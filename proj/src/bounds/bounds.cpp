#include "extremal/bounds.hpp"

#include "extremal/error.hpp"
#include "extremal/modp.hpp"

namespace extremal {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt out;
    if (k > n) {
        return out;
    }
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt delsarte_bound(std::uint64_t n, std::uint64_t q, std::uint64_t s) {
    if (q < 2) {
        throw HypothesisViolation("q>1", "alphabet size must exceed 1");
    }
    if (s == 0 || s > n) {
        throw HypothesisViolation("0<s<=n", "s=" + std::to_string(s) + " with n=" + std::to_string(n));
    }
    BigInt total = 0;
    BigInt power = 1;
    for (std::uint64_t i = 0; i <= s; ++i) {
        total += binomial(n, i) * power;
        power *= q - 1;
    }
    return total;
}

BigInt msd_bound(std::uint64_t n, std::uint64_t s) {
    if (n < 1 || s < 1) {
        throw HypothesisViolation("n,s>=1", "n=" + std::to_string(n) + ", s=" + std::to_string(s));
    }
    return binomial(n + s - 1, s) + binomial(n + s - 2, s - 1);
}

BigInt two_distance_max(std::uint64_t n) {
    if (n < 1) {
        throw HypothesisViolation("n>=1", "dimension must be positive");
    }
    BigInt v = n;
    v *= n + 3;
    return v / 2;
}

BigInt uniform_two_intersection_conjecture(std::uint64_t n, std::uint64_t w) {
    if (w < 2 || w > n) {
        throw HypothesisViolation("2<=w<=n", "w=" + std::to_string(w) + ", n=" + std::to_string(n));
    }
    return binomial(n - w + 2, 2);
}

std::optional<BigInt> ModularDistanceHypotheses::implied_bound() const {
    if (!holds()) {
        return std::nullopt;
    }
    BigInt b = n;
    b *= q - 1;
    return b;
}

std::vector<std::pair<std::string, bool>> ModularDistanceHypotheses::clauses() const {
    return {{"pPrime", p_prime},
            {"pGeqQ", p_geq_q},
            {"nNonzeroModP", n_nonzero_mod_p},
            {"lambdaNonzeroModP", lambda_nonzero_mod_p},
            {"qLambdaClause", q_lambda_clause}};
}

std::optional<std::string> ModularDistanceHypotheses::first_failure() const {
    for (const auto& [name, ok] : clauses()) {
        if (!ok) {
            return name;
        }
    }
    return std::nullopt;
}

ModularDistanceHypotheses check_modular_distance_hypotheses(std::uint64_t n, std::uint64_t q, std::uint64_t p,
                                                            std::uint64_t lambda) {
    if (q < 2) {
        throw HypothesisViolation("q>1", "alphabet size must exceed 1");
    }
    if (lambda == 0) {
        throw HypothesisViolation("lambda>0", "lambda must be positive");
    }
    ModularDistanceHypotheses h;
    h.n = n;
    h.q = q;
    h.p = p;
    h.lambda = lambda;
    h.p_prime = is_prime(p);
    h.p_geq_q = p >= q;
    if (p == 0) {
        return h;
    }
    h.n_nonzero_mod_p = n % p != 0;
    h.lambda_nonzero_mod_p = lambda % p != 0;
    // (q*lambda) mod p vs (n(q-1)+1) mod p, in wide arithmetic
    const BigInt lhs = BigInt(q) * BigInt(lambda);
    const BigInt rhs = BigInt(n) * BigInt(q - 1) + 1;
    const BigInt diff = lhs - rhs;
    h.q_lambda_clause = mpz_divisible_ui_p(diff.get_mpz_t(), p) == 0;
    return h;
}

} // namespace extremal
