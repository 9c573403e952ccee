#include "extremal/certifier.hpp"

#include "extremal/linalg.hpp"

#include <map>

namespace extremal {

namespace {

/// Renders sum_l c_l x_l + c_0 with 1-based variable names; "0" when empty.
std::string render_linear(const std::vector<Rational>& coeffs, const Rational& constant) {
    std::string out;
    auto append = [&out](const Rational& c, const std::string& var) {
        if (c.is_zero()) {
            return;
        }
        std::string term;
        if (var.empty()) {
            term = c.to_string();
        } else if (c == Rational(1)) {
            term = var;
        } else if (c == Rational(-1)) {
            term = "-" + var;
        } else {
            term = c.to_string() + "*" + var;
        }
        if (!out.empty() && term.front() != '-') {
            out += "+";
        }
        out += term;
    };
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
        append(coeffs[l], "x" + std::to_string(l + 1));
    }
    append(constant, "");
    return out.empty() ? "0" : out;
}

} // namespace

Certificate ryser_decompose(const SetFamily& family, std::size_t lambda) {
    const std::size_t n = family.ground();
    if (family.size() != n) {
        throw HypothesisViolation("setsEqualPoints", std::to_string(family.size()) + " sets on " + std::to_string(n) +
                                                         " points");
    }
    if (n < 2) {
        throw HypothesisViolation("atLeastTwoSets", "a pairwise condition needs n >= 2");
    }
    if (lambda == 0) {
        throw HypothesisViolation("lambdaPositive", "lambda must be positive");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto s = family[i].intersection_size(family[j]);
            if (s != lambda) {
                throw HypothesisViolation("constantIntersection", "|F_" + std::to_string(i + 1) + " ∩ F_" +
                                                                      std::to_string(j + 1) + "| = " +
                                                                      std::to_string(s) + " != " +
                                                                      std::to_string(lambda));
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (family[j].size() <= lambda) {
            throw HypothesisViolation("sizeExceedsLambda", "|F_" + std::to_string(j + 1) + "| = " +
                                                               std::to_string(family[j].size()) + " <= lambda");
        }
    }

    Certificate cert;
    cert.kind = CertificateKind::ryser;
    for (const char* clause : {"setsEqualPoints", "lambdaPositive", "constantIntersection", "sizeExceedsLambda"}) {
        cert.add_clause(clause, true);
    }
    cert.add_fact("n", std::to_string(n));
    cert.add_fact("lambda", std::to_string(lambda));

    // A: rows are the characteristic vectors.
    Matrix<Rational> incidence(n, n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        for (auto e : family[j].elements()) {
            incidence(j, e) = Rational(1);
        }
    }
    const std::size_t a_rank = rank(incidence);
    if (a_rank != n) {
        throw InternalInconsistency("incidence matrix has rank " + std::to_string(a_rank) + " < " + std::to_string(n) +
                                    " although the hypotheses hold");
    }
    cert.add_clause("incidenceNonsingular", true);

    // Column i of X solves A^T theta_i = e_i, i.e. theta(i, j) = X(j, i).
    const Matrix<Rational> x = solve_linear(incidence.transposed(), Matrix<Rational>::identity(n, Rational(0)));
    const Rational lam(static_cast<std::int64_t>(lambda));
    std::vector<Rational> gap(n);
    for (std::size_t j = 0; j < n; ++j) {
        gap[j] = Rational(static_cast<std::int64_t>(family[j].size())) - lam;
    }
    std::vector<Rational> kappa(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational sum;
        for (std::size_t j = 0; j < n; ++j) {
            sum += x(j, i);
        }
        kappa[i] = lam * sum;
        cert.coefficients.emplace_back(kappa[i]);
    }

    const auto deg = degrees(family);
    const Rational n_minus_one(static_cast<std::int64_t>(n - 1));
    Rational total_reciprocal;
    for (std::size_t j = 0; j < n; ++j) {
        total_reciprocal += gap[j].inverse();
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::string idx = "[" + std::to_string(i + 1) + "]";

        // Re-expand sum_j theta_ij f_j + kappa_i, f_j = <x, v_j> - lambda.
        std::vector<Rational> coeffs(n);
        Rational constant = kappa[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& theta = x(j, i);
            if (theta.is_zero()) {
                continue;
            }
            for (auto e : family[j].elements()) {
                coeffs[e] += theta;
            }
            constant -= theta * lam;
        }
        std::vector<Rational> monomial(n);
        monomial[i] = Rational(1);
        cert.add_identity("expansion" + idx, render_linear(coeffs, constant), render_linear(monomial, Rational(0)),
                          coeffs == monomial && constant.is_zero());

        // theta_ij = (1 - kappa_i)/(|F_j| - lambda) on sets through i, -kappa_i/(|F_j| - lambda) elsewhere.
        Rational deviation;
        Rational incident;
        Rational complement;
        for (std::size_t j = 0; j < n; ++j) {
            const bool through = family[j].contains(i);
            const Rational predicted = ((through ? Rational(1) : Rational(0)) - kappa[i]) / gap[j];
            const Rational diff = x(j, i) - predicted;
            deviation += diff * diff;
            (through ? incident : complement) += gap[j].inverse();
        }
        cert.add_identity("theta_formula_deviation" + idx, deviation, Rational(0));

        if (kappa[i] == Rational(1)) {
            cert.add_identity("incident_reciprocal_sum" + idx, incident.to_string(), "undefined (kappa = 1)", false);
        } else {
            cert.add_identity("incident_reciprocal_sum" + idx, incident, (Rational(1) - kappa[i]).inverse());
        }
        cert.add_identity("degree_from_kappa" + idx, Rational(static_cast<std::int64_t>(deg[i])),
                          kappa[i] * n_minus_one + Rational(1));
        if (kappa[i].is_zero() || kappa[i] == Rational(1)) {
            cert.add_identity("complement_reciprocal_sum" + idx, complement.to_string(), "undefined", false);
            cert.add_identity("total_reciprocal_sum" + idx, total_reciprocal.to_string(), "undefined", false);
        } else {
            cert.add_identity("complement_reciprocal_sum" + idx, complement, kappa[i].inverse() - lam.inverse());
            cert.add_identity("total_reciprocal_sum" + idx, total_reciprocal,
                              kappa[i].inverse() + (Rational(1) - kappa[i]).inverse() - lam.inverse());
        }
    }

    std::map<Rational, std::size_t> kappa_counts;
    for (const auto& k : kappa) {
        ++kappa_counts[k];
    }
    std::string multiset;
    for (const auto& [k, c] : kappa_counts) {
        multiset += (multiset.empty() ? "" : ", ") + k.to_string() + " x" + std::to_string(c);
    }
    cert.add_fact("kappaMultiset", multiset);
    cert.add_identity("kappa_distinct_values", std::to_string(kappa_counts.size()), "<= 2", kappa_counts.size() <= 2);

    if (kappa_counts.size() == 1) {
        const Rational r = kappa.front() * n_minus_one + Rational(1);
        cert.add_fact("alternative", "A");
        cert.add_fact("r", r.to_string());
        for (std::size_t j = 0; j < n; ++j) {
            cert.add_identity("set_size[" + std::to_string(j + 1) + "]",
                              Rational(static_cast<std::int64_t>(family[j].size())), r);
        }
    } else if (kappa_counts.size() == 2) {
        const Rational& k_small = kappa_counts.begin()->first;
        const Rational& k_large = kappa_counts.rbegin()->first;
        const Rational r = k_large * n_minus_one + Rational(1);
        const Rational r_prime = k_small * n_minus_one + Rational(1);
        cert.add_fact("alternative", "B");
        cert.add_fact("r", r.to_string());
        cert.add_fact("r'", r_prime.to_string());
        cert.add_identity("kappa_sum", k_small + k_large, Rational(1));
        cert.add_identity("degree_sum", r + r_prime, Rational(static_cast<std::int64_t>(n + 1)));
    }
    cert.finalize();
    return cert;
}

} // namespace extremal
