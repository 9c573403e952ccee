#include "extremal/certifier.hpp"

#include "extremal/linalg.hpp"

namespace extremal {

Certificate mod_design_certificate(const SetFamily& family, const PrimeFieldCtx& field) {
    const std::size_t n = family.ground();
    const std::uint32_t p = field.modulus();
    if (family.size() != n) {
        throw HypothesisViolation("setsEqualPoints", std::to_string(family.size()) + " sets on " + std::to_string(n) +
                                                         " points");
    }
    if (n < 2) {
        throw HypothesisViolation("setsEqualPoints", "need at least two sets");
    }
    auto residue = [&](std::size_t v) { return field(static_cast<std::int64_t>(v)); };

    const ModP k = residue(family[0].size());
    for (std::size_t i = 1; i < n; ++i) {
        if (!(residue(family[i].size()) == k)) {
            throw HypothesisViolation("commonK", "|F_1| = " + std::to_string(family[0].size()) + " and |F_" +
                                                     std::to_string(i + 1) + "| = " + std::to_string(family[i].size()) +
                                                     " differ mod " + std::to_string(p));
        }
    }
    const ModP lambda = residue(family[0].intersection_size(family[1]));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(residue(family[i].intersection_size(family[j])) == lambda)) {
                throw HypothesisViolation("commonLambda", "|F_" + std::to_string(i + 1) + " ∩ F_" +
                                                              std::to_string(j + 1) + "| differs from |F_1 ∩ F_2| mod " +
                                                              std::to_string(p));
            }
        }
    }
    const ModP n_res = residue(n);
    const std::string residues = "n=" + n_res.to_string() + ", k=" + k.to_string() + ", lambda=" + lambda.to_string() +
                                 " mod " + std::to_string(p);
    if (n_res.is_zero()) {
        throw HypothesisViolation("nNonzeroModP", residues);
    }
    if (k.is_zero()) {
        throw HypothesisViolation("kNonzeroModP", residues);
    }
    if ((k - lambda).is_zero()) {
        throw HypothesisViolation("kMinusLambdaNonzeroModP", residues);
    }

    Certificate cert;
    cert.kind = CertificateKind::mod_design;
    cert.add_fact("p", std::to_string(p));
    cert.add_fact("nModP", n_res.to_string());
    cert.add_fact("kModP", k.to_string());
    cert.add_fact("lambdaModP", lambda.to_string());
    for (const char* clause : {"setsEqualPoints", "commonK", "commonLambda", "nNonzeroModP", "kNonzeroModP",
                               "kMinusLambdaNonzeroModP"}) {
        cert.add_clause(clause, true);
    }

    // Linear polynomials in x_2..x_n (column 0 is the constant term). Sets
    // through point 1 get x_1 replaced by k - x_2 - ... - x_n.
    const ModP k_minus_lambda = k - lambda;
    Matrix<ModP> coeffs(n, n, field.zero());
    for (std::size_t j = 0; j < n; ++j) {
        const bool through_first = family[j].contains(0);
        coeffs(j, 0) = through_first ? k_minus_lambda : -lambda;
        for (std::size_t l = 1; l < n; ++l) {
            const bool in = family[j].contains(l);
            if (through_first) {
                coeffs(j, l) = in ? field.zero() : -field.one();
            } else {
                coeffs(j, l) = in ? field.one() : field.zero();
            }
        }
    }
    Matrix<ModP> eval(n, n, field.zero());
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t j = 0; j < n; ++j) {
        members[j] = family[j].elements();
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ModP acc = coeffs(i, 0);
            for (auto l : members[j]) {
                if (l != 0) {
                    acc += coeffs(i, l);
                }
            }
            eval(i, j) = acc;
        }
    }
    const Certificate independence = certify_independence(eval);
    cert.add_clause("evaluationMatrixNonsingular", independence.verdict == Verdict::pass,
                    "rank " + *independence.find_fact("rank"));
    if (independence.verdict == Verdict::pass) {
        std::vector<ModP> target(n, field.zero());
        target[0] = k_minus_lambda;
        try {
            const auto alpha = solve_linear(coeffs.transposed(), std::span<const ModP>(target));
            for (std::size_t j = 0; j < n; ++j) {
                cert.coefficients.emplace_back(alpha[j]);
                cert.add_identity("alpha[" + std::to_string(j + 1) + "]", alpha[j], field.one());
            }
        } catch (const SingularSystem& e) {
            cert.add_identity("spans_linear_space", std::to_string(e.rank()), std::to_string(n), false);
        }
    }
    ModP constant_sum = field.zero();
    for (std::size_t j = 0; j < n; ++j) {
        constant_sum += coeffs(j, 0);
    }
    cert.add_identity("constant_terms", k_minus_lambda, constant_sum);

    const auto deg = degrees(family);
    for (std::size_t i = 0; i < n; ++i) {
        cert.add_identity("degree_congruence[" + std::to_string(i + 1) + "]", k_minus_lambda,
                          -lambda * n_res + k * residue(deg[i]));
    }
    cert.add_identity("design_congruence", k * (k - field.one()), lambda * (n_res - field.one()));
    for (std::size_t i = 0; i < n; ++i) {
        cert.add_identity("degree[" + std::to_string(i + 1) + "]", residue(deg[i]), k);
    }
    cert.finalize();
    return cert;
}

} // namespace extremal
