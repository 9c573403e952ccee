#include "extremal/certifier.hpp"

#include "extremal/linalg.hpp"

namespace extremal {

std::vector<ModP> indicator_poly(std::uint32_t a, std::uint32_t q, const PrimeFieldCtx& field) {
    if (field.modulus() < q) {
        throw HypothesisViolation("pGeqQ", "p=" + std::to_string(field.modulus()) + " < q=" + std::to_string(q));
    }
    if (a >= q) {
        throw MalformedInput("symbol " + std::to_string(a) + " outside [0," + std::to_string(q - 1) + "]");
    }
    // L_a = prod_{c != a} (x - c)/(a - c) is 1 at a and 0 elsewhere; l_a = 1 - L_a.
    std::vector<ModP> basis{field.one()};
    for (std::uint32_t c = 0; c < q; ++c) {
        if (c == a) {
            continue;
        }
        const ModP scale = (field(a) - field(c)).inverse();
        std::vector<ModP> next(basis.size() + 1, field.zero());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            next[k + 1] += basis[k] * scale;
            next[k] -= basis[k] * field(c) * scale;
        }
        basis = std::move(next);
    }
    std::vector<ModP> out(basis.size(), field.zero());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out[k] = -basis[k];
    }
    out[0] += field.one();
    while (out.size() > 1 && out.back().is_zero()) {
        out.pop_back();
    }
    return out;
}

namespace {

ModP horner(const std::vector<ModP>& coeffs, const ModP& x) {
    ModP acc = zero_like(x);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * x + coeffs[k];
    }
    return acc;
}

} // namespace

Certificate hamming_tight_certificate(const VectorSystem& system, const PrimeFieldCtx& field, std::uint32_t lambda) {
    const std::size_t n = system.length();
    const std::uint32_t q = system.alphabet();
    const std::uint32_t p = field.modulus();
    const std::size_t size = system.size();

    if (p < q) {
        throw HypothesisViolation("pGeqQ", "p=" + std::to_string(p) + " < q=" + std::to_string(q));
    }
    const ModP lam = field(lambda);
    if (lam.is_zero()) {
        throw HypothesisViolation("lambdaNonzeroModP", "lambda=" + std::to_string(lambda) + " is 0 mod " +
                                                           std::to_string(p));
    }
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            const auto d = hamming_distance(system[i], system[j]);
            if (!(field(static_cast<std::int64_t>(d)) == lam)) {
                throw HypothesisViolation("distanceCongruent",
                                          "d_H(h" + std::to_string(i + 1) + ",h" + std::to_string(j + 1) +
                                              ") = " + std::to_string(d) + " is not " + std::to_string(lambda) +
                                              " mod " + std::to_string(p));
            }
        }
    }

    Certificate cert;
    cert.kind = CertificateKind::hamming_tight;
    const std::size_t dim = n * (q - 1) + 1;
    cert.add_fact("n", std::to_string(n));
    cert.add_fact("q", std::to_string(q));
    cert.add_fact("p", std::to_string(p));
    cert.add_fact("lambda", std::to_string(lambda));
    cert.add_fact("size", std::to_string(size));
    cert.add_fact("dimension", std::to_string(dim));
    cert.add_clause("pGeqQ", true);
    cert.add_clause("lambdaNonzeroModP", true);
    cert.add_clause("distanceCongruent", true);
    if (size != dim) {
        cert.mark_not_applicable("|H| = " + std::to_string(size) + " is not n(q-1)+1 = " + std::to_string(dim));
        return cert;
    }

    std::vector<std::vector<ModP>> indicators;
    for (std::uint32_t a = 0; a < q; ++a) {
        indicators.push_back(indicator_poly(a, q, field));
    }

    // f_a in the monomial basis {1} u {x_i^j : 1 <= j <= q-1}.
    Matrix<ModP> coeffs(size, dim, field.zero());
    for (std::size_t m = 0; m < size; ++m) {
        coeffs(m, 0) = -lam;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& l = indicators[system[m][i]];
            coeffs(m, 0) += l[0];
            for (std::size_t j = 1; j < l.size(); ++j) {
                coeffs(m, 1 + i * (q - 1) + (j - 1)) += l[j];
            }
        }
    }

    auto evaluate = [&](std::size_t m, const Tuple& x) {
        ModP acc = -lam;
        for (std::size_t i = 0; i < n; ++i) {
            acc += horner(indicators[system[m][i]], field(x[i]));
        }
        return acc;
    };

    Matrix<ModP> eval(size, size, field.zero());
    for (std::size_t m = 0; m < size; ++m) {
        for (std::size_t s = 0; s < size; ++s) {
            eval(m, s) = evaluate(m, system[s]);
        }
    }
    const Certificate independence = certify_independence(eval);
    cert.add_clause("evaluationMatrixNonsingular", independence.verdict == Verdict::pass,
                    "rank " + *independence.find_fact("rank"));
    const std::size_t coeff_rank = rank(coeffs);
    cert.add_fact("coefficientRank", std::to_string(coeff_rank));
    cert.add_identity("spans_monomial_space", std::to_string(coeff_rank), std::to_string(dim), coeff_rank == dim);

    const ModP expected_alpha = -lam.inverse();
    if (coeff_rank == dim) {
        // 1 = sum_a alpha_a f_a, compared coefficient by coefficient.
        std::vector<ModP> unit(dim, field.zero());
        unit[0] = field.one();
        const auto alpha = solve_linear(coeffs.transposed(), std::span<const ModP>(unit));
        // Same combination from evaluating at the members of H.
        const std::vector<ModP> ones(size, field.one());
        const auto alpha_eval = solve_linear(eval.transposed(), std::span<const ModP>(ones));
        for (std::size_t m = 0; m < size; ++m) {
            cert.coefficients.emplace_back(alpha[m]);
            cert.add_identity("alpha[" + std::to_string(m + 1) + "]", alpha[m], expected_alpha);
            cert.add_identity("alpha_by_evaluation[" + std::to_string(m + 1) + "]", alpha_eval[m], alpha[m]);
        }
    }

    // Evaluate sum_a f_a at each constant vector (j,...,j).
    ModP grand_total = field.zero();
    for (std::uint32_t j = 0; j < q; ++j) {
        const Tuple constant(n, static_cast<std::uint8_t>(j));
        ModP total = field.zero();
        for (std::size_t m = 0; m < size; ++m) {
            total += evaluate(m, constant);
        }
        grand_total += total;
        cert.add_identity("constant_vector_sum[" + std::to_string(j) + "]", total, -lam);
    }
    const ModP nq1 = field(static_cast<std::int64_t>(n)) * field(q - 1);
    const ModP qlam = field(q) * lam;
    cert.add_identity("summed_constant_vectors", grand_total, field(static_cast<std::int64_t>(size)) * (nq1 - qlam));
    cert.add_identity("summed_relation", -qlam, field(static_cast<std::int64_t>(size)) * (nq1 - qlam));
    cert.add_identity("derived_congruence", qlam, nq1 + field.one());
    cert.finalize();
    return cert;
}

} // namespace extremal
