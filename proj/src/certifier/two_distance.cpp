#include "extremal/certifier.hpp"

#include "extremal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace extremal {

namespace {

Rational from_int(std::int64_t v, const Rational&) { return Rational(v); }
QuadExt from_int(std::int64_t v, const QuadExt& proto) { return QuadExt(Rational(v), proto.radicand()); }

double to_double(const Rational& x) { return x.to_double(); }
double to_double(const QuadExt& x) { return x.to_double(); }

/// Checks that depend on attached floating coordinates.
template <class T>
void coordinate_checks(Certificate& cert, const GramTwoDistance<T>& g, const std::vector<T>& alpha) {
    const auto& coords = *g.coords;
    const std::size_t n = g.ambient_dim;
    const std::size_t count = g.point_count;
    const double tol = kCoordinateTolerance;
    bool shape_ok = coords.size() == count;
    for (const auto& v : coords) {
        shape_ok = shape_ok && v.size() == n;
    }
    cert.add_clause("coordinatesShape", shape_ok);
    if (!shape_ok) {
        return;
    }
    bool gram_ok = true;
    for (std::size_t s = 0; s < count; ++s) {
        for (std::size_t t = 0; t < count; ++t) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                dot += coords[s][i] * coords[t][i];
            }
            const double want = to_double(g.gram(s, t));
            gram_ok = gram_ok && std::abs(dot - want) <= tol * std::max(1.0, std::abs(want));
        }
    }
    cert.add_clause("coordinatesMatchGram", gram_ok);

    const double a = to_double(g.a);
    const double b = to_double(g.b);
    const double nd = static_cast<double>(n);
    const double count_d = static_cast<double>(count);

    // P_m(x) = (<x,v_m> - a)(<x,v_m> - b), reduced on the sphere; the
    // combination sum_m alpha_m Q_m must be the constant polynomial 1.
    Poly<double> combination(n);
    std::vector<Poly<double>> products;
    for (std::size_t m = 0; m < count; ++m) {
        Poly<double> lin_a(n);
        Poly<double> lin_b(n);
        for (std::size_t i = 0; i < n; ++i) {
            Monomial mono(n, 0);
            mono[i] = 1;
            lin_a.add_term(mono, coords[m][i]);
            lin_b.add_term(mono, coords[m][i]);
        }
        lin_a.add_term(Monomial(n, 0), -a);
        lin_b.add_term(Monomial(n, 0), -b);
        const Poly<double> product = lin_a * lin_b;
        combination += sphere_reduce(product).poly.scaled(to_double(alpha[m]));
        products.push_back(product);
    }
    const auto basis = reduced_monomial_basis(n);
    double worst = 0.0;
    for (const auto& mono : basis) {
        const double want = total_degree(mono) == 0 ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(combination.coefficient(mono, 0.0) - want));
    }
    cert.add_float_identity("constant_expansion_residual", worst, 0.0, tol);

    const double prod = (1.0 - a) * (1.0 - b);
    double total_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> plus(n, 0.0);
        std::vector<double> minus(n, 0.0);
        plus[i] = 1.0;
        minus[i] = -1.0;
        double sum_plus = 0.0;
        double sum_minus = 0.0;
        double coord_sum = 0.0;
        double coord_sq = 0.0;
        for (std::size_t m = 0; m < count; ++m) {
            sum_plus += products[m].evaluate(std::span<const double>(plus), 0.0);
            sum_minus += products[m].evaluate(std::span<const double>(minus), 0.0);
            coord_sum += coords[m][i];
            coord_sq += coords[m][i] * coords[m][i];
        }
        total_sq += coord_sq;
        const std::string idx = "[" + std::to_string(i + 1) + "]";
        cert.add_float_identity("sum_P_at_plus_e" + idx, sum_plus, prod, tol);
        cert.add_float_identity("sum_P_at_minus_e" + idx, sum_minus, prod, tol);
        cert.add_float_identity("coordinate_sum" + idx, (a + b) * coord_sum, 0.0, tol);
        cert.add_float_identity("squared_coordinate_sum" + idx, coord_sq, prod - count_d * a * b, tol);
    }
    cert.add_float_identity("squared_norm_total", total_sq, nd * prod - nd * count_d * a * b, tol);
}

} // namespace

template <class T>
Certificate two_distance_certificate(const GramTwoDistance<T>& g) {
    const T one = one_like(g.a);
    if (g.a == one || g.b == one) {
        throw HypothesisViolation("aAndBNotOne", "an inner-product value equals 1");
    }
    Certificate cert;
    cert.kind = CertificateKind::two_distance;
    const std::size_t n = g.ambient_dim;
    const std::size_t count = g.point_count;
    const std::size_t maximal = n * (n + 3) / 2;
    cert.add_fact("n", std::to_string(n));
    cert.add_fact("N", std::to_string(count));
    cert.add_fact("maximalN", std::to_string(maximal));
    cert.add_fact("a", g.a.to_string());
    cert.add_fact("b", g.b.to_string());
    if (n < 2 || count != maximal) {
        cert.mark_not_applicable("N = " + std::to_string(count) + " is not n(n+3)/2 = " + std::to_string(maximal));
        return cert;
    }

    const auto issues = gram_issues(g);
    cert.add_clause("validGram", issues.empty(), issues.empty() ? std::string() : issues.front());
    if (!issues.empty()) {
        const bool structural = !g.gram.is_square() || g.gram.rows() != count ||
                                issues.front().find("neither a nor b") != std::string::npos;
        if (structural) {
            cert.finalize();
            return cert;
        }
    }
    const Inertia inertia = inertia_psd_rank(g.gram);
    cert.add_fact("gramRank", std::to_string(inertia.rank));
    cert.add_fact("gramPsd", inertia.is_psd ? "true" : "false");

    // Evaluation matrix P_m(v_s) = (<v_s,v_m> - a)(<v_s,v_m> - b).
    Matrix<T> eval(count, count, zero_like(g.a));
    for (std::size_t m = 0; m < count; ++m) {
        for (std::size_t s = 0; s < count; ++s) {
            eval(m, s) = (g.gram(m, s) - g.a) * (g.gram(m, s) - g.b);
        }
    }
    const Certificate independence = certify_independence(eval);
    const bool nonsingular = independence.verdict == Verdict::pass;
    cert.add_clause("evaluationMatrixNonsingular", nonsingular, "rank " + *independence.find_fact("rank"));

    const T diag = (one - g.a) * (one - g.b);
    std::vector<T> alpha;
    if (nonsingular) {
        const std::vector<T> ones(count, one);
        alpha = solve_linear(eval.transposed(), std::span<const T>(ones));
        const T expected = diag.inverse();
        for (std::size_t m = 0; m < count; ++m) {
            cert.coefficients.emplace_back(alpha[m]);
            cert.add_identity("alpha[" + std::to_string(m + 1) + "]", alpha[m], expected);
        }
    }

    const T n_t = from_int(static_cast<std::int64_t>(n), g.a);
    const T count_t = from_int(static_cast<std::int64_t>(count), g.a);
    const T lhs = count_t * (g.a * g.b + n_t.inverse());
    cert.add_identity("two_distance_relation", lhs, diag);

    if (g.coords && nonsingular) {
        coordinate_checks(cert, g, alpha);
    }
    cert.finalize();
    return cert;
}

template <class T>
Certificate neumaier_check(std::size_t n, std::size_t count, const T& d1sq, const T& d2sq) {
    if (d1sq.sign() <= 0 || !(d1sq < d2sq)) {
        throw MalformedInput("neumaier_check needs 0 < d1^2 < d2^2 (swap the distances)");
    }
    Certificate cert;
    cert.kind = CertificateKind::neumaier;
    const std::size_t threshold = std::max<std::size_t>(2 * n + 1, 5);
    cert.add_fact("n", std::to_string(n));
    cert.add_fact("N", std::to_string(count));
    cert.add_fact("threshold", std::to_string(threshold));
    const T ratio = d1sq / d2sq;
    cert.add_fact("ratio", ratio.to_string());
    if (count <= threshold) {
        cert.mark_not_applicable("N = " + std::to_string(count) + " does not exceed max(2n+1,5) = " +
                                 std::to_string(threshold));
        return cert;
    }
    const T one = one_like(d1sq);
    // ratio = (m-1)/m  <=>  m = 1/(1 - ratio)
    const T m = (one - ratio).inverse();
    Rational m_rational;
    bool rational = true;
    if constexpr (std::is_same_v<T, QuadExt>) {
        rational = m.is_rational();
        m_rational = m.rational_part();
    } else {
        m_rational = m;
    }
    const bool integral = rational && m_rational.is_integer() && m_rational >= Rational(2);
    if (integral) {
        cert.add_fact("m", m_rational.to_string());
        const T expected = (m - one) / m;
        cert.add_identity("ratio_is_(m-1)/m", ratio, expected);
    } else {
        cert.add_identity("ratio_is_(m-1)/m", ratio.to_string(), "(m-1)/m for integer m >= 2", false);
    }
    cert.finalize();
    return cert;
}

template <class T>
Certificate neumaier_check(const GramTwoDistance<T>& g) {
    const T two = one_like(g.a) + one_like(g.a);
    T da = two - two * g.a;
    T db = two - two * g.b;
    if (db < da) {
        std::swap(da, db);
    }
    return neumaier_check(g.affine_dim.value_or(g.ambient_dim), g.point_count, da, db);
}

template Certificate two_distance_certificate(const GramTwoDistance<Rational>&);
template Certificate two_distance_certificate(const GramTwoDistance<QuadExt>&);
template Certificate neumaier_check(std::size_t, std::size_t, const Rational&, const Rational&);
template Certificate neumaier_check(std::size_t, std::size_t, const QuadExt&, const QuadExt&);
template Certificate neumaier_check(const GramTwoDistance<Rational>&);
template Certificate neumaier_check(const GramTwoDistance<QuadExt>&);

} // namespace extremal
