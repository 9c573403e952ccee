#include "extremal/certifier.hpp"
#include "extremal/constructions.hpp"
#include "extremal/error.hpp"
#include "extremal/linalg.hpp"
#include "extremal/verify.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace extremal;
using extremal::testing::Gen;

namespace {

bool all_hold(const Certificate& cert, std::string_view prefix) {
    bool any = false;
    for (const Identity& id : cert.identities) {
        if (id.name.rfind(prefix, 0) == 0) {
            any = true;
            if (!id.holds) {
                return false;
            }
        }
    }
    return any;
}

std::string fact(const Certificate& cert, std::string_view key) {
    const std::string* v = cert.find_fact(key);
    return v ? *v : std::string("<missing>");
}

ModP evaluate(const std::vector<ModP>& coeffs, const ModP& x) {
    ModP acc = zero_like(x);
    ModP power = one_like(x);
    for (const ModP& c : coeffs) {
        acc += c * power;
        power *= x;
    }
    return acc;
}

Matrix<ModP> to_field(const std::vector<std::vector<int>>& rows, const PrimeFieldCtx& f) {
    Matrix<ModP> m(rows.size(), rows.size(), f.zero());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows.size(); ++c) {
            m(r, c) = f(rows[r][c]);
        }
    }
    return m;
}

} // namespace

TEST(Independence, DiagonalAndRepeatedRows) {
    Matrix<Rational> diag(3, 3, Rational(0));
    diag(0, 0) = Rational(2);
    diag(1, 1) = Rational(-1, 3);
    diag(2, 2) = Rational(7);
    EXPECT_EQ(certify_independence(diag).verdict, Verdict::pass);

    const Matrix<Rational> repeated({{Rational(1), Rational(2)}, {Rational(1), Rational(2)}});
    const Certificate fail = certify_independence(repeated);
    EXPECT_EQ(fail.verdict, Verdict::fail);
    EXPECT_EQ(fact(fail, "rank"), "1");
    EXPECT_EQ(fact(fail, "rankDeficit"), "1");

    EXPECT_THROW(certify_independence(Matrix<Rational>(2, 3, Rational(1))), MalformedInput);
}

TEST(Independence, PentagonEvaluationMatrixIsDiagonal) {
    const auto g = pentagon();
    Matrix<QuadExt> eval(5, 5, zero_like(g.a));
    for (std::size_t m = 0; m < 5; ++m) {
        for (std::size_t s = 0; s < 5; ++s) {
            eval(m, s) = (g.gram(m, s) - g.a) * (g.gram(m, s) - g.b);
            if (m != s) {
                EXPECT_TRUE(eval(m, s).is_zero());
            }
        }
    }
    const QuadExt one = one_like(g.a);
    EXPECT_EQ(eval(0, 0), (one - g.a) * (one - g.b));
    EXPECT_EQ(certify_independence(eval).verdict, Verdict::pass);
}

TEST(Independence, AgreesWithBruteForceOverSmallFields) {
    Gen gen(0x1d);
    for (int p : {2, 3, 5}) {
        const PrimeFieldCtx field(static_cast<std::uint64_t>(p));
        for (std::size_t size = 1; size <= 4; ++size) {
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<std::vector<int>> rows(size, std::vector<int>(size));
                for (auto& row : rows) {
                    for (int& x : row) {
                        x = static_cast<int>(gen.integer(0, p - 1));
                    }
                }
                if (trial % 4 == 0 && size > 1) {
                    rows[size - 1] = rows[0];
                }
                const bool independent = rows_independent_brute_force(rows, p);
                EXPECT_EQ(certify_independence(to_field(rows, field)).verdict == Verdict::pass, independent);
            }
        }
    }
}

TEST(IndicatorPoly, BinaryAndTernary) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const PrimeFieldCtx f(p);
        EXPECT_EQ(indicator_poly(0, 2, f), (std::vector<ModP>{f.zero(), f.one()}));
        EXPECT_EQ(indicator_poly(1, 2, f), (std::vector<ModP>{f.one(), -f.one()}));
    }
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
        const PrimeFieldCtx f(p);
        for (std::uint32_t q = 2; q <= p && q <= 5; ++q) {
            for (std::uint32_t a = 0; a < q; ++a) {
                const auto l = indicator_poly(a, q, f);
                EXPECT_LE(l.size(), q);
                for (std::uint32_t x = 0; x < q; ++x) {
                    EXPECT_EQ(evaluate(l, f(x)), x == a ? f.zero() : f.one()) << "p=" << p << " q=" << q;
                }
            }
        }
    }
    EXPECT_THROW(indicator_poly(0, 3, PrimeFieldCtx(2)), HypothesisViolation);
}

TEST(HammingTight, HadamardFamiliesPass) {
    struct Case {
        std::uint32_t v;
        std::uint64_t p;
        std::uint32_t lambda;
        std::string alpha;
    };
    for (const Case& c : {Case{1, 5, 2, "2"}, Case{2, 7, 4, "5"}}) {
        const PrimeFieldCtx f(c.p);
        const Certificate cert = hamming_tight_certificate(to_vector_system(hadamard_plus_full(c.v)), f, c.lambda);
        EXPECT_EQ(cert.verdict, Verdict::pass);
        // alpha_b = -1/lambda: -1/2 = 2 in F_5, -1/4 = 5 in F_7
        EXPECT_EQ((-f(c.lambda).inverse()).to_string(), c.alpha);
        ASSERT_FALSE(cert.coefficients.empty());
        for (const ExactScalar& a : cert.coefficients) {
            EXPECT_EQ(to_string(a), c.alpha);
        }
        EXPECT_TRUE(all_hold(cert, "alpha["));
        const Identity* congruence = cert.find_identity("derived_congruence");
        ASSERT_NE(congruence, nullptr);
        EXPECT_TRUE(congruence->holds);
    }
}

TEST(HammingTight, SmallerFamiliesAreNotApplicable) {
    const VectorSystem three(3, 2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(hamming_tight_certificate(three, PrimeFieldCtx(5), 2).verdict, Verdict::not_applicable);
}

TEST(HammingTight, DistanceViolationAndBadLambdaRaise) {
    const VectorSystem mixed(3, 2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
    EXPECT_THROW(hamming_tight_certificate(mixed, PrimeFieldCtx(5), 2), HypothesisViolation);
    const auto had = to_vector_system(hadamard_plus_full(1));
    EXPECT_THROW(hamming_tight_certificate(had, PrimeFieldCtx(2), 2), HypothesisViolation);
    EXPECT_THROW(hamming_tight_certificate(VectorSystem(2, 3, {{0, 1}}), PrimeFieldCtx(2), 1), HypothesisViolation);
}

TEST(HammingTight, NoTightFamilyViolatesTheCongruence) {
    // Every binary family of size n+1 with all distances = lambda mod p passes, so the
    // failing branch of the certificate is unreachable from valid input.
    std::size_t tight_families = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::size_t space = std::size_t{1} << n;
        for (std::uint64_t p : {3u, 5u, 7u}) {
            const PrimeFieldCtx f(p);
            for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
                // subsets of size n+1 by bitmask over the space
                for (std::uint32_t mask = 0; mask < (1u << space); ++mask) {
                    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n + 1) {
                        continue;
                    }
                    std::vector<Tuple> vs;
                    for (std::size_t x = 0; x < space; ++x) {
                        if (mask >> x & 1u) {
                            Tuple t(n);
                            for (std::size_t i = 0; i < n; ++i) {
                                t[i] = static_cast<std::uint8_t>(x >> i & 1u);
                            }
                            vs.push_back(t);
                        }
                    }
                    bool congruent = true;
                    for (std::size_t i = 0; i < vs.size() && congruent; ++i) {
                        for (std::size_t j = i + 1; j < vs.size(); ++j) {
                            if (hamming_distance(vs[i], vs[j]) % p != lambda) {
                                congruent = false;
                                break;
                            }
                        }
                    }
                    if (!congruent) {
                        continue;
                    }
                    const Certificate cert = hamming_tight_certificate(VectorSystem(n, 2, vs), f, lambda);
                    EXPECT_EQ(cert.verdict, Verdict::pass);
                    EXPECT_EQ((2 * lambda) % p, (n + 1) % p);
                    ++tight_families;
                }
            }
        }
    }
    EXPECT_GT(tight_families, 0u);
}

TEST(SphereReduce, Examples) {
    Poly<Rational> x1sq(3);
    x1sq.add_term({2, 0, 0}, Rational(1));
    const auto reduced = sphere_reduce(x1sq).poly;
    EXPECT_EQ(reduced.coefficient({0, 0, 0}, Rational(0)), Rational(1));
    EXPECT_EQ(reduced.coefficient({0, 2, 0}, Rational(0)), Rational(-1));
    EXPECT_EQ(reduced.coefficient({0, 0, 2}, Rational(0)), Rational(-1));
    EXPECT_EQ(reduced.terms().size(), 3u);

    Poly<Rational> constant(2);
    constant.add_term({0, 0}, Rational(3));
    EXPECT_EQ(sphere_reduce(constant).poly.terms(), constant.terms());

    Poly<Rational> sum(2);
    sum.add_term({1, 0}, Rational(1));
    sum.add_term({0, 1}, Rational(1));
    const auto square = sphere_reduce(sum * sum).poly;
    // x1^2 + 2 x1 x2 + x2^2 -> 1 + 2 x1 x2
    EXPECT_EQ(square.coefficient({0, 0}, Rational(0)), Rational(1));
    EXPECT_EQ(square.coefficient({1, 1}, Rational(0)), Rational(2));
    EXPECT_EQ(square.coefficient({0, 2}, Rational(0)), Rational(0));
    EXPECT_EQ(square.terms().size(), 2u);

    Poly<Rational> cubic(2);
    cubic.add_term({3, 0}, Rational(1));
    EXPECT_THROW(sphere_reduce(cubic), UnsupportedDegree);
}

TEST(SphereReduce, AgreesOnRandomUnitVectors) {
    Gen gen(0x5fe);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 8));
        Poly<double> p(n);
        for (const Monomial& m : reduced_monomial_basis(n)) {
            p.add_term(m, gen.real(-3, 3));
        }
        Monomial sq(n, 0);
        sq[0] = 2;
        p.add_term(sq, gen.real(-3, 3));
        const auto reduced = sphere_reduce(p).poly;
        const auto basis = reduced_monomial_basis(n);
        const std::set<Monomial> allowed(basis.begin(), basis.end());
        EXPECT_EQ(basis.size(), n * (n + 3) / 2);
        for (const auto& [m, c] : reduced.terms()) {
            EXPECT_TRUE(allowed.count(m)) << "monomial outside the reduced basis";
        }
        for (int k = 0; k < 100; ++k) {
            std::vector<double> x(n);
            double norm = 0;
            for (double& xi : x) {
                xi = gen.real(-1, 1);
                norm += xi * xi;
            }
            norm = std::sqrt(norm);
            if (norm < 1e-6) {
                continue;
            }
            for (double& xi : x) {
                xi /= norm;
            }
            const double lhs = p.evaluate(std::span<const double>(x), 0.0);
            const double rhs = reduced.evaluate(std::span<const double>(x), 0.0);
            EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST(TwoDistance, PentagonAndSchlafliPass) {
    const Certificate pent = two_distance_certificate(pentagon());
    EXPECT_EQ(pent.verdict, Verdict::pass);
    const Identity* rel = pent.find_identity("two_distance_relation");
    ASSERT_NE(rel, nullptr);
    EXPECT_EQ(rel->lhs, "5/4");
    EXPECT_EQ(rel->rhs, "5/4");
    EXPECT_TRUE(all_hold(pent, "coordinate_sum["));
    EXPECT_TRUE(all_hold(pent, "squared_norm_total"));
    EXPECT_EQ(pent.coefficients.size(), 5u);

    const Certificate sch = two_distance_certificate(schlafli27());
    EXPECT_EQ(sch.verdict, Verdict::pass);
    const Identity* srel = sch.find_identity("two_distance_relation");
    ASSERT_NE(srel, nullptr);
    EXPECT_EQ(srel->lhs, "9/8");
    EXPECT_EQ(srel->rhs, "9/8");
    // alpha_m = 1/((1-a)(1-b)) = 1/((3/4)(3/2)) = 8/9
    ASSERT_EQ(sch.coefficients.size(), 27u);
    for (const ExactScalar& a : sch.coefficients) {
        EXPECT_EQ(to_string(a), "8/9");
    }
    EXPECT_EQ(fact(sch, "gramRank"), "6");
}

TEST(TwoDistance, NonMaximalIsNotApplicable) {
    auto johnson = johnson_pairs(6);
    johnson.ambient_dim = *johnson.affine_dim;
    EXPECT_EQ(two_distance_certificate(johnson).verdict, Verdict::not_applicable);
    EXPECT_EQ(two_distance_certificate(johnson_pairs(6)).verdict, Verdict::not_applicable);
}

TEST(TwoDistance, ValueOneIsAHypothesisViolation) {
    auto g = schlafli27();
    g.a = Rational(1);
    EXPECT_THROW(two_distance_certificate(g), HypothesisViolation);
}

TEST(TwoDistance, MutatedSchlafliFails) {
    auto g = schlafli27();
    for (std::size_t i = 0; i < 27; ++i) {
        for (std::size_t j = 0; j < 27; ++j) {
            if (g.gram(i, j) == Rational(1, 4)) {
                g.gram(i, j) = Rational(1, 3);
            }
        }
    }
    g.a = Rational(1, 3);
    const Certificate cert = two_distance_certificate(g);
    EXPECT_EQ(cert.verdict, Verdict::fail);
    EXPECT_FALSE(cert.find_identity("two_distance_relation")->holds);
}

TEST(Neumaier, Examples) {
    const Certificate johnson = neumaier_check(johnson_pairs(6));
    EXPECT_EQ(johnson.verdict, Verdict::pass);
    EXPECT_EQ(fact(johnson, "ratio"), "1/2");
    EXPECT_EQ(fact(johnson, "m"), "2");

    EXPECT_EQ(neumaier_check(pentagon()).verdict, Verdict::not_applicable);

    const Certificate direct = neumaier_check(5, 12, Rational(3), Rational(4));
    EXPECT_EQ(direct.verdict, Verdict::pass);
    EXPECT_EQ(fact(direct, "m"), "4");

    EXPECT_EQ(neumaier_check(5, 12, Rational(2), Rational(3)).verdict, Verdict::pass);
    EXPECT_EQ(neumaier_check(5, 12, Rational(3), Rational(5)).verdict, Verdict::fail);
    EXPECT_EQ(neumaier_check(5, 11, Rational(3), Rational(4)).verdict, Verdict::not_applicable);
    EXPECT_THROW(neumaier_check(5, 12, Rational(4), Rational(3)), MalformedInput);
    EXPECT_THROW(neumaier_check(5, 12, Rational(0), Rational(3)), MalformedInput);
}

TEST(ModDesign, FanoAndTypeOneDesigns) {
    const Certificate fano = mod_design_certificate(projective_plane(2), PrimeFieldCtx(5));
    EXPECT_EQ(fano.verdict, Verdict::pass);
    EXPECT_EQ(fano.find_identity("design_congruence")->lhs, "1");

    const Certificate type1 = mod_design_certificate(lambda_design_from_plane(11, 5), PrimeFieldCtx(5));
    EXPECT_EQ(type1.verdict, Verdict::pass);
    EXPECT_EQ(fact(type1, "nModP"), "3");
    EXPECT_EQ(fact(type1, "kModP"), "2");
    EXPECT_EQ(fact(type1, "lambdaModP"), "1");
    EXPECT_TRUE(all_hold(type1, "degree["));

    try {
        (void)mod_design_certificate(projective_plane(2), PrimeFieldCtx(3));
        FAIL() << "expected a hypothesis violation";
    } catch (const HypothesisViolation& e) {
        EXPECT_EQ(e.clause(), "kNonzeroModP");
    }
}

TEST(ModDesign, PassesOnEveryTypeOnePlaneDesign) {
    for (std::uint32_t p : {5u, 7u}) {
        for (std::uint32_t r = 2; r <= 31; ++r) {
            if (!is_prime(r) || r % p != 1) {
                continue;
            }
            const Certificate cert = mod_design_certificate(lambda_design_from_plane(r, p), PrimeFieldCtx(p));
            EXPECT_EQ(cert.verdict, Verdict::pass) << "r=" << r << " p=" << p;
        }
    }
}

TEST(ModDesign, RejectsMismatchedShapes) {
    try {
        (void)mod_design_certificate(SetFamily::from_one_based(3, {{1, 2}, {2, 3}}), PrimeFieldCtx(5));
        FAIL();
    } catch (const HypothesisViolation& e) {
        EXPECT_EQ(e.clause(), "setsEqualPoints");
    }
    try {
        (void)mod_design_certificate(near_pencil(4), PrimeFieldCtx(5));
        FAIL();
    } catch (const HypothesisViolation& e) {
        EXPECT_EQ(e.clause(), "commonK");
    }
}

TEST(Ryser, FanoIsUniform) {
    const Certificate cert = ryser_decompose(projective_plane(2), 1);
    EXPECT_EQ(cert.verdict, Verdict::pass);
    EXPECT_EQ(fact(cert, "alternative"), "A");
    EXPECT_EQ(fact(cert, "r"), "3");
    EXPECT_EQ(fact(cert, "kappaMultiset"), "1/3 x7");
    EXPECT_TRUE(all_hold(cert, "expansion["));
    EXPECT_TRUE(all_hold(cert, "incident_reciprocal_sum["));
    EXPECT_TRUE(all_hold(cert, "total_reciprocal_sum["));
}

TEST(Ryser, NearPencilsAreTwoDegree) {
    const Certificate four = ryser_decompose(near_pencil(4), 1);
    EXPECT_EQ(four.verdict, Verdict::pass);
    EXPECT_EQ(fact(four, "alternative"), "B");
    EXPECT_EQ(fact(four, "r"), "3");
    EXPECT_EQ(fact(four, "r'"), "2");
    EXPECT_EQ(fact(four, "kappaMultiset"), "1/3 x3, 2/3 x1");
    for (std::size_t n = 4; n <= 8; ++n) {
        const Certificate cert = ryser_decompose(near_pencil(n), 1);
        EXPECT_EQ(cert.verdict, Verdict::pass) << n;
        EXPECT_EQ(fact(cert, "alternative"), "B");
        EXPECT_EQ(std::stoul(fact(cert, "r")) + std::stoul(fact(cert, "r'")), n + 1);
        EXPECT_TRUE(cert.find_identity("kappa_distinct_values")->holds);
    }
}

TEST(Ryser, TypeOneDesignsDecompose) {
    for (const SetFamily& d : {lambda_design_type1(projective_plane(2), 0), lambda_design_type1(projective_plane(3), 2),
                               lambda_design_type1(hadamard_design(3), 0)}) {
        const auto lambda = *intersection_profile(d).lambda;
        const Certificate cert = ryser_decompose(d, lambda);
        EXPECT_EQ(cert.verdict, Verdict::pass);
        EXPECT_TRUE(cert.find_identity("kappa_distinct_values")->holds);
    }
}

TEST(Ryser, HypothesisViolations) {
    try {
        (void)ryser_decompose(hadamard_plus_full(2), 1);
        FAIL();
    } catch (const HypothesisViolation& e) {
        EXPECT_EQ(e.clause(), "setsEqualPoints");
    }
    EXPECT_FALSE(intersection_profile(hadamard_plus_full(2)).lambda.has_value());
    try {
        (void)ryser_decompose(projective_plane(2), 2);
        FAIL();
    } catch (const HypothesisViolation& e) {
        EXPECT_EQ(e.clause(), "constantIntersection");
    }
    try {
        (void)ryser_decompose(SetFamily::from_one_based(1, {{1}}), 1);
        FAIL();
    } catch (const HypothesisViolation& e) {
        EXPECT_EQ(e.clause(), "atLeastTwoSets");
    }
    try {
        (void)ryser_decompose(SetFamily::from_one_based(2, {{1, 2}, {1}}), 1);
        FAIL();
    } catch (const HypothesisViolation& e) {
        EXPECT_EQ(e.clause(), "sizeExceedsLambda");
    }
    EXPECT_THROW(ryser_decompose(projective_plane(2), 0), HypothesisViolation);
}

TEST(Certificate, VerdictReflectsEveryClauseAndIdentity) {
    Certificate c;
    c.add_clause("a", true);
    c.add_identity("x", "1", "1", true);
    c.finalize();
    EXPECT_EQ(c.verdict, Verdict::pass);
    c.add_clause("b", false);
    c.finalize();
    EXPECT_EQ(c.verdict, Verdict::fail);
    Certificate d;
    d.add_identity("y", Rational(1, 2), Rational(2, 4));
    EXPECT_FALSE(d.add_float_identity("z", 1.0, 1.1, 1e-9));
    d.finalize();
    EXPECT_EQ(d.verdict, Verdict::fail);
}
