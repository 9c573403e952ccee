#include "extremal/constructions.hpp"
#include "extremal/error.hpp"
#include "extremal/linalg.hpp"
#include "extremal/scalar.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace extremal;
using extremal::testing::Gen;

namespace {

Matrix<Rational> rational_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows) {
        out.emplace_back(row.begin(), row.end());
    }
    return Matrix<Rational>(out);
}

// Dimension of the row space over F_p from the number of distinct vectors it spans.
std::size_t span_dimension(const Matrix<ModP>& m) {
    const std::uint32_t p = m(0, 0).modulus();
    std::set<std::vector<std::uint32_t>> span;
    std::vector<std::uint32_t> coeff(m.rows(), 0);
    while (true) {
        std::vector<std::uint32_t> v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                v[c] = (v[c] + coeff[r] * m(r, c).value()) % p;
            }
        }
        span.insert(v);
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == p) {
            coeff[i++] = 0;
        }
        if (i == coeff.size()) {
            break;
        }
    }
    std::size_t dim = 0;
    for (std::size_t size = 1; size < span.size(); size *= p) {
        ++dim;
    }
    return dim;
}

template <class T>
T leibniz_determinant(const Matrix<T>& m) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    T total = zero_like(m(0, 0));
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        T term = one_like(m(0, 0));
        for (std::size_t i = 0; i < perm.size(); ++i) {
            term *= m(i, perm[i]);
        }
        total += inversions % 2 == 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST(Rational, ParsesAndPrintsCanonicalForm) {
    EXPECT_EQ(Rational::parse("6/8").to_string(), "3/4");
    EXPECT_EQ(Rational::parse("-10/5").to_string(), "-2");
    EXPECT_EQ(Rational::parse("0/7").to_string(), "0");
    EXPECT_EQ(Rational::parse("0/7").denominator(), 1);
    EXPECT_EQ(Rational::parse("+3").numerator(), 3);
    EXPECT_THROW(Rational::parse("1/0"), MalformedInput);
    EXPECT_THROW(Rational::parse("1/-2"), MalformedInput);
    EXPECT_THROW(Rational::parse("abc"), MalformedInput);
    EXPECT_THROW(Rational::parse(""), MalformedInput);
}

TEST(Rational, OrderingAndSign) {
    EXPECT_LT(Rational::parse("-1/2"), Rational::parse("-1/3"));
    EXPECT_GT(Rational::parse("2/3"), Rational::parse("3/5"));
    EXPECT_EQ(Rational(-4).sign(), -1);
    EXPECT_TRUE(Rational(0).is_zero());
    EXPECT_THROW((void)Rational(0).inverse(), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
    Gen gen(0xa11ce);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational x = gen.rational();
        const Rational y = gen.rational();
        const Rational z = gen.rational();
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x - x, Rational(0));
        if (!x.is_zero()) {
            EXPECT_EQ(x * x.inverse(), Rational(1));
            EXPECT_EQ((y / x) * x, y);
        }
    }
}

TEST(ModP, ArithmeticAndInverse) {
    const PrimeFieldCtx f7(7);
    EXPECT_EQ((f7(3) + f7(5)).value(), 1u);
    EXPECT_EQ((f7(3) - f7(5)).value(), 5u);
    EXPECT_EQ(f7(-1).value(), 6u);
    EXPECT_EQ((f7(3) * f7(5)).value(), 1u);
    EXPECT_EQ(f7(3).inverse(), f7(5));
    EXPECT_EQ(f7(3).pow(6), f7.one());
    for (std::int64_t a = 1; a < 7; ++a) {
        EXPECT_EQ(f7(a) * f7(a).inverse(), f7.one());
    }
    EXPECT_THROW((void)f7.zero().inverse(), std::domain_error);
}

TEST(ModP, RejectsCompositeModulusAndMixedFields) {
    EXPECT_THROW(PrimeFieldCtx(9), HypothesisViolation);
    EXPECT_THROW(PrimeFieldCtx(1), HypothesisViolation);
    const PrimeFieldCtx f5(5);
    const PrimeFieldCtx f7(7);
    EXPECT_THROW((void)(f5(1) + f7(1)), MalformedInput);
    EXPECT_THROW((void)(f5(1) == f7(1)), MalformedInput);
}

TEST(ModP, ParsesResiduesInRange) {
    const PrimeFieldCtx f5(5);
    EXPECT_EQ(f5.parse("4").value(), 4u);
    EXPECT_THROW(f5.parse("5"), MalformedInput);
    EXPECT_THROW(f5.parse("-1"), MalformedInput);
}

TEST(QuadExt, SignIsExact) {
    // sqrt(2) - 1 > 0, 1 - sqrt(2) < 0, 7 - 5 sqrt(2) > 0 (49 > 50 is false: negative)
    EXPECT_EQ(QuadExt(Rational(-1), Rational(1), 2).sign(), 1);
    EXPECT_EQ(QuadExt(Rational(1), Rational(-1), 2).sign(), -1);
    EXPECT_EQ(QuadExt(Rational(7), Rational(-5), 2).sign(), -1);
    EXPECT_EQ(QuadExt(Rational(-7), Rational(5), 2).sign(), 1);
    EXPECT_EQ(QuadExt(Rational(0), Rational(0), 5).sign(), 0);
    Gen gen(0x519);
    for (int trial = 0; trial < 500; ++trial) {
        const QuadExt x = gen.quad(3);
        const double approx = x.to_double();
        if (std::abs(approx) > 1e-9) {
            EXPECT_EQ(x.sign(), approx > 0 ? 1 : -1) << x.to_string();
        }
    }
}

TEST(QuadExt, FormatsAndParses) {
    const QuadExt a(Rational::parse("-1/4"), Rational::parse("1/4"), 5);
    EXPECT_EQ(a.to_string(), "-1/4+1/4*sqrt(5)");
    EXPECT_EQ(parse_quadratic_text("-1/4+1/4*sqrt(5)", 5), a);
    EXPECT_EQ(parse_quadratic_text("-sqrt(5)", 5), QuadExt(Rational(0), Rational(-1), 5));
    EXPECT_EQ(parse_quadratic_text("3", 5), QuadExt(Rational(3), 5));
    EXPECT_THROW(parse_quadratic_text("sqrt(2)", 5), MalformedInput);
    EXPECT_THROW(parse_scalar_text("sqrt(2)+sqrt(3)"), MalformedInput);
    EXPECT_THROW(parse_scalar_text("sqrt(4)"), MalformedInput);
    EXPECT_THROW(parse_rational_text("1+sqrt(2)"), MalformedInput);
    for (const char* text : {"0", "1/2", "-3*sqrt(7)", "2/3-5/6*sqrt(7)"}) {
        const ParsedScalar parsed = parse_scalar_text(text);
        const std::int64_t d = parsed.radicand == 0 ? 7 : parsed.radicand;
        EXPECT_EQ(QuadExt(parsed.rational, parsed.surd, d).to_string(), text);
    }
}

TEST(QuadExt, FieldAxiomsOnRandomTriples) {
    Gen gen(0xfade);
    for (int trial = 0; trial < 300; ++trial) {
        const QuadExt x = gen.quad(5);
        const QuadExt y = gen.quad(5);
        const QuadExt z = gen.quad(5);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * y, y * x);
        if (!x.is_zero()) {
            EXPECT_EQ(x * x.inverse(), one_like(x));
            EXPECT_EQ((y / x) * x, y);
        }
        EXPECT_TRUE((x * x.conjugate()).is_rational());
    }
}

TEST(QuadExt, MixedRadicandsThrow) {
    const QuadExt r2(Rational(0), Rational(1), 2);
    const QuadExt r3(Rational(0), Rational(1), 3);
    EXPECT_THROW((void)(r2 + r3), MalformedInput);
    EXPECT_THROW((void)(r2 * r3), MalformedInput);
    EXPECT_THROW(QuadExt(Rational(1), Rational(1), 12), MalformedInput);
}

TEST(Matrix, RaggedOrMixedFieldEntriesAreMalformed) {
    EXPECT_THROW(rational_rows({{1, 2}, {3}}), MalformedInput);
    const PrimeFieldCtx f3(3);
    const PrimeFieldCtx f5(5);
    EXPECT_THROW(Matrix<ModP>({{f3(1), f5(1)}, {f3(0), f3(1)}}), MalformedInput);
    const QuadExt r2(Rational(1), Rational(1), 2);
    const QuadExt r5(Rational(1), Rational(1), 5);
    EXPECT_THROW(Matrix<QuadExt>({{r2, r5}}), MalformedInput);
}

TEST(Rank, SmallExamples) {
    EXPECT_EQ(rank(Matrix<Rational>::identity(3, Rational(1))), 3u);
    const PrimeFieldCtx f2(2);
    EXPECT_EQ(rank(Matrix<ModP>(2, 2, f2.one())), 1u);
    EXPECT_EQ(rank(rational_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
    EXPECT_EQ(rank(rational_rows({{0, 0}, {0, 0}})), 0u);
}

TEST(Rank, MatchesSpanEnumerationOverSmallPrimeFields) {
    Gen gen(0x5a1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const PrimeFieldCtx field(p);
        for (std::size_t size = 1; size <= 4; ++size) {
            const int trials = p == 7 && size == 4 ? 20 : 60;
            for (int t = 0; t < trials; ++t) {
                auto m = gen.modp_matrix(size, size, field);
                // make low-rank cases common: copy a row now and then
                if (size > 1 && t % 3 == 0) {
                    for (std::size_t c = 0; c < size; ++c) {
                        m(size - 1, c) = m(0, c) * field(2);
                    }
                }
                EXPECT_EQ(rank(m), span_dimension(m)) << "p=" << p << " size=" << size;
            }
        }
    }
}

TEST(Determinant, MatchesLeibnizExpansion) {
    Gen gen(0xde7);
    for (std::size_t size = 1; size <= 5; ++size) {
        for (int t = 0; t < 20; ++t) {
            const auto m = gen.rational_matrix(size, size);
            EXPECT_EQ(determinant(m), leibniz_determinant(m));
        }
    }
    const PrimeFieldCtx f5(5);
    for (int t = 0; t < 50; ++t) {
        const auto m = gen.modp_matrix(4, 4, f5);
        EXPECT_EQ(determinant(m), leibniz_determinant(m));
    }
    for (int t = 0; t < 10; ++t) {
        Matrix<QuadExt> m(3, 3, QuadExt(Rational(0), 5));
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) {
                m(r, c) = gen.quad(5, 6);
            }
        }
        EXPECT_EQ(determinant(m), leibniz_determinant(m));
    }
}

TEST(SolveLinear, IdentityAndDiagonal) {
    const auto id = Matrix<Rational>::identity(3, Rational(1));
    const std::vector<Rational> rhs{1, 2, 3};
    EXPECT_EQ(solve_linear(id, std::span<const Rational>(rhs)), rhs);

    // diag((1-a)(1-b)) alpha = 1 gives alpha = 1/((1-a)(1-b)); a = 1/4, b = -1/2
    const Rational diag = (Rational(1) - Rational(1, 4)) * (Rational(1) - Rational(-1, 2));
    Matrix<Rational> d(4, 4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) {
        d(i, i) = diag;
    }
    const std::vector<Rational> ones(4, Rational(1));
    for (const Rational& alpha : solve_linear(d, std::span<const Rational>(ones))) {
        EXPECT_EQ(alpha, diag.inverse());
    }
}

TEST(SolveLinear, FanoTransposeGivesUniformKappa) {
    const SetFamily fano = projective_plane(2);
    Matrix<Rational> at(7, 7, Rational(0));
    for (std::size_t j = 0; j < 7; ++j) {
        for (std::size_t i : fano[j].elements()) {
            at(i, j) = Rational(1);
        }
    }
    // rows of X = (A^T)^{-1}; kappa_i = lambda * sum_j theta_ij with lambda = 1
    const Matrix<Rational> x = solve_linear(at, Matrix<Rational>::identity(7, Rational(1)));
    for (std::size_t i = 0; i < 7; ++i) {
        Rational kappa;
        for (std::size_t j = 0; j < 7; ++j) {
            kappa += x(j, i);
        }
        EXPECT_EQ(kappa, Rational(1, 3));
        EXPECT_EQ(kappa * Rational(6) + Rational(1), Rational(3));
    }
}

TEST(SolveLinear, ResubstitutionOnRandomSystems) {
    Gen gen(0x501);
    for (std::size_t size = 1; size <= 6; ++size) {
        for (int t = 0; t < 20; ++t) {
            const auto m = gen.rational_matrix(size, size);
            std::vector<Rational> rhs(size);
            for (auto& v : rhs) {
                v = gen.rational();
            }
            if (determinant(m).is_zero()) {
                EXPECT_THROW(solve_linear(m, std::span<const Rational>(rhs)), SingularSystem);
                continue;
            }
            const auto x = solve_linear(m, std::span<const Rational>(rhs));
            for (std::size_t r = 0; r < size; ++r) {
                Rational acc;
                for (std::size_t c = 0; c < size; ++c) {
                    acc += m(r, c) * x[c];
                }
                EXPECT_EQ(acc, rhs[r]);
            }
        }
    }
    const PrimeFieldCtx f7(7);
    for (int t = 0; t < 50; ++t) {
        const auto m = gen.modp_matrix(4, 4, f7);
        std::vector<ModP> rhs{f7(1), f7(2), f7(3), f7(4)};
        if (rank(m) < 4) {
            continue;
        }
        const auto x = solve_linear(m, std::span<const ModP>(rhs));
        for (std::size_t r = 0; r < 4; ++r) {
            ModP acc = f7.zero();
            for (std::size_t c = 0; c < 4; ++c) {
                acc += m(r, c) * x[c];
            }
            EXPECT_EQ(acc, rhs[r]);
        }
    }
}

TEST(SolveLinear, SingularSystemCarriesRank) {
    const auto m = rational_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    const std::vector<Rational> rhs{1, 2, 3};
    try {
        (void)solve_linear(m, std::span<const Rational>(rhs));
        FAIL() << "expected SingularSystem";
    } catch (const SingularSystem& e) {
        EXPECT_EQ(e.rank(), 2u);
    }
}

TEST(Inertia, Examples) {
    const Inertia id = inertia_psd_rank(Matrix<Rational>::identity(4, Rational(1)));
    EXPECT_TRUE(id.is_psd);
    EXPECT_EQ(id.rank, 4u);

    const Inertia indefinite = inertia_psd_rank(rational_rows({{1, 2}, {2, 1}}));
    EXPECT_FALSE(indefinite.is_psd);
    EXPECT_EQ(indefinite.rank, 2u);

    const Inertia pent = inertia_psd_rank(pentagon().gram);
    EXPECT_TRUE(pent.is_psd);
    EXPECT_EQ(pent.rank, 2u);

    // zero pivot hiding a nonzero off-diagonal entry
    const Inertia hidden = inertia_psd_rank(rational_rows({{0, 1}, {1, 0}}));
    EXPECT_FALSE(hidden.is_psd);

    EXPECT_THROW(inertia_psd_rank(rational_rows({{1, 2}, {3, 1}})), MalformedInput);
    EXPECT_THROW(inertia_psd_rank(rational_rows({{1, 2, 3}, {2, 1, 0}})), MalformedInput);
}

TEST(Inertia, RankMatchesEliminationOnRandomSymmetricMatrices) {
    Gen gen(0x1e7);
    for (std::size_t size = 1; size <= 6; ++size) {
        for (int t = 0; t < 30; ++t) {
            // B B^T with a rank-deficient B is PSD of rank <= cols(B)
            const std::size_t inner = static_cast<std::size_t>(gen.integer(1, static_cast<std::int64_t>(size)));
            const auto b = gen.rational_matrix(size, inner, 4);
            Matrix<Rational> g(size, size, Rational(0));
            for (std::size_t i = 0; i < size; ++i) {
                for (std::size_t j = 0; j < size; ++j) {
                    for (std::size_t k = 0; k < inner; ++k) {
                        g(i, j) += b(i, k) * b(j, k);
                    }
                }
            }
            const Inertia psd = inertia_psd_rank(g);
            EXPECT_TRUE(psd.is_psd);
            EXPECT_EQ(psd.rank, rank(g));

            auto s = gen.rational_matrix(size, size, 5);
            for (std::size_t i = 0; i < size; ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    s(i, j) = s(j, i);
                }
            }
            EXPECT_EQ(inertia_psd_rank(s).rank, rank(s));
        }
    }
}

TEST(Rank, SchlafliGramHasRankSix) {
    const auto g = schlafli27();
    EXPECT_EQ(rank(g.gram), 6u);
    // srg(27,16,10,8): adjacency (non-meeting, entry 1/4) has eigenvalues 16, 4, -2 with
    // multiplicities 1, 6, 20. G = I + A/4 - (J - I - A)/2 = (3/2)I + (3/4)A - J/2 is zero
    // on the -2 eigenspace and 3/2 + 3 = 9/2 on the 6-dimensional 4-eigenspace.
    std::size_t non_meeting_degree = 0;
    for (std::size_t j = 0; j < 27; ++j) {
        non_meeting_degree += g.gram(0, j) == Rational(1, 4) ? 1 : 0;
    }
    EXPECT_EQ(non_meeting_degree, 16u);
    Matrix<Rational> shifted = g.gram;
    for (std::size_t i = 0; i < 27; ++i) {
        shifted(i, i) -= Rational(9, 2);
    }
    EXPECT_EQ(27 - rank(shifted), 6u);
}
