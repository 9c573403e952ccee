#include "extremal/constructions.hpp"
#include "extremal/error.hpp"
#include "extremal/families.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace extremal;
using extremal::testing::Gen;

namespace {

VectorSystem binary(std::size_t n, const std::vector<Tuple>& vectors) { return VectorSystem(n, 2, vectors); }

std::size_t naive_distance(const Tuple& u, const Tuple& v) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d += u[i] != v[i];
    }
    return d;
}

} // namespace

TEST(HammingDistance, Examples) {
    EXPECT_EQ(hamming_distance(Tuple{0, 0, 0}, Tuple{0, 0, 0}), 0u);
    EXPECT_EQ(hamming_distance(Tuple{1, 0, 0}, Tuple{1, 1, 1}), 2u);
    const SetFamily f = SetFamily::from_one_based(3, {{1}, {1, 2, 3}});
    EXPECT_EQ(hamming_distance(f[0].characteristic_vector(), f[1].characteristic_vector()), 2u);
    EXPECT_THROW(hamming_distance(Tuple{0, 1}, Tuple{0, 1, 1}), MalformedInput);
}

TEST(HammingDistance, MetricAxiomsOnRandomTriples) {
    Gen gen(0x3e7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 12));
        const auto q = static_cast<std::uint32_t>(gen.integer(2, 5));
        const Tuple x = gen.tuple(n, q);
        const Tuple y = gen.tuple(n, q);
        const Tuple z = gen.tuple(n, q);
        const std::size_t xy = hamming_distance(x, y);
        EXPECT_EQ(xy, naive_distance(x, y));
        EXPECT_EQ(xy, hamming_distance(y, x));
        EXPECT_EQ(xy == 0, x == y);
        EXPECT_EQ(hamming_distance(x, x), 0u);
        EXPECT_LE(xy, hamming_distance(x, z) + hamming_distance(z, y));
        EXPECT_LE(xy, n);
    }
}

TEST(VectorSystem, RejectsDuplicatesAndOutOfRangeEntries) {
    EXPECT_THROW(binary(3, {{0, 0, 1}, {0, 0, 1}}), MalformedInput);
    EXPECT_THROW(binary(3, {{0, 0, 2}}), MalformedInput);
    EXPECT_THROW(binary(3, {{0, 0}}), MalformedInput);
    EXPECT_THROW(VectorSystem(2, 1, {}), MalformedInput);
}

TEST(DistanceSet, Examples) {
    const auto had = distance_set(binary(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
    EXPECT_EQ(had.distances, std::vector<std::size_t>{2});
    EXPECT_TRUE(had.is_constant);
    EXPECT_EQ(had.common_value, 2u);

    const auto pair = distance_set(binary(3, {{0, 0, 0}, {0, 0, 1}}));
    EXPECT_EQ(pair.distances, std::vector<std::size_t>{1});

    const auto four = distance_set(binary(4, {{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}}));
    EXPECT_EQ(four.distances, std::vector<std::size_t>{2});

    const auto mixed = distance_set(binary(2, {{0, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(mixed.distances, (std::vector<std::size_t>{1, 2}));
    EXPECT_FALSE(mixed.is_constant);
    EXPECT_FALSE(mixed.common_value.has_value());

    EXPECT_THROW(distance_set(binary(2, {{0, 1}})), InsufficientInput);
}

TEST(IntersectionProfile, Examples) {
    const auto fano = intersection_profile(projective_plane(2));
    EXPECT_EQ(fano.sizes.size(), 21u);
    EXPECT_EQ(fano.lambda, 1u);

    const auto disjoint = intersection_profile(SetFamily::from_one_based(4, {{1, 2}, {3, 4}}));
    EXPECT_EQ(disjoint.lambda, 0u);

    const auto type1 = intersection_profile(lambda_design_from_plane(11, 5));
    EXPECT_EQ(type1.lambda, 11u);

    const auto uneven = intersection_profile(SetFamily::from_one_based(3, {{1, 2}, {2, 3}, {3}}));
    EXPECT_FALSE(uneven.lambda.has_value());

    EXPECT_THROW(intersection_profile(SetFamily::from_one_based(3, {{1}})), InsufficientInput);
}

TEST(Degrees, Examples) {
    EXPECT_EQ(degrees(projective_plane(2)), std::vector<std::size_t>(7, 3));
    EXPECT_EQ(degrees(near_pencil(4)), (std::vector<std::size_t>{3, 2, 2, 2}));
    EXPECT_EQ(degrees(SetFamily(5, {})), std::vector<std::size_t>(5, 0));
}

TEST(Degrees, DoubleCountOnConstructedFamilies) {
    const std::vector<SetFamily> families{
        projective_plane(2),   projective_plane(3),   projective_plane(5),     hadamard_design(3),
        hadamard_plus_full(2), near_pencil(8),        lambda_design_from_plane(11, 5),
    };
    for (const SetFamily& f : families) {
        const auto d = degrees(f);
        const std::size_t point_total = std::accumulate(d.begin(), d.end(), std::size_t{0});
        std::size_t set_total = 0;
        for (const Subset& s : f.sets()) {
            set_total += s.size();
        }
        EXPECT_EQ(point_total, set_total);
    }
}

TEST(SetFamily, RoundTripThroughCharacteristicVectors) {
    Gen gen(0x7e7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 70));
        std::vector<Subset> sets;
        std::vector<Tuple> seen;
        const int count = static_cast<int>(gen.integer(0, 10));
        for (int s = 0; s < count; ++s) {
            Tuple t = gen.tuple(n, 2);
            if (std::find(seen.begin(), seen.end(), t) != seen.end()) {
                continue;
            }
            seen.push_back(t);
            Subset sub(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (t[i]) {
                    sub.insert(i);
                }
            }
            sets.push_back(sub);
        }
        const SetFamily family(n, sets);
        const VectorSystem vs = to_vector_system(family);
        EXPECT_EQ(vs.vectors(), seen);
        EXPECT_EQ(to_set_family(vs), family);
    }
    for (const SetFamily& f : {projective_plane(3), hadamard_plus_full(3)}) {
        EXPECT_EQ(to_set_family(to_vector_system(f)), f);
    }
}

TEST(SetFamily, OneBasedElementsAndBounds) {
    const SetFamily f = SetFamily::from_one_based(4, {{4, 1}, {2}});
    EXPECT_EQ(f.to_one_based(), (std::vector<std::vector<std::size_t>>{{1, 4}, {2}}));
    EXPECT_THROW(SetFamily::from_one_based(3, {{0}}), MalformedInput);
    EXPECT_THROW(SetFamily::from_one_based(3, {{4}}), MalformedInput);
    EXPECT_TRUE(SetFamily::from_one_based(3, {{1}, {1}}).has_duplicates());
    EXPECT_THROW(to_vector_system(SetFamily::from_one_based(3, {{1}, {1}})), MalformedInput);
    EXPECT_THROW(to_set_family(VectorSystem(2, 3, {{0, 2}})), MalformedInput);
}

TEST(Subset, SymmetricDifferenceAndIntersection) {
    const std::vector<std::size_t> a_el{0, 1, 2, 64, 99};
    const std::vector<std::size_t> b_el{2, 3, 64, 98};
    const Subset a(100, a_el);
    const Subset b(100, b_el);
    EXPECT_EQ(a.intersection_size(b), 2u);
    EXPECT_EQ(a.symmetric_difference(b).elements(), (std::vector<std::size_t>{0, 1, 3, 98, 99}));
    EXPECT_EQ(a.size(), 5u);
    EXPECT_TRUE(a.contains(64));
    EXPECT_FALSE(a.contains(65));
}

TEST(ConstantVectorSum, Examples) {
    const PrimeFieldCtx f5(5);
    for (std::size_t n = 1; n <= 7; ++n) {
        EXPECT_EQ(constant_vector_distance_sum(Tuple(n, 0), 2, f5), f5(static_cast<std::int64_t>(n)));
    }
    EXPECT_EQ(constant_vector_distance_sum(Tuple{0, 1, 2}, 3, f5).value(), 1u);
    const PrimeFieldCtx f3(3);
    EXPECT_EQ(constant_vector_distance_sum(Tuple{0, 1, 2, 1}, 3, f3).value(), 2u);
    const PrimeFieldCtx f2(2);
    EXPECT_THROW(constant_vector_distance_sum(Tuple{0, 1, 2}, 3, f2), HypothesisViolation);
}

TEST(ConstantVectorSum, ExhaustiveSweepMatchesNTimesQMinusOne) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const PrimeFieldCtx field(p);
        for (std::uint32_t q = 2; q <= 3 && q <= p; ++q) {
            for (std::size_t n = 1; n <= 4; ++n) {
                const ModP expected = field(static_cast<std::int64_t>(n * (q - 1)));
                Tuple f(n, 0);
                while (true) {
                    EXPECT_EQ(constant_vector_distance_sum(f, q, field), expected);
                    std::size_t i = 0;
                    while (i < n && ++f[i] == q) {
                        f[i++] = 0;
                    }
                    if (i == n) {
                        break;
                    }
                }
            }
        }
    }
}
