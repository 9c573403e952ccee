#include "extremal/constructions.hpp"

#include "extremal/error.hpp"
#include "extremal/modp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace extremal {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw InternalInconsistency("construction failed its own check: " + what);
    }
}

std::size_t common_size(const SetFamily& f) {
    std::set<std::size_t> sizes;
    for (const auto& s : f.sets()) {
        sizes.insert(s.size());
    }
    return sizes.size() == 1 ? *sizes.begin() : static_cast<std::size_t>(-1);
}

using Triple = std::array<std::uint32_t, 3>;

/// Normalized homogeneous coordinates: first nonzero entry is 1.
std::vector<Triple> projective_points(std::uint32_t r) {
    std::vector<Triple> pts;
    pts.push_back({0, 0, 1});
    for (std::uint32_t z = 0; z < r; ++z) {
        pts.push_back({0, 1, z});
    }
    for (std::uint32_t y = 0; y < r; ++y) {
        for (std::uint32_t z = 0; z < r; ++z) {
            pts.push_back({1, y, z});
        }
    }
    return pts;
}

template <class T>
void check_gram(const GramTwoDistance<T>& g, const std::string& name) {
    const auto issues = gram_issues(g);
    require(issues.empty(), name + ": " + (issues.empty() ? std::string() : issues.front()));
}

} // namespace

SymmetricDesignParams symmetric_design_params(const SetFamily& design) {
    const std::size_t n = design.ground();
    if (design.size() != n) {
        throw HypothesisViolation("symmetricDesign", "design has " + std::to_string(design.size()) +
                                                         " blocks on " + std::to_string(n) + " points");
    }
    const std::size_t k = common_size(design);
    if (n > 0 && k == static_cast<std::size_t>(-1)) {
        throw HypothesisViolation("symmetricDesign", "blocks have different sizes");
    }
    SymmetricDesignParams params{n, n == 0 ? 0 : k, 0};
    if (n >= 2) {
        const auto profile = intersection_profile(design);
        if (!profile.lambda) {
            throw HypothesisViolation("symmetricDesign", "pairwise intersections are not constant");
        }
        params.lambda = *profile.lambda;
        if (params.lambda * (n - 1) != params.k * (params.k - 1)) {
            throw HypothesisViolation("symmetricDesign", "lambda'(n-1) != k'(k'-1)");
        }
    }
    return params;
}

SetFamily projective_plane(std::uint32_t r) {
    if (r > 31 || !is_prime(r)) {
        throw HypothesisViolation("rPrime", "projective plane order " + std::to_string(r) +
                                                " must be a prime <= 31");
    }
    const auto pts = projective_points(r);
    const std::size_t n = pts.size();
    std::vector<Subset> lines;
    lines.reserve(n);
    for (const auto& line : pts) {
        Subset s(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& p = pts[i];
            if ((line[0] * p[0] + line[1] * p[1] + line[2] * p[2]) % r == 0) {
                s.insert(i);
            }
        }
        lines.push_back(std::move(s));
    }
    SetFamily plane(n, std::move(lines));
    require(n == std::size_t{r} * r + r + 1, "point count");
    require(common_size(plane) == r + 1, "line size r+1");
    const auto profile = intersection_profile(plane);
    require(profile.lambda && *profile.lambda == 1, "lines meet in exactly one point");
    return plane;
}

SetFamily hadamard_design(std::uint32_t v) {
    if (v == 0) {
        throw UnsupportedOrder("Hadamard design needs v >= 1");
    }
    const std::uint64_t n = 4ull * v - 1;
    if (!is_prime(n) || n > kMaxGroundSet) {
        throw UnsupportedOrder("4v-1 = " + std::to_string(n) + " is not a prime <= " +
                               std::to_string(kMaxGroundSet) + "; only Paley designs are built");
    }
    std::set<std::uint64_t> residues;
    for (std::uint64_t x = 1; x < n; ++x) {
        residues.insert(x * x % n);
    }
    std::vector<Subset> blocks;
    blocks.reserve(n);
    for (std::uint64_t t = 0; t < n; ++t) {
        Subset s(n);
        for (auto x : residues) {
            s.insert((x + t) % n);
        }
        blocks.push_back(std::move(s));
    }
    SetFamily design(n, std::move(blocks));
    require(common_size(design) == 2 * v - 1, "block size 2v-1");
    const auto profile = intersection_profile(design);
    require(profile.lambda && *profile.lambda == v - 1, "pairwise intersection v-1");
    return design;
}

SetFamily hadamard_plus_full(std::uint32_t v) {
    const SetFamily design = hadamard_design(v);
    std::vector<Subset> sets = design.sets();
    Subset full(design.ground());
    for (std::size_t i = 0; i < design.ground(); ++i) {
        full.insert(i);
    }
    sets.push_back(std::move(full));
    SetFamily out(design.ground(), std::move(sets));
    const auto profile = distance_set(to_vector_system(out));
    require(profile.is_constant && *profile.common_value == 2 * v, "constant Hamming distance 2v");
    require(out.size() == 4ull * v, "family size 4v");
    return out;
}

SetFamily lambda_design_type1(const SetFamily& design, std::size_t block_index) {
    const auto params = symmetric_design_params(design);
    if (block_index >= design.size()) {
        throw HypothesisViolation("blockIndex", "block index " + std::to_string(block_index) + " out of range");
    }
    const Subset& kept = design[block_index];
    std::vector<Subset> sets;
    sets.reserve(design.size());
    for (std::size_t j = 0; j < design.size(); ++j) {
        sets.push_back(j == block_index ? kept : design[j].symmetric_difference(kept));
    }
    SetFamily out(design.ground(), std::move(sets));
    if (out.size() >= 2) {
        const std::size_t small = params.k;
        const std::size_t large = 2 * (params.k - params.lambda);
        for (const auto& s : out.sets()) {
            require(s.size() == small || s.size() == large, "block sizes k' and 2(k'-lambda')");
        }
        const auto profile = intersection_profile(out);
        require(profile.lambda && *profile.lambda == params.k - params.lambda, "constant intersection k'-lambda'");
    }
    return out;
}

SetFamily lambda_design_from_plane(std::uint32_t r, std::uint32_t p) {
    if (!is_prime(p)) {
        throw HypothesisViolation("pPrime", std::to_string(p) + " is not prime");
    }
    if (p < 5) {
        throw HypothesisViolation("pAtLeast5", "p=" + std::to_string(p) +
                                                   " makes n = r^2+r+1 divisible by p; only p >= 5 is built");
    }
    if (r % p != 1) {
        throw HypothesisViolation("rCongruentOne", "r=" + std::to_string(r) + " is not 1 mod " + std::to_string(p));
    }
    return lambda_design_type1(projective_plane(r), 0);
}

SetFamily near_pencil(std::size_t n) {
    if (n < 3) {
        throw HypothesisViolation("n>=3", "near-pencil needs at least 3 points");
    }
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t x = 2; x <= n; ++x) {
        sets.push_back({1, x});
    }
    std::vector<std::size_t> rest;
    for (std::size_t x = 2; x <= n; ++x) {
        rest.push_back(x);
    }
    sets.push_back(std::move(rest));
    return SetFamily::from_one_based(n, sets);
}

GramTwoDistance<QuadExt> pentagon() {
    const QuadExt a(Rational(-1) / Rational(4), Rational(1) / Rational(4), 5);
    const QuadExt b(Rational(-1) / Rational(4), Rational(-1) / Rational(4), 5);
    const QuadExt one(Rational(1), 5);
    Matrix<QuadExt> gram(5, 5, one);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            const std::size_t gap = (i + 5 - j) % 5;
            if (gap == 1 || gap == 4) {
                gram(i, j) = a;
            } else if (gap != 0) {
                gram(i, j) = b;
            }
        }
    }
    std::vector<std::vector<double>> coords;
    for (int k = 0; k < 5; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / 5.0;
        coords.push_back({std::cos(angle), std::sin(angle)});
    }
    GramTwoDistance<QuadExt> g{2, 5, a, b, std::move(gram), std::move(coords), std::nullopt};
    check_gram(g, "pentagon");
    require(inertia_psd_rank(g.gram).rank == 2, "pentagon rank 2");
    return g;
}

GramTwoDistance<Rational> schlafli27() {
    // Labels: a_i (0..5), b_i (6..11), c_ij for i<j (12..26).
    struct Line {
        char kind;
        int i;
        int j;
    };
    std::vector<Line> lines;
    for (int i = 0; i < 6; ++i) {
        lines.push_back({'a', i, -1});
    }
    for (int i = 0; i < 6; ++i) {
        lines.push_back({'b', i, -1});
    }
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            lines.push_back({'c', i, j});
        }
    }
    auto meets = [](const Line& x, const Line& y) {
        if (x.kind == 'c' && y.kind == 'c') {
            return x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j;
        }
        if (x.kind == 'c' || y.kind == 'c') {
            const Line& c = x.kind == 'c' ? x : y;
            const Line& o = x.kind == 'c' ? y : x;
            return o.i == c.i || o.i == c.j;
        }
        return x.kind != y.kind && x.i != y.i;
    };
    const Rational meet = Rational(-1) / Rational(2);
    const Rational skew = Rational(1) / Rational(4);
    Matrix<Rational> gram(27, 27, Rational(1));
    for (std::size_t s = 0; s < 27; ++s) {
        std::size_t degree = 0;
        for (std::size_t t = 0; t < 27; ++t) {
            if (s == t) {
                continue;
            }
            const bool m = meets(lines[s], lines[t]);
            degree += m ? 1 : 0;
            gram(s, t) = m ? meet : skew;
        }
        require(degree == 10, "every line meets exactly 10 others");
    }
    GramTwoDistance<Rational> g{6, 27, skew, meet, std::move(gram), std::nullopt, std::nullopt};
    check_gram(g, "schlafli27");
    require(inertia_psd_rank(g.gram).rank == 6, "schlafli27 rank 6");
    return g;
}

GramTwoDistance<Rational> johnson_pairs(std::size_t m) {
    if (m < 4) {
        throw HypothesisViolation("m>=4", "johnson_pairs needs m >= 4");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    const std::size_t count = pairs.size();
    const Rational half = Rational(1) / Rational(2);
    Matrix<Rational> gram(count, count, Rational(0));
    std::vector<std::vector<double>> coords;
    const double c = 1.0 / std::sqrt(2.0);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<double> x(m, 0.0);
        x[pairs[s].first] = c;
        x[pairs[s].second] = c;
        coords.push_back(std::move(x));
        for (std::size_t t = 0; t < count; ++t) {
            const auto& [i, j] = pairs[s];
            const auto& [k, l] = pairs[t];
            if (s == t) {
                gram(s, t) = Rational(1);
            } else if (i == k || i == l || j == k || j == l) {
                gram(s, t) = half;
            }
        }
    }
    GramTwoDistance<Rational> g{m, count, half, Rational(0), std::move(gram), std::move(coords), m - 1};
    check_gram(g, "johnson_pairs");
    require(inertia_psd_rank(g.gram).rank == m, "johnson_pairs rank m");
    return g;
}

} // namespace extremal
