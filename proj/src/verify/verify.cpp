#include "extremal/verify.hpp"

#include "extremal/bounds.hpp"
#include "extremal/certifier.hpp"
#include "extremal/constructions.hpp"
#include "extremal/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace extremal {

namespace {

class Checker {
public:
    bool check(bool ok, std::string what) {
        details_.push_back((ok ? "ok   " : "FAIL ") + std::move(what));
        passed_ = passed_ && ok;
        return ok;
    }

    bool passed() const { return passed_; }
    std::vector<std::string> take() { return std::move(details_); }

private:
    bool passed_ = true;
    std::vector<std::string> details_;
};

/// Every identity whose name starts with `prefix` holds, and there is at least one.
bool all_hold(const Certificate& cert, std::string_view prefix) {
    std::size_t seen = 0;
    for (const auto& i : cert.identities) {
        if (i.name.rfind(prefix, 0) == 0) {
            ++seen;
            if (!i.holds) {
                return false;
            }
        }
    }
    return seen > 0;
}

std::string fact(const Certificate& cert, std::string_view key) {
    const std::string* v = cert.find_fact(key);
    return v ? *v : std::string("<missing>");
}

std::string sides(const Certificate& cert, std::string_view name) {
    const Identity* i = cert.find_identity(name);
    return i ? i->lhs + " = " + i->rhs : std::string("<missing>");
}

bool identity_is(const Certificate& cert, std::string_view name, std::string_view lhs, std::string_view rhs) {
    const Identity* i = cert.find_identity(name);
    return i != nullptr && i->holds && i->lhs == lhs && i->rhs == rhs;
}

SearchOptions search_options(const VerifyOptions& o) {
    SearchOptions s;
    s.jobs = o.jobs;
    return s;
}

template <class F>
bool guarded(Checker& c, const std::string& what, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return c.check(false, what + " threw: " + e.what());
    }
}

// 1
void hadamard_counterexample(Checker& c, const VerifyOptions& o) {
    for (std::uint32_t v = 1; v <= 3; ++v) {
        guarded(c, "hadamard_plus_full(" + std::to_string(v) + ")", [&] {
            const SetFamily f = hadamard_plus_full(v);
            const std::size_t n = 4 * v - 1;
            c.check(f.ground() == n && f.size() == 4 * v && f.size() == n + 1,
                    "hadamard_plus_full(" + std::to_string(v) + "): " + std::to_string(f.size()) + " sets on [" +
                        std::to_string(f.ground()) + "], size 4v = n+1");
            const DistanceProfile d = distance_set(to_vector_system(f));
            return c.check(d.is_constant && d.common_value == 2 * v,
                           "hadamard_plus_full(" + std::to_string(v) + "): constant distance " +
                               (d.common_value ? std::to_string(*d.common_value) : "none") + " == 2v = " +
                               std::to_string(2 * v));
        });
    }
    guarded(c, "search", [&] {
        const auto r = search_max(SearchProblem{3, 2, ConstantDistance{2}, std::nullopt}, search_options(o));
        return c.check(r.max_size == 4, "search_max(n=3, q=2, constantDistance 2) = " + std::to_string(r.max_size));
    });
}

// 2
void modular_sweep(Checker& c, const VerifyOptions& o) {
    guarded(c, "sweep", [&] {
        const SweepReport rep = sweep_bound_grid(4, 3, 7, 0, search_options(o));
        std::size_t checked = 0;
        std::size_t excluded = 0;
        for (const auto& row : rep.rows) {
            if (row.exact_max) {
                ++checked;
                const BigInt bound = BigInt(static_cast<unsigned long>(row.n * (row.q - 1)));
                if (BigInt(static_cast<unsigned long>(*row.exact_max)) > bound) {
                    c.check(false, "n=" + std::to_string(row.n) + " q=" + std::to_string(row.q) + " p=" +
                                       std::to_string(row.p) + " lambda=" + std::to_string(row.lambda) + ": max " +
                                       std::to_string(*row.exact_max) + " > n(q-1)");
                }
            } else {
                ++excluded;
            }
        }
        c.check(rep.violations == 0 && checked > 0,
                std::to_string(checked) + " grid points with all hypotheses satisfy max <= n(q-1); " +
                    std::to_string(excluded) + " excluded");
        const SweepRow* tight = rep.find_modular(4, 2, 3, 2);
        return c.check(tight != nullptr && tight->exact_max == 4 && tight->tight,
                       "row n=4 q=2 p=3 lambda=2: bound 4, max " +
                           (tight && tight->exact_max ? std::to_string(*tight->exact_max) : std::string("none")) +
                           ", tight");
    });
}

// 3
void delsarte_sweep(Checker& c, const VerifyOptions& o) {
    guarded(c, "sweep", [&] {
        const SweepReport rep = sweep_bound_grid(4, 3, 2, 2, search_options(o));
        for (const auto& row : rep.rows) {
            const bool ok = row.exact_max && row.bound && BigInt(static_cast<unsigned long>(*row.exact_max)) <= *row.bound;
            if (!ok) {
                c.check(false, "n=" + std::to_string(row.n) + " q=" + std::to_string(row.q) + " s=" +
                                   std::to_string(row.s) + ": max exceeds the bound");
            }
        }
        return c.check(rep.violations == 0 && rep.rows.size() == 14,
                       std::to_string(rep.rows.size()) + " (n,q,s) rows with n<=4, q in {2,3}, s in {1,2}: every " +
                           "maximum within the Delsarte bound");
    });
}

// 4
void constant_vector_sum(Checker& c, const VerifyOptions&) {
    const std::vector<std::tuple<std::size_t, std::uint32_t, std::uint32_t>> cases{{3, 2, 5}, {3, 3, 5}, {4, 3, 5}};
    for (const auto& [n, q, p] : cases) {
        guarded(c, "sum", [&, n = n, q = q, p = p] {
            const PrimeFieldCtx field(p);
            const ModP expected = field(static_cast<std::int64_t>(n * (q - 1)));
            std::size_t total = 1;
            for (std::size_t i = 0; i < n; ++i) {
                total *= q;
            }
            std::size_t good = 0;
            Tuple f(n, 0);
            for (std::size_t idx = 0; idx < total; ++idx) {
                std::size_t x = idx;
                for (std::size_t i = n; i-- > 0;) {
                    f[i] = static_cast<std::uint8_t>(x % q);
                    x /= q;
                }
                good += static_cast<std::size_t>(constant_vector_distance_sum(f, q, field) == expected);
            }
            return c.check(good == total, "(n,q,p)=(" + std::to_string(n) + "," + std::to_string(q) + "," +
                                              std::to_string(p) + "): " + std::to_string(good) + "/" +
                                              std::to_string(total) + " tuples give n(q-1) mod p");
        });
    }
}

// 5
void hamming_tight(Checker& c, const VerifyOptions&) {
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> cases{{1, 5, 2}, {2, 7, 4}};
    for (const auto& [v, p, lambda] : cases) {
        const std::string label = "hadamard_plus_full(" + std::to_string(v) + "), p=" + std::to_string(p) +
                                  ", lambda=" + std::to_string(lambda);
        guarded(c, label, [&, v = v, p = p, lambda = lambda] {
            const PrimeFieldCtx field(p);
            const Certificate cert = hamming_tight_certificate(to_vector_system(hadamard_plus_full(v)), field, lambda);
            const std::string minus_inv = (-field(lambda).inverse()).to_string();
            bool alphas = all_hold(cert, "alpha[");
            for (const auto& i : cert.identities) {
                if (i.name.rfind("alpha[", 0) == 0) {
                    alphas = alphas && i.lhs == minus_inv;
                }
            }
            c.check(alphas, label + ": every alpha_b = -1/lambda = " + minus_inv + " in F_" + std::to_string(p));
            c.check(all_hold(cert, "derived_congruence"),
                    label + ": q*lambda = n(q-1)+1 mod p (" + sides(cert, "derived_congruence") + ")");
            return c.check(cert.verdict == Verdict::pass, label + ": verdict " + std::string(to_string(cert.verdict)));
        });
    }
}

GramTwoDistance<Rational> mutated_schlafli(const std::string& value) {
    GramTwoDistance<Rational> g = schlafli27();
    const Rational old = g.a;
    const Rational replacement = Rational::parse(value);
    for (std::size_t i = 0; i < g.gram.rows(); ++i) {
        for (std::size_t j = 0; j < g.gram.cols(); ++j) {
            if (i != j && g.gram(i, j) == old) {
                g.gram(i, j) = replacement;
            }
        }
    }
    g.a = replacement;
    return g;
}

// 6
void two_distance(Checker& c, const VerifyOptions& o) {
    guarded(c, "pentagon", [&] {
        const Certificate cert = two_distance_certificate(pentagon());
        c.check(identity_is(cert, "two_distance_relation", "5/4", "5/4"),
                "pentagon: N(ab+1/n) = (1-a)(1-b): " + sides(cert, "two_distance_relation"));
        c.check(all_hold(cert, "coordinate_sum["),
                "pentagon: (a+b) sum_m (v_m)_i = 0 for each i, relative 1e-9");
        c.check(all_hold(cert, "squared_norm_total"),
                "pentagon: N = n(1-a)(1-b) - nNab in coordinates (" + sides(cert, "squared_norm_total") + ")");
        return c.check(cert.verdict == Verdict::pass, "pentagon: verdict " + std::string(to_string(cert.verdict)));
    });
    guarded(c, "schlafli27", [&] {
        const GramTwoDistance<Rational> g = o.mutate_schlafli ? mutated_schlafli(*o.mutate_schlafli) : schlafli27();
        const Certificate cert = two_distance_certificate(g);
        const Inertia inertia = inertia_psd_rank(g.gram);
        c.check(inertia.rank == 6 && inertia.is_psd,
                "schlafli27: Gram rank " + std::to_string(inertia.rank) + ", PSD " + (inertia.is_psd ? "yes" : "no"));
        c.check(identity_is(cert, "two_distance_relation", "9/8", "9/8"),
                "schlafli27: N(ab+1/n) = (1-a)(1-b): " + sides(cert, "two_distance_relation"));
        return c.check(cert.verdict == Verdict::pass, "schlafli27: verdict " + std::string(to_string(cert.verdict)));
    });
}

// 7
void neumaier(Checker& c, const VerifyOptions&) {
    guarded(c, "johnson_pairs(6)", [&] {
        const Certificate cert = neumaier_check(johnson_pairs(6));
        return c.check(cert.verdict == Verdict::pass && fact(cert, "n") == "5" && fact(cert, "N") == "15" &&
                           fact(cert, "ratio") == "1/2" && fact(cert, "m") == "2",
                       "johnson_pairs(6): n=" + fact(cert, "n") + ", N=" + fact(cert, "N") + ", ratio " +
                           fact(cert, "ratio") + ", m=" + fact(cert, "m"));
    });
    guarded(c, "pentagon", [&] {
        const Certificate cert = neumaier_check(pentagon());
        return c.check(cert.verdict == Verdict::not_applicable,
                       "pentagon: verdict " + std::string(to_string(cert.verdict)) + " (N=5 <= max(2n+1,5))");
    });
}

// 8
void mod_design(Checker& c, const VerifyOptions&) {
    guarded(c, "fano", [&] {
        const Certificate cert = mod_design_certificate(projective_plane(2), PrimeFieldCtx(5));
        c.check(all_hold(cert, "design_congruence") && all_hold(cert, "degree["),
                "Fano, p=5: k(k-1) = lambda(n-1) (" + sides(cert, "design_congruence") + "), every degree = k");
        return c.check(cert.verdict == Verdict::pass, "Fano, p=5: verdict " + std::string(to_string(cert.verdict)));
    });
    guarded(c, "pg11", [&] {
        const SetFamily f = lambda_design_type1(projective_plane(11), 0);
        const Certificate cert = mod_design_certificate(f, PrimeFieldCtx(5));
        c.check(fact(cert, "nModP") == "3" && fact(cert, "kModP") == "2" && fact(cert, "lambdaModP") == "1",
                "type-1 design from PG(2,11), p=5: n,k,lambda = " + fact(cert, "nModP") + "," + fact(cert, "kModP") +
                    "," + fact(cert, "lambdaModP"));
        c.check(identity_is(cert, "design_congruence", "2", "2"),
                "type-1 design from PG(2,11): 2*1 = 1*(3-1) mod 5 (" + sides(cert, "design_congruence") + ")");
        bool degrees_two = all_hold(cert, "degree[");
        for (const auto& i : cert.identities) {
            if (i.name.rfind("degree[", 0) == 0) {
                degrees_two = degrees_two && i.lhs == "2";
            }
        }
        c.check(degrees_two, "type-1 design from PG(2,11): every degree = 2 mod 5");
        return c.check(cert.verdict == Verdict::pass,
                       "type-1 design from PG(2,11), p=5: verdict " + std::string(to_string(cert.verdict)));
    });
}

// 9
void ryser(Checker& c, const VerifyOptions&) {
    guarded(c, "fano", [&] {
        const Certificate cert = ryser_decompose(projective_plane(2), 1);
        const bool thirds = cert.coefficients.size() == 7 &&
                            std::all_of(cert.coefficients.begin(), cert.coefficients.end(),
                                        [](const ExactScalar& k) { return to_string(k) == "1/3"; });
        c.check(fact(cert, "alternative") == "A" && fact(cert, "r") == "3" && thirds,
                "Fano, lambda=1: alternative " + fact(cert, "alternative") + ", r=" + fact(cert, "r") +
                    ", kappa multiset " + fact(cert, "kappaMultiset"));
        c.check(all_hold(cert, "incident_reciprocal_sum[") && all_hold(cert, "total_reciprocal_sum[") &&
                    all_hold(cert, "kappa_distinct_values"),
                "Fano: incident and total reciprocal sums exact, at most two kappa values");
        return c.check(cert.verdict == Verdict::pass, "Fano: verdict " + std::string(to_string(cert.verdict)));
    });
    for (std::size_t n = 4; n <= 8; ++n) {
        const std::string label = "near-pencil on [" + std::to_string(n) + "]";
        guarded(c, label, [&] {
            const Certificate cert = ryser_decompose(near_pencil(n), 1);
            const std::string r = fact(cert, "r");
            const std::string r2 = fact(cert, "r'");
            c.check(fact(cert, "alternative") == "B" && all_hold(cert, "degree_sum") &&
                        identity_is(cert, "degree_sum", std::to_string(n + 1), std::to_string(n + 1)),
                    label + ": alternative " + fact(cert, "alternative") + ", r=" + r + ", r'=" + r2 +
                        ", r+r' = n+1 = " + std::to_string(n + 1));
            c.check(all_hold(cert, "incident_reciprocal_sum[") && all_hold(cert, "total_reciprocal_sum[") &&
                        all_hold(cert, "kappa_distinct_values"),
                    label + ": incident and total reciprocal sums exact, kappa multiset " +
                        fact(cert, "kappaMultiset"));
            return c.check(cert.verdict == Verdict::pass, label + ": verdict " + std::string(to_string(cert.verdict)));
        });
    }
}

// 10
void independence_oracle(Checker& c, const VerifyOptions&) {
    auto compare = [](const std::vector<std::vector<int>>& rows, int p) {
        const PrimeFieldCtx field(static_cast<std::uint64_t>(p));
        std::vector<std::vector<ModP>> entries;
        for (const auto& r : rows) {
            std::vector<ModP> row;
            for (int x : r) {
                row.push_back(field(x));
            }
            entries.push_back(std::move(row));
        }
        const bool certified = certify_independence(Matrix<ModP>(entries)).verdict == Verdict::pass;
        return certified == rows_independent_brute_force(rows, p);
    };
    guarded(c, "F_2", [&] {
        std::size_t agree = 0;
        std::size_t independent = 0;
        for (int mask = 0; mask < 512; ++mask) {
            std::vector<std::vector<int>> rows(3, std::vector<int>(3));
            for (int k = 0; k < 9; ++k) {
                rows[k / 3][k % 3] = (mask >> k) & 1;
            }
            agree += static_cast<std::size_t>(compare(rows, 2));
            independent += static_cast<std::size_t>(rows_independent_brute_force(rows, 2));
        }
        // 168 = |GL(3,2)|
        return c.check(agree == 512 && independent == 168,
                       "all 512 3x3 matrices over F_2 agree (" + std::to_string(agree) + "), " +
                           std::to_string(independent) + " nonsingular");
    });
    guarded(c, "F_5", [&] {
        std::mt19937_64 rng(0x5eed5);
        std::uniform_int_distribution<int> digit(0, 4);
        std::size_t agree = 0;
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::vector<int>> rows(4, std::vector<int>(4));
            // Every fourth trial copies a combination of earlier rows to exercise singular cases.
            for (auto& r : rows) {
                for (auto& x : r) {
                    x = digit(rng);
                }
            }
            if (trial % 4 == 0) {
                const int s = digit(rng);
                for (int k = 0; k < 4; ++k) {
                    rows[3][k] = (rows[0][k] + s * rows[1][k]) % 5;
                }
            }
            agree += static_cast<std::size_t>(compare(rows, 5));
        }
        return c.check(agree == 200, "200 random 4x4 matrices over F_5 agree (" + std::to_string(agree) + ")");
    });
}

struct Criterion {
    int id;
    std::vector<std::string> tags;
    std::string title;
    std::function<void(Checker&, const VerifyOptions&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, {"hadamard", "search"}, "Hadamard family exceeds n for lambda = (n+1)/2", hadamard_counterexample},
        {2, {"modular-sweep", "search"}, "modular distance bound n(q-1) against exhaustive search",
         modular_sweep},
        {3, {"delsarte-sweep", "search"}, "Delsarte bound against exhaustive search", delsarte_sweep},
        {4, {"constant-vector-sum"}, "distance sum to constant vectors is n(q-1) mod p", constant_vector_sum},
        {5, {"hamming-tight"}, "basis coefficients and congruence for tight vector systems", hamming_tight},
        {6, {"two-distance", "schlafli"}, "maximal spherical two-distance relation", two_distance},
        {7, {"neumaier"}, "squared distance ratio (m-1)/m", neumaier},
        {8, {"mod-design"}, "modular symmetric design congruences", mod_design},
        {9, {"ryser"}, "uniform or two-degree dichotomy for constant intersection", ryser},
        {10, {"independence-oracle", "independence"}, "determinant criterion against brute force",
         independence_oracle},
    };
    return all;
}

bool selected(const Criterion& c, const std::string& filter) {
    if (filter.empty()) {
        return true;
    }
    std::stringstream in(filter);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token == std::to_string(c.id) ||
            std::find(c.tags.begin(), c.tags.end(), token) != c.tags.end()) {
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<std::pair<int, std::vector<std::string>>> list_criteria() {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    for (const auto& c : criteria()) {
        out.emplace_back(c.id, c.tags);
    }
    return out;
}

std::vector<CriterionResult> run_verification(const VerifyOptions& options) {
    std::vector<CriterionResult> results;
    for (const auto& criterion : criteria()) {
        if (!selected(criterion, options.filter)) {
            continue;
        }
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(checker, options);
        } catch (const std::exception& e) {
            checker.check(false, std::string("unexpected error: ") + e.what());
        }
        const auto end = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = criterion.id;
        r.tags = criterion.tags;
        r.title = criterion.title;
        r.passed = checker.passed();
        r.details = checker.take();
        r.wall_time_ms = std::chrono::duration<double, std::milli>(end - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

bool rows_independent_brute_force(const std::vector<std::vector<int>>& rows, int p) {
    const std::size_t k = rows.size();
    if (k == 0) {
        return true;
    }
    const std::size_t width = rows.front().size();
    std::vector<int> coeff(k, 0);
    // Odometer over F_p^k, skipping the zero vector.
    while (true) {
        std::size_t pos = 0;
        while (pos < k && ++coeff[pos] == p) {
            coeff[pos] = 0;
            ++pos;
        }
        if (pos == k) {
            return true;
        }
        bool zero = true;
        for (std::size_t col = 0; col < width && zero; ++col) {
            long long s = 0;
            for (std::size_t r = 0; r < k; ++r) {
                s += static_cast<long long>(coeff[r]) * rows[r][col];
            }
            zero = ((s % p) + p) % p == 0;
        }
        if (zero) {
            return false;
        }
    }
}

} // namespace extremal
