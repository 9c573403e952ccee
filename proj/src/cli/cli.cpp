#include "extremal/cli.hpp"

#include "extremal/bounds.hpp"
#include "extremal/certifier.hpp"
#include "extremal/constructions.hpp"
#include "extremal/io.hpp"
#include "extremal/scalar.hpp"
#include "extremal/search.hpp"
#include "extremal/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace extremal {

namespace {

struct Outcome {
    std::string outcome; // pass, fail, not-applicable
    Json payload;
};

int exit_code_for(const std::string& outcome) {
    if (outcome == "pass") {
        return kExitPass;
    }
    if (outcome == "fail") {
        return kExitFail;
    }
    if (outcome == "not-applicable") {
        return kExitNotApplicable;
    }
    return kExitUsage;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << v;
    return s.str();
}

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome from_certificate(const Certificate& cert) {
    return {std::string(to_string(cert.verdict)), to_json(cert)};
}

Json bound_payload(const char* name, std::initializer_list<std::pair<const char*, std::uint64_t>> inputs,
                   const BigInt& value) {
    Json j;
    j["bound"] = name;
    for (const auto& [k, v] : inputs) {
        j[k] = v;
    }
    j["value"] = to_string(value);
    return j;
}

Json labelled(const char* name, Json body) {
    Json j;
    j["construction"] = name;
    for (auto& [k, v] : body.items()) {
        j[k] = std::move(v);
    }
    return j;
}

/// Set family or vector system JSON, as a vector system.
VectorSystem load_vector_system(const Json& j) {
    if (j.contains("vectors")) {
        return vector_system_from_json(j);
    }
    return to_vector_system(family_from_json(j));
}

} // namespace

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();

    CLI::App app{"Bounds, constructions, certificates and exhaustive search for extremal set families and "
                 "two-distance sets.",
                 "extremal"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "Write the JSON report to this file instead of stdout");

    std::function<Outcome()> action;
    std::vector<std::string> input_files;

    // Shared option storage; each leaf command reads what it registered.
    std::uint64_t n = 0, q = 0, s = 0, p = 0, lambda = 0, w = 0, r = 0, v = 0, m = 0, block = 0, count = 0;
    std::string family_path, gram_path, matrix_path, d1sq_text, d2sq_text;

    // --- bound -------------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "Closed-form bounds and hypothesis checks");
    bound->require_subcommand(1);
    {
        auto* c = bound->add_subcommand("delsarte", "sum_{i<=s} C(n,i)(q-1)^i");
        c->add_option("--n", n)->required();
        c->add_option("--q", q)->required();
        c->add_option("--s", s)->required();
        c->callback([&] {
            action = [&] {
                return Outcome{"pass", bound_payload("delsarte", {{"n", n}, {"q", q}, {"s", s}}, delsarte_bound(n, q, s))};
            };
        });
    }
    {
        auto* c = bound->add_subcommand("msd", "C(n+s-1,s) + C(n+s-2,s-1)");
        c->add_option("--n", n)->required();
        c->add_option("--s", s)->required();
        c->callback([&] {
            action = [&] { return Outcome{"pass", bound_payload("msd", {{"n", n}, {"s", s}}, msd_bound(n, s))}; };
        });
    }
    {
        auto* c = bound->add_subcommand("two-dist-max", "n(n+3)/2");
        c->add_option("--n", n)->required();
        c->callback([&] {
            action = [&] {
                return Outcome{"pass", bound_payload("two-dist-max", {{"n", n}}, two_distance_max(n))};
            };
        });
    }
    {
        auto* c = bound->add_subcommand("thm3-check", "Hypotheses of the modular constant-distance bound n(q-1)");
        c->add_option("--n", n)->required();
        c->add_option("--q", q)->required();
        c->add_option("--p", p)->required();
        c->add_option("--lambda", lambda)->required();
        c->callback([&] {
            action = [&] {
                const auto h = check_modular_distance_hypotheses(n, q, p, lambda);
                Json j;
                j["bound"] = "thm3-check";
                j["n"] = n;
                j["q"] = q;
                j["p"] = p;
                j["lambda"] = lambda;
                Json clauses = Json::object();
                for (const auto& [name, holds] : h.clauses()) {
                    clauses[name] = holds;
                }
                j["clauses"] = std::move(clauses);
                j["holds"] = h.holds();
                if (auto b = h.implied_bound()) {
                    j["value"] = to_string(*b);
                } else {
                    j["first_failure"] = h.first_failure().value_or("");
                }
                return Outcome{h.holds() ? "pass" : "not-applicable", j};
            };
        });
    }
    {
        auto* c = bound->add_subcommand("conjecture", "C(n-w+2, 2)");
        c->add_option("--n", n)->required();
        c->add_option("--w", w)->required();
        c->callback([&] {
            action = [&] {
                return Outcome{"pass", bound_payload("conjecture", {{"n", n}, {"w", w}},
                                                     uniform_two_intersection_conjecture(n, w))};
            };
        });
    }

    // --- construct ---------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "Build a named family or Gram configuration");
    construct->require_subcommand(1);
    auto add_family_construct = [&](const char* name, const char* help, std::function<SetFamily()> make) {
        auto* c = construct->add_subcommand(name, help);
        c->callback([&, name, make] { action = [name, make] { return Outcome{"pass", labelled(name, to_json(make()))}; }; });
        return c;
    };
    auto add_gram_construct = [&](const char* name, const char* help, std::function<AnyGram()> make) {
        auto* c = construct->add_subcommand(name, help);
        c->callback([&, name, make] { action = [name, make] { return Outcome{"pass", labelled(name, to_json(make()))}; }; });
        return c;
    };
    add_family_construct("fano", "Fano plane PG(2,2)", [] { return projective_plane(2); });
    add_family_construct("pg", "Projective plane PG(2,r), r prime <= 31", [&] {
        return projective_plane(static_cast<std::uint32_t>(r));
    })->add_option("--r", r)->required();
    add_family_construct("hadamard", "Paley (4v-1, 2v-1, v-1) design", [&] {
        return hadamard_design(static_cast<std::uint32_t>(v));
    })->add_option("--v", v)->required();
    add_family_construct("hadamard-plus-full", "Paley design plus the full ground set", [&] {
        return hadamard_plus_full(static_cast<std::uint32_t>(v));
    })->add_option("--v", v)->required();
    {
        auto* c = add_family_construct("lambda-design", "Type-1 lambda-design from PG(2,r)", [&] {
            if (p != 0) {
                return lambda_design_from_plane(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(p));
            }
            return lambda_design_type1(projective_plane(static_cast<std::uint32_t>(r)), block);
        });
        c->add_option("--r", r)->required();
        c->add_option("--p", p, "Also require r = 1 mod p for a prime p >= 5");
        c->add_option("--block", block, "Index of the kept block (0-based)");
    }
    add_gram_construct("pentagon", "Regular pentagon over Q(sqrt(5))", [] { return AnyGram(pentagon()); });
    add_gram_construct("schlafli27", "27 lines on a cubic surface in R^6", [] { return AnyGram(schlafli27()); });
    add_gram_construct("johnson", "(e_i+e_j)/sqrt(2) in R^m", [&] {
        return AnyGram(johnson_pairs(m));
    })->add_option("--m", m)->required();

    // --- certify -----------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "Check a certificate on a family or configuration");
    certify->require_subcommand(1);
    {
        auto* c = certify->add_subcommand("independence", "Nonsingularity of an evaluation matrix");
        c->add_option("--matrix", matrix_path, "Matrix JSON {\"field\",\"rows\"}")->required();
        c->callback([&] {
            input_files = {matrix_path};
            action = [&] {
                const AnyMatrix mat = matrix_from_json(read_json_file(matrix_path));
                return std::visit([](const auto& mm) { return from_certificate(certify_independence(mm)); }, mat);
            };
        });
    }
    {
        auto* c = certify->add_subcommand("hamming-tight", "Basis certificate for a vector system of size n(q-1)+1");
        c->add_option("--family", family_path, "Vector-system or set-family JSON")->required();
        c->add_option("--p", p)->required();
        c->add_option("--lambda", lambda)->required();
        c->callback([&] {
            input_files = {family_path};
            action = [&] {
                const VectorSystem h = load_vector_system(read_json_file(family_path));
                return from_certificate(
                    hamming_tight_certificate(h, PrimeFieldCtx(p), static_cast<std::uint32_t>(lambda)));
            };
        });
    }
    {
        auto* c = certify->add_subcommand("two-distance", "Relation N(ab+1/n) = (1-a)(1-b) for maximal sets");
        c->add_option("--gram", gram_path, "Gram JSON")->required();
        c->callback([&] {
            input_files = {gram_path};
            action = [&] {
                const AnyGram g = gram_from_json(read_json_file(gram_path));
                return std::visit([](const auto& gg) { return from_certificate(two_distance_certificate(gg)); }, g);
            };
        });
    }
    {
        auto* c = certify->add_subcommand("neumaier", "Squared-distance ratio (m-1)/m");
        auto* gram_opt = c->add_option("--gram", gram_path, "Gram JSON");
        auto* n_opt = c->add_option("--n", n);
        auto* count_opt = c->add_option("--N", count);
        auto* d1_opt = c->add_option("--d1sq", d1sq_text, "Smaller squared distance");
        auto* d2_opt = c->add_option("--d2sq", d2sq_text, "Larger squared distance");
        for (auto* o : {n_opt, count_opt, d1_opt, d2_opt}) {
            o->excludes(gram_opt);
        }
        c->callback([&, gram_opt, n_opt, count_opt, d1_opt, d2_opt] {
            if (gram_opt->count() > 0) {
                input_files = {gram_path};
                action = [&] {
                    const AnyGram g = gram_from_json(read_json_file(gram_path));
                    return std::visit([](const auto& gg) { return from_certificate(neumaier_check(gg)); }, g);
                };
                return;
            }
            if (n_opt->count() == 0 || count_opt->count() == 0 || d1_opt->count() == 0 || d2_opt->count() == 0) {
                throw CLI::ValidationError("neumaier", "give --gram, or all of --n --N --d1sq --d2sq");
            }
            action = [&] {
                const auto a = parse_scalar_text(d1sq_text);
                const auto b = parse_scalar_text(d2sq_text);
                const auto d = a.radicand != 0 ? a.radicand : b.radicand;
                if (d == 0) {
                    return from_certificate(
                        neumaier_check(n, count, parse_rational_text(d1sq_text), parse_rational_text(d2sq_text)));
                }
                return from_certificate(neumaier_check(n, count, parse_quadratic_text(d1sq_text, d),
                                                       parse_quadratic_text(d2sq_text, d)));
            };
        });
    }
    {
        auto* c = certify->add_subcommand("mod-design", "Modular symmetric-design congruences");
        c->add_option("--family", family_path, "Set-family JSON")->required();
        c->add_option("--p", p)->required();
        c->callback([&] {
            input_files = {family_path};
            action = [&] {
                return from_certificate(
                    mod_design_certificate(family_from_json(read_json_file(family_path)), PrimeFieldCtx(p)));
            };
        });
    }
    {
        auto* c = certify->add_subcommand("ryser", "Constant-intersection decomposition and dichotomy");
        c->add_option("--family", family_path, "Set-family JSON")->required();
        c->add_option("--lambda", lambda)->required();
        c->callback([&] {
            input_files = {family_path};
            action = [&] {
                return from_certificate(ryser_decompose(family_from_json(read_json_file(family_path)), lambda));
            };
        });
    }

    // --- search ------------------------------------------------------------
    std::string pred;
    std::vector<std::size_t> allowed;
    std::size_t target = 0;
    unsigned jobs = 1;
    std::uint64_t max_space = 0;
    auto* search = app.add_subcommand("search", "Exact maximum family by exhaustive search");
    search->add_option("--n", n)->required();
    search->add_option("--q", q)->required();
    search->add_option("--pred", pred, "dist-within | dist-mod | dist-const | intersect-const")
        ->required()
        ->check(CLI::IsMember({"dist-within", "dist-mod", "dist-const", "intersect-const"}));
    auto* lambda_opt = search->add_option("--lambda", lambda);
    auto* p_opt = search->add_option("--p", p);
    auto* l_opt = search->add_option("--L", allowed, "Allowed distances for dist-within, e.g. --L 1,2")->delimiter(',');
    auto* target_opt = search->add_option("--target", target, "Stop once a family of this size is found");
    search->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    auto* space_opt = search->add_option("--max-space", max_space, "Override the q^n cap");
    search->callback([&, lambda_opt, p_opt, l_opt, target_opt, space_opt] {
        auto need = [](CLI::Option* o, const char* name, const std::string& which) {
            if (o->count() == 0) {
                throw CLI::ValidationError(name, "required for --pred " + which);
            }
        };
        SearchProblem problem;
        problem.n = n;
        problem.q = static_cast<std::uint32_t>(q);
        if (pred == "dist-within") {
            need(l_opt, "--L", pred);
            problem.predicate = DistanceWithin{allowed};
        } else if (pred == "dist-mod") {
            need(lambda_opt, "--lambda", pred);
            need(p_opt, "--p", pred);
            problem.predicate = DistanceCongruent{static_cast<std::uint32_t>(lambda), static_cast<std::uint32_t>(p)};
        } else if (pred == "dist-const") {
            need(lambda_opt, "--lambda", pred);
            problem.predicate = ConstantDistance{lambda};
        } else {
            need(lambda_opt, "--lambda", pred);
            problem.predicate = IntersectionConstant{lambda};
        }
        if (target_opt->count() > 0) {
            problem.target = target;
        }
        SearchOptions options;
        options.jobs = jobs;
        if (space_opt->count() > 0) {
            options.max_space = max_space;
        }
        action = [problem, options] {
            const SearchResult result = search_max(problem, options);
            Json j;
            j["problem"] = to_json(problem);
            j["result"] = to_json(result);
            const bool ok = problem.target ? result.target_reached : true;
            return Outcome{ok ? "pass" : "fail", j};
        };
    });

    // --- verify-paper ------------------------------------------------------
    VerifyOptions verify_options;
    std::string mutation;
    auto* verify = app.add_subcommand("verify-paper", "Run every acceptance criterion");
    verify->add_option("--filter", verify_options.filter, "Comma-separated criterion tags or ids");
    auto* mutate_opt =
        verify->add_option("--mutate-schlafli", mutation, "Fault injection: replace the Gram value 1/4 of schlafli27");
    verify->add_option("--jobs", verify_options.jobs, "Worker threads for searches")->check(CLI::Range(1U, 1024U));
    verify->callback([&, mutate_opt] {
        if (mutate_opt->count() > 0) {
            verify_options.mutate_schlafli = mutation;
        }
        action = [&] {
            const auto results = run_verification(verify_options);
            Json list = Json::array();
            std::size_t failed = 0;
            for (const auto& res : results) {
                Json c;
                c["id"] = res.id;
                c["tags"] = res.tags;
                c["title"] = res.title;
                c["passed"] = res.passed;
                c["details"] = res.details;
                list.push_back(std::move(c));
                failed += res.passed ? 0 : 1;
                err << (res.passed ? "PASS" : "FAIL") << "  criterion " << res.id << " [" << res.tags.front() << "] "
                    << res.title << "\n";
            }
            Json j;
            j["criteria"] = std::move(list);
            j["run"] = results.size();
            j["failed"] = failed;
            const bool ok = failed == 0 && !results.empty();
            if (results.empty()) {
                err << "no criterion matches the filter\n";
            }
            return Outcome{ok ? "pass" : "fail", j};
        };
    });

    // --- parse and dispatch --------------------------------------------------
    std::vector<std::string> argv_store{"extremal"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Outcome result;
    try {
        std::string digest_input;
        for (const auto& a : args) {
            digest_input += a;
            digest_input.push_back('\0');
        }
        for (const auto& f : input_files) {
            digest_input += read_bytes(f);
            digest_input.push_back('\0');
        }
        const std::string digest = "fnv1a64:" + hex64(fnv1a64(digest_input));

        try {
            result = action();
        } catch (const HypothesisViolation& e) {
            err << "hypothesis violation: " << e.what() << "\n";
            Json j;
            j["hypothesis_violation"] = {{"clause", e.clause()}, {"detail", e.what()}};
            result = Outcome{"not-applicable", j};
        } catch (const InternalInconsistency& e) {
            err << "internal inconsistency: " << e.what() << "\n";
            result = Outcome{"fail", Json{{"internal_inconsistency", e.what()}}};
        }

        Json report;
        report["command"] = args;
        report["inputs_digest"] = digest;
        report["outcome"] = result.outcome;
        report["payload"] = std::move(result.payload);
        const auto end = std::chrono::steady_clock::now();
        report["wall_time_ms"] = std::chrono::duration<double, std::milli>(end - start).count();
        const std::string text = report.dump(2) + "\n";
        if (out_path.empty()) {
            out << text;
        } else {
            write_text_file(out_path, text);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code_for(result.outcome);
}

} // namespace extremal
