#include "extremal/io.hpp"

#include "extremal/scalar.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace extremal {

namespace {

/// Field descriptor: radicand 0 and p 0 means Q.
struct FieldSpec {
    std::uint32_t p = 0;
    std::int64_t radicand = 0;
};

std::int64_t parse_int(std::string_view text, const std::string& what) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw MalformedInput(what + ": cannot read integer from \"" + std::string(text) + "\"");
    }
    return v;
}

FieldSpec parse_field(const std::string& name) {
    if (name == "Q") {
        return {};
    }
    if (name.rfind("F_", 0) == 0) {
        const auto p = parse_int(std::string_view(name).substr(2), "field");
        if (p < 2) {
            throw MalformedInput("field: modulus must be a prime, got " + name);
        }
        return {static_cast<std::uint32_t>(p), 0};
    }
    const std::string prefix = "Q(sqrt(";
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 2 && name.substr(name.size() - 2) == "))") {
        const auto d = parse_int(std::string_view(name).substr(prefix.size(), name.size() - prefix.size() - 2), "field");
        return {0, d};
    }
    throw MalformedInput("field: expected \"Q\", \"F_p\" or \"Q(sqrt(d))\", got \"" + name + "\"");
}

std::string field_text(const FieldSpec& f) {
    if (f.p != 0) {
        return "F_" + std::to_string(f.p);
    }
    if (f.radicand != 0) {
        return "Q(sqrt(" + std::to_string(f.radicand) + "))";
    }
    return "Q";
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object()) {
        throw MalformedInput(std::string("expected a JSON object containing \"") + key + "\"");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw MalformedInput(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::uint64_t require_uint(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw MalformedInput(std::string("field \"") + key + "\" must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

const Json& require_array(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_array()) {
        throw MalformedInput(std::string("field \"") + key + "\" must be an array");
    }
    return v;
}

/// Scalar text from a JSON string or integer.
std::string scalar_text(const Json& v, const std::string& where) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<std::int64_t>());
    }
    throw MalformedInput(where + ": scalars must be strings such as \"1/4\" or integers");
}

/// Radicand mentioned in any of the texts, 0 if none.
std::int64_t infer_radicand(const std::vector<std::string>& texts, const std::string& where) {
    std::int64_t d = 0;
    for (const auto& t : texts) {
        const auto parsed = parse_scalar_text(t);
        if (parsed.radicand != 0) {
            if (d != 0 && d != parsed.radicand) {
                throw MalformedInput(where + ": mixes sqrt(" + std::to_string(d) + ") and sqrt(" +
                                     std::to_string(parsed.radicand) + ")");
            }
            d = parsed.radicand;
        }
    }
    return d;
}

template <class T>
Json rows_json(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<std::string>> rows_text(const Json& rows, const std::string& where) {
    if (!rows.is_array()) {
        throw MalformedInput(where + " must be an array of rows");
    }
    std::vector<std::vector<std::string>> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array()) {
            throw MalformedInput(where + "[" + std::to_string(r) + "] must be an array");
        }
        std::vector<std::string> row;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            row.push_back(scalar_text(rows[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        }
        out.push_back(std::move(row));
    }
    return out;
}

template <class T, class Parse>
Matrix<T> matrix_from_text(const std::vector<std::vector<std::string>>& text, Parse parse) {
    std::vector<std::vector<T>> rows;
    for (const auto& r : text) {
        std::vector<T> row;
        for (const auto& t : r) {
            row.push_back(parse(t));
        }
        rows.push_back(std::move(row));
    }
    return Matrix<T>(rows);
}

template <class T>
Json gram_json(const GramTwoDistance<T>& g, const std::string& field) {
    Json j;
    j["n"] = g.ambient_dim;
    j["N"] = g.point_count;
    j["a"] = g.a.to_string();
    j["b"] = g.b.to_string();
    j["field"] = field;
    if (g.affine_dim) {
        j["affine_dim"] = *g.affine_dim;
    }
    j["gram"] = rows_json(g.gram);
    if (g.coords) {
        j["coords"] = *g.coords;
    }
    return j;
}

template <class T, class Parse>
GramTwoDistance<T> gram_fill(const Json& j, const std::vector<std::vector<std::string>>& text, Parse parse) {
    GramTwoDistance<T> g{static_cast<std::size_t>(require_uint(j, "n")),
                         static_cast<std::size_t>(require_uint(j, "N")),
                         parse(scalar_text(require(j, "a"), "a")),
                         parse(scalar_text(require(j, "b"), "b")),
                         matrix_from_text<T>(text, parse),
                         std::nullopt,
                         std::nullopt};
    if (j.contains("affine_dim")) {
        g.affine_dim = static_cast<std::size_t>(require_uint(j, "affine_dim"));
    }
    if (j.contains("coords")) {
        const Json& c = j["coords"];
        if (!c.is_array()) {
            throw MalformedInput("coords must be an array of coordinate rows");
        }
        std::vector<std::vector<double>> coords;
        for (const auto& row : c) {
            if (!row.is_array()) {
                throw MalformedInput("coords rows must be arrays of numbers");
            }
            std::vector<double> v;
            for (const auto& x : row) {
                if (!x.is_number()) {
                    throw MalformedInput("coords entries must be numbers");
                }
                v.push_back(x.get<double>());
            }
            coords.push_back(std::move(v));
        }
        g.coords = std::move(coords);
    }
    return g;
}

ExactScalar parse_in_field(const std::string& text, const FieldSpec& f) {
    if (f.p != 0) {
        return PrimeFieldCtx(f.p).parse(text);
    }
    if (f.radicand != 0) {
        return parse_quadratic_text(text, f.radicand);
    }
    return parse_rational_text(text);
}

CertificateKind kind_from_string(const std::string& s) {
    for (auto k : {CertificateKind::independence, CertificateKind::hamming_tight, CertificateKind::two_distance,
                   CertificateKind::neumaier, CertificateKind::mod_design, CertificateKind::ryser}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw MalformedInput("kind: unknown certificate kind \"" + s + "\"");
}

Verdict verdict_from_string(const std::string& s) {
    for (auto v : {Verdict::pass, Verdict::fail, Verdict::not_applicable}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    throw MalformedInput("verdict: unknown verdict \"" + s + "\"");
}

} // namespace

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw MalformedInput(path.string() + ": " + e.what());
    }
    if (j.is_object() && j.contains("payload") && j.contains("outcome") && j.contains("command")) {
        return j["payload"];
    }
    return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoError("write to " + path.string() + " failed");
    }
}

std::string field_name(const ExactScalar& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return "Q";
            } else if constexpr (std::is_same_v<T, ModP>) {
                return field_text({v.modulus(), 0});
            } else {
                return field_text({0, v.radicand()});
            }
        },
        value);
}

// --- families ---------------------------------------------------------------

Json to_json(const SetFamily& family) {
    Json j;
    j["n"] = family.ground();
    j["sets"] = family.to_one_based();
    return j;
}

SetFamily family_from_json(const Json& j) {
    const auto n = require_uint(j, "n");
    const Json& sets = require_array(j, "sets");
    std::vector<std::vector<std::size_t>> lists;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!sets[i].is_array()) {
            throw MalformedInput("sets[" + std::to_string(i) + "] must be an array of 1-based elements");
        }
        std::vector<std::size_t> list;
        for (const auto& e : sets[i]) {
            if (!e.is_number_integer() || e.get<std::int64_t>() < 1 || e.get<std::uint64_t>() > n) {
                throw MalformedInput("sets[" + std::to_string(i) + "]: element " + e.dump() + " outside [1," +
                                     std::to_string(n) + "]");
            }
            list.push_back(e.get<std::size_t>());
        }
        lists.push_back(std::move(list));
    }
    return SetFamily::from_one_based(n, lists);
}

Json to_json(const VectorSystem& system) {
    Json j;
    j["n"] = system.length();
    j["q"] = system.alphabet();
    Json vectors = Json::array();
    for (const auto& v : system.vectors()) {
        Json row = Json::array();
        for (auto x : v) {
            row.push_back(static_cast<int>(x));
        }
        vectors.push_back(std::move(row));
    }
    j["vectors"] = std::move(vectors);
    return j;
}

VectorSystem vector_system_from_json(const Json& j) {
    const auto n = require_uint(j, "n");
    const auto q = require_uint(j, "q");
    if (q < 2 || q > 256) {
        throw MalformedInput("field \"q\" must lie in [2,256]");
    }
    const Json& vectors = require_array(j, "vectors");
    std::vector<Tuple> tuples;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (!vectors[i].is_array()) {
            throw MalformedInput("vectors[" + std::to_string(i) + "] must be an array");
        }
        Tuple t;
        for (const auto& x : vectors[i]) {
            if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::uint64_t>() >= q) {
                throw MalformedInput("vectors[" + std::to_string(i) + "]: entry " + x.dump() + " outside [0," +
                                     std::to_string(q - 1) + "]");
            }
            t.push_back(static_cast<std::uint8_t>(x.get<std::uint32_t>()));
        }
        tuples.push_back(std::move(t));
    }
    return VectorSystem(n, static_cast<std::uint32_t>(q), std::move(tuples));
}

// --- gram and matrices ------------------------------------------------------

Json to_json(const AnyGram& gram) {
    return std::visit(
        [](const auto& g) {
            using T = std::decay_t<decltype(g.a)>;
            if constexpr (std::is_same_v<T, QuadExt>) {
                return gram_json(g, field_text({0, g.a.radicand()}));
            } else {
                return gram_json(g, "Q");
            }
        },
        gram);
}

AnyGram gram_from_json(const Json& j) {
    const auto text = rows_text(require(j, "gram"), "gram");
    FieldSpec field;
    if (j.contains("field")) {
        if (!j["field"].is_string()) {
            throw MalformedInput("field \"field\" must be a string");
        }
        field = parse_field(j["field"].get<std::string>());
        if (field.p != 0) {
            throw MalformedInput("field: Gram matrices live over Q or Q(sqrt(d))");
        }
    } else {
        std::vector<std::string> all{scalar_text(require(j, "a"), "a"), scalar_text(require(j, "b"), "b")};
        for (const auto& row : text) {
            all.insert(all.end(), row.begin(), row.end());
        }
        field.radicand = infer_radicand(all, "gram");
    }
    if (field.radicand != 0) {
        const auto d = field.radicand;
        return gram_fill<QuadExt>(j, text, [d](const std::string& t) { return parse_quadratic_text(t, d); });
    }
    return gram_fill<Rational>(j, text, [](const std::string& t) { return parse_rational_text(t); });
}

Json to_json(const AnyMatrix& matrix) {
    return std::visit(
        [](const auto& m) {
            Json j;
            using T = std::decay_t<decltype(m(0, 0))>;
            if (m.empty()) {
                j["field"] = "Q";
            } else if constexpr (std::is_same_v<T, ModP>) {
                j["field"] = field_text({m(0, 0).modulus(), 0});
            } else if constexpr (std::is_same_v<T, QuadExt>) {
                j["field"] = field_text({0, m(0, 0).radicand()});
            } else {
                j["field"] = "Q";
            }
            j["rows"] = rows_json(m);
            return j;
        },
        matrix);
}

AnyMatrix matrix_from_json(const Json& j) {
    const Json& f = require(j, "field");
    if (!f.is_string()) {
        throw MalformedInput("field \"field\" must be a string");
    }
    const FieldSpec field = parse_field(f.get<std::string>());
    const auto text = rows_text(require(j, "rows"), "rows");
    if (field.p != 0) {
        const PrimeFieldCtx ctx(field.p);
        return matrix_from_text<ModP>(text, [&ctx](const std::string& t) { return ctx.parse(t); });
    }
    if (field.radicand != 0) {
        const auto d = field.radicand;
        return matrix_from_text<QuadExt>(text, [d](const std::string& t) { return parse_quadratic_text(t, d); });
    }
    return matrix_from_text<Rational>(text, [](const std::string& t) { return parse_rational_text(t); });
}

// --- certificates -----------------------------------------------------------

Json to_json(const Certificate& cert) {
    Json j;
    j["kind"] = std::string(to_string(cert.kind));
    j["verdict"] = std::string(to_string(cert.verdict));
    Json hyps = Json::array();
    for (const auto& c : cert.hypotheses) {
        Json h;
        h["name"] = c.name;
        h["holds"] = c.holds;
        if (!c.detail.empty()) {
            h["detail"] = c.detail;
        }
        hyps.push_back(std::move(h));
    }
    j["hypotheses"] = std::move(hyps);
    if (!cert.coefficients.empty()) {
        j["coefficient_field"] = field_name(cert.coefficients.front());
    }
    Json coeffs = Json::array();
    for (const auto& c : cert.coefficients) {
        coeffs.push_back(to_string(c));
    }
    j["coefficients"] = std::move(coeffs);
    Json ids = Json::array();
    for (const auto& i : cert.identities) {
        Json id;
        id["name"] = i.name;
        id["lhs"] = i.lhs;
        id["rhs"] = i.rhs;
        id["holds"] = i.holds;
        ids.push_back(std::move(id));
    }
    j["identities"] = std::move(ids);
    Json facts = Json::object();
    for (const auto& [k, v] : cert.facts) {
        facts[k] = v;
    }
    j["facts"] = std::move(facts);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    cert.kind = kind_from_string(require(j, "kind").get<std::string>());
    cert.verdict = verdict_from_string(require(j, "verdict").get<std::string>());
    for (const auto& h : require_array(j, "hypotheses")) {
        cert.add_clause(require(h, "name").get<std::string>(), require(h, "holds").get<bool>(),
                        h.value("detail", std::string()));
    }
    const Json& coeffs = require_array(j, "coefficients");
    if (!coeffs.empty()) {
        const FieldSpec field = parse_field(require(j, "coefficient_field").get<std::string>());
        for (const auto& c : coeffs) {
            cert.coefficients.push_back(parse_in_field(scalar_text(c, "coefficients"), field));
        }
    }
    for (const auto& i : require_array(j, "identities")) {
        cert.add_identity(require(i, "name").get<std::string>(), require(i, "lhs").get<std::string>(),
                          require(i, "rhs").get<std::string>(), require(i, "holds").get<bool>());
    }
    const Json& facts = require(j, "facts");
    if (!facts.is_object()) {
        throw MalformedInput("field \"facts\" must be an object");
    }
    for (const auto& [k, v] : facts.items()) {
        cert.add_fact(k, v.get<std::string>());
    }
    return cert;
}

// --- search -----------------------------------------------------------------

Json to_json(const SearchProblem& problem) {
    Json j;
    j["n"] = problem.n;
    j["q"] = problem.q;
    j["predicate"] = describe(problem.predicate);
    if (problem.target) {
        j["target"] = *problem.target;
    }
    return j;
}

Json to_json(const SearchResult& result) {
    Json j;
    j["max_size"] = result.max_size;
    j["exhaustive"] = result.exhaustive;
    j["target_reached"] = result.target_reached;
    j["witness"] = to_json(result.witness);
    j["nodes"] = result.nodes;
    return j;
}

SearchResult search_result_from_json(const Json& outer) {
    // A search report payload wraps the result next to the problem.
    const Json& j = outer.is_object() && outer.contains("result") ? outer["result"] : outer;
    SearchResult r;
    r.max_size = static_cast<std::size_t>(require_uint(j, "max_size"));
    r.exhaustive = require(j, "exhaustive").get<bool>();
    r.target_reached = require(j, "target_reached").get<bool>();
    r.witness = vector_system_from_json(require(j, "witness"));
    r.nodes = require_uint(j, "nodes");
    if (r.witness.size() != r.max_size) {
        throw MalformedInput("witness size " + std::to_string(r.witness.size()) + " differs from max_size " +
                             std::to_string(r.max_size));
    }
    return r;
}

Json to_json(const SweepReport& report) {
    Json j;
    j["violations"] = report.violations;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["family"] = row.family;
        r["n"] = row.n;
        r["q"] = row.q;
        if (row.family == "modular-distance") {
            r["p"] = row.p;
            r["lambda"] = row.lambda;
        } else {
            r["s"] = row.s;
        }
        r["status"] = row.status;
        if (row.bound) {
            r["bound"] = to_string(*row.bound);
        }
        if (row.exact_max) {
            r["max"] = *row.exact_max;
            r["tight"] = row.tight;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

} // namespace extremal
