#include "extremal/certifier.hpp"

#include "extremal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace extremal {

std::string_view to_string(CertificateKind kind) {
    switch (kind) {
    case CertificateKind::independence:
        return "independence";
    case CertificateKind::hamming_tight:
        return "hamming-tight";
    case CertificateKind::two_distance:
        return "two-distance";
    case CertificateKind::neumaier:
        return "neumaier";
    case CertificateKind::mod_design:
        return "mod-design";
    case CertificateKind::ryser:
        return "ryser";
    }
    return "unknown";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::not_applicable:
        return "not-applicable";
    }
    return "unknown";
}

void Certificate::add_clause(std::string name, bool holds, std::string detail) {
    hypotheses.push_back({std::move(name), holds, std::move(detail)});
}

void Certificate::add_fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }

void Certificate::add_identity(std::string name, std::string lhs, std::string rhs, bool holds) {
    identities.push_back({std::move(name), std::move(lhs), std::move(rhs), holds});
}

bool Certificate::add_float_identity(std::string name, double lhs, double rhs, double tolerance) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    const bool ok = std::abs(lhs - rhs) <= tolerance * scale;
    std::ostringstream l;
    std::ostringstream r;
    l.precision(17);
    r.precision(17);
    l << lhs;
    r << rhs;
    identities.push_back({std::move(name), l.str(), r.str(), ok});
    return ok;
}

void Certificate::finalize() {
    const bool clauses_ok = std::all_of(hypotheses.begin(), hypotheses.end(), [](const Clause& c) { return c.holds; });
    const bool identities_ok =
        std::all_of(identities.begin(), identities.end(), [](const Identity& i) { return i.holds; });
    verdict = clauses_ok && identities_ok ? Verdict::pass : Verdict::fail;
}

void Certificate::mark_not_applicable(std::string reason) {
    verdict = Verdict::not_applicable;
    add_fact("notApplicable", std::move(reason));
}

const Identity* Certificate::find_identity(std::string_view name) const {
    auto it = std::find_if(identities.begin(), identities.end(), [&](const Identity& i) { return i.name == name; });
    return it == identities.end() ? nullptr : &*it;
}

const std::string* Certificate::find_fact(std::string_view key) const {
    auto it = std::find_if(facts.begin(), facts.end(), [&](const auto& f) { return f.first == key; });
    return it == facts.end() ? nullptr : &it->second;
}

template <class T>
Certificate certify_independence(const Matrix<T>& b) {
    if (!b.is_square() || b.empty()) {
        throw MalformedInput("independence certificate needs a nonempty square evaluation matrix");
    }
    Certificate cert;
    cert.kind = CertificateKind::independence;
    const std::size_t r = rank(b);
    cert.add_fact("size", std::to_string(b.rows()));
    cert.add_fact("rank", std::to_string(r));
    cert.add_fact("rankDeficit", std::to_string(b.rows() - r));
    cert.add_identity("rank_equals_size", std::to_string(r), std::to_string(b.rows()), r == b.rows());
    cert.finalize();
    return cert;
}

template Certificate certify_independence(const Matrix<Rational>&);
template Certificate certify_independence(const Matrix<ModP>&);
template Certificate certify_independence(const Matrix<QuadExt>&);

} // namespace extremal
