#include "extremal/scalar.hpp"

#include "extremal/error.hpp"

#include <cctype>
#include <charconv>

namespace extremal {

std::string to_string(const ExactScalar& value) {
    return std::visit([](const auto& v) { return v.to_string(); }, value);
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

ParsedScalar parse_scalar_text(std::string_view raw) {
    const std::string text = strip_spaces(raw);
    if (text.empty()) {
        throw MalformedInput("empty scalar");
    }
    ParsedScalar out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        // A term runs up to the next '+'/'-' that is not its own leading sign.
        std::size_t end = pos + 1;
        while (end < text.size() && text[end] != '+' && text[end] != '-') {
            ++end;
        }
        std::string_view term(text.data() + pos, end - pos);
        pos = end;

        const auto sqrt_at = term.find("sqrt(");
        if (sqrt_at == std::string_view::npos) {
            out.rational += Rational::parse(term);
            continue;
        }
        if (term.back() != ')') {
            throw MalformedInput("malformed surd in scalar '" + text + "'");
        }
        const std::string_view radicand_text = term.substr(sqrt_at + 5, term.size() - sqrt_at - 6);
        std::int64_t radicand = 0;
        const auto [ptr, ec] = std::from_chars(radicand_text.data(), radicand_text.data() + radicand_text.size(), radicand);
        if (radicand_text.empty() || ec != std::errc{} || ptr != radicand_text.data() + radicand_text.size()) {
            throw MalformedInput("malformed radicand in scalar '" + text + "'");
        }
        if (radicand < 2 || !is_squarefree(radicand)) {
            throw MalformedInput("radicand must be squarefree and >= 2 in '" + text + "'");
        }
        if (out.radicand != 0 && out.radicand != radicand) {
            throw MalformedInput("scalar '" + text + "' mixes radicands");
        }
        out.radicand = radicand;

        std::string_view coeff = term.substr(0, sqrt_at);
        Rational factor{1};
        if (coeff == "-") {
            factor = Rational{-1};
        } else if (!coeff.empty() && coeff != "+") {
            if (coeff.back() != '*') {
                throw MalformedInput("expected '*' before sqrt in '" + text + "'");
            }
            factor = Rational::parse(coeff.substr(0, coeff.size() - 1));
        }
        out.surd += factor;
    }
    if (out.radicand != 0 && out.surd.is_zero()) {
        out.radicand = 0;
    }
    return out;
}

Rational parse_rational_text(std::string_view text) {
    ParsedScalar parsed = parse_scalar_text(text);
    if (parsed.radicand != 0) {
        throw MalformedInput("expected a rational scalar, got '" + std::string(text) + "'");
    }
    return parsed.rational;
}

QuadExt parse_quadratic_text(std::string_view text, std::int64_t radicand) {
    ParsedScalar parsed = parse_scalar_text(text);
    if (parsed.radicand != 0 && parsed.radicand != radicand) {
        throw MalformedInput("scalar '" + std::string(text) + "' is not in Q(sqrt(" + std::to_string(radicand) + "))");
    }
    return QuadExt(parsed.rational, parsed.surd, radicand);
}

} // namespace extremal
