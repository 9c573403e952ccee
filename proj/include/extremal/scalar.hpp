#pragma once

#include "extremal/modp.hpp"
#include "extremal/quadext.hpp"
#include "extremal/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace extremal {

/// An exact value from Q, F_p or Q(sqrt d).
using ExactScalar = std::variant<Rational, ModP, QuadExt>;

std::string to_string(const ExactScalar& value);

/// Result of reading the textual scalar syntax "p/q+r/s*sqrt(d)".
/// `radicand` is zero when no surd term is present.
struct ParsedScalar {
    Rational rational;
    Rational surd;
    std::int64_t radicand = 0;
};

/// Accepts "3", "-1/4", "1/4*sqrt(5)", "-sqrt(5)", "-1/4+1/4*sqrt(5)" and
/// similar sums; at most one distinct radicand.
ParsedScalar parse_scalar_text(std::string_view text);

/// Reads a scalar that must be rational.
Rational parse_rational_text(std::string_view text);

/// Reads a scalar as an element of Q(sqrt d). Rationals embed; any other
/// radicand is malformed.
QuadExt parse_quadratic_text(std::string_view text, std::int64_t radicand);

} // namespace extremal
