#include "extremal/rational.hpp"

#include "extremal/error.hpp"

#include <cctype>

namespace extremal {

std::string to_string(const BigInt& value) { return value.get_str(); }

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        ++i;
    }
    if (i == text.size()) {
        throw MalformedInput("malformed integer in scalar '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw MalformedInput("malformed integer in scalar '" + std::string(whole) + "'");
        }
    }
    std::string digits(text);
    if (digits.front() == '+') {
        digits.erase(0, 1);
    }
    return BigInt(digits, 10);
}

} // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw MalformedInput("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den <= 0) {
        throw MalformedInput("denominator must be positive in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash), text), den);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational Rational::inverse() const { return Rational{1} / *this; }

} // namespace extremal
