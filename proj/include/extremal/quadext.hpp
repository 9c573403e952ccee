#pragma once

#include "extremal/rational.hpp"

#include <cstdint>
#include <string>

namespace extremal {

bool is_squarefree(std::int64_t value);

/// Element rational + surd * sqrt(d) of the real quadratic field Q(sqrt d).
///
/// The radicand is part of the value: arithmetic between elements with
/// different radicands throws MalformedInput, there is no automatic tower.
/// Ordering is decided exactly by comparing squares, never through doubles.
class QuadExt {
public:
    /// d must be squarefree and at least 2.
    QuadExt(Rational rational, Rational surd, std::int64_t radicand);
    /// Embeds a rational into Q(sqrt d).
    QuadExt(const Rational& rational, std::int64_t radicand);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& surd_part() const noexcept { return b_; }
    std::int64_t radicand() const noexcept { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    int sign() const;
    double to_double() const;
    /// Canonical text "p/q+r/s*sqrt(d)"; zero terms are omitted.
    std::string to_string() const;

    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator/=(const QuadExt& rhs);

    QuadExt operator-() const;
    QuadExt inverse() const;
    /// a - b sqrt(d)
    QuadExt conjugate() const;

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
        return lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
    }
    friend bool operator<(const QuadExt& lhs, const QuadExt& rhs) { return (lhs - rhs).sign() < 0; }
    friend bool operator>(const QuadExt& lhs, const QuadExt& rhs) { return rhs < lhs; }

    std::uint64_t field_id() const noexcept { return static_cast<std::uint64_t>(d_); }

    friend QuadExt zero_like(const QuadExt& proto) { return QuadExt(Rational{}, Rational{}, proto.d_, Unchecked{}); }
    friend QuadExt one_like(const QuadExt& proto) { return QuadExt(Rational{1}, Rational{}, proto.d_, Unchecked{}); }

private:
    struct Unchecked {};
    QuadExt(Rational rational, Rational surd, std::int64_t radicand, Unchecked)
        : a_(std::move(rational)), b_(std::move(surd)), d_(radicand) {}
    void check_same_field(const QuadExt& rhs) const;

    Rational a_;
    Rational b_;
    std::int64_t d_;
};

} // namespace extremal
