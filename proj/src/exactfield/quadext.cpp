#include "extremal/quadext.hpp"

#include "extremal/error.hpp"

#include <cmath>

namespace extremal {

bool is_squarefree(std::int64_t value) {
    if (value < 1) {
        return false;
    }
    for (std::int64_t f = 2; f * f <= value; ++f) {
        if (value % (f * f) == 0) {
            return false;
        }
    }
    return true;
}

QuadExt::QuadExt(Rational rational, Rational surd, std::int64_t radicand)
    : a_(std::move(rational)), b_(std::move(surd)), d_(radicand) {
    if (radicand < 2 || !is_squarefree(radicand)) {
        throw MalformedInput("radicand " + std::to_string(radicand) + " is not a squarefree integer >= 2");
    }
}

QuadExt::QuadExt(const Rational& rational, std::int64_t radicand) : QuadExt(rational, Rational{}, radicand) {}

void QuadExt::check_same_field(const QuadExt& rhs) const {
    if (d_ != rhs.d_) {
        throw MalformedInput("mixing Q(sqrt(" + std::to_string(d_) + ")) and Q(sqrt(" + std::to_string(rhs.d_) + "))");
    }
}

int QuadExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) {
        return sa;
    }
    if (sa == 0) {
        return sb;
    }
    if (sa == sb) {
        return sa;
    }
    // Opposite signs: the term with the larger square wins.
    const Rational rational_sq = a_ * a_;
    const Rational surd_sq = b_ * b_ * Rational(d_);
    if (rational_sq == surd_sq) {
        return 0; // unreachable for squarefree d, kept for completeness
    }
    return rational_sq > surd_sq ? sa : sb;
}

double QuadExt::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::to_string() const {
    if (b_.is_zero()) {
        return a_.to_string();
    }
    std::string surd;
    if (b_ == Rational{1}) {
        surd = "sqrt(" + std::to_string(d_) + ")";
    } else if (b_ == Rational{-1}) {
        surd = "-sqrt(" + std::to_string(d_) + ")";
    } else {
        surd = b_.to_string() + "*sqrt(" + std::to_string(d_) + ")";
    }
    if (a_.is_zero()) {
        return surd;
    }
    return a_.to_string() + (b_.sign() > 0 ? "+" : "") + surd;
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
    check_same_field(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
    check_same_field(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
    check_same_field(rhs);
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d_);
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, d_, Unchecked{}); }

QuadExt QuadExt::conjugate() const { return QuadExt(a_, -b_, d_, Unchecked{}); }

QuadExt QuadExt::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero in Q(sqrt(" + std::to_string(d_) + "))");
    }
    // Norm a^2 - d b^2 is nonzero because d is not a square.
    const Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    return QuadExt(a_ / norm, -b_ / norm, d_, Unchecked{});
}

} // namespace extremal
