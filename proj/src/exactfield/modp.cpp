#include "extremal/modp.hpp"

#include "extremal/error.hpp"

#include <cctype>
#include <charconv>

namespace extremal {

bool is_prime(std::uint64_t value) {
    if (value < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeFieldCtx::PrimeFieldCtx(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) {
        throw HypothesisViolation("pPrime", "modulus " + std::to_string(p) + " exceeds 2^31");
    }
    if (!is_prime(p)) {
        throw HypothesisViolation("pPrime", std::to_string(p) + " is not prime");
    }
    p_ = static_cast<std::uint32_t>(p);
}

ModP PrimeFieldCtx::operator()(std::int64_t value) const { return ModP(value, *this); }
ModP PrimeFieldCtx::zero() const { return ModP(0u, p_, true); }
ModP PrimeFieldCtx::one() const { return ModP(1u, p_, true); }

ModP PrimeFieldCtx::parse(std::string_view text) const {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw MalformedInput("malformed residue '" + std::string(text) + "'");
    }
    if (v >= p_) {
        throw MalformedInput("residue " + std::string(text) + " outside [0," + std::to_string(p_ - 1) + "]");
    }
    return ModP(static_cast<std::uint32_t>(v), p_, true);
}

ModP::ModP(std::int64_t value, const PrimeFieldCtx& ctx) : p_(ctx.modulus()) {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) {
        r += p_;
    }
    v_ = static_cast<std::uint32_t>(r);
}

void ModP::check_same_field(const ModP& rhs) const {
    if (p_ != rhs.p_) {
        throw MalformedInput("mixing F_" + std::to_string(p_) + " and F_" + std::to_string(rhs.p_));
    }
}

ModP& ModP::operator+=(const ModP& rhs) {
    check_same_field(rhs);
    std::uint32_t s = v_ + rhs.v_;
    if (s >= p_) {
        s -= p_;
    }
    v_ = s;
    return *this;
}

ModP& ModP::operator-=(const ModP& rhs) {
    check_same_field(rhs);
    v_ = v_ >= rhs.v_ ? v_ - rhs.v_ : v_ + p_ - rhs.v_;
    return *this;
}

ModP& ModP::operator*=(const ModP& rhs) {
    check_same_field(rhs);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * rhs.v_ % p_);
    return *this;
}

ModP& ModP::operator/=(const ModP& rhs) { return *this *= rhs.inverse(); }

ModP ModP::operator-() const { return ModP(v_ == 0 ? 0u : p_ - v_, p_, true); }

ModP ModP::pow(std::uint64_t exponent) const {
    ModP result(1u, p_, true);
    ModP base = *this;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

ModP ModP::inverse() const {
    if (v_ == 0) {
        throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    }
    return pow(p_ - 2);
}

} // namespace extremal
