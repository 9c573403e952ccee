#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace extremal {

class ModP;

bool is_prime(std::uint64_t value);

/// A prime modulus below 2^31, checked by trial division.
class PrimeFieldCtx {
public:
    explicit PrimeFieldCtx(std::uint64_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    ModP operator()(std::int64_t value) const;
    ModP zero() const;
    ModP one() const;

    /// Decimal residue in [0, p-1]; anything else is malformed.
    ModP parse(std::string_view text) const;

    friend bool operator==(const PrimeFieldCtx&, const PrimeFieldCtx&) = default;

private:
    std::uint32_t p_;
};

/// Element of F_p. Every element carries its modulus; combining elements of
/// different fields throws MalformedInput.
class ModP {
public:
    ModP(std::int64_t value, const PrimeFieldCtx& ctx);

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }
    std::string to_string() const { return std::to_string(v_); }

    ModP& operator+=(const ModP& rhs);
    ModP& operator-=(const ModP& rhs);
    ModP& operator*=(const ModP& rhs);
    ModP& operator/=(const ModP& rhs);

    ModP operator-() const;
    ModP inverse() const;
    ModP pow(std::uint64_t exponent) const;

    friend ModP operator+(ModP lhs, const ModP& rhs) { return lhs += rhs; }
    friend ModP operator-(ModP lhs, const ModP& rhs) { return lhs -= rhs; }
    friend ModP operator*(ModP lhs, const ModP& rhs) { return lhs *= rhs; }
    friend ModP operator/(ModP lhs, const ModP& rhs) { return lhs /= rhs; }

    friend bool operator==(const ModP& lhs, const ModP& rhs) {
        lhs.check_same_field(rhs);
        return lhs.v_ == rhs.v_;
    }

    std::uint64_t field_id() const noexcept { return p_; }

    friend ModP zero_like(const ModP& proto) { return ModP(0u, proto.p_, true); }
    friend ModP one_like(const ModP& proto) { return ModP(1u, proto.p_, true); }

private:
    friend class PrimeFieldCtx;

    ModP(std::uint32_t value, std::uint32_t p, bool) : v_(value), p_(p) {}
    void check_same_field(const ModP& rhs) const;

    std::uint32_t v_;
    std::uint32_t p_;
};

} // namespace extremal
