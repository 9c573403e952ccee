#pragma once

#include "extremal/modp.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace extremal {

/// Largest ground set accepted by SetFamily.
inline constexpr std::size_t kMaxGroundSet = 1024;

using Tuple = std::vector<std::uint8_t>;

/// Number of coordinates where u and v differ.
std::size_t hamming_distance(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v);

/// A set of distinct q-ary tuples of length n. Input order is the identity
/// of the members and is preserved.
class VectorSystem {
public:
    VectorSystem(std::size_t n, std::uint32_t q, std::vector<Tuple> vectors);

    std::size_t length() const noexcept { return n_; }
    std::uint32_t alphabet() const noexcept { return q_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    const Tuple& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<Tuple>& vectors() const noexcept { return vectors_; }

    friend bool operator==(const VectorSystem&, const VectorSystem&) = default;

private:
    std::size_t n_;
    std::uint32_t q_;
    std::vector<Tuple> vectors_;
};

/// Bit-packed subset of a ground set {0,...,n-1}.
class Subset {
public:
    Subset() = default;
    explicit Subset(std::size_t ground);
    /// Zero-based elements; out-of-range elements are malformed.
    Subset(std::size_t ground, std::span<const std::size_t> elements);

    std::size_t ground() const noexcept { return ground_; }
    std::size_t size() const;
    bool contains(std::size_t element) const;
    void insert(std::size_t element);
    std::size_t intersection_size(const Subset& other) const;
    Subset symmetric_difference(const Subset& other) const;
    /// Zero-based, ascending.
    std::vector<std::size_t> elements() const;
    Tuple characteristic_vector() const;

    friend bool operator==(const Subset&, const Subset&) = default;
    friend bool operator<(const Subset& a, const Subset& b) { return a.elements() < b.elements(); }

private:
    std::size_t ground_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Ordered list of subsets of [n]. Duplicates are tolerated here; operations
/// that need distinct members check it themselves.
class SetFamily {
public:
    SetFamily(std::size_t n, std::vector<Subset> sets);

    /// Builds a family from 1-based element lists, as used in all I/O.
    static SetFamily from_one_based(std::size_t n, const std::vector<std::vector<std::size_t>>& sets);

    std::size_t ground() const noexcept { return n_; }
    std::size_t size() const noexcept { return sets_.size(); }
    const Subset& operator[](std::size_t i) const { return sets_[i]; }
    const std::vector<Subset>& sets() const noexcept { return sets_; }

    /// 1-based element lists in input order.
    std::vector<std::vector<std::size_t>> to_one_based() const;
    bool has_duplicates() const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::size_t n_;
    std::vector<Subset> sets_;
};

/// Characteristic vectors as a binary vector system. Members must be distinct.
VectorSystem to_vector_system(const SetFamily& family);
/// Inverse of to_vector_system; needs q = 2.
SetFamily to_set_family(const VectorSystem& system);

struct DistanceProfile {
    std::vector<std::size_t> distances; // sorted, distinct
    bool is_constant = false;
    std::optional<std::size_t> common_value;
};

DistanceProfile distance_set(const VectorSystem& system);

struct IntersectionProfile {
    /// |F_i ∩ F_j| for i < j in row-major pair order.
    std::vector<std::size_t> sizes;
    std::optional<std::size_t> lambda;
};

IntersectionProfile intersection_profile(const SetFamily& family);

/// d_i = number of members containing point i (zero-based index i).
std::vector<std::size_t> degrees(const SetFamily& family);

/// Sum over j in [0, q-1] of d_H(f, (j,...,j)), reduced mod p.
ModP constant_vector_distance_sum(std::span<const std::uint8_t> f, std::uint32_t q, const PrimeFieldCtx& field);

} // namespace extremal
