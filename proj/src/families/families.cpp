#include "extremal/families.hpp"

#include "extremal/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace extremal {

std::size_t hamming_distance(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
    if (u.size() != v.size()) {
        throw MalformedInput("hamming_distance: lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()) + " differ");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d += static_cast<std::size_t>(u[i] != v[i]);
    }
    return d;
}

VectorSystem::VectorSystem(std::size_t n, std::uint32_t q, std::vector<Tuple> vectors)
    : n_(n), q_(q), vectors_(std::move(vectors)) {
    if (q < 2 || q > 256) {
        throw MalformedInput("alphabet size q=" + std::to_string(q) + " outside [2,256]");
    }
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        const auto& v = vectors_[i];
        if (v.size() != n) {
            throw MalformedInput("vector " + std::to_string(i) + " has length " + std::to_string(v.size()) +
                                 ", expected " + std::to_string(n));
        }
        for (auto x : v) {
            if (x >= q) {
                throw MalformedInput("vector " + std::to_string(i) + " has entry " + std::to_string(x) +
                                     " outside [0," + std::to_string(q - 1) + "]");
            }
        }
    }
    std::set<Tuple> seen;
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (!seen.insert(vectors_[i]).second) {
            throw MalformedInput("vector " + std::to_string(i) + " duplicates an earlier member");
        }
    }
}

// ---------------------------------------------------------------------------

Subset::Subset(std::size_t ground) : ground_(ground), words_((ground + 63) / 64, 0) {
    if (ground > kMaxGroundSet) {
        throw MalformedInput("ground set of size " + std::to_string(ground) + " exceeds " +
                             std::to_string(kMaxGroundSet));
    }
}

Subset::Subset(std::size_t ground, std::span<const std::size_t> elements) : Subset(ground) {
    for (auto e : elements) {
        insert(e);
    }
}

std::size_t Subset::size() const {
    std::size_t s = 0;
    for (auto w : words_) {
        s += static_cast<std::size_t>(std::popcount(w));
    }
    return s;
}

bool Subset::contains(std::size_t element) const {
    return element < ground_ && ((words_[element / 64] >> (element % 64)) & 1u) != 0;
}

void Subset::insert(std::size_t element) {
    if (element >= ground_) {
        throw MalformedInput("element " + std::to_string(element + 1) + " outside [1," + std::to_string(ground_) + "]");
    }
    words_[element / 64] |= std::uint64_t{1} << (element % 64);
}

std::size_t Subset::intersection_size(const Subset& other) const {
    if (other.ground_ != ground_) {
        throw MalformedInput("subsets of different ground sets");
    }
    std::size_t s = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        s += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return s;
}

Subset Subset::symmetric_difference(const Subset& other) const {
    if (other.ground_ != ground_) {
        throw MalformedInput("subsets of different ground sets");
    }
    Subset out(ground_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i] = words_[i] ^ other.words_[i];
    }
    return out;
}

std::vector<std::size_t> Subset::elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w != 0) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

Tuple Subset::characteristic_vector() const {
    Tuple v(ground_, 0);
    for (auto e : elements()) {
        v[e] = 1;
    }
    return v;
}

// ---------------------------------------------------------------------------

SetFamily::SetFamily(std::size_t n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {
    if (n > kMaxGroundSet) {
        throw MalformedInput("ground set of size " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroundSet));
    }
    for (const auto& s : sets_) {
        if (s.ground() != n) {
            throw MalformedInput("member set lives on a different ground set");
        }
    }
}

SetFamily SetFamily::from_one_based(std::size_t n, const std::vector<std::vector<std::size_t>>& sets) {
    std::vector<Subset> out;
    out.reserve(sets.size());
    for (std::size_t j = 0; j < sets.size(); ++j) {
        Subset s(n);
        for (auto e : sets[j]) {
            if (e < 1 || e > n) {
                throw MalformedInput("set " + std::to_string(j) + " has element " + std::to_string(e) +
                                     " outside [1," + std::to_string(n) + "]");
            }
            s.insert(e - 1);
        }
        out.push_back(std::move(s));
    }
    return SetFamily(n, std::move(out));
}

std::vector<std::vector<std::size_t>> SetFamily::to_one_based() const {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(sets_.size());
    for (const auto& s : sets_) {
        auto e = s.elements();
        for (auto& x : e) {
            ++x;
        }
        out.push_back(std::move(e));
    }
    return out;
}

bool SetFamily::has_duplicates() const {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        for (std::size_t j = i + 1; j < sets_.size(); ++j) {
            if (sets_[i] == sets_[j]) {
                return true;
            }
        }
    }
    return false;
}

VectorSystem to_vector_system(const SetFamily& family) {
    std::vector<Tuple> vectors;
    vectors.reserve(family.size());
    for (const auto& s : family.sets()) {
        vectors.push_back(s.characteristic_vector());
    }
    return VectorSystem(family.ground(), 2, std::move(vectors));
}

SetFamily to_set_family(const VectorSystem& system) {
    if (system.alphabet() != 2) {
        throw MalformedInput("only binary vector systems correspond to set families");
    }
    std::vector<Subset> sets;
    sets.reserve(system.size());
    for (const auto& v : system.vectors()) {
        Subset s(system.length());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] != 0) {
                s.insert(i);
            }
        }
        sets.push_back(std::move(s));
    }
    return SetFamily(system.length(), std::move(sets));
}

// ---------------------------------------------------------------------------

DistanceProfile distance_set(const VectorSystem& system) {
    if (system.size() < 2) {
        throw InsufficientInput("distance_set needs at least two vectors");
    }
    std::set<std::size_t> ds;
    for (std::size_t i = 0; i < system.size(); ++i) {
        for (std::size_t j = i + 1; j < system.size(); ++j) {
            ds.insert(hamming_distance(system[i], system[j]));
        }
    }
    DistanceProfile out;
    out.distances.assign(ds.begin(), ds.end());
    out.is_constant = out.distances.size() == 1;
    if (out.is_constant) {
        out.common_value = out.distances.front();
    }
    return out;
}

IntersectionProfile intersection_profile(const SetFamily& family) {
    if (family.size() < 2) {
        throw InsufficientInput("intersection_profile needs at least two sets");
    }
    IntersectionProfile out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            out.sizes.push_back(family[i].intersection_size(family[j]));
        }
    }
    if (std::all_of(out.sizes.begin(), out.sizes.end(), [&](std::size_t s) { return s == out.sizes.front(); })) {
        out.lambda = out.sizes.front();
    }
    return out;
}

std::vector<std::size_t> degrees(const SetFamily& family) {
    std::vector<std::size_t> d(family.ground(), 0);
    for (const auto& s : family.sets()) {
        for (auto e : s.elements()) {
            ++d[e];
        }
    }
    return d;
}

ModP constant_vector_distance_sum(std::span<const std::uint8_t> f, std::uint32_t q, const PrimeFieldCtx& field) {
    if (field.modulus() < q) {
        throw HypothesisViolation("pGeqQ", "p=" + std::to_string(field.modulus()) + " < q=" + std::to_string(q));
    }
    ModP total = field.zero();
    Tuple constant(f.size(), 0);
    for (std::uint32_t j = 0; j < q; ++j) {
        std::fill(constant.begin(), constant.end(), static_cast<std::uint8_t>(j));
        for (auto x : f) {
            if (x >= q) {
                throw MalformedInput("tuple entry " + std::to_string(x) + " outside [0," + std::to_string(q - 1) + "]");
            }
        }
        total += field(static_cast<std::int64_t>(hamming_distance(f, constant)));
    }
    return total;
}

} // namespace extremal
