#pragma once

#include "extremal/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace extremal {

inline double zero_like(double) { return 0.0; }
inline double one_like(double) { return 1.0; }

namespace detail {
template <class T>
bool is_zero_value(const T& v) {
    if constexpr (std::is_arithmetic_v<T>) {
        return v == T{};
    } else {
        return v.is_zero();
    }
}
} // namespace detail

/// Exponent vector of a monomial in x_1..x_n (index 0 is x_1).
using Monomial = std::vector<std::uint8_t>;

inline std::size_t total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

/// Sparse multivariate polynomial; zero coefficients are never stored.
template <class T>
class Poly {
public:
    explicit Poly(std::size_t variables) : vars_(variables) {}

    std::size_t variables() const noexcept { return vars_; }
    const std::map<Monomial, T>& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const T& c) {
        if (m.size() != vars_) {
            throw MalformedInput("monomial has the wrong number of variables");
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!detail::is_zero_value(c)) {
                terms_.emplace(m, c);
            }
            return;
        }
        it->second += c;
        if (detail::is_zero_value(it->second)) {
            terms_.erase(it);
        }
    }

    /// Coefficient of m, or `zero` when absent.
    T coefficient(const Monomial& m, const T& zero) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero : it->second;
    }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [m, c] : terms_) {
            d = std::max(d, total_degree(m));
        }
        return d;
    }

    T evaluate(std::span<const T> point, const T& zero) const {
        if (point.size() != vars_) {
            throw MalformedInput("evaluation point has the wrong dimension");
        }
        T acc = zero;
        for (const auto& [m, c] : terms_) {
            T term = c;
            for (std::size_t i = 0; i < vars_; ++i) {
                for (std::uint8_t e = 0; e < m[i]; ++e) {
                    term *= point[i];
                }
            }
            acc += term;
        }
        return acc;
    }

    Poly& operator+=(const Poly& rhs) {
        for (const auto& [m, c] : rhs.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    Poly scaled(const T& factor) const {
        Poly out(vars_);
        for (const auto& [m, c] : terms_) {
            out.add_term(m, c * factor);
        }
        return out;
    }

    friend Poly operator*(const Poly& lhs, const Poly& rhs) {
        Poly out(lhs.vars_);
        for (const auto& [ma, ca] : lhs.terms_) {
            for (const auto& [mb, cb] : rhs.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) {
                    m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
                }
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

private:
    std::size_t vars_;
    std::map<Monomial, T> terms_;
};

/// Monomials of degree <= 2 with degree <= 1 in x_1; there are n(n+3)/2.
inline std::vector<Monomial> reduced_monomial_basis(std::size_t n) {
    std::vector<Monomial> out;
    out.emplace_back(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = 1;
        out.push_back(m);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (i == 0 && j == 0) {
                continue;
            }
            Monomial m(n, 0);
            ++m[i];
            ++m[j];
            out.push_back(m);
        }
    }
    return out;
}

/// Polynomial whose support lies in reduced_monomial_basis(n).
template <class T>
struct ReducedPoly {
    Poly<T> poly;
};

/// Rewrites x_1^2 as 1 - x_2^2 - ... - x_n^2. The result agrees with the
/// input on the unit sphere. Degree above 2 is unsupported.
template <class T>
ReducedPoly<T> sphere_reduce(const Poly<T>& p) {
    const std::size_t n = p.variables();
    if (n == 0) {
        throw MalformedInput("sphere_reduce needs at least one variable");
    }
    if (p.degree() > 2) {
        throw UnsupportedDegree("sphere_reduce handles total degree <= 2, got " + std::to_string(p.degree()));
    }
    Poly<T> out(n);
    for (const auto& [m, c] : p.terms()) {
        if (m[0] < 2) {
            out.add_term(m, c);
            continue;
        }
        out.add_term(Monomial(n, 0), c);
        for (std::size_t i = 1; i < n; ++i) {
            Monomial sq(n, 0);
            sq[i] = 2;
            out.add_term(sq, -c);
        }
    }
    return ReducedPoly<T>{std::move(out)};
}

} // namespace extremal
