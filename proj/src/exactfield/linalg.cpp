#include "extremal/linalg.hpp"

#include "extremal/error.hpp"

#include <algorithm>

namespace extremal {

namespace {

// ---------------------------------------------------------------------------
// Generic elimination over a field (F_p, Q(sqrt d)).

template <class T>
struct Echelon {
    Matrix<T> m;
    std::size_t rank = 0;
    bool odd_swaps = false;
};

/// Forward elimination restricted to the first `pivot_cols` columns.
template <class T>
Echelon<T> echelon(Matrix<T> m, std::size_t pivot_cols) {
    Echelon<T> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            m.swap_rows(p, r);
            out.odd_swaps = !out.odd_swaps;
        }
        const T inv = m(r, c).inverse();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) {
                continue;
            }
            const T factor = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) -= factor * m(r, j);
            }
        }
        ++r;
    }
    out.rank = r;
    out.m = std::move(m);
    return out;
}

template <class T>
Matrix<T> augment(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows(), a.cols() + b.cols(), a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
            out(i, a.cols() + j) = b(i, j);
        }
    }
    return out;
}

template <class T>
Matrix<T> solve_generic(const Matrix<T>& a, const Matrix<T>& b) {
    const std::size_t n = a.rows();
    auto e = echelon(augment(a, b), n);
    if (e.rank < n) {
        throw SingularSystem(e.rank, n);
    }
    Matrix<T>& u = e.m;
    Matrix<T> x(n, b.cols(), zero_like(a(0, 0)));
    for (std::size_t k = 0; k < b.cols(); ++k) {
        for (std::size_t ii = n; ii-- > 0;) {
            T acc = u(ii, n + k);
            for (std::size_t j = ii + 1; j < n; ++j) {
                acc -= u(ii, j) * x(j, k);
            }
            x(ii, k) = acc / u(ii, ii);
        }
    }
    return x;
}

// ---------------------------------------------------------------------------
// Fraction-free path over Q.

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rows of [a | b] scaled by the lcm of their denominators.
IntMatrix clear_denominators(const Matrix<Rational>& a, const Matrix<Rational>* b) {
    IntMatrix out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt lcm = 1;
        auto fold = [&lcm](const Rational& q) {
            const BigInt den = q.denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        };
        for (std::size_t j = 0; j < a.cols(); ++j) {
            fold(a(i, j));
        }
        if (b != nullptr) {
            for (std::size_t j = 0; j < b->cols(); ++j) {
                fold((*b)(i, j));
            }
        }
        auto scaled = [&lcm](const Rational& q) -> BigInt { return q.numerator() * (lcm / q.denominator()); };
        auto& row = out[i];
        row.reserve(a.cols() + (b != nullptr ? b->cols() : 0));
        for (std::size_t j = 0; j < a.cols(); ++j) {
            row.push_back(scaled(a(i, j)));
        }
        if (b != nullptr) {
            for (std::size_t j = 0; j < b->cols(); ++j) {
                row.push_back(scaled((*b)(i, j)));
            }
        }
    }
    return out;
}

struct BareissResult {
    std::size_t rank = 0;
    bool odd_swaps = false;
};

/// In-place Bareiss elimination with pivots taken from the first
/// `pivot_cols` columns. Every division is exact.
BareissResult bareiss(IntMatrix& m, std::size_t pivot_cols) {
    BareissResult out;
    if (m.empty()) {
        return out;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    BigInt prev = 1;
    BigInt tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            std::swap(m[p], m[r]);
            out.odd_swaps = !out.odd_swaps;
        }
        const BigInt& pivot = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const BigInt lead = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                tmp = pivot * m[i][j] - lead * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = pivot;
        ++r;
    }
    out.rank = r;
    return out;
}

} // namespace

template <class T>
std::size_t rank(const Matrix<T>& m) {
    m.check_single_field();
    if (m.empty()) {
        return 0;
    }
    return echelon(m, m.cols()).rank;
}

template <>
std::size_t rank(const Matrix<Rational>& m) {
    IntMatrix im = clear_denominators(m, nullptr);
    return bareiss(im, m.cols()).rank;
}

template <class T>
T determinant(const Matrix<T>& m) {
    if (!m.is_square() || m.empty()) {
        throw MalformedInput("determinant needs a nonempty square matrix");
    }
    m.check_single_field();
    auto e = echelon(m, m.cols());
    T det = one_like(m(0, 0));
    if (e.rank < m.rows()) {
        return zero_like(det);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        det *= e.m(i, i);
    }
    return e.odd_swaps ? -det : det;
}

template <>
Rational determinant(const Matrix<Rational>& m) {
    if (!m.is_square() || m.empty()) {
        throw MalformedInput("determinant needs a nonempty square matrix");
    }
    IntMatrix im = clear_denominators(m, nullptr);
    const auto res = bareiss(im, m.cols());
    if (res.rank < m.rows()) {
        return Rational{};
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigInt den = m(i, j).denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        scale *= lcm;
    }
    Rational det(im.back().back(), scale);
    return res.odd_swaps ? -det : det;
}

template <class T>
Matrix<T> solve_linear(const Matrix<T>& m, const Matrix<T>& rhs) {
    if (!m.is_square() || m.empty()) {
        throw MalformedInput("solve_linear needs a nonempty square matrix");
    }
    if (rhs.rows() != m.rows()) {
        throw MalformedInput("right-hand side has the wrong number of rows");
    }
    m.check_single_field();
    rhs.check_single_field();
    if (!rhs.empty() && rhs(0, 0).field_id() != m(0, 0).field_id()) {
        throw MalformedInput("system and right-hand side live in different fields");
    }
    return solve_generic(m, rhs);
}

template <>
Matrix<Rational> solve_linear(const Matrix<Rational>& m, const Matrix<Rational>& rhs) {
    if (!m.is_square() || m.empty()) {
        throw MalformedInput("solve_linear needs a nonempty square matrix");
    }
    if (rhs.rows() != m.rows()) {
        throw MalformedInput("right-hand side has the wrong number of rows");
    }
    const std::size_t n = m.rows();
    IntMatrix im = clear_denominators(m, &rhs);
    const auto res = bareiss(im, n);
    if (res.rank < n) {
        throw SingularSystem(res.rank, n);
    }
    // Cramer: D * x is integral where D is the last Bareiss pivot.
    const BigInt d = im[n - 1][n - 1];
    Matrix<Rational> x(n, rhs.cols(), Rational{});
    std::vector<BigInt> y(n);
    BigInt acc;
    for (std::size_t k = 0; k < rhs.cols(); ++k) {
        for (std::size_t i = n; i-- > 0;) {
            acc = d * im[i][n + k];
            for (std::size_t j = i + 1; j < n; ++j) {
                acc -= im[i][j] * y[j];
            }
            mpz_divexact(y[i].get_mpz_t(), acc.get_mpz_t(), im[i][i].get_mpz_t());
            x(i, k) = Rational(y[i], d);
        }
    }
    return x;
}

template <class T>
std::vector<T> solve_linear(const Matrix<T>& m, std::span<const T> rhs) {
    if (rhs.size() != m.rows()) {
        throw MalformedInput("right-hand side has the wrong length");
    }
    Matrix<T> b(rhs.size(), 1, rhs.empty() ? T(m(0, 0)) : rhs.front());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        b(i, 0) = rhs[i];
    }
    const Matrix<T> x = solve_linear(m, b);
    std::vector<T> out;
    out.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        out.push_back(x(i, 0));
    }
    return out;
}

template <class T>
Inertia inertia_psd_rank(const Matrix<T>& g) {
    if (!g.is_square()) {
        throw MalformedInput("inertia needs a square matrix");
    }
    g.check_single_field();
    if (!g.is_symmetric()) {
        throw MalformedInput("inertia needs a symmetric matrix");
    }
    Inertia out{true, 0};
    const std::size_t n = g.rows();
    Matrix<T> w = g;
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) {
        active[i] = i;
    }
    while (!active.empty()) {
        auto pick = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return w(i, i).sign() > 0; });
        if (pick == active.end()) {
            pick = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return w(i, i).sign() < 0; });
        }
        if (pick == active.end()) {
            // Zero diagonal: PSD only if the remaining block vanishes.
            for (std::size_t i : active) {
                for (std::size_t j : active) {
                    if (!w(i, j).is_zero()) {
                        return Inertia{false, rank(g)};
                    }
                }
            }
            break;
        }
        const std::size_t p = *pick;
        active.erase(pick);
        if (w(p, p).sign() < 0) {
            out.is_psd = false;
        }
        const T inv = w(p, p).inverse();
        for (std::size_t j : active) {
            if (w(j, p).is_zero()) {
                continue;
            }
            const T factor = w(j, p) * inv;
            for (std::size_t k : active) {
                w(j, k) -= factor * w(p, k);
            }
        }
        ++out.rank;
    }
    return out;
}

template std::size_t rank(const Matrix<ModP>&);
template std::size_t rank(const Matrix<QuadExt>&);
template ModP determinant(const Matrix<ModP>&);
template QuadExt determinant(const Matrix<QuadExt>&);
template std::vector<Rational> solve_linear(const Matrix<Rational>&, std::span<const Rational>);
template std::vector<ModP> solve_linear(const Matrix<ModP>&, std::span<const ModP>);
template std::vector<QuadExt> solve_linear(const Matrix<QuadExt>&, std::span<const QuadExt>);
template Matrix<ModP> solve_linear(const Matrix<ModP>&, const Matrix<ModP>&);
template Matrix<QuadExt> solve_linear(const Matrix<QuadExt>&, const Matrix<QuadExt>&);
template Inertia inertia_psd_rank(const Matrix<Rational>&);
template Inertia inertia_psd_rank(const Matrix<QuadExt>&);

} // namespace extremal
