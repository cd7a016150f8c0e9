#pragma once

// Exact linear algebra over field scalars (Rat, Gauss, Mod with prime n),
// plus division-free determinant/adjugate machinery that also works over
// Z_n with composite n.
//
// Pivoting is deterministic: always the first row with a nonzero entry in
// the current column. All bases come out of rref and are therefore
// canonical, so subspace equality is matrix equality.

#include <cstddef>
#include <optional>
#include <vector>

#include "epkit/matrix.hpp"

namespace epkit {

// Reduced row echelon form. Returns pivot column indices. Requires field
// scalars; throws std::logic_error on a nonzero pivot with no inverse
// (i.e. composite modulus misuse).
template <typename S>
std::vector<std::size_t> rref_in_place(Matrix<S>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        auto inv = invert(m.at(row, col));
        if (!inv) throw std::logic_error("nonunit pivot in field elimination");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) = *inv * m.at(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            S f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename S>
std::size_t rank(const Matrix<S>& m) {
    Matrix<S> w = m;
    return rref_in_place(w).size();
}

// Canonical basis of the row space: nonzero rows of rref, one per row.
// A trivial row space yields a 0 x cols matrix.
template <typename S>
Matrix<S> row_basis(const Matrix<S>& m) {
    Matrix<S> w = m;
    std::size_t r = rref_in_place(w).size();
    if (!m.has_model()) return Matrix<S>();
    Matrix<S> out = Matrix<S>::zero(r, m.cols(), m.model());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = w.at(i, j);
    return out;
}

// Canonical basis of the column space, encoded as rows (row space of m^T).
template <typename S>
Matrix<S> col_basis(const Matrix<S>& m) {
    return row_basis(m.transpose());
}

// Canonical basis of {x : m x = 0}, one solution per row, rref-canonical.
template <typename S>
Matrix<S> null_basis(const Matrix<S>& m) {
    Matrix<S> w = m;
    std::vector<std::size_t> pivots = rref_in_place(w);
    if (!m.has_model()) return Matrix<S>();
    const S& model = m.model();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<S> out = Matrix<S>::zero(free_cols.size(), m.cols(), model);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        out.at(k, fc) = one_like(model);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.at(k, pivots[i]) = -w.at(i, fc);
    }
    return row_basis(out);
}

// Canonical basis of {x : x m = 0}, rows are the annihilating row vectors.
template <typename S>
Matrix<S> left_null_basis(const Matrix<S>& m) {
    return null_basis(m.transpose());
}

// Solve m x = b for one solution (x as column(s) matching b). Empty when
// inconsistent.
template <typename S>
std::optional<Matrix<S>> solve_right(const Matrix<S>& m, const Matrix<S>& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    if (!m.has_model() && !b.has_model())
        return b.all_zero() ? std::optional<Matrix<S>>(Matrix<S>()) : std::nullopt;
    const S& model = m.has_model() ? m.model() : b.model();
    Matrix<S> aug = Matrix<S>::zero(m.rows(), m.cols() + b.cols(), model);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, m.cols() + j) = b.at(i, j);
    }
    std::vector<std::size_t> pivots = rref_in_place(aug);
    for (auto p : pivots)
        if (p >= m.cols()) return std::nullopt;  // a pivot landed in the rhs block
    Matrix<S> x = Matrix<S>::zero(m.cols(), b.cols(), model);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, m.cols() + j);
    return x;
}

// Solve x m = b (row-sided).
template <typename S>
std::optional<Matrix<S>> solve_left(const Matrix<S>& m, const Matrix<S>& b) {
    auto xt = solve_right(m.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

// Inverse of a square matrix over a field; nullopt when singular.
template <typename S>
std::optional<Matrix<S>> field_inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of nonsquare matrix");
    if (m.flat().empty()) return Matrix<S>();
    Matrix<S> id = Matrix<S>::identity(m.rows(), m.model());
    auto x = solve_right(m, id);
    if (!x) return std::nullopt;
    if (*x * m != id) return std::nullopt;  // rank-deficient but consistent cannot happen for id rhs; keep the guard
    return x;
}

// Rank factorization m = c * r with c = pivot columns of m (rows x rank)
// and r = nonzero rows of rref(m) (rank x cols).
template <typename S>
struct RankFactor {
    Matrix<S> c, r;
};

template <typename S>
RankFactor<S> rank_factor(const Matrix<S>& m) {
    Matrix<S> w = m;
    std::vector<std::size_t> pivots = rref_in_place(w);
    RankFactor<S> out;
    if (!m.has_model()) return out;
    const S& model = m.model();
    out.c = Matrix<S>::zero(m.rows(), pivots.size(), model);
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.c.at(i, j) = m.at(i, pivots[j]);
    out.r = Matrix<S>::zero(pivots.size(), m.cols(), model);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.r.at(i, j) = w.at(i, j);
    return out;
}

// Division-free determinant via subset dynamic programming (Laplace
// expansion shared across column subsets). Works over any commutative
// scalar, in particular Z_n with composite n. O(2^k * k) ring ops.
template <typename S>
S det_division_free(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of nonsquare matrix");
    std::size_t k = m.rows();
    if (k == 0) throw std::invalid_argument("det of empty matrix");
    if (k > 20) throw std::invalid_argument("det dimension too large");
    const S& model = m.model();
    std::vector<S> dp(std::size_t(1) << k, zero_like(model));
    dp[0] = one_like(model);
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        std::size_t r = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
        S acc = zero_like(model);
        std::size_t pos = 0;  // column position within the sorted subset
        for (std::size_t j = 0; j < k; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            S term = m.at(r, j) * dp[mask ^ (std::size_t(1) << j)];
            if ((r + pos) % 2 == 0) acc = acc + term;
            else acc = acc - term;
            ++pos;
        }
        dp[mask] = acc;
    }
    return dp[dp.size() - 1];
}

// Adjugate via cofactor determinants, division-free. adj(m) * m = det(m) * I.
template <typename S>
Matrix<S> adjugate(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of nonsquare matrix");
    std::size_t k = m.rows();
    const S& model = m.model();
    if (k == 1) {
        Matrix<S> out = Matrix<S>::zero(1, 1, model);
        out.at(0, 0) = one_like(model);
        return out;
    }
    Matrix<S> out = Matrix<S>::zero(k, k, model);
    Matrix<S> minor_m = Matrix<S>::zero(k - 1, k - 1, model);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t mi = 0;
            for (std::size_t r = 0; r < k; ++r) {
                if (r == i) continue;
                std::size_t mj = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    if (c == j) continue;
                    minor_m.at(mi, mj) = m.at(r, c);
                    ++mj;
                }
                ++mi;
            }
            S cof = det_division_free(minor_m);
            out.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return out;
}

// Inverse over Z_n (any n >= 2): exists iff det is a unit mod n.
inline std::optional<Matrix<Mod>> mod_inverse(const Matrix<Mod>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of nonsquare matrix");
    if (m.flat().empty()) return Matrix<Mod>();
    Mod d = det_division_free(m);
    auto dinv = invert(d);
    if (!dinv) return std::nullopt;
    Matrix<Mod> adj = adjugate(m);
    Matrix<Mod> out = adj;
    for (auto& x : out.flat()) x = *dinv * x;
    return out;
}

}  // namespace epkit
