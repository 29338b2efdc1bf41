/*
   Copyright 2026 The peterweyl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file matrix.hpp
 * @brief Dense exact linear algebra over Q(q).
 *
 * Row reduction clears row denominators first and then runs a fraction-free
 * (division-deferred, cross-multiplication) elimination on integer
 * polynomials, with the lexicographically first nonzero pivot in every
 * column.  The reduced echelon form is unique, so kernels, solutions and
 * inverses come out deterministic.
 */

#ifndef PETERWEYL_MATRIX_HPP
#define PETERWEYL_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace pw {

class QMatrix {
   public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = QScalar(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    QScalar& at(int r, int c) { return e_[index(r, c)]; }
    const QScalar& at(int r, int c) const { return e_[index(r, c)]; }
    QScalar& operator()(int r, int c) { return at(r, c); }
    const QScalar& operator()(int r, int c) const { return at(r, c); }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        a.require_same_shape(b);
        QMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        a.require_same_shape(b);
        QMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        QMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const QScalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const QScalar& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }
    friend QMatrix operator*(const QScalar& s, const QMatrix& m) {
        QMatrix r(m.rows_, m.cols_);
        for (size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = s * m.e_[i];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    QMatrix transpose() const {
        QMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /** Kronecker product with the left factor index major: (i1,i2) = i1*b.rows + i2. */
    static QMatrix kron(const QMatrix& a, const QMatrix& b) {
        QMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i1 = 0; i1 < a.rows_; ++i1)
            for (int j1 = 0; j1 < a.cols_; ++j1) {
                const QScalar& v = a.at(i1, j1);
                if (v.is_zero()) continue;
                for (int i2 = 0; i2 < b.rows_; ++i2)
                    for (int j2 = 0; j2 < b.cols_; ++j2) {
                        const QScalar& w = b.at(i2, j2);
                        if (w.is_zero()) continue;
                        r.at(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = v * w;
                    }
            }
        return r;
    }

    QMatrix column(int c) const {
        QMatrix r(rows_, 1);
        for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
        return r;
    }

    /** Entrywise value at q = 1 (throws on any pole). */
    QMatrix at_one() const {
        QMatrix r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = QScalar(e_[i].at_one());
        return r;
    }

    bool regular_at_one() const {
        for (const auto& x : e_)
            if (!x.regular_at_one()) return false;
        return true;
    }

   private:
    int rows_, cols_;
    std::vector<QScalar> e_;

    size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
        return static_cast<size_t>(r) * cols_ + c;
    }
    void require_same_shape(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }
};

struct RrefResult {
    QMatrix reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

namespace detail {

/** One row as integer polynomials (denominators cleared). */
inline std::vector<ZPoly> cleared_row(const QMatrix& m, int r) {
    ZPoly lcm(1);
    for (int c = 0; c < m.cols(); ++c) {
        const ZPoly& d = m.at(r, c).den();
        if (!d.is_one()) lcm = ZPoly::div_exact(lcm * d, ZPoly::gcd(lcm, d));
    }
    std::vector<ZPoly> row(static_cast<size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) {
        const QScalar& v = m.at(r, c);
        if (v.is_zero()) continue;
        row[static_cast<size_t>(c)] = v.num() * ZPoly::div_exact(lcm, v.den());
    }
    return row;
}

inline void reduce_row_content(std::vector<ZPoly>& row) {
    ZPoly g;
    for (const auto& p : row) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : ZPoly::gcd(g, p);
        if (g.degree() == 0 && (g.coeff(0) == 1)) return;
    }
    if (g.is_zero() || g.is_one()) return;
    for (auto& p : row)
        if (!p.is_zero()) p = ZPoly::div_exact(p, g);
}

}  // namespace detail

/** Unique reduced row echelon form, computed fraction-free then normalized. */
inline RrefResult rref(const QMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<std::vector<ZPoly>> a;
    a.reserve(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) a.push_back(detail::cleared_row(m, r));

    std::vector<int> pivot_cols;
    int next_row = 0;
    for (int col = 0; col < cols && next_row < rows; ++col) {
        int pivot = -1;
        for (int r = next_row; r < rows; ++r) {
            if (!a[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(next_row)]);
        const std::vector<ZPoly>& prow = a[static_cast<size_t>(next_row)];
        for (int r = next_row + 1; r < rows; ++r) {
            auto& row = a[static_cast<size_t>(r)];
            const ZPoly& f = row[static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            const ZPoly p = prow[static_cast<size_t>(col)];
            const ZPoly fcopy = f;
            for (int c = col; c < cols; ++c) {
                row[static_cast<size_t>(c)] =
                    row[static_cast<size_t>(c)] * p - prow[static_cast<size_t>(c)] * fcopy;
            }
            detail::reduce_row_content(row);
        }
        pivot_cols.push_back(col);
        ++next_row;
    }

    // Back substitution over the field, normalizing pivots to 1.
    QMatrix red(rows, cols);
    const int rank = static_cast<int>(pivot_cols.size());
    for (int r = rank - 1; r >= 0; --r) {
        const int pc = pivot_cols[static_cast<size_t>(r)];
        std::vector<QScalar> row(static_cast<size_t>(cols));
        const QScalar pivot_inv =
            QScalar::from_fraction(ZPoly(1), a[static_cast<size_t>(r)][static_cast<size_t>(pc)]);
        for (int c = pc; c < cols; ++c)
            row[static_cast<size_t>(c)] =
                QScalar::from_fraction(a[static_cast<size_t>(r)][static_cast<size_t>(c)], ZPoly(1)) *
                pivot_inv;
        for (int r2 = r + 1; r2 < rank; ++r2) {
            const int pc2 = pivot_cols[static_cast<size_t>(r2)];
            const QScalar f = row[static_cast<size_t>(pc2)];
            if (f.is_zero()) continue;
            for (int c = pc2; c < cols; ++c) row[static_cast<size_t>(c)] -= f * red.at(r2, c);
        }
        for (int c = 0; c < cols; ++c) red.at(r, c) = std::move(row[static_cast<size_t>(c)]);
    }
    return RrefResult{std::move(red), std::move(pivot_cols), rank};
}

inline int rank(const QMatrix& m) { return rref(m).rank; }

/**
 * Basis of the right nullspace in the reduced echelon convention: one vector
 * per free column, with a 1 in the free coordinate.
 */
inline std::vector<QMatrix> kernel(const QMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<QMatrix> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        QMatrix v(m.cols(), 1);
        v.at(free, 0) = QScalar(1);
        for (int pr = 0; pr < r.rank; ++pr)
            v.at(r.pivot_cols[static_cast<size_t>(pr)], 0) = -r.reduced.at(pr, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace detail {
inline QMatrix hcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    QMatrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}
}  // namespace detail

/**
 * Particular exact solution of M x = b (free variables set to zero), or
 * nullopt when the system is inconsistent.  b may have several columns.
 */
inline std::optional<QMatrix> solve(const QMatrix& m, const QMatrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    RrefResult r = rref(detail::hcat(m, b));
    for (int c : r.pivot_cols)
        if (c >= m.cols()) return std::nullopt;
    QMatrix x(m.cols(), b.cols());
    for (int pr = 0; pr < r.rank; ++pr) {
        const int pc = r.pivot_cols[static_cast<size_t>(pr)];
        for (int j = 0; j < b.cols(); ++j) x.at(pc, j) = r.reduced.at(pr, m.cols() + j);
    }
    return x;
}

/** Exact inverse; throws std::domain_error on a singular matrix. */
inline QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    RrefResult r = rref(detail::hcat(m, QMatrix::identity(m.rows())));
    if (r.rank != m.rows()) throw std::domain_error("singular matrix");
    for (int c : r.pivot_cols)
        if (c >= m.cols()) throw std::domain_error("singular matrix");
    QMatrix inv(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = r.reduced.at(i, m.cols() + j);
    return inv;
}

}  // namespace pw

#endif  // PETERWEYL_MATRIX_HPP
