/*
   Copyright 2026 The decompgen Authors

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

#ifndef DECOMPGEN_MATRIX_HPP
#define DECOMPGEN_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "fields.hpp"
#include "upoly.hpp"

namespace decompgen {

template <ExactField F>
using Vec = std::vector<typename F::value_type>;

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
public:
    using E = typename F::value_type;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), r_(rows), c_(cols), a_(rows * cols, field_.zero()) {}
    Matrix(F field, const std::vector<Vec<F>>& rows) : field_(std::move(field)), r_(rows.size()) {
        c_ = rows.empty() ? 0 : rows[0].size();
        a_.reserve(r_ * c_);
        for (const auto& row : rows) {
            require(row.size() == c_, ErrorCode::DimensionMismatch, "ragged matrix rows");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(const F& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }
    static Matrix from_ints(const F& f, const std::vector<std::vector<long>>& v) {
        std::vector<Vec<F>> rows;
        for (const auto& r : v) {
            Vec<F> row;
            for (long x : r) row.push_back(f.from_int(x));
            rows.push_back(row);
        }
        return Matrix(f, rows);
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }

    E& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec<F> row(std::size_t i) const { return Vec<F>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)); }
    Vec<F> col(std::size_t j) const {
        Vec<F> v;
        for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    std::vector<Vec<F>> row_list() const {
        std::vector<Vec<F>> out;
        for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
        return out;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.r_ == b.r_ && a.c_ == b.c_, ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.r_ == b.r_ && a.c_ == b.c_, ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.c_ == b.r_, ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        Matrix m(a.field_, a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const E& x = a(i, k);
                if (scalar_is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    const E& y = b(k, j);
                    if (!scalar_is_zero(y)) m(i, j) += x * y;
                }
            }
        return m;
    }
    Matrix scaled(const E& s) const {
        Matrix m = *this;
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    /// Row vector times matrix.
    friend Vec<F> operator*(const Vec<F>& v, const Matrix& m) {
        require(v.size() == m.r_, ErrorCode::DimensionMismatch, "vector-matrix shape mismatch");
        Vec<F> out(m.c_, m.field_.zero());
        for (std::size_t k = 0; k < m.r_; ++k) {
            if (scalar_is_zero(v[k])) continue;
            for (std::size_t j = 0; j < m.c_; ++j)
                if (!scalar_is_zero(m(k, j))) out[j] += v[k] * m(k, j);
        }
        return out;
    }
    /// Matrix times column vector.
    friend Vec<F> operator*(const Matrix& m, const Vec<F>& v) {
        require(v.size() == m.c_, ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
        Vec<F> out(m.r_, m.field_.zero());
        for (std::size_t i = 0; i < m.r_; ++i)
            for (std::size_t j = 0; j < m.c_; ++j)
                if (!scalar_is_zero(m(i, j)) && !scalar_is_zero(v[j])) out[i] += m(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

    std::string format() const {
        std::string s = "[";
        for (std::size_t i = 0; i < r_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + field_.format((*this)(i, j));
            s += "]";
        }
        return s + "]";
    }

private:
    F field_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<E> a_;
};

template <ExactField F>
struct Echelon {
    Matrix<F> form;                  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form (canonical; deterministic first-nonzero pivoting).
template <ExactField F>
Echelon<F> rref(Matrix<F> m) {
    const F& f = m.field();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && scalar_is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        auto inv = f.one() / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || scalar_is_zero(m(i, c))) continue;
            auto s = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!scalar_is_zero(m(r, j))) m(i, j) -= s * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(m.row(i));
    Matrix<F> out = rows.empty() ? Matrix<F>(f, 0, m.cols()) : Matrix<F>(f, rows);
    return {out, piv};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).pivots.size();
}

/// Right kernel {v : m v = 0}; rows of the result form the reduced echelon basis.
template <ExactField F>
Matrix<F> kernel(const Matrix<F>& m) {
    const F& f = m.field();
    auto [e, piv] = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        Vec<F> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -e(i, free);
        basis.push_back(v);
    }
    if (basis.empty()) return Matrix<F>(f, 0, m.cols());
    return rref(Matrix<F>(f, basis)).form;
}

/// Left kernel {v : v m = 0}.
template <ExactField F>
Matrix<F> left_kernel(const Matrix<F>& m) {
    return kernel(m.transpose());
}

/// One solution of m x = b; Inconsistent if none exists.
template <ExactField F>
Vec<F> solve(const Matrix<F>& m, const Vec<F>& b) {
    const F& f = m.field();
    require(b.size() == m.rows(), ErrorCode::DimensionMismatch, "solve: right-hand side has wrong length");
    Matrix<F> aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto [e, piv] = rref(aug);
    Vec<F> x(m.cols(), f.zero());
    for (std::size_t i = 0; i < piv.size(); ++i) {
        require(piv[i] != m.cols(), ErrorCode::Inconsistent, "linear system is inconsistent");
        x[piv[i]] = e(i, m.cols());
    }
    return x;
}

template <ExactField F>
typename F::value_type det(Matrix<F> m) {
    require(m.is_square(), ErrorCode::NotSquare, "determinant of a non-square matrix");
    const F& f = m.field();
    const std::size_t n = m.rows();
    auto d = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && scalar_is_zero(m(p, c))) ++p;
        if (p == n) return f.zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d = d * m(c, c);
        auto inv = f.one() / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (scalar_is_zero(m(i, c))) continue;
            auto s = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!scalar_is_zero(m(c, j))) m(i, j) -= s * m(c, j);
        }
    }
    return d;
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    require(m.is_square(), ErrorCode::NotSquare, "inverse of a non-square matrix");
    const F& f = m.field();
    const std::size_t n = m.rows();
    Matrix<F> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    auto [e, piv] = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
    return inv;
}

template <ExactField F>
typename F::value_type trace(const Matrix<F>& m) {
    require(m.is_square(), ErrorCode::NotSquare, "trace of a non-square matrix");
    auto t = m.field().zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Characteristic polynomial det(X - m) by Hessenberg reduction.
template <ExactField F>
UPoly<F> char_poly(Matrix<F> h) {
    require(h.is_square(), ErrorCode::NotSquare, "characteristic polynomial of a non-square matrix");
    const F& f = h.field();
    const std::size_t n = h.rows();
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t i = j + 1;
        while (i < n && scalar_is_zero(h(i, j))) ++i;
        if (i == n) continue;
        if (i != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h(i, k), h(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(h(k, i), h(k, j + 1));
        }
        auto inv = f.one() / h(j + 1, j);
        for (std::size_t k = j + 2; k < n; ++k) {
            if (scalar_is_zero(h(k, j))) continue;
            auto u = h(k, j) * inv;
            for (std::size_t c = 0; c < n; ++c)
                if (!scalar_is_zero(h(j + 1, c))) h(k, c) -= u * h(j + 1, c);
            for (std::size_t r = 0; r < n; ++r)
                if (!scalar_is_zero(h(r, k))) h(r, j + 1) += u * h(r, k);
        }
    }
    std::vector<UPoly<F>> p;
    p.push_back(UPoly<F>::constant(f, f.one()));
    const UPoly<F> x = UPoly<F>::x(f);
    for (std::size_t m = 1; m <= n; ++m) {
        UPoly<F> pm = (x - UPoly<F>::constant(f, h(m - 1, m - 1))) * p[m - 1];
        auto t = f.one();
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = t * h(i, i - 1);
            if (scalar_is_zero(t)) break;
            auto c = h(i - 1, m - 1) * t;
            if (!scalar_is_zero(c)) pm -= p[i - 1].scaled(c);
        }
        p.push_back(pm);
    }
    return p[n];
}

/// Evaluates a polynomial at a square matrix (Horner).
template <ExactField F>
Matrix<F> eval_at(const UPoly<F>& g, const Matrix<F>& m) {
    const F& f = m.field();
    Matrix<F> acc(f, m.rows(), m.cols());
    for (int i = g.degree(); i >= 0; --i) {
        acc = acc * m;
        auto c = g.coeff(static_cast<std::size_t>(i));
        if (!scalar_is_zero(c))
            for (std::size_t k = 0; k < m.rows(); ++k) acc(k, k) += c;
    }
    return acc;
}

/// Incrementally built subspace of F^n in semi-echelon form (each row has a unit pivot that is
/// zero in all earlier rows).
template <ExactField F>
class Subspace {
public:
    using E = typename F::value_type;

    Subspace(F field, std::size_t ambient) : field_(std::move(field)), n_(ambient) {}

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec<F>>& basis() const { return rows_; }
    const F& field() const { return field_; }

    Vec<F> reduce(Vec<F> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[piv_[i]];
            if (scalar_is_zero(c)) continue;
            auto s = c;
            for (std::size_t j = 0; j < n_; ++j)
                if (!scalar_is_zero(rows_[i][j])) v[j] -= s * rows_[i][j];
        }
        return v;
    }
    bool contains(const Vec<F>& v) const {
        for (const auto& x : reduce(v))
            if (!scalar_is_zero(x)) return false;
        return true;
    }
    /// Coordinates of a vector of the span in the stored basis.
    Vec<F> coordinates(Vec<F> v) const {
        Vec<F> out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto s = v[piv_[i]];
            out.push_back(s);
            if (scalar_is_zero(s)) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!scalar_is_zero(rows_[i][j])) v[j] -= s * rows_[i][j];
        }
        for (const auto& x : v) require(scalar_is_zero(x), ErrorCode::InternalError, "vector not in subspace");
        return out;
    }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    /// Adds v; returns false when v already lies in the span.
    bool insert(const Vec<F>& v) {
        Vec<F> r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && scalar_is_zero(r[p])) ++p;
        if (p == n_) return false;
        auto inv = field_.one() / r[p];
        for (auto& x : r) x = x * inv;
        rows_.push_back(std::move(r));
        piv_.push_back(p);
        return true;
    }
    Matrix<F> matrix() const { return rows_.empty() ? Matrix<F>(field_, 0, n_) : Matrix<F>(field_, rows_); }
    Matrix<F> canonical() const { return rows_.empty() ? Matrix<F>(field_, 0, n_) : rref(matrix()).form; }

private:
    F field_;
    std::size_t n_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> piv_;
};

}  // namespace decompgen

#endif  // DECOMPGEN_MATRIX_HPP
