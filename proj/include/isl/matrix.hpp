/*
   Copyright 2026 The isl authors

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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isl/errors.hpp"
#include "isl/gaussian.hpp"
#include "isl/rational.hpp"
#include "isl/unipoly.hpp"

namespace isl {

/// Dense matrix over an exact scalar type K (rationals, Gaussian rationals,
/// or arbitrary-precision integers for the lattice routines). All algorithms
/// below are exact; no pivoting-for-stability heuristics are needed.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        detail::require(a_.size() == rows * cols, "matrix entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            detail::require(rows[i].size() == c, "ragged row list");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<K> col(std::size_t j) const {
        std::vector<K> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const K& x : a_)
            if (!is_zero_scalar(x)) return false;
        return true;
    }

    K trace() const {
        detail::require(is_square(), "trace of a non-square matrix");
        K s(0);
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        detail::require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch");
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        detail::require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch");
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        detail::require(a.cols_ == b.rows_, "matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (is_zero_scalar(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const K& s, const Matrix& m) {
        Matrix r = m;
        for (K& x : r.a_) x = s * x;
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        detail::require(v.size() == cols_, "matrix-vector shape mismatch");
        std::vector<K> r(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix operator-() const { return K(-1) * *this; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    static bool is_zero_scalar(const K& x) { return x == K(0); }

    std::size_t rows_, cols_;
    std::vector<K> a_;
};

using QMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;
using GMatrix = Matrix<GaussianRational>;

/// Rank by fraction-free (Bareiss) elimination. Works over any integral
/// domain: every division below is exact by the Sylvester identity, so this
/// is safe for Matrix<Int> as well as for fields.
template <class K>
std::size_t rank(Matrix<K> a) {
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t r = 0;
    K prev(1);
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && a(piv, c) == K(0)) ++piv;
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(a(piv, j), a(r, j));
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = K(0);
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

/// Determinant by Bareiss elimination (exact, fraction-free).
template <class K>
K det(Matrix<K> a) {
    detail::require(a.is_square(), "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return K(1);
    K prev(1);
    int sign = 1;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t piv = r;
        while (piv < n && a(piv, r) == K(0)) ++piv;
        if (piv == n) return K(0);
        if (piv != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                a(i, j) = (a(r, r) * a(i, j) - a(i, r) * a(r, j)) / prev;
            a(i, r) = K(0);
        }
        prev = a(r, r);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

/// Reduced row echelon form over a field. Returns the pivot columns; if
/// `transform` is non-null it receives an invertible E with E * input = rref.
template <class K>
Matrix<K> rref(Matrix<K> a, std::vector<std::size_t>* pivot_cols = nullptr,
               Matrix<K>* transform = nullptr) {
    const std::size_t nr = a.rows(), nc = a.cols();
    Matrix<K> e = Matrix<K>::identity(nr);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && a(piv, c) == K(0)) ++piv;
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(a(piv, j), a(r, j));
        if (transform && piv != r)
            for (std::size_t j = 0; j < nr; ++j) std::swap(e(piv, j), e(r, j));
        const K inv = K(1) / a(r, c);
        for (std::size_t j = 0; j < nc; ++j) a(r, j) = inv * a(r, j);
        if (transform)
            for (std::size_t j = 0; j < nr; ++j) e(r, j) = inv * e(r, j);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a(i, c) == K(0)) continue;
            const K f = a(i, c);
            for (std::size_t j = 0; j < nc; ++j) a(i, j) -= f * a(r, j);
            if (transform)
                for (std::size_t j = 0; j < nr; ++j) e(i, j) -= f * e(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivot_cols) *pivot_cols = pivots;
    if (transform) *transform = e;
    return a;
}

/// Basis of the right null space { v : A v = 0 }, one vector per free column
/// of the reduced echelon form, ordered by ascending free column. This
/// ordering (together with the unit entry in the free coordinate) makes the
/// basis canonical, so callers may compare bases for equality.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& a) {
    std::vector<std::size_t> pivots;
    Matrix<K> r = rref(a, &pivots);
    const std::size_t nc = a.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(nc, K(0));
        v[f] = K(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves A x = b; returns nullopt when inconsistent. When the system is
/// underdetermined, free coordinates are set to zero (the canonical
/// particular solution).
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
    detail::require(b.size() == a.rows(), "right-hand side has wrong length");
    Matrix<K> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots;
    Matrix<K> r = rref(aug, &pivots);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<K> x(a.cols(), K(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, a.cols());
    return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
    detail::require(a.is_square(), "inverse of a non-square matrix");
    std::vector<std::size_t> pivots;
    Matrix<K> e;
    Matrix<K> r = rref(a, &pivots, &e);
    if (pivots.size() != a.rows()) return std::nullopt;
    return e;
}

/// Characteristic polynomial det(t*I - A) by the Faddeev-LeVerrier
/// recurrence: exact, division only by small integers, O(n^4).
inline UniPoly characteristic_polynomial(const QMatrix& a) {
    detail::require(a.is_square(), "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    QMatrix m = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix am = a * m;
        const Rational ck = -(am.trace() / Rational(static_cast<long>(k)));
        c[n - k] = ck;
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    return UniPoly(std::move(c));
}

/// p(A) by Horner's rule.
inline QMatrix evaluate(const UniPoly& p, const QMatrix& a) {
    detail::require(a.is_square(), "polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    QMatrix acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * a;
        const Rational c = p.coeff(k);
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    }
    return acc;
}

/// Minimal polynomial via Krylov sequences: for each seed e_s the first
/// linear dependency among e_s, A e_s, A^2 e_s, ... yields the monic
/// annihilator of that seed; the minimal polynomial is the lcm over seeds.
/// Deterministic and exact; terminates early once the degree reaches n.
inline UniPoly minimal_polynomial(const QMatrix& a) {
    detail::require(a.is_square(), "minimal polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return UniPoly::one();
    UniPoly mp = UniPoly::one();
    for (std::size_t s = 0; s < n && mp.degree() < static_cast<int>(n); ++s) {
        std::vector<std::vector<Rational>> krylov;
        std::vector<Rational> v(n, Rational(0));
        v[s] = Rational(1);
        while (true) {
            // Is v a combination of the vectors collected so far?
            QMatrix sys(n, krylov.size());
            for (std::size_t j = 0; j < krylov.size(); ++j)
                for (std::size_t i = 0; i < n; ++i) sys(i, j) = krylov[j][i];
            if (auto x = solve(sys, v)) {
                const std::size_t d = krylov.size();
                std::vector<Rational> ann(d + 1);
                for (std::size_t j = 0; j < d; ++j) ann[j] = -(*x)[j];
                ann[d] = Rational(1);
                mp = UniPoly::lcm(mp, UniPoly(std::move(ann)));
                break;
            }
            krylov.push_back(v);
            v = a.apply(v);
        }
    }
    detail::ensure(evaluate(mp, a).is_zero(), "minimal polynomial does not annihilate its matrix");
    return mp;
}

struct IntegerizedRowspace {
    QMatrix transform;      ///< invertible A with A * input = integer_matrix (over Q)
    IntMatrix integer_matrix;  ///< same row space as the input, integer entries
};

/// Replaces a rational matrix by an integer one with the same row space:
/// reduce to row echelon form (tracking the transform) and clear denominators
/// row by row. Zero rows stay zero with a unit scaling, so the transform is
/// always invertible.
inline IntegerizedRowspace integerize_rowspace(const QMatrix& c) {
    Matrix<Rational> e;
    std::vector<std::size_t> pivots;
    QMatrix r = rref(c, &pivots, &e);
    const std::size_t nr = c.rows(), nc = c.cols();
    IntMatrix z(nr, nc);
    QMatrix a(nr, nr);
    for (std::size_t i = 0; i < nr; ++i) {
        Int d(1);
        for (std::size_t j = 0; j < nc; ++j) d = lcm(d, r(i, j).den());
        const Rational scale{Int(d)};
        for (std::size_t j = 0; j < nc; ++j) {
            const Rational v = scale * r(i, j);
            detail::ensure(v.is_integer(), "denominator clearing failed");
            z(i, j) = v.num();
        }
        for (std::size_t j = 0; j < nr; ++j) a(i, j) = scale * e(i, j);
    }
    return {std::move(a), std::move(z)};
}

template <class K>
std::string to_string(const Matrix<K>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += to_string(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace isl
