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
#include <utility>
#include <vector>

#include "isl/matrix.hpp"
#include "isl/rational.hpp"

namespace isl {

struct HermiteResult {
    IntMatrix h;  ///< row-style Hermite normal form
    IntMatrix u;  ///< unimodular transform with u * input = h
};

/// Row-style Hermite normal form: pivots move right as rows go down, each
/// pivot is positive, entries above a pivot are reduced into [0, pivot), and
/// zero rows sink to the bottom. Column elimination uses the extended gcd so
/// each row pair is combined by a single unimodular 2x2 step.
inline HermiteResult hermite_normal_form(IntMatrix b) {
    const std::size_t nr = b.rows(), nc = b.cols();
    IntMatrix u = IntMatrix::identity(nr);
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && sgn(b(piv, c)) == 0) ++piv;
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(b(piv, j), b(r, j));
        if (piv != r)
            for (std::size_t j = 0; j < nr; ++j) std::swap(u(piv, j), u(r, j));
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (sgn(b(i, c)) == 0) continue;
            Int s, t;
            const Int g = gcdext(b(r, c), b(i, c), s, t);
            const Int pr = b(r, c) / g;  // exact
            const Int pi = b(i, c) / g;  // exact
            // [ s   t ] [row_r]   [gcd combination    ]
            // [-pi  pr] [row_i] = [0 in column c      ]   det = s*pr + t*pi = 1
            for (std::size_t j = 0; j < nc; ++j) {
                const Int br = b(r, j), bi = b(i, j);
                b(r, j) = s * br + t * bi;
                b(i, j) = pr * bi - pi * br;
            }
            for (std::size_t j = 0; j < nr; ++j) {
                const Int ur = u(r, j), ui = u(i, j);
                u(r, j) = s * ur + t * ui;
                u(i, j) = pr * ui - pi * ur;
            }
        }
        if (sgn(b(r, c)) < 0) {
            for (std::size_t j = 0; j < nc; ++j) b(r, j) = -b(r, j);
            for (std::size_t j = 0; j < nr; ++j) u(r, j) = -u(r, j);
        }
        // Reduce the entries above the new pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), b(i, c).get_mpz_t(), b(r, c).get_mpz_t());
            if (sgn(q) == 0) continue;
            for (std::size_t j = 0; j < nc; ++j) b(i, j) -= q * b(r, j);
            for (std::size_t j = 0; j < nr; ++j) u(i, j) -= q * u(r, j);
        }
        ++r;
    }
    return {std::move(b), std::move(u)};
}

/// A sublattice of Z^dim, stored as its canonical Hermite basis (no zero
/// rows). Two lattices are equal iff their stored bases are equal.
class IntLattice {
public:
    IntLattice() : dim_(0) {}

    static IntLattice from_generators(std::size_t dim, const IntMatrix& generators) {
        detail::require(generators.rows() == 0 || generators.cols() == dim,
                        "lattice generators have wrong dimension");
        IntLattice l;
        l.dim_ = dim;
        if (generators.rows() == 0) {
            l.basis_ = IntMatrix(0, dim);
            return l;
        }
        IntMatrix h = hermite_normal_form(generators).h;
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            bool all_zero = true;
            for (std::size_t j = 0; j < h.cols(); ++j)
                if (sgn(h(i, j)) != 0) { all_zero = false; break; }
            if (!all_zero) ++nonzero;
            else break;  // zero rows are contiguous at the bottom
        }
        IntMatrix basis(nonzero, dim);
        for (std::size_t i = 0; i < nonzero; ++i)
            for (std::size_t j = 0; j < dim; ++j) basis(i, j) = h(i, j);
        l.basis_ = std::move(basis);
        return l;
    }

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    /// Membership test by reduction against the echelon basis.
    bool contains(std::vector<Int> v) const {
        detail::require(v.size() == dim_, "vector has wrong dimension for lattice");
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t c = 0;
            while (c < dim_ && sgn(basis_(i, c)) == 0) ++c;
            if (c == dim_) continue;
            if (sgn(v[c]) == 0) continue;
            Int q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[c].get_mpz_t(), basis_(i, c).get_mpz_t());
            if (sgn(rem) != 0) return false;
            for (std::size_t j = c; j < dim_; ++j) v[j] -= q * basis_(i, j);
        }
        for (const Int& x : v)
            if (sgn(x) != 0) return false;
        return true;
    }

    bool operator==(const IntLattice& o) const { return dim_ == o.dim_ && basis_ == o.basis_; }
    bool operator!=(const IntLattice& o) const { return !(*this == o); }

private:
    std::size_t dim_;
    IntMatrix basis_;
};

/// Lattice of integer row vectors v with A v^T = 0. Computed from the
/// Hermite form of A^T: the transform rows that map A^T onto zero rows form a
/// basis of the kernel lattice (they are primitive because the transform is
/// unimodular).
inline IntLattice integer_kernel_lattice(const IntMatrix& a) {
    const std::size_t m = a.cols();
    HermiteResult hr = hermite_normal_form(a.transpose());
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < hr.h.rows(); ++i) {
        bool all_zero = true;
        for (std::size_t j = 0; j < hr.h.cols(); ++j)
            if (sgn(hr.h(i, j)) != 0) { all_zero = false; break; }
        if (all_zero) rows.push_back(hr.u.row(i));
    }
    IntMatrix gen(rows.size(), m);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) gen(i, j) = rows[i][j];
    return IntLattice::from_generators(m, gen);
}

}  // namespace isl
