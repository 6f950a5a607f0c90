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

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "isl/lattice.hpp"
#include "isl/matrix.hpp"
#include "isl/monomial.hpp"

namespace isl {

/// Default bound on the total degree explored by the Hilbert basis
/// completion, overridable through the ISL_DEGREE_CAP environment variable
/// or per call.
inline int default_degree_cap() {
    if (const char* env = std::getenv("ISL_DEGREE_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1000000) return static_cast<int>(v);
    }
    return 40;
}

/// The p x m matrix c of eigenvalue rows of a diagonal commuting family:
/// row i lists the diagonal of the i-th generator. Joint resonance of
/// monomials is linear algebra on this matrix.
struct CoefficientMatrix {
    QMatrix c;

    std::size_t generators() const { return c.rows(); }
    std::size_t vars() const { return c.cols(); }

    /// Extracts the coefficient matrix from linear generator matrices, which
    /// must all be diagonal.
    static CoefficientMatrix from_diagonal_family(const std::vector<QMatrix>& family) {
        detail::require(!family.empty(), "empty generator family");
        const std::size_t m = family.front().rows();
        QMatrix c(family.size(), m);
        for (std::size_t i = 0; i < family.size(); ++i) {
            const QMatrix& y = family[i];
            detail::require(y.is_square() && y.rows() == m, "generator shape mismatch");
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (a != b)
                        detail::require(y(a, b).is_zero(), "generator family is not diagonal");
            for (std::size_t j = 0; j < m; ++j) c(i, j) = y(j, j);
        }
        return {std::move(c)};
    }
};

/// Rational solution space of c * alpha = 0 (canonical reduced-echelon basis).
inline std::vector<std::vector<Rational>> resonance_space(const CoefficientMatrix& cm) {
    return kernel_basis(cm.c);
}

/// Monomial-times-field resonance: x^alpha d/dx_j survives normalization iff
/// <alpha, c_i> = c_ij for every generator row i.
inline bool is_jointly_resonant(const CoefficientMatrix& cm, const Monomial& alpha, std::size_t j) {
    detail::require(alpha.dim() == cm.vars(), "monomial dimension mismatch");
    detail::require(j < cm.vars(), "component index out of range");
    for (std::size_t i = 0; i < cm.generators(); ++i) {
        Rational dot(0);
        for (std::size_t k = 0; k < cm.vars(); ++k) dot += Rational(alpha[k]) * cm.c(i, k);
        if (dot != cm.c(i, j)) return false;
    }
    return true;
}

/// Function resonance: x^alpha is a joint first-integral monomial iff
/// <alpha, c_i> = 0 for every generator row i.
inline bool is_resonant_monomial(const CoefficientMatrix& cm, const Monomial& alpha) {
    detail::require(alpha.dim() == cm.vars(), "monomial dimension mismatch");
    for (std::size_t i = 0; i < cm.generators(); ++i) {
        Rational dot(0);
        for (std::size_t k = 0; k < cm.vars(); ++k) dot += Rational(alpha[k]) * cm.c(i, k);
        if (!dot.is_zero()) return false;
    }
    return true;
}

/// All resonant monomials with 1 <= degree <= max_degree, graded-lex ordered.
inline std::vector<Monomial> resonant_monomials_up_to_degree(const CoefficientMatrix& cm, int max_degree) {
    std::vector<Monomial> out;
    for (const Monomial& mono : monomials_in_degree_range(cm.vars(), 1, max_degree))
        if (is_resonant_monomial(cm, mono)) out.push_back(mono);
    return out;
}

/// Full description of the resonance structure of a coefficient matrix.
struct ResonanceLattice {
    std::vector<std::vector<Rational>> solution_space;  ///< kernel of c over Q
    IntLattice integer_lattice;                         ///< integer points of the kernel
    std::vector<Monomial> hilbert_basis;                ///< minimal generators of the kernel monoid
    std::size_t monoid_dimension;                       ///< rank of the cone spanned by the monoid
};

namespace detail {

/// Contejean-Devie completion: breadth-first search over N^m, branching from
/// t to t + e_j only when the step points back toward the kernel
/// (<A t, A e_j> < 0), recording minimal solutions and pruning every node
/// dominated by one. Level-by-level processing keeps the minimality test
/// sound: by the time t is examined, every solution of smaller degree is
/// already in the basis.
inline std::vector<Monomial> hilbert_basis_of_kernel(const IntMatrix& a, int degree_cap) {
    const std::size_t p = a.rows(), m = a.cols();
    std::vector<std::vector<Int>> acol(m, std::vector<Int>(p));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < p; ++i) acol[j][i] = a(i, j);

    struct Node {
        Monomial t;
        std::vector<Int> value;  ///< A t
    };
    std::vector<Monomial> basis;
    const auto dominated = [&](const Monomial& t) {
        for (const Monomial& b : basis)
            if (b.divides(t)) return true;
        return false;
    };

    std::vector<Node> frontier;
    std::set<Monomial, GrlexLess> seen;
    for (std::size_t j = 0; j < m; ++j) {
        Node n{Monomial::unit(m, j), acol[j]};
        seen.insert(n.t);
        frontier.push_back(std::move(n));
    }
    int degree = 1;
    while (!frontier.empty()) {
        if (degree > degree_cap)
            throw DegreeCapExceeded(
                "Hilbert basis completion exceeded the degree cap of " + std::to_string(degree_cap) +
                "; raise ISL_DEGREE_CAP (or the degree_cap argument) to search further");
        // Solutions of the current degree join the basis first...
        std::vector<const Node*> pending;
        for (const Node& n : frontier) {
            bool zero = true;
            for (const Int& v : n.value)
                if (sgn(v) != 0) { zero = false; break; }
            if (zero) {
                if (!dominated(n.t)) basis.push_back(n.t);
            } else {
                pending.push_back(&n);
            }
        }
        // ...then the rest branch, skipping anything a solution dominates.
        std::vector<Node> next;
        for (const Node* n : pending) {
            if (dominated(n->t)) continue;
            for (std::size_t j = 0; j < m; ++j) {
                Int dot(0);
                for (std::size_t i = 0; i < p; ++i) dot += n->value[i] * acol[j][i];
                if (sgn(dot) >= 0) continue;
                Monomial grown = n->t * Monomial::unit(m, j);
                if (seen.count(grown) || dominated(grown)) continue;
                std::vector<Int> val = n->value;
                for (std::size_t i = 0; i < p; ++i) val[i] += acol[j][i];
                seen.insert(grown);
                next.push_back({std::move(grown), std::move(val)});
            }
        }
        frontier = std::move(next);
        ++degree;
    }
    std::sort(basis.begin(), basis.end(), GrlexLess{});
    return basis;
}

}  // namespace detail

/// Computes the monoid of nonnegative integer solutions of c * alpha = 0:
/// integerize the row space, run the completion procedure for the Hilbert
/// basis, and report the rational kernel, the integer kernel lattice and the
/// dimension of the solution monoid alongside.
inline ResonanceLattice monoid_hilbert_basis(const CoefficientMatrix& cm, int degree_cap = -1) {
    if (degree_cap < 0) degree_cap = default_degree_cap();
    ResonanceLattice out;
    out.solution_space = resonance_space(cm);
    const IntegerizedRowspace integerized = integerize_rowspace(cm.c);
    out.integer_lattice = integer_kernel_lattice(integerized.integer_matrix);
    out.hilbert_basis = detail::hilbert_basis_of_kernel(integerized.integer_matrix, degree_cap);
    QMatrix gens(out.hilbert_basis.size(), cm.vars());
    for (std::size_t i = 0; i < out.hilbert_basis.size(); ++i)
        for (std::size_t j = 0; j < cm.vars(); ++j)
            gens(i, j) = Rational(out.hilbert_basis[i][j]);
    out.monoid_dimension = out.hilbert_basis.empty() ? 0 : rank(gens);
    return out;
}

}  // namespace isl
