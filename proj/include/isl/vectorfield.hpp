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

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "isl/matrix.hpp"
#include "isl/mpoly.hpp"

namespace isl {

/// Polynomial vector field sum_j f_j(x) d/dx_j, stored componentwise.
template <class K>
class PolyVectorField {
public:
    PolyVectorField() : m_(0) {}

    explicit PolyVectorField(std::size_t m, int trunc = kOrderUnbounded)
        : m_(m), comps_(m, MPoly<K>(m, trunc)) {}

    explicit PolyVectorField(std::vector<MPoly<K>> components) : comps_(std::move(components)) {
        detail::require(!comps_.empty(), "vector field needs at least one component");
        m_ = comps_.front().dim();
        for (const auto& c : comps_) detail::require(c.dim() == m_, "component dimension mismatch");
    }

    /// The linear field given by a matrix: component j is sum_k L[j][k] x_k.
    static PolyVectorField linear(const Matrix<K>& l, int trunc = kOrderUnbounded) {
        detail::require(l.is_square(), "linear field needs a square matrix");
        const std::size_t m = l.rows();
        std::vector<MPoly<K>> comps(m, MPoly<K>(m, trunc));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                comps[j].add_term(Monomial::unit(m, k), l(j, k));
        return PolyVectorField(std::move(comps));
    }

    std::size_t dim() const { return m_; }

    int trunc() const {
        int t = kOrderUnbounded;
        for (const auto& c : comps_) t = detail::order_min(t, c.trunc());
        return t;
    }

    const MPoly<K>& component(std::size_t j) const { return comps_[j]; }
    MPoly<K>& component(std::size_t j) { return comps_[j]; }
    const std::vector<MPoly<K>>& components() const { return comps_; }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Coefficient matrix of the degree-1 terms: row j, column k holds the
    /// coefficient of x_k in component j, so the matrix acts on column
    /// vectors the way the field's flow acts infinitesimally.
    Matrix<K> linear_part() const {
        Matrix<K> l(m_, m_);
        for (std::size_t j = 0; j < m_; ++j)
            for (std::size_t k = 0; k < m_; ++k)
                l(j, k) = comps_[j].coefficient(Monomial::unit(m_, k));
        return l;
    }

    std::vector<K> value_at(const std::vector<K>& point) const {
        std::vector<K> v(m_);
        for (std::size_t j = 0; j < m_; ++j) v[j] = comps_[j].evaluate(point);
        return v;
    }

    PolyVectorField truncate(int n) const {
        std::vector<MPoly<K>> comps;
        comps.reserve(m_);
        for (const auto& c : comps_) comps.push_back(c.truncate(n));
        return PolyVectorField(std::move(comps));
    }

    PolyVectorField homogeneous_component(int d) const {
        std::vector<MPoly<K>> comps;
        comps.reserve(m_);
        for (const auto& c : comps_) comps.push_back(c.homogeneous_component(d));
        return PolyVectorField(std::move(comps));
    }

    friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
        detail::require(a.m_ == b.m_, "vector field dimension mismatch");
        std::vector<MPoly<K>> comps;
        comps.reserve(a.m_);
        for (std::size_t j = 0; j < a.m_; ++j) comps.push_back(a.comps_[j] + b.comps_[j]);
        return PolyVectorField(std::move(comps));
    }

    friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
        return a + (-b);
    }

    PolyVectorField operator-() const {
        std::vector<MPoly<K>> comps;
        comps.reserve(m_);
        for (const auto& c : comps_) comps.push_back(-c);
        return PolyVectorField(std::move(comps));
    }

    /// Multiplication by a scalar function (fields form a module over the
    /// polynomial ring).
    friend PolyVectorField operator*(const MPoly<K>& f, const PolyVectorField& x) {
        std::vector<MPoly<K>> comps;
        comps.reserve(x.m_);
        for (const auto& c : x.comps_) comps.push_back(f * c);
        return PolyVectorField(std::move(comps));
    }

    friend PolyVectorField operator*(const K& s, const PolyVectorField& x) {
        std::vector<MPoly<K>> comps;
        comps.reserve(x.m_);
        for (const auto& c : x.comps_) comps.push_back(s * c);
        return PolyVectorField(std::move(comps));
    }

    bool operator==(const PolyVectorField& o) const { return comps_ == o.comps_; }
    bool operator!=(const PolyVectorField& o) const { return !(*this == o); }

    template <class K2, class F>
    PolyVectorField<K2> mapped(F&& f) const {
        std::vector<MPoly<K2>> comps;
        comps.reserve(m_);
        for (const auto& c : comps_) comps.push_back(c.template mapped<K2>(f));
        return PolyVectorField<K2>(std::move(comps));
    }

    std::string str(const std::vector<std::string>& vars) const {
        std::string out;
        for (std::size_t j = 0; j < m_; ++j) {
            if (comps_[j].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + comps_[j].str(vars) + ")*d(" + vars[j] + ")";
        }
        return out.empty() ? "0" : out;
    }

    std::string str() const { return str(default_var_names(m_)); }

private:
    std::size_t m_;
    std::vector<MPoly<K>> comps_;
};

/// Directional derivative X(F) = sum_j X^j dF/dx_j.
template <class K>
MPoly<K> lie_derivative(const PolyVectorField<K>& x, const MPoly<K>& f) {
    detail::require(x.dim() == f.dim(), "dimension mismatch in Lie derivative");
    MPoly<K> acc(f.dim(), kOrderUnbounded);
    for (std::size_t j = 0; j < x.dim(); ++j) acc += x.component(j) * f.derivative(j);
    return acc;
}

/// Lie bracket [X, Y] = X(Y) - Y(X), componentwise X(Y^k) - Y(X^k).
template <class K>
PolyVectorField<K> lie_bracket(const PolyVectorField<K>& x, const PolyVectorField<K>& y) {
    detail::require(x.dim() == y.dim(), "dimension mismatch in Lie bracket");
    std::vector<MPoly<K>> comps;
    comps.reserve(x.dim());
    for (std::size_t k = 0; k < x.dim(); ++k)
        comps.push_back(lie_derivative(x, y.component(k)) - lie_derivative(y, x.component(k)));
    return PolyVectorField<K>(std::move(comps));
}

/// Polynomial coordinate change, stored as the expressions of the source
/// coordinates in terms of the target ones: x_j = images[j](y). Composing
/// functions of x with the change rewrites them as functions of y.
template <class K>
class CoordinateChange {
public:
    CoordinateChange() : m_(0) {}

    static CoordinateChange identity(std::size_t m, int trunc = kOrderUnbounded) {
        std::vector<MPoly<K>> images;
        images.reserve(m);
        for (std::size_t j = 0; j < m; ++j) images.push_back(MPoly<K>::variable(m, j, trunc));
        return CoordinateChange(std::move(images));
    }

    explicit CoordinateChange(std::vector<MPoly<K>> images) : images_(std::move(images)) {
        detail::require(!images_.empty(), "coordinate change needs at least one image");
        m_ = images_.front().dim();
        detail::require(images_.size() == m_, "coordinate change must be square");
        for (const auto& f : images_) detail::require(f.dim() == m_, "image dimension mismatch");
    }

    /// Linear change x = L y.
    static CoordinateChange linear(const Matrix<K>& l, int trunc = kOrderUnbounded) {
        detail::require(l.is_square(), "linear change needs a square matrix");
        const std::size_t m = l.rows();
        std::vector<MPoly<K>> images(m, MPoly<K>(m, trunc));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                images[j].add_term(Monomial::unit(m, k), l(j, k));
        return CoordinateChange(std::move(images));
    }

    /// Translation x = y + z.
    static CoordinateChange translation(const std::vector<K>& z, int trunc = kOrderUnbounded) {
        const std::size_t m = z.size();
        std::vector<MPoly<K>> images;
        images.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            MPoly<K> f = MPoly<K>::variable(m, j, trunc);
            f.add_term(Monomial(m), z[j]);
            images.push_back(std::move(f));
        }
        return CoordinateChange(std::move(images));
    }

    std::size_t dim() const { return m_; }
    const MPoly<K>& image(std::size_t j) const { return images_[j]; }
    const std::vector<MPoly<K>>& images() const { return images_; }

    int trunc() const {
        int t = kOrderUnbounded;
        for (const auto& f : images_) t = detail::order_min(t, f.trunc());
        return t;
    }

    std::vector<K> constant_terms() const {
        std::vector<K> z(m_);
        for (std::size_t j = 0; j < m_; ++j) z[j] = images_[j].constant_term();
        return z;
    }

    bool is_origin_preserving() const {
        for (const auto& f : images_)
            if (!(f.constant_term() == K(0))) return false;
        return true;
    }

    Matrix<K> linear_part() const {
        Matrix<K> l(m_, m_);
        for (std::size_t j = 0; j < m_; ++j)
            for (std::size_t k = 0; k < m_; ++k)
                l(j, k) = images_[j].coefficient(Monomial::unit(m_, k));
        return l;
    }

    CoordinateChange truncate(int n) const {
        std::vector<MPoly<K>> images;
        images.reserve(m_);
        for (const auto& f : images_) images.push_back(f.truncate(n));
        return CoordinateChange(std::move(images));
    }

    bool operator==(const CoordinateChange& o) const { return images_ == o.images_; }
    bool operator!=(const CoordinateChange& o) const { return !(*this == o); }

    template <class K2, class F>
    CoordinateChange<K2> mapped(F&& f) const {
        std::vector<MPoly<K2>> images;
        images.reserve(m_);
        for (const auto& c : images_) images.push_back(c.template mapped<K2>(f));
        return CoordinateChange<K2>(std::move(images));
    }

private:
    std::size_t m_;
    std::vector<MPoly<K>> images_;
};

/// Rewrites a function of x as a function of y under x = phi(y).
template <class K>
MPoly<K> apply_change(const MPoly<K>& f, const CoordinateChange<K>& phi) {
    detail::require(f.dim() == phi.dim(), "dimension mismatch in change application");
    return f.substitute(phi.images());
}

/// Composition of changes: with x = outer(y) and y = inner(z), the result
/// maps z straight to x.
template <class K>
CoordinateChange<K> compose_changes(const CoordinateChange<K>& outer, const CoordinateChange<K>& inner) {
    detail::require(outer.dim() == inner.dim(), "dimension mismatch in change composition");
    std::vector<MPoly<K>> images;
    images.reserve(outer.dim());
    for (std::size_t j = 0; j < outer.dim(); ++j) images.push_back(outer.image(j).substitute(inner.images()));
    return CoordinateChange<K>(std::move(images));
}

/// Jacobian matrix of the images: entry (i, j) is d images[i] / d y_j.
template <class K>
std::vector<std::vector<MPoly<K>>> jacobian(const std::vector<MPoly<K>>& fns) {
    detail::require(!fns.empty(), "jacobian of an empty list");
    const std::size_t m = fns.front().dim();
    std::vector<std::vector<MPoly<K>>> j(fns.size(), std::vector<MPoly<K>>(m, MPoly<K>(m)));
    for (std::size_t i = 0; i < fns.size(); ++i) {
        detail::require(fns[i].dim() == m, "jacobian rows have mixed dimensions");
        for (std::size_t c = 0; c < m; ++c) j[i][c] = fns[i].derivative(c);
    }
    return j;
}

/// Order-by-order inverse of an origin-preserving change with invertible
/// linear part. The result psi satisfies phi(psi(y)) = y modulo the
/// truncation order (which must be finite: inverses of general polynomial
/// maps are genuinely infinite series).
template <class K>
CoordinateChange<K> invert_jet(const CoordinateChange<K>& phi, int order) {
    const std::size_t m = phi.dim();
    detail::require(order >= 1, "inverse jet needs order >= 1");
    detail::require(phi.is_origin_preserving(), "inverse jet needs an origin-preserving change");
    const Matrix<K> l = phi.linear_part();
    auto linv = inverse(l);
    detail::require(linv.has_value(), "coordinate change has singular linear part");
    const int n = detail::order_min(order, phi.trunc());

    // ids[j] = y_j; higher = phi minus its linear part.
    std::vector<MPoly<K>> ids;
    for (std::size_t j = 0; j < m; ++j) ids.push_back(MPoly<K>::variable(m, j));
    std::vector<MPoly<K>> higher;
    for (std::size_t j = 0; j < m; ++j) {
        MPoly<K> h = phi.image(j).truncate(n);
        for (std::size_t k = 0; k < m; ++k) h.add_term(Monomial::unit(m, k), -l(j, k));
        higher.push_back(std::move(h));
    }

    // Fixed-point iteration psi <- Linv * (y - higher(psi)); each pass fixes
    // one more degree because `higher` has valuation >= 2.
    std::vector<MPoly<K>> psi;
    for (std::size_t j = 0; j < m; ++j) {
        MPoly<K> row(m, n);
        for (std::size_t k = 0; k < m; ++k) row.add_term(Monomial::unit(m, k), (*linv)(j, k));
        psi.push_back(std::move(row));
    }
    for (int pass = 1; pass < n; ++pass) {
        std::vector<MPoly<K>> next;
        next.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            MPoly<K> acc(m, n);
            for (std::size_t k = 0; k < m; ++k) {
                MPoly<K> inner = ids[k] - higher[k].substitute(psi);
                acc += (*linv)(j, k) * inner;
            }
            next.push_back(acc.truncate(n));
        }
        psi = std::move(next);
    }
    CoordinateChange<K> result{std::move(psi)};
    // phi o psi must be the identity to the requested order.
    for (std::size_t j = 0; j < m; ++j) {
        const MPoly<K> round = phi.image(j).truncate(n).substitute(result.images());
        detail::ensure(round == MPoly<K>::variable(m, j, round.trunc()).truncate(round.trunc()),
                       "jet inversion failed its round-trip check");
    }
    return result;
}

/// Pullback of a field under x = phi(y): the same dynamics expressed in the
/// y chart, (D phi)^{-1} (X o phi), computed to the given order.
template <class K>
PolyVectorField<K> pullback_field(const PolyVectorField<K>& x, const CoordinateChange<K>& phi, int order) {
    const std::size_t m = x.dim();
    detail::require(phi.dim() == m, "dimension mismatch in pullback");
    const Matrix<K> l = phi.linear_part();
    auto linv = inverse(l);
    detail::require(linv.has_value(), "coordinate change has singular linear part");

    // Components of X evaluated along the change.
    std::vector<MPoly<K>> w;
    w.reserve(m);
    for (std::size_t j = 0; j < m; ++j) w.push_back(x.component(j).substitute(phi.images()).truncate(order));

    // (D phi)^{-1} = (I + Linv (D phi - L))^{ -1} Linv via a Neumann sum; the
    // correction B = Linv (D phi - L) has valuation >= 1, so the sum below is
    // finite at any fixed order.
    const auto dphi = jacobian(phi.images());
    std::vector<std::vector<MPoly<K>>> b(m, std::vector<MPoly<K>>(m, MPoly<K>(m)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            MPoly<K> acc(m);
            for (std::size_t k = 0; k < m; ++k) acc += (*linv)(i, k) * dphi[k][j];
            if (i == j) acc.add_term(Monomial(m), K(-1));
            b[i][j] = acc.truncate(order);
        }

    // v = Linv w, then repeatedly v <- Linv w - B v.
    const auto mat_apply = [&](const std::vector<std::vector<MPoly<K>>>& mtx, const std::vector<MPoly<K>>& vec) {
        std::vector<MPoly<K>> out(m, MPoly<K>(m));
        for (std::size_t i = 0; i < m; ++i) {
            MPoly<K> acc(m);
            for (std::size_t k = 0; k < m; ++k) acc += mtx[i][k] * vec[k];
            out[i] = acc.truncate(order);
        }
        return out;
    };
    std::vector<MPoly<K>> lw(m, MPoly<K>(m));
    for (std::size_t i = 0; i < m; ++i) {
        MPoly<K> acc(m);
        for (std::size_t k = 0; k < m; ++k) acc += (*linv)(i, k) * w[k];
        lw[i] = acc.truncate(order);
    }
    std::vector<MPoly<K>> v = lw;
    for (int pass = 0; pass <= order; ++pass) {
        const std::vector<MPoly<K>> bv = mat_apply(b, v);
        std::vector<MPoly<K>> next(m, MPoly<K>(m));
        for (std::size_t i = 0; i < m; ++i) next[i] = (lw[i] - bv[i]).truncate(order);
        if (next == v) break;
        v = std::move(next);
    }
    return PolyVectorField<K>(std::move(v));
}

/// Pushforward of a field under x = phi(y): the dynamics of x-space carried
/// to where phi sends it, i.e. the pullback under the inverse jet.
template <class K>
PolyVectorField<K> pushforward_field(const PolyVectorField<K>& x, const CoordinateChange<K>& phi, int order) {
    return pullback_field(x, invert_jet(phi, order), order);
}

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// the first remaining row (exact; intended for the small matrices that turn
/// up in rank and wedge checks).
template <class K>
MPoly<K> poly_det(const std::vector<std::vector<MPoly<K>>>& a) {
    const std::size_t n = a.size();
    detail::require(n > 0, "determinant of an empty matrix");
    for (const auto& row : a) detail::require(row.size() == n, "determinant of a non-square matrix");
    const std::size_t m = a.front().front().dim();
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    const auto rec = [&](auto&& self, std::size_t row, std::vector<std::size_t> live) -> MPoly<K> {
        if (live.empty()) return MPoly<K>::constant(m, K(1));
        MPoly<K> acc(m);
        for (std::size_t idx = 0; idx < live.size(); ++idx) {
            const MPoly<K>& entry = a[row][live[idx]];
            if (entry.is_zero()) continue;
            std::vector<std::size_t> rest;
            rest.reserve(live.size() - 1);
            for (std::size_t k = 0; k < live.size(); ++k)
                if (k != idx) rest.push_back(live[k]);
            MPoly<K> minor = self(self, row + 1, std::move(rest));
            MPoly<K> contrib = entry * minor;
            acc = idx % 2 == 0 ? acc + contrib : acc - contrib;
        }
        return acc;
    };
    return rec(rec, 0, cols);
}

/// Largest k such that some k x k minor is a nonzero polynomial, found by
/// exact minor expansion. This is the fallback behind generic_rank.
template <class K>
std::size_t symbolic_rank(const std::vector<std::vector<MPoly<K>>>& a) {
    const std::size_t nr = a.size();
    if (nr == 0) return 0;
    const std::size_t nc = a.front().size();
    const auto combinations = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> c(k);
        const auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
            if (depth == k) { out.push_back(c); return; }
            for (std::size_t v = start; v + (k - depth) <= n; ++v) {
                c[depth] = v;
                self(self, v + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
        return out;
    };
    for (std::size_t k = std::min(nr, nc); k >= 1; --k) {
        for (const auto& rows : combinations(nr, k))
            for (const auto& cols : combinations(nc, k)) {
                std::vector<std::vector<MPoly<K>>> sub(k, std::vector<MPoly<K>>(k, MPoly<K>(a.front().front().dim())));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rows[i]][cols[j]];
                if (!poly_det(sub).is_zero()) return k;
            }
    }
    return 0;
}

/// Rank of a matrix of polynomials at a generic point. Three pseudo-random
/// evaluations (fixed seed, coordinates in {-7..7} \ {0}) are compared; if
/// they all agree that rank is returned, otherwise the exact symbolic
/// fallback decides. Deterministic across runs by construction.
inline std::size_t generic_rank(const std::vector<std::vector<MPoly<Rational>>>& a) {
    const std::size_t nr = a.size();
    if (nr == 0) return 0;
    const std::size_t nc = a.front().size();
    const std::size_t m = a.front().front().dim();
    std::mt19937_64 rng(0x49534c4752414e4bULL);
    std::uniform_int_distribution<int> dist(1, 14);
    std::vector<std::size_t> ranks;
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> point(m);
        for (std::size_t j = 0; j < m; ++j) {
            const int v = dist(rng);
            point[j] = Rational(v <= 7 ? v : 7 - v);  // {1..7} u {-1..-7}
        }
        QMatrix eval(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) eval(i, j) = a[i][j].evaluate(point);
        ranks.push_back(rank(eval));
    }
    if (ranks[0] == ranks[1] && ranks[1] == ranks[2]) return ranks[0];
    return symbolic_rank(a);
}

}  // namespace isl
