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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isl/errors.hpp"
#include "isl/gaussian.hpp"
#include "isl/monomial.hpp"
#include "isl/rational.hpp"

namespace isl {

/// Saturating bookkeeping for jet orders. A polynomial with trunc == kOrderUnbounded
/// is known exactly; otherwise its terms of degree <= trunc are known and
/// everything above is undetermined.
inline constexpr int kOrderUnbounded = 1 << 28;

namespace detail {

inline int order_add(int a, int b) {
    if (a >= kOrderUnbounded || b >= kOrderUnbounded) return kOrderUnbounded;
    const long s = static_cast<long>(a) + static_cast<long>(b);
    return s >= kOrderUnbounded ? kOrderUnbounded : static_cast<int>(s);
}

inline int order_min(int a, int b) { return a < b ? a : b; }

}  // namespace detail

/// Sparse multivariate polynomial (or polynomial jet) over an exact scalar
/// type K, with terms kept in graded lexicographic order. The invariant is
/// that no stored coefficient is zero and no stored term exceeds the
/// truncation order.
///
/// Truncation orders propagate through arithmetic so that a result never
/// claims more precision than its inputs support. Products use the valuation
/// of the other factor: unknown terms of degree > trunc(a) enter a*b only at
/// degree > trunc(a) + val(b).
template <class K>
class MPoly {
public:
    MPoly() : m_(0), trunc_(kOrderUnbounded) {}

    explicit MPoly(std::size_t m, int trunc = kOrderUnbounded) : m_(m), trunc_(trunc) {
        detail::require(trunc >= 0, "negative truncation order");
    }

    static MPoly zero(std::size_t m, int trunc = kOrderUnbounded) { return MPoly(m, trunc); }

    static MPoly constant(std::size_t m, const K& c, int trunc = kOrderUnbounded) {
        MPoly p(m, trunc);
        if (!(c == K(0))) p.terms_.emplace(Monomial(m), c);
        return p;
    }

    static MPoly variable(std::size_t m, std::size_t j, int trunc = kOrderUnbounded) {
        MPoly p(m, trunc);
        if (trunc >= 1) p.terms_.emplace(Monomial::unit(m, j), K(1));
        return p;
    }

    static MPoly term(Monomial mono, const K& c, int trunc = kOrderUnbounded) {
        MPoly p(mono.dim(), trunc);
        if (!(c == K(0)) && mono.degree() <= trunc) p.terms_.emplace(std::move(mono), c);
        return p;
    }

    std::size_t dim() const { return m_; }
    int trunc() const { return trunc_; }
    bool is_exact() const { return trunc_ >= kOrderUnbounded; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<Monomial, K, GrlexLess>& terms() const { return terms_; }

    /// Total degree of the stored terms (-1 for the zero polynomial).
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    /// Lowest degree among stored terms; kOrderUnbounded for the zero polynomial.
    int valuation() const { return terms_.empty() ? kOrderUnbounded : terms_.begin()->first.degree(); }

    K coefficient(const Monomial& mono) const {
        detail::require(mono.dim() == m_, "monomial dimension mismatch");
        auto it = terms_.find(mono);
        return it == terms_.end() ? K(0) : it->second;
    }

    K constant_term() const { return coefficient(Monomial(m_)); }

    void set_coefficient(const Monomial& mono, const K& c) {
        detail::require(mono.dim() == m_, "monomial dimension mismatch");
        if (c == K(0) || mono.degree() > trunc_) terms_.erase(mono);
        else terms_[mono] = c;
    }

    void add_term(const Monomial& mono, const K& c) {
        detail::require(mono.dim() == m_, "monomial dimension mismatch");
        if (mono.degree() > trunc_ || c == K(0)) return;
        auto [it, fresh] = terms_.emplace(mono, c);
        if (!fresh) {
            it->second += c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        detail::require(a.m_ == b.m_, "polynomial dimension mismatch");
        MPoly r(a.m_, detail::order_min(a.trunc_, b.trunc_));
        r.terms_ = a.terms_;
        for (auto& [mono, c] : b.terms_) {
            auto [it, fresh] = r.terms_.emplace(mono, c);
            if (!fresh) {
                it->second += c;
                if (it->second == K(0)) r.terms_.erase(it);
            }
        }
        r.drop_excess();
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [mono, c] : r.terms_) c = -c;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        detail::require(a.m_ == b.m_, "polynomial dimension mismatch");
        const int t = detail::order_min(detail::order_add(a.trunc_, b.valuation()),
                                        detail::order_add(b.trunc_, a.valuation()));
        MPoly r(a.m_, t);
        for (auto& [ma, ca] : a.terms_) {
            const int da = ma.degree();
            for (auto& [mb, cb] : b.terms_) {
                if (da + mb.degree() > t) break;  // grlex order: degrees ascend
                r.add_term(ma * mb, ca * cb);
            }
        }
        return r;
    }

    friend MPoly operator*(const K& s, const MPoly& p) {
        MPoly r(p.m_, p.trunc_);
        if (s == K(0)) return r;
        r.terms_ = p.terms_;
        for (auto& [mono, c] : r.terms_) c = s * c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    bool operator==(const MPoly& o) const { return m_ == o.m_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// Keeps terms of degree <= n. Truncating at or above the current order
    /// is a no-op (the extra precision simply is not there to restore).
    MPoly truncate(int n) const {
        detail::require(n >= 0, "negative truncation order");
        if (n >= trunc_) return *this;
        MPoly r(m_, n);
        for (auto& [mono, c] : terms_) {
            if (mono.degree() > n) break;
            r.terms_.emplace(mono, c);
        }
        return r;
    }

    /// Partial derivative; one order of jet precision is consumed.
    MPoly derivative(std::size_t j) const {
        detail::require(j < m_, "variable index out of range");
        MPoly r(m_, is_exact() ? kOrderUnbounded : (trunc_ > 0 ? trunc_ - 1 : 0));
        for (auto& [mono, c] : terms_) {
            const int e = mono[j];
            if (e == 0) continue;
            r.add_term(mono.with_exponent(j, e - 1), K(e) * c);
        }
        return r;
    }

    /// Terms of exact total degree d.
    MPoly homogeneous_component(int d) const {
        MPoly r(m_, trunc_);
        for (auto& [mono, c] : terms_) {
            if (mono.degree() > d) break;
            if (mono.degree() == d) r.terms_.emplace(mono, c);
        }
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        detail::require(point.size() == m_, "evaluation point has wrong dimension");
        K acc(0);
        for (auto& [mono, c] : terms_) {
            K v = c;
            for (std::size_t j = 0; j < m_; ++j)
                for (int e = 0; e < mono[j]; ++e) v *= point[j];
            acc += v;
        }
        return acc;
    }

    /// Substitutes images[j] for variable j. The result order is the minimum
    /// of this polynomial's order (valid when every image has zero constant
    /// term) and the image orders.
    MPoly substitute(const std::vector<MPoly>& images) const {
        detail::require(images.size() == m_, "substitution needs one image per variable");
        const std::size_t m2 = images.empty() ? m_ : images.front().dim();
        int t = kOrderUnbounded;
        bool origin_preserving = true;
        for (const MPoly& img : images) {
            detail::require(img.dim() == m2, "substitution images have mixed dimensions");
            t = detail::order_min(t, img.trunc_);
            if (!(img.constant_term() == K(0))) origin_preserving = false;
        }
        if (origin_preserving) t = detail::order_min(t, trunc_);
        else detail::require(is_exact(), "cannot substitute non-origin-preserving images into a jet");

        // Power cache per variable, built on demand.
        std::vector<std::vector<MPoly>> powers(m_);
        const auto power = [&](std::size_t j, int e) -> const MPoly& {
            auto& cache = powers[j];
            if (cache.empty()) cache.push_back(MPoly::constant(m2, K(1), t));
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back((cache.back() * images[j]).truncate(t >= kOrderUnbounded ? kOrderUnbounded : t));
            return cache[static_cast<std::size_t>(e)];
        };

        MPoly acc(m2, t);
        for (auto& [mono, c] : terms_) {
            MPoly prod = MPoly::constant(m2, c, t);
            for (std::size_t j = 0; j < m_; ++j)
                if (mono[j] > 0) prod = prod * power(j, mono[j]);
            acc += prod;
        }
        return acc;
    }

    /// Applies f to every coefficient, producing a polynomial over another
    /// scalar type (used to pass between Q and Q(i) coefficients).
    template <class K2, class F>
    MPoly<K2> mapped(F&& f) const {
        MPoly<K2> r(m_, trunc_);
        for (auto& [mono, c] : terms_) r.add_term(mono, f(c));
        return r;
    }

    /// Exact division by the variable x_j; throws if any term lacks it.
    MPoly divide_by_variable(std::size_t j) const {
        detail::require(j < m_, "variable index out of range");
        MPoly r(m_, trunc_);
        for (auto& [mono, c] : terms_) {
            detail::require(mono[j] >= 1, "term not divisible by the requested variable");
            r.terms_.emplace(mono.with_exponent(j, mono[j] - 1), c);
        }
        return r;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [mono, c] : terms_) {
            const std::string cs = scalar_str(c);
            const bool neg = !cs.empty() && cs.front() == '-';
            const std::string mag = neg ? cs.substr(1) : cs;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            const bool is_const = mono.is_constant();
            const bool needs_coeff = is_const || mag != "1";
            const bool wrapped = mag.find_first_of("+-*") != std::string::npos && !is_const;
            if (needs_coeff) out += wrapped ? "(" + mag + ")" : mag;
            if (!is_const) {
                if (needs_coeff) out += "*";
                out += mono.str(vars);
            }
        }
        return out;
    }

    std::string str() const { return str(default_var_names(m_)); }

private:
    static std::string scalar_str(const K& c) { return to_string(c); }

    void drop_excess() {
        while (!terms_.empty() && terms_.rbegin()->first.degree() > trunc_)
            terms_.erase(std::prev(terms_.end()));
    }

    std::size_t m_;
    int trunc_;
    std::map<Monomial, K, GrlexLess> terms_;

    template <class K2>
    friend class MPoly;
};

using QPoly = MPoly<Rational>;
using GPoly = MPoly<GaussianRational>;

}  // namespace isl
