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

#include <string>
#include <utility>
#include <vector>

#include "isl/rational.hpp"

namespace isl {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// ascending by degree with no trailing zeros; the zero polynomial has an
/// empty coefficient vector and degree() == -1 (a deliberate sentinel, so the
/// usual deg(f*g) = deg f + deg g bookkeeping stays branch-light).
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(const Rational& constant) {
        if (!constant.is_zero()) c_ = {constant};
    }

    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rational(1)); }

    /// c * t^k
    static UniPoly monomial(int k, const Rational& c) {
        if (c.is_zero()) return UniPoly();
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return UniPoly(std::move(v));
    }

    static UniPoly variable() { return monomial(1, Rational(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of t^k (zero beyond the stored range).
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }

    Rational leading() const {
        detail::require(!is_zero(), "leading coefficient of the zero polynomial");
        return c_.back();
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const Rational& s, const UniPoly& p) {
        if (s.is_zero()) return UniPoly();
        std::vector<Rational> v = p.c_;
        for (auto& x : v) x *= s;
        return UniPoly(std::move(v));
    }

    UniPoly operator-() const { return Rational(-1) * *this; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = Rational(static_cast<long>(k)) * c_[k];
        return UniPoly(std::move(v));
    }

    Rational evaluate(const Rational& t) const {
        Rational acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
        return acc;
    }

    /// p(a*t + b).
    UniPoly compose_linear(const Rational& a, const Rational& b) const {
        UniPoly arg(std::vector<Rational>{b, a});
        UniPoly acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * arg + UniPoly(c_[k]);
        return acc;
    }

    UniPoly monic() const {
        detail::require(!is_zero(), "monic form of the zero polynomial");
        return leading().reciprocal() * *this;
    }

    /// Euclidean division: a = q*b + r with deg r < deg b. Exact over Q.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
        detail::require(!b.is_zero(), "polynomial division by zero");
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo;
        const int db = b.degree();
        const Rational lead = b.leading();
        int dr = static_cast<int>(rem.size()) - 1;
        if (dr >= db) quo.assign(static_cast<std::size_t>(dr - db) + 1, Rational(0));
        while (dr >= db) {
            while (dr >= 0 && rem[static_cast<std::size_t>(dr)].is_zero()) --dr;
            if (dr < db) break;
            const Rational f = rem[static_cast<std::size_t>(dr)] / lead;
            quo[static_cast<std::size_t>(dr - db)] = f;
            for (int k = 0; k <= db; ++k)
                rem[static_cast<std::size_t>(dr - db + k)] -= f * b.coeff(k);
            --dr;
        }
        q = UniPoly(std::move(quo));
        r = UniPoly(std::move(rem));
    }

    /// Exact quotient; throws if the division leaves a remainder.
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
        UniPoly q, r;
        divmod(a, b, q, r);
        detail::require(r.is_zero(), "inexact polynomial division");
        return q;
    }

    /// Monic gcd (zero if both arguments are zero).
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    static UniPoly lcm(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        return exact_div(a * b, gcd(a, b)).monic();
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& c = c_[k];
            if (c.is_zero()) continue;
            const bool first = out.empty();
            const Rational a = c.abs();
            out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
            const bool unit = a.is_one() && k > 0;
            if (!unit) out += a.str();
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// True when the polynomial has no repeated roots, i.e. gcd(p, p') is
/// constant. The zero polynomial is rejected.
inline bool is_squarefree(const UniPoly& p) {
    detail::require(!p.is_zero(), "squarefree test on the zero polynomial");
    return UniPoly::gcd(p, p.derivative()).is_constant();
}

/// Largest squarefree divisor p / gcd(p, p').
inline UniPoly squarefree_part(const UniPoly& p) {
    detail::require(!p.is_zero(), "squarefree part of the zero polynomial");
    return UniPoly::exact_div(p, UniPoly::gcd(p, p.derivative())).monic();
}

}  // namespace isl
