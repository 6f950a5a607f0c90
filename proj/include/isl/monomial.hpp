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

#include <numeric>
#include <string>
#include <vector>

#include "isl/errors.hpp"

namespace isl {

/// Exponent vector of a power product x1^e1 ... xm^em.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t m) : e_(m, 0) {}

    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int e : e_) detail::require(e >= 0, "negative exponent in monomial");
    }

    /// The single variable x_j.
    static Monomial unit(std::size_t m, std::size_t j) {
        detail::require(j < m, "variable index out of range");
        Monomial mono(m);
        mono.e_[j] = 1;
        return mono;
    }

    std::size_t dim() const { return e_.size(); }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    int operator[](std::size_t j) const { return e_[j]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        detail::require(dim() == o.dim(), "monomial dimension mismatch");
        Monomial r = *this;
        for (std::size_t j = 0; j < e_.size(); ++j) r.e_[j] += o.e_[j];
        return r;
    }

    /// Componentwise test e <= o (this power product divides the other).
    bool divides(const Monomial& o) const {
        detail::require(dim() == o.dim(), "monomial dimension mismatch");
        for (std::size_t j = 0; j < e_.size(); ++j)
            if (e_[j] > o.e_[j]) return false;
        return true;
    }

    /// Quotient by a divisor (caller guarantees divisibility).
    Monomial operator/(const Monomial& o) const {
        detail::require(o.divides(*this), "monomial quotient is not a monomial");
        Monomial r = *this;
        for (std::size_t j = 0; j < e_.size(); ++j) r.e_[j] -= o.e_[j];
        return r;
    }

    Monomial with_exponent(std::size_t j, int e) const {
        detail::require(j < dim() && e >= 0, "bad exponent update");
        Monomial r = *this;
        r.e_[j] = e;
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& vars) const {
        detail::require(vars.size() == e_.size(), "variable name count mismatch");
        std::string out;
        for (std::size_t j = 0; j < e_.size(); ++j) {
            if (e_[j] == 0) continue;
            if (!out.empty()) out += "*";
            out += vars[j];
            if (e_[j] > 1) out += "^" + std::to_string(e_[j]);
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<int> e_;
};

/// Graded lexicographic order used everywhere terms are stored or printed:
/// lower total degree first; within a degree, higher power of the earliest
/// variable first (so x1^2 precedes x1*x2 precedes x2^2).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a[j] != b[j]) return a[j] > b[j];
        return false;
    }
};

inline std::vector<std::string> default_var_names(std::size_t m) {
    std::vector<std::string> names(m);
    for (std::size_t j = 0; j < m; ++j) names[j] = "x" + std::to_string(j + 1);
    return names;
}

/// All monomials in m variables with degree in [min_degree, max_degree],
/// listed in graded lexicographic order.
inline std::vector<Monomial> monomials_in_degree_range(std::size_t m, int min_degree, int max_degree) {
    std::vector<Monomial> out;
    std::vector<int> e(m, 0);
    const auto emit_degree = [&](int d, auto&& self, std::size_t j, int left) -> void {
        if (j + 1 == m) {
            e[j] = left;
            out.push_back(Monomial(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[j] = k;
            self(d, self, j + 1, left - k);
        }
    };
    for (int d = std::max(0, min_degree); d <= max_degree; ++d) {
        if (m == 0) {
            if (d == 0) out.push_back(Monomial(std::size_t{0}));
            continue;
        }
        emit_degree(d, emit_degree, 0, d);
    }
    return out;
}

}  // namespace isl
