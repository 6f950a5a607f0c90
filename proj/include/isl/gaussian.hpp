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

#include <ostream>
#include <string>

#include "isl/rational.hpp"

namespace isl {

/// Element of Q(i): a + b*i with exact rational a, b. This is the scalar field
/// used when a commuting family is diagonalised over the complexification;
/// rotational blocks contribute conjugate pairs of these as eigenvalues.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    /// Squared modulus a^2 + b^2 (a rational, exact).
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        detail::require(!b.is_zero(), "division by zero");
        const Rational n = b.norm();
        const GaussianRational num = a * b.conj();
        return GaussianRational(num.re_ / n, num.im_ / n);
    }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string s;
        if (!re_.is_zero()) s += re_.str();
        if (im_.sign() >= 0 && !s.empty()) s += "+";
        if (im_ == Rational(-1)) s += "-";
        else if (!im_.is_one()) s += im_.str() + "*";
        s += "i";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

private:
    Rational re_;
    Rational im_;
};

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline std::string to_string(const GaussianRational& z) { return z.str(); }

}  // namespace isl
