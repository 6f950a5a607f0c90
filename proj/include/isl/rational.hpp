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

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>

#include "isl/errors.hpp"

namespace isl {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator, so equality is plain value equality and hashing/printing are
/// canonical.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}

    Rational(const Int& num, const Int& den) : v_(num, den) {
        detail::require(sgn(den) != 0, "rational number with zero denominator");
        v_.canonicalize();
    }

    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Parses "a", "-a", "a/b" or "-a/b" with decimal digits. Anything else
    /// (floats, whitespace, empty fields) is rejected.
    static Rational from_string(const std::string& text) {
        const auto bad = [&] { throw ValueError("malformed rational literal '" + text + "'"); };
        std::size_t slash = text.find('/');
        const std::string num_part = text.substr(0, slash);
        std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
        const auto parse_int = [&](const std::string& s, bool sign_ok) -> Int {
            std::size_t i = 0;
            if (sign_ok && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
            if (i == s.size()) bad();
            for (std::size_t k = i; k < s.size(); ++k)
                if (s[k] < '0' || s[k] > '9') bad();
            // mpz rejects an explicit leading '+'
            return Int(s[0] == '+' ? s.substr(1) : s);
        };
        Int num = parse_int(num_part, true);
        Int den = parse_int(den_part, false);
        if (sgn(den) == 0) bad();
        return Rational(num, den);
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational reciprocal() const {
        detail::require(!is_zero(), "reciprocal of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// Integer power; negative exponents invert (and require a nonzero base).
    Rational pow(int k) const {
        if (k == 0) return Rational(1);
        Rational base = k > 0 ? *this : reciprocal();
        int n = k > 0 ? k : -k;
        Rational acc(1);
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    Int ceil() const {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    /// Nearest integer, ties rounded up. Used when snapping an isolated root
    /// to its unique integer candidate.
    Int round_nearest() const {
        return (*this + Rational(1, 2)).floor();
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }

    friend Rational operator/(const Rational& a, const Rational& b) {
        detail::require(!b.is_zero(), "division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}  // trusted canonical value

    mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational conj(const Rational& x) { return x; }
inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Extended gcd: returns g = gcd(a, b) and sets s, t with s*a + t*b = g.
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Exact square root if `n` is a perfect square, otherwise nullopt-like flag
/// via the boolean return.
inline bool perfect_sqrt(const Int& n, Int& root) {
    if (sgn(n) < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace isl
