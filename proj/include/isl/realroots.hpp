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
#include <utility>
#include <vector>

#include "isl/gaussian.hpp"
#include "isl/rational.hpp"
#include "isl/unipoly.hpp"

namespace isl {

/// Sturm chain p, p', then successive negated remainders.
inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    detail::require(!p.is_zero(), "Sturm chain of the zero polynomial");
    std::vector<UniPoly> chain{p};
    UniPoly d = p.derivative();
    if (!d.is_zero()) chain.push_back(std::move(d));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly q, r;
        UniPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace detail {

inline int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const UniPoly& q : chain) signs.push_back(q.evaluate(x).sign());
    return sign_variations(signs);
}

inline int variations_at_infinity(const std::vector<UniPoly>& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const UniPoly& q : chain) {
        if (q.is_zero()) { signs.push_back(0); continue; }
        int s = q.leading().sign();
        if (!positive && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

}  // namespace detail

/// Number of distinct real roots of a squarefree polynomial, by Sturm's
/// theorem evaluated at -infinity and +infinity. Non-squarefree input is
/// rejected so the caller cannot silently miscount multiple roots.
inline int sturm_real_root_count(const UniPoly& p) {
    detail::require(!p.is_zero(), "root count of the zero polynomial");
    detail::require(is_squarefree(p), "Sturm root count requires squarefree input");
    if (p.degree() == 0) return 0;
    const std::vector<UniPoly> chain = sturm_chain(p);
    return detail::variations_at_infinity(chain, false) - detail::variations_at_infinity(chain, true);
}

/// Number of roots of squarefree p in the open interval (a, b); both
/// endpoints must be non-roots.
inline int sturm_count_in(const UniPoly& p, const Rational& a, const Rational& b) {
    detail::require(a < b, "empty interval");
    detail::require(!p.evaluate(a).is_zero() && !p.evaluate(b).is_zero(),
                    "interval endpoints must not be roots");
    const std::vector<UniPoly> chain = sturm_chain(p);
    return detail::variations_at(chain, a) - detail::variations_at(chain, b);
}

namespace detail {

struct ScaledMonic {
    UniPoly poly;  ///< monic with integer coefficients
    Int d;         ///< roots of the input are roots(poly) / d
};

/// Rescales a monic rational polynomial to a monic integer one: with
/// d = lcm of coefficient denominators, d^n p(s/d) has integer coefficients.
inline ScaledMonic scale_to_integer_monic(const UniPoly& p) {
    require(!p.is_zero() && p.leading().is_one(), "expected a monic polynomial");
    const int n = p.degree();
    Int d(1);
    for (int k = 0; k < n; ++k) d = lcm(d, p.coeff(k).den());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    Rational power(1);
    const Rational rd{Int(d)};
    for (int k = n; k >= 0; --k) {
        c[static_cast<std::size_t>(k)] = p.coeff(k) * power;
        power *= rd;
    }
    return {UniPoly(std::move(c)), d};
}

/// Strict bound on root magnitude of a monic polynomial: 1 + max |coeff|.
inline Rational cauchy_bound(const UniPoly& monic) {
    Rational m(0);
    for (int k = 0; k < monic.degree(); ++k) m = max(m, monic.coeff(k).abs());
    return Rational(1) + m;
}

}  // namespace detail

/// All rational roots of p, each listed once, ascending. Implementation:
/// take the squarefree part, rescale to a monic integer polynomial (whose
/// rational roots are integers), and isolate roots by Sturm bisection until
/// each active interval is shorter than 1, leaving at most one integer
/// candidate to test. Probe points carry a factor 1/3 so they can never
/// collide with an integer root.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
    detail::require(!p.is_zero(), "rational roots of the zero polynomial");
    if (p.degree() == 0) return {};
    const UniPoly sf = squarefree_part(p);
    if (sf.degree() == 0) return {};
    const auto [g, d] = detail::scale_to_integer_monic(sf.monic());
    const Rational third(1, 3);
    const Rational b = detail::cauchy_bound(g) + third;
    const std::vector<UniPoly> chain = sturm_chain(g);
    std::vector<Rational> roots;
    struct Segment { Rational lo, hi; int vlo, vhi; };
    std::vector<Segment> stack{{-b, b, detail::variations_at(chain, -b), detail::variations_at(chain, b)}};
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        if (seg.vlo - seg.vhi <= 0) continue;
        if (seg.hi - seg.lo < Rational(1)) {
            // At most one integer in the interval; check it.
            const Int k = seg.lo.floor() + 1;
            const Rational kr{k};
            if (seg.lo < kr && kr < seg.hi && g.evaluate(kr).is_zero())
                roots.push_back(kr / Rational{Int(d)});
            continue;
        }
        // Probe at the denominator-3 point nearest the midpoint: rational
        // roots of a monic integer polynomial are integers and irrational
        // roots are not rational, so such probes are never roots. For
        // intervals of width >= 1 the chosen point is strictly interior and
        // child widths shrink by a factor bounded away from 1.
        const Rational half = (seg.lo + seg.hi) / Rational(2);
        Int n = (Rational(3) * half).round_nearest();
        if (n % 3 == 0) {
            const Rational up = Rational(n + 1, 3) - half;
            const Rational down = half - Rational(n - 1, 3);
            n = up <= down ? Int(n + 1) : Int(n - 1);
        }
        const Rational mid(n, 3);
        detail::ensure(seg.lo < mid && mid < seg.hi, "probe left the interval");
        const int vmid = detail::variations_at(chain, mid);
        stack.push_back({seg.lo, mid, seg.vlo, vmid});
        stack.push_back({mid, seg.hi, vmid, seg.vhi});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Result of splitting off the exactly-representable part of a squarefree
/// polynomial: its rational roots, its complex-conjugate root pairs that lie
/// in Q(i) (recorded as a + b*i with b > 0), and the remaining factor that
/// has neither (monic; 1 when the polynomial splits completely).
struct LowDegreeSplit {
    std::vector<Rational> rational_roots;
    std::vector<GaussianRational> complex_pairs;
    UniPoly leftover;
};

/// Finds every monic factor of the squarefree input that is either linear
/// with a rational root or quadratic with roots a +- b*i, a, b rational.
///
/// Conjugate pairs are located by a finite sweep: a quadratic factor
/// s^2 - 2as + (a^2+b^2) of a monic integer polynomial has 2a integral, so
/// candidate real parts are half-integers within the root bound. For each
/// candidate, gcd(h(s), h(2a-s)) collects the roots symmetric about a;
/// shifting by a gives an even polynomial whose rational roots w = -b^2 with
/// b rational identify the genuine conjugate pairs. Everything is exact.
inline LowDegreeSplit split_low_degree_factors(const UniPoly& input) {
    detail::require(!input.is_zero() && input.degree() >= 1, "cannot split a constant polynomial");
    detail::require(is_squarefree(input), "factor splitting requires squarefree input");
    LowDegreeSplit out;
    UniPoly rem = input.monic();
    out.rational_roots = rational_roots(rem);
    for (const Rational& r : out.rational_roots)
        rem = UniPoly::exact_div(rem, UniPoly(std::vector<Rational>{-r, Rational(1)}));
    if (rem.degree() < 2) {
        out.leftover = UniPoly::one();
        detail::ensure(rem.degree() <= 0, "linear factor survived root removal");
        return out;
    }
    const auto [scaled, d] = detail::scale_to_integer_monic(rem);
    UniPoly h = scaled;
    const Rational rd{Int(d)};
    const Int two_b_bound = (Rational(2) * detail::cauchy_bound(h)).ceil();
    // Give up on absurdly large sweeps; the caller treats the leftover as
    // not exactly splittable.
    if (two_b_bound > 400000) {
        out.leftover = rem;
        return out;
    }
    for (Int two_a = -two_b_bound; two_a <= two_b_bound && h.degree() >= 2; ++two_a) {
        const Rational a = Rational{two_a} / Rational(2);
        const UniPoly mirrored = h.compose_linear(Rational(-1), Rational(2) * a);
        UniPoly sym = UniPoly::gcd(h, mirrored);
        if (sym.degree() < 2) continue;
        const UniPoly shifted = sym.compose_linear(Rational(1), a);
        // Roots of `shifted` come in +-z pairs (no zero root: rational roots
        // are gone), hence it is even.
        std::vector<Rational> even(static_cast<std::size_t>(shifted.degree() / 2) + 1);
        bool genuinely_even = true;
        for (int k = 0; k <= shifted.degree(); ++k) {
            if (k % 2 == 1) {
                if (!shifted.coeff(k).is_zero()) { genuinely_even = false; break; }
            } else {
                even[static_cast<std::size_t>(k / 2)] = shifted.coeff(k);
            }
        }
        if (!genuinely_even) continue;
        for (const Rational& w : rational_roots(UniPoly(std::move(even)))) {
            if (w.sign() >= 0) continue;  // w = -b^2 must be negative
            const Rational b2 = -w;
            Int bn, bd;
            if (!perfect_sqrt(b2.num(), bn) || !perfect_sqrt(b2.den(), bd)) continue;
            const Rational b{Rational(Int(bn), Int(bd))};
            const UniPoly quad(std::vector<Rational>{a * a + b2, Rational(-2) * a, Rational(1)});
            UniPoly q, r;
            UniPoly::divmod(h, quad, q, r);
            if (!r.is_zero()) continue;
            h = q;
            out.complex_pairs.push_back(GaussianRational(a / rd, b / rd));
        }
    }
    // Undo the scaling on whatever could not be split.
    if (h.degree() == 0) {
        out.leftover = UniPoly::one();
    } else {
        // Substitute s = d*t back: the coefficient of t^k is h_k * d^k.
        const int n = h.degree();
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        Rational dk(1);
        for (int k = 0; k <= n; ++k) {
            c[static_cast<std::size_t>(k)] = h.coeff(k) * dk;
            dk *= rd;
        }
        out.leftover = UniPoly(std::move(c)).monic();
    }
    std::sort(out.complex_pairs.begin(), out.complex_pairs.end(),
              [](const GaussianRational& x, const GaussianRational& y) {
                  if (x.re() != y.re()) return x.re() < y.re();
                  return x.im() < y.im();
              });
    return out;
}

}  // namespace isl
