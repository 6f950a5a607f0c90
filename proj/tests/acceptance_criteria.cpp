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

// End-to-end gate for the library: ten independent checks, one PASS/FAIL
// line each, nonzero exit code if anything fails. Where a check has an
// external reference value it is recomputed here from scratch (independent
// oracle), not read back from the library.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "isl/classify.hpp"
#include "isl/dsl.hpp"
#include "isl/normalform.hpp"
#include "isl/realroots.hpp"
#include "isl/resonance.hpp"
#include "isl/system.hpp"

using namespace isl;
using VF = PolyVectorField<Rational>;

namespace {

struct Failure {
    std::string what;
};

void require_that(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

QMatrix diagonal(const std::vector<long>& d) {
    QMatrix a(d.size(), d.size());
    for (std::size_t j = 0; j < d.size(); ++j) a(j, j) = Rational(d[j]);
    return a;
}

/// Basis of the model commuting family with `h` one-dimensional scaling
/// directions and `e` plane pairs (radial + rotation); h + 2e generators
/// acting on h + 2e coordinates. Built here by hand so the checks do not
/// lean on the library's own block constructor.
std::vector<QMatrix> model_family(int h, int e) {
    const std::size_t m = static_cast<std::size_t>(h + 2 * e);
    std::vector<QMatrix> gens;
    for (int r = 0; r < h; ++r) {
        QMatrix g(m, m);
        g(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = Rational(1);
        gens.push_back(std::move(g));
    }
    for (int b = 0; b < e; ++b) {
        const std::size_t base = static_cast<std::size_t>(h + 2 * b);
        QMatrix scale(m, m), rot(m, m);
        scale(base, base) = Rational(1);
        scale(base + 1, base + 1) = Rational(1);
        rot(base, base + 1) = Rational(-1);
        rot(base + 1, base) = Rational(1);
        gens.push_back(std::move(scale));
        gens.push_back(std::move(rot));
    }
    return gens;
}

QMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    while (true) {
        QMatrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = Rational(entry(rng));
        if (!det(p).is_zero()) return p;
    }
}

// ---------------------------------------------------------------------------
// Independent real-root counter: exact bisection root isolation driven by
// Descartes' rule of signs on the shifted-reciprocal transform. Works on raw
// coefficient vectors in exact rational arithmetic; shares nothing with the
// Sturm-chain implementation under test.

using Coeffs = std::vector<Rational>;  // c[k] multiplies x^k; trailing entry nonzero

Coeffs trim(Coeffs c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

int sign_variations(const Coeffs& c) {
    int v = 0, last = 0;
    for (const auto& a : c) {
        if (a.is_zero()) continue;
        const int s = a < Rational(0) ? -1 : 1;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

Rational eval_at(const Coeffs& c, const Rational& t) {
    Rational acc(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
    return acc;
}

/// p(x) -> p(x + 1), in place via repeated Horner shifts.
Coeffs shift_by_one(Coeffs c) {
    if (c.empty()) return c;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t j = c.size() - 1; j-- > i;) c[j] += c[j + 1];
    return c;
}

/// p(x) -> x^deg * p(1/x) (coefficient reversal).
Coeffs reciprocal(Coeffs c) {
    std::reverse(c.begin(), c.end());
    return trim(std::move(c));
}

/// p(x) -> p(s * x).
Coeffs stretch(Coeffs c, const Rational& s) {
    Rational pw(1);
    for (auto& a : c) {
        a *= pw;
        pw *= s;
    }
    return trim(std::move(c));
}

/// Exact synthetic division of p by (x - r); the remainder must vanish.
Coeffs deflate_root(const Coeffs& c, const Rational& r) {
    Coeffs q(c.size() - 1);
    Rational carry(0);
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * r;
        q[k - 1] = carry;
    }
    require_that((c[0] + carry * r).is_zero(), "deflation left a remainder");
    return q;
}

/// Number of roots of a squarefree p in the open interval (0, 1); requires
/// p(0) != 0 and p(1) != 0.
int roots_in_unit_interval(const Coeffs& p) {
    const int v = sign_variations(shift_by_one(reciprocal(p)));
    if (v <= 1) return v;
    Coeffs body = p;
    int mid = 0;
    if (eval_at(body, Rational(1, 2)).is_zero()) {
        body = deflate_root(body, Rational(1, 2));
        mid = 1;
    }
    const Coeffs left = stretch(body, Rational(1, 2));        // (0, 1/2) of body
    const Coeffs right = shift_by_one(left);                  // (1/2, 1) of body
    return roots_in_unit_interval(left) + mid + roots_in_unit_interval(right);
}

/// Roots of a squarefree p in (0, +inf): squeeze them into (0,1) below a
/// strict Cauchy-style bound computed from scratch.
int positive_roots(const Coeffs& p) {
    if (p.size() <= 1) return 0;
    Rational top(0);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        const Rational r = (p[k] / p.back()).abs();
        if (top < r) top = r;
    }
    const Rational bound = Rational(1) + top;  // |root| < bound, strictly
    return roots_in_unit_interval(stretch(p, bound));
}

int oracle_real_root_count(const UniPoly& f) {
    Coeffs c = trim(f.coefficients());
    require_that(!c.empty(), "oracle got the zero polynomial");
    int total = 0;
    if (c[0].is_zero()) {  // squarefree: at most a simple root at 0
        ++total;
        c.erase(c.begin());
        c = trim(std::move(c));
    }
    Coeffs neg = c;
    for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
    return total + positive_roots(c) + positive_roots(neg);
}

// ---------------------------------------------------------------------------
// Independent monoid arithmetic for the Hilbert-basis check.

using ExpVec = std::vector<int>;

bool dot_is_zero(const QMatrix& a, const ExpVec& v) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * Rational(v[j]);
        if (!acc.is_zero()) return false;
    }
    return true;
}

void enumerate_solutions(const QMatrix& a, int max_degree, std::vector<ExpVec>& out) {
    const std::size_t m = a.cols();
    ExpVec v(m, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
        if (j + 1 == m) {
            for (int k = 0; k <= left; ++k) {
                v[j] = k;
                if (dot_is_zero(a, v)) out.push_back(v);
                v[j] = 0;
            }
            return;
        }
        for (int k = 0; k <= left; ++k) {
            v[j] = k;
            rec(j + 1, left - k);
        }
        v[j] = 0;
    };
    rec(0, max_degree);
    // drop the all-zero solution
    std::erase_if(out, [](const ExpVec& e) {
        for (int k : e)
            if (k != 0) return false;
        return true;
    });
}

bool leq_componentwise(const ExpVec& a, const ExpVec& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

bool is_combination(const ExpVec& v, const std::vector<ExpVec>& basis,
                    std::map<ExpVec, bool>& memo) {
    bool zero = true;
    for (int k : v) zero &= (k == 0);
    if (zero) return true;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& b : basis) {
        if (!leq_componentwise(b, v)) continue;
        ExpVec rest(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) rest[j] = v[j] - b[j];
        if (is_combination(rest, basis, memo)) {
            ok = true;
            break;
        }
    }
    memo.emplace(v, ok);
    return ok;
}

// ---------------------------------------------------------------------------
// Shared random-source generator used for the parser corpus.

SourceFile random_source(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng); };
    const std::size_t m = static_cast<std::size_t>(pick(1, 3));
    SourceFile src;
    for (std::size_t j = 0; j < m; ++j) src.vars.push_back("x" + std::to_string(j + 1));
    if (pick(0, 9) < 6) src.truncation = pick(1, 7);
    auto random_poly = [&]() {
        QPoly f(m);
        const int terms = pick(0, 4);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e(m);
            for (std::size_t j = 0; j < m; ++j) e[j] = pick(0, 2);
            f += QPoly::term(Monomial(e), Rational(pick(-6, 6), pick(1, 4)));
        }
        return f;
    };
    const int nf = pick(1, 2);
    for (int i = 0; i < nf; ++i) {
        std::vector<QPoly> comps;
        for (std::size_t j = 0; j < m; ++j) comps.emplace_back(random_poly());
        src.fields.emplace_back("X" + std::to_string(i + 1), VF(std::move(comps)));
    }
    const int ni = pick(0, 2);
    for (int i = 0; i < ni; ++i) src.integrals.emplace_back("F" + std::to_string(i + 1), random_poly());
    const int np = pick(0, 2);
    for (int i = 0; i < np; ++i) {
        std::vector<Rational> coords;
        for (std::size_t j = 0; j < m; ++j) coords.emplace_back(pick(-3, 3), pick(1, 3));
        src.points.emplace_back("p" + std::to_string(i + 1), std::move(coords));
    }
    return src;
}

bool same_source(const SourceFile& a, const SourceFile& b) {
    if (a.vars != b.vars || a.truncation != b.truncation) return false;
    if (a.fields.size() != b.fields.size() || a.integrals.size() != b.integrals.size() ||
        a.points.size() != b.points.size())
        return false;
    for (std::size_t i = 0; i < a.fields.size(); ++i)
        if (a.fields[i].first != b.fields[i].first || !(a.fields[i].second == b.fields[i].second))
            return false;
    for (std::size_t i = 0; i < a.integrals.size(); ++i)
        if (a.integrals[i].first != b.integrals[i].first ||
            !(a.integrals[i].second == b.integrals[i].second))
            return false;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        if (a.points[i] != b.points[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The ten checks.

void check_scaling_resonance() {
    const QMatrix a = diagonal({1, 1, -1, -1});
    const auto fam = LinearPartFamily::make({a});
    const CoefficientMatrix cm = CoefficientMatrix::from_diagonal_family(fam.generators);
    require_that(resonance_space(cm).size() == 3, "rational solution space is not 3-dimensional");
    const ResonanceLattice rl = monoid_hilbert_basis(cm);
    require_that(rl.monoid_dimension == 3, "monoid does not span 3 dimensions");
    std::set<Monomial, GrlexLess> got(rl.hilbert_basis.begin(), rl.hilbert_basis.end());
    const std::set<Monomial, GrlexLess> want = {
        Monomial({1, 0, 1, 0}), Monomial({1, 0, 0, 1}), Monomial({0, 1, 1, 0}),
        Monomial({0, 1, 0, 1})};
    require_that(got == want, "minimal generators are not the four cross products");
}

void check_nilpotent_witness() {
    const std::size_t m = 4;
    std::vector<QPoly> c1 = {QPoly::variable(m, 0), QPoly::variable(m, 1), QPoly(m), QPoly(m)};
    std::vector<QPoly> c2 = {QPoly(m), QPoly::variable(m, 0), QPoly(m), QPoly(m)};
    const auto s = IntegrableSystem::make({VF(c1), VF(c2)},
                                          {QPoly::variable(m, 2), QPoly::variable(m, 3)}, 4);
    const SystemReport rep = verify(s);
    require_that(rep.commutation_ok, "fields should commute");
    require_that(rep.integrals_invariant_ok, "integrals should be invariant");
    require_that(rep.fields_independent_ok, "fields should be independent");
    require_that(rep.integrals_independent_ok, "integrals should be independent");
    const NondegeneracyVerdict v = is_nondegenerate(s);
    require_that(!v.nondegenerate, "system must be flagged degenerate");
    require_that(v.generator_semisimple.size() == 2 && v.generator_semisimple[0] &&
                     !v.generator_semisimple[1],
                 "exactly the second generator must fail semisimplicity");
    require_that(v.generator_minpoly[1] == "t^2", "witness minimal polynomial is not t^2");
    bool witnessed = false;
    for (const auto& w : v.witnesses)
        witnessed |= w.find(s.field_names[1]) != std::string::npos &&
                     w.find("t^2") != std::string::npos;
    require_that(witnessed, "no witness names the nilpotent generator with its minimal polynomial");
}

void check_type_invariance() {
    std::mt19937_64 rng(411);
    int families = 0;
    for (int e = 0; 2 * e <= 6; ++e)
        for (int h = (e == 0 ? 1 : 0); h + 2 * e <= 6; ++h) {
            ++families;
            const auto gens = model_family(h, e);
            const std::size_t m = static_cast<std::size_t>(h + 2 * e);
            for (int trial = 0; trial < 100; ++trial) {
                const QMatrix p = random_invertible(m, rng);
                const QMatrix pinv = *inverse(p);
                std::vector<QMatrix> conj;
                for (const auto& g : gens) conj.push_back(p * g * pinv);
                const CartanResult ct = cartan_type(LinearPartFamily::make(std::move(conj)));
                require_that(ct.ok && ct.type.h == h && ct.type.e == e,
                             "conjugated family of type (" + std::to_string(h) + "," +
                                 std::to_string(e) + ") was misclassified");
            }
            for (int trial = 0; trial < 100; ++trial) {
                const QMatrix c = random_invertible(gens.size(), rng);
                std::vector<QMatrix> mix;
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    QMatrix b(m, m);
                    for (std::size_t j = 0; j < gens.size(); ++j) b = b + c(i, j) * gens[j];
                    mix.push_back(std::move(b));
                }
                const CartanResult ct = cartan_type(LinearPartFamily::make(std::move(mix)));
                require_that(ct.ok && ct.type.h == h && ct.type.e == e,
                             "recombined family of type (" + std::to_string(h) + "," +
                                 std::to_string(e) + ") was misclassified");
            }
        }
    require_that(families == 15, "family enumeration drifted");
}

void check_normalization() {
    std::mt19937_64 rng(527);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng); };
    const int order = 6;
    const std::vector<std::pair<int, int>> types = {{2, 0}, {0, 1}, {3, 0}, {1, 1},
                                                    {4, 0}, {2, 1}, {0, 2}};
    for (int round = 0; round < 50; ++round) {
        const auto [h, e] = types[static_cast<std::size_t>(round) % types.size()];
        const std::size_t m = static_cast<std::size_t>(h + 2 * e);
        const int max_extra_degree = m <= 2 ? 6 : 4;

        std::vector<QPoly> images;
        for (std::size_t j = 0; j < m; ++j) {
            QPoly img = QPoly::variable(m, j, order);
            const int terms = pick(1, 2);
            for (int t = 0; t < terms; ++t) {
                std::vector<int> exp(m, 0);
                int deg = 0;
                const int want = pick(2, max_extra_degree);
                while (deg < want) {
                    ++exp[static_cast<std::size_t>(pick(0, static_cast<int>(m) - 1))];
                    ++deg;
                }
                int c = pick(-2, 2);
                if (c == 0) c = 1;
                img += QPoly::term(Monomial(exp), Rational(c, pick(1, 2)), order);
            }
            images.push_back(std::move(img));
        }
        const CoordinateChange<Rational> phi(images);

        const auto gens = model_family(h, e);
        std::vector<VF> fields;
        for (const auto& g : gens) fields.push_back(pushforward_field(VF::linear(g), phi, order));
        const auto s = IntegrableSystem::make(std::move(fields), {}, order);

        const NormalFormResult nf = poincare_dulac(s);
        for (std::size_t i = 0; i < gens.size(); ++i)
            require_that(nf.normalized.fields[i] == VF::linear(gens[i]).truncate(order),
                         "normalized field " + std::to_string(i + 1) +
                             " is not exactly its linear part (round " + std::to_string(round) + ")");
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                require_that(lie_bracket(nf.normalized.fields[i], nf.normalized.fields[j])
                                 .truncate(order)
                                 .is_zero(),
                             "normalized fields do not commute");
        for (std::size_t j = 0; j < m; ++j)
            require_that(nf.change.image(j) == phi.image(j),
                         "normalizing change does not match the perturbation jet");
    }
}

void check_one_dimensional_oracle() {
    const int n = 8;
    const QPoly x = QPoly::variable(1, 0, n);
    const auto s = IntegrableSystem::make({VF({x + x * x})}, {}, n);
    const GeometricLinearization gl = geometric_linearize(s);
    require_that(gl.normal.normalized.fields[0] == VF::linear(QMatrix::identity(1)).truncate(n),
                 "normal form is not the pure scaling");
    require_that(gl.coefficients_constant, "division coefficients should be constant");
    const CoordinateChange<Rational> inv = invert_jet(gl.normal.change, n);
    // Independent oracle: the alternating geometric series built term by term.
    QPoly oracle(1, n);
    for (int k = 1; k <= n; ++k)
        oracle += QPoly::term(Monomial(std::vector<int>{k}), Rational(k % 2 == 1 ? 1 : -1), n);
    for (int k = 1; k <= n; ++k)
        require_that(inv.image(0).coefficient(Monomial(std::vector<int>{k})) ==
                         oracle.coefficient(Monomial(std::vector<int>{k})),
                     "inverse change coefficient at degree " + std::to_string(k) + " is wrong");
    require_that(inv.image(0) == oracle, "inverse change is not the alternating series");
}

void check_division() {
    std::mt19937_64 rng(613);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng); };
    const int order = 6;

    auto invariant_monomials = [&](const std::vector<std::vector<long>>& weights, std::size_t m) {
        std::vector<Monomial> out;
        std::vector<int> e(m, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
            if (j == m) {
                int deg = 0;
                for (int k : e) deg += k;
                if (deg == 0) return;
                for (const auto& w : weights) {
                    long acc = 0;
                    for (std::size_t t = 0; t < m; ++t) acc += w[t] * e[t];
                    if (acc != 0) return;
                }
                out.emplace_back(e);
                return;
            }
            for (int k = 0; k <= left; ++k) {
                e[j] = k;
                rec(j + 1, left - k);
            }
            e[j] = 0;
        };
        rec(0, 5);
        return out;
    };

    auto random_multiplier = [&](const std::vector<Monomial>& inv, std::size_t m) {
        QPoly f = QPoly::constant(m, Rational(1));
        const int terms = pick(1, std::min<int>(3, static_cast<int>(inv.size())));
        for (int t = 0; t < terms; ++t) {
            int c = pick(-4, 4);
            if (c == 0) c = 2;
            f += QPoly::term(inv[static_cast<std::size_t>(pick(0, static_cast<int>(inv.size()) - 1))],
                             Rational(c, pick(1, 3)));
        }
        return f;
    };

    for (int round = 0; round < 50; ++round) {
        std::vector<std::vector<long>> weights;
        std::size_t m = 0;
        if (round % 2 == 0) {
            m = 2;
            weights = {{pick(1, 3), -pick(1, 3)}};
        } else {
            m = 4;
            weights = {{pick(1, 3), -pick(1, 3), 0, 0}, {0, 0, pick(1, 3), -pick(1, 3)}};
        }
        const auto inv = invariant_monomials(weights, m);
        require_that(!inv.empty(), "weight draw has no invariants of degree <= 5");

        std::vector<QMatrix> gens;
        std::vector<VF> fields;
        std::vector<QPoly> multipliers;
        for (const auto& w : weights) {
            QMatrix g(m, m);
            for (std::size_t j = 0; j < m; ++j) g(j, j) = Rational(w[j]);
            const QPoly f = random_multiplier(inv, m);
            std::vector<QPoly> comps;
            for (std::size_t j = 0; j < m; ++j)
                comps.push_back(Rational(w[j]) * (f * QPoly::variable(m, j)));
            gens.push_back(std::move(g));
            fields.emplace_back(std::move(comps));
            multipliers.push_back(f);
        }
        const auto s = IntegrableSystem::make(std::move(fields), {}, order);
        const DivisionResult div = divide_by_linear_family(s);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const QPoly want = i == k ? multipliers[i] : QPoly(m);
                require_that(div.coefficients[i][k] == want.truncate(order),
                             "recovered coefficient (" + std::to_string(i) + "," +
                                 std::to_string(k) + ") is wrong in round " + std::to_string(round));
            }
            VF recombined(std::vector<QPoly>(m, QPoly(m)));
            for (std::size_t k = 0; k < gens.size(); ++k)
                recombined = recombined + div.coefficients[i][k] * VF::linear(gens[k]);
            require_that(recombined == s.fields[i].truncate(order), "division residual is nonzero");
            for (std::size_t k = 0; k < gens.size(); ++k)
                require_that(lie_derivative(VF::linear(gens[k]), div.coefficients[i][i]).is_zero(),
                             "recovered coefficient is not a first integral of the family");
        }
    }
}

void check_root_counts() {
    std::mt19937_64 rng(719);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + static_cast<std::size_t>(round % 8);
        UniPoly chi;
        while (true) {
            QMatrix a(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(entry(rng));
            chi = characteristic_polynomial(a);
            if (is_squarefree(chi)) break;
        }
        const int sturm = sturm_real_root_count(chi);
        const int oracle = oracle_real_root_count(chi);
        require_that(sturm == oracle,
                     "disagreement at degree " + std::to_string(n) + ": sturm " +
                         std::to_string(sturm) + " vs isolation " + std::to_string(oracle));
    }
}

void check_hilbert_completeness() {
    std::mt19937_64 rng(811);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng); };
    int successes = 0, attempts = 0;
    while (successes < 30) {
        require_that(++attempts <= 400, "too many degree-cap aborts while drawing matrices");
        const std::size_t m = static_cast<std::size_t>(pick(2, 6));
        const std::size_t rows = static_cast<std::size_t>(pick(1, 2));
        CoefficientMatrix cm{QMatrix(rows, m)};
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < m; ++j) cm.c(i, j) = Rational(pick(-2, 2));
        ResonanceLattice rl;
        try {
            rl = monoid_hilbert_basis(cm);
        } catch (const DegreeCapExceeded&) {
            continue;
        }
        std::vector<ExpVec> basis;
        for (const auto& b : rl.hilbert_basis) {
            ExpVec e(m);
            for (std::size_t j = 0; j < m; ++j) e[j] = b[j];
            require_that(dot_is_zero(cm.c, e), "basis element does not solve the system");
            basis.push_back(std::move(e));
        }
        std::vector<ExpVec> brute;
        enumerate_solutions(cm.c, 10, brute);
        std::map<ExpVec, bool> memo;
        for (const auto& v : brute)
            require_that(is_combination(v, basis, memo),
                         "an enumerated solution is outside the generated monoid");
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool decomposable = false;
            for (std::size_t j = 0; j < basis.size() && !decomposable; ++j) {
                if (i == j || !leq_componentwise(basis[j], basis[i])) continue;
                ExpVec rest(m);
                for (std::size_t t = 0; t < m; ++t) rest[t] = basis[i][t] - basis[j][t];
                std::map<ExpVec, bool> memo2;
                decomposable = is_combination(rest, basis, memo2);
            }
            require_that(!decomposable, "a reported generator is a sum of others");
        }
        ++successes;
    }
}

void check_suspension() {
    const std::size_t m = 2;
    const QPoly x = QPoly::variable(m, 0);
    const QPoly u = QPoly::variable(m, 1);
    const auto member = IntegrableSystem::make({VF({QPoly::variable(1, 0)})}, {}, 4, {"x"});
    const auto family = IntegrableSystem::make({VF({x + u * x, QPoly(m)})}, {}, 4, {"x", "u"});
    const IntegrableSystem suspended = suspend_family(family, 1);
    require_that(suspended.p() == 1 && suspended.q() == 1 && suspended.m == 2,
                 "suspension is not of type (1,1)");
    require_that(verify(suspended).all_ok(), "suspended system fails verification");
    require_that(suspended.integrals[0] == u.truncate(4), "appended integral is not the parameter");

    const auto at_origin = [](const IntegrableSystem& s) {
        return classify_singular_point(s, std::vector<Rational>(s.m, Rational(0)));
    };
    const SingularPointClassification base = at_origin(member);
    const SingularPointClassification full = at_origin(suspended);
    require_that(base.verdict.nondegenerate && base.cartan.ok, "member classification failed");
    require_that(base.cartan.type.h == 1 && base.cartan.type.e == 0 && base.corank == 1,
                 "member is not a 1-dimensional scaling point");
    require_that(full.verdict.nondegenerate, "suspended point must stay nondegenerate");
    require_that(full.cartan.ok, "suspended point has no well-defined block type");
    // One suspended parameter adds exactly one zero scaling direction.
    require_that(full.cartan.type.h == base.cartan.type.h + 1 &&
                     full.cartan.type.e == base.cartan.type.e,
                 "suspension did not add exactly one scaling direction");
    require_that(full.corank == 2, "suspended singular point must have corank 2");
}

void check_parser_corpus() {
    namespace fs = std::filesystem;
    std::vector<std::pair<std::string, std::string>> corpus;  // (name, text)
    for (const auto& entry : fs::directory_iterator(ISL_SAMPLES_DIR)) {
        if (entry.path().extension() != ".sys") continue;
        std::ifstream in(entry.path());
        std::ostringstream ss;
        ss << in.rdbuf();
        corpus.emplace_back(entry.path().filename().string(), ss.str());
    }
    require_that(corpus.size() >= 9, "shipped sample corpus is too small");

    const fs::path dir = fs::temp_directory_path() / "isl_acceptance_corpus";
    fs::create_directories(dir);
    std::mt19937_64 rng(907);
    for (std::size_t k = corpus.size(); k < 50; ++k) {
        const std::string name = "generated_" + std::to_string(k) + ".sys";
        const std::string text = print_system(random_source(rng));
        std::ofstream(dir / name) << text;
        std::ifstream in(dir / name);
        std::ostringstream ss;
        ss << in.rdbuf();
        corpus.emplace_back(name, ss.str());
    }
    require_that(corpus.size() == 50, "corpus does not have 50 files");

    bool saw_scaling = false, saw_degenerate = false;
    for (const auto& [name, text] : corpus) {
        const SourceFile first = parse_system(text, name);
        const std::string once = print_system(first);
        const SourceFile second = parse_system(once, name + " (reprinted)");
        require_that(same_source(first, second), "reparse changed the tree for " + name);
        require_that(print_system(second) == once, "second rendering differs for " + name);
        saw_scaling |= name == "scaling_type13.sys";
        saw_degenerate |= name == "nonsemisimple4d.sys";
    }
    require_that(saw_scaling && saw_degenerate, "both worked examples must be in the corpus");
}

struct Criterion {
    std::string label;
    long budget_ms;  // < 0: untimed
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"joint scaling example: kernel dimension 3, four product generators", 1000,
         check_scaling_resonance},
        {"degenerate pair: verification passes, nilpotent witness t^2", 1000,
         check_nilpotent_witness},
        {"block type invariant under 100 conjugations and 100 recombinations per family", 60000,
         check_type_invariance},
        {"50 perturbed model families normalize back to exact linear parts", 300000,
         check_normalization},
        {"one-dimensional linearization matches the alternating series oracle", -1,
         check_one_dimensional_oracle},
        {"50 multiplier systems divide exactly through their linear parts", -1, check_division},
        {"root counts match exact bisection isolation on 200 polynomials", -1, check_root_counts},
        {"30 random monoids: generated basis complete up to degree 10 and minimal", -1,
         check_hilbert_completeness},
        {"one-parameter suspension stays nondegenerate with one extra scaling direction", -1,
         check_suspension},
        {"50-file corpus parses and reprints identically", -1, check_parser_corpus},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.run();
        } catch (const Failure& f) {
            failure = f.what;
        } catch (const std::exception& e) {
            failure = std::string("unexpected error: ") + e.what();
        }
        const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (failure.empty() && c.budget_ms > 0 && ms > c.budget_ms)
            failure = "exceeded time budget of " + std::to_string(c.budget_ms) + " ms";
        const bool ok = failure.empty();
        all_ok &= ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << c.label << " (" << ms
                  << " ms)";
        if (!ok) std::cout << " -- " << failure;
        std::cout << "\n";
    }
    std::cout << (all_ok ? "ACCEPTANCE: all criteria satisfied"
                         : "ACCEPTANCE: some criteria failed")
              << "\n";
    return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
