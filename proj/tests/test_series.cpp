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

#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "isl/monomial.hpp"
#include "isl/mpoly.hpp"
#include "isl/vectorfield.hpp"

using namespace isl;

namespace {

std::mt19937_64 rng(426164);

Rational random_rational(int span = 5) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rational(num(rng), den(rng));
}

QPoly random_poly(std::size_t m, int max_deg, int terms, bool origin_preserving = false) {
    QPoly f(m);
    std::uniform_int_distribution<int> d(origin_preserving ? 1 : 0, max_deg);
    std::uniform_int_distribution<int> split(0, 100);
    for (int t = 0; t < terms; ++t) {
        const int deg = d(rng);
        std::vector<int> e(m, 0);
        for (int u = 0; u < deg; ++u) e[static_cast<std::size_t>(split(rng)) % m] += 1;
        f += QPoly::term(Monomial(e), random_rational());
    }
    return f;
}

std::vector<Rational> random_point(std::size_t m) {
    std::vector<Rational> p(m);
    for (auto& x : p) x = random_rational(3);
    return p;
}

}  // namespace

TEST_CASE("graded lexicographic order is a degree-first total order") {
    const auto monos = monomials_in_degree_range(3, 0, 4);
    GrlexLess less;
    for (std::size_t a = 0; a < monos.size(); ++a) {
        CHECK_FALSE(less(monos[a], monos[a]));
        for (std::size_t b = a + 1; b < monos.size(); ++b) {
            CHECK(less(monos[a], monos[b]) != less(monos[b], monos[a]));
            if (monos[a].degree() < monos[b].degree()) CHECK(less(monos[a], monos[b]));
        }
    }
}

TEST_CASE("monomial enumeration counts match binomial coefficients") {
    // #monomials of degree d in m variables = C(d + m - 1, m - 1)
    CHECK(monomials_in_degree_range(3, 2, 2).size() == 6);
    CHECK(monomials_in_degree_range(4, 3, 3).size() == 20);
    CHECK(monomials_in_degree_range(2, 0, 5).size() == 21);
}

TEST_CASE("monomial division round-trips") {
    const Monomial a({2, 1, 3});
    const Monomial b({1, 0, 2});
    CHECK(b.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(b / a, ValueError);
}

TEST_CASE("polynomial arithmetic satisfies ring identities") {
    for (int t = 0; t < 25; ++t) {
        const QPoly f = random_poly(3, 4, 4);
        const QPoly g = random_poly(3, 4, 4);
        const QPoly h = random_poly(3, 4, 4);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * (g * h) == (f * g) * h);
        CHECK(f * g == g * f);
        CHECK(f - f == QPoly(3));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    for (int t = 0; t < 25; ++t) {
        const QPoly f = random_poly(3, 4, 4);
        const QPoly g = random_poly(3, 4, 4);
        const auto z = random_point(3);
        CHECK((f * g).evaluate(z) == f.evaluate(z) * g.evaluate(z));
        CHECK((f + g).evaluate(z) == f.evaluate(z) + g.evaluate(z));
    }
}

TEST_CASE("substitution agrees with pointwise composition") {
    // Independent oracle for composition: evaluating f(g1, g2) at a point
    // equals evaluating f at (g1(z), g2(z)), for exact polynomials.
    for (int t = 0; t < 20; ++t) {
        const QPoly f = random_poly(2, 3, 4);
        const std::vector<QPoly> gs = {random_poly(3, 3, 3), random_poly(3, 3, 3)};
        const QPoly composed = f.substitute(gs);
        const auto z = random_point(3);
        CHECK(composed.evaluate(z) == f.evaluate({gs[0].evaluate(z), gs[1].evaluate(z)}));
    }
}

TEST_CASE("derivatives satisfy the Leibniz rule") {
    for (int t = 0; t < 20; ++t) {
        const QPoly f = random_poly(3, 4, 4);
        const QPoly g = random_poly(3, 4, 4);
        for (std::size_t j = 0; j < 3; ++j)
            CHECK((f * g).derivative(j) == f.derivative(j) * g + f * g.derivative(j));
    }
}

TEST_CASE("truncation commutes with multiplication") {
    for (int t = 0; t < 20; ++t) {
        const QPoly f = random_poly(2, 6, 5);
        const QPoly g = random_poly(2, 6, 5);
        const int n = 4;
        CHECK((f * g).truncate(n) == (f.truncate(n) * g.truncate(n)).truncate(n));
        // A product of jets is known up to the smaller order shifted by the
        // other factor's valuation (low factors cannot pollute low degrees).
        const QPoly ft = f.truncate(n), gt = g.truncate(n);
        auto valuation = [](const QPoly& p) {
            int v = kOrderUnbounded;
            for (const auto& [mono, c] : p.terms()) v = std::min(v, mono.degree());
            return v;
        };
        if (!ft.is_zero() && !gt.is_zero())
            CHECK((ft * gt).trunc() == n + std::min(valuation(ft), valuation(gt)));
    }
}

TEST_CASE("homogeneous components sum back to the polynomial") {
    const QPoly f = random_poly(3, 5, 8);
    QPoly sum(3);
    for (int d = 0; d <= 5; ++d) sum += f.homogeneous_component(d);
    CHECK(sum == f);
}

TEST_CASE("lie bracket is antisymmetric and satisfies the Jacobi identity") {
    using VF = PolyVectorField<Rational>;
    const auto random_field = [&](std::size_t m) {
        std::vector<QPoly> comps;
        for (std::size_t j = 0; j < m; ++j) comps.push_back(random_poly(m, 3, 3));
        return VF(comps);
    };
    for (int t = 0; t < 10; ++t) {
        const VF x = random_field(2), y = random_field(2), z = random_field(2);
        const VF xy = lie_bracket(x, y);
        CHECK((lie_bracket(y, x) + xy).is_zero());
        const VF jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                       lie_bracket(z, lie_bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("lie derivative is a derivation on products") {
    using VF = PolyVectorField<Rational>;
    for (int t = 0; t < 15; ++t) {
        std::vector<QPoly> comps = {random_poly(2, 3, 3), random_poly(2, 3, 3)};
        const VF x(comps);
        const QPoly f = random_poly(2, 3, 3);
        const QPoly g = random_poly(2, 3, 3);
        CHECK(lie_derivative(x, f * g) == lie_derivative(x, f) * g + f * lie_derivative(x, g));
    }
}

TEST_CASE("brackets of linear fields mirror matrix commutators") {
    using VF = PolyVectorField<Rational>;
    for (int t = 0; t < 15; ++t) {
        QMatrix a(3, 3), b(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                a(i, j) = random_rational(3);
                b(i, j) = random_rational(3);
            }
        const VF bracket = lie_bracket(VF::linear(a), VF::linear(b));
        // The flow convention: [X_A, X_B] is the linear field of BA - AB.
        const QMatrix ba_ab = b * a - a * b;
        CHECK(bracket == VF::linear(ba_ab));
    }
}

TEST_CASE("jet inversion composes to the identity") {
    const int n = 6;
    for (int t = 0; t < 10; ++t) {
        std::vector<QPoly> images;
        for (std::size_t j = 0; j < 2; ++j) {
            QPoly higher(2);
            const QPoly noise = random_poly(2, n, 3, true);
            for (int d = 2; d <= n; ++d) higher += noise.homogeneous_component(d);
            images.push_back((QPoly::variable(2, j) + higher).truncate(n));
        }
        const CoordinateChange<Rational> phi(images);
        const auto inv = invert_jet(phi, n);
        const auto round = compose_changes(phi, inv);
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(round.image(j) == QPoly::variable(2, j).truncate(n));
    }
}

TEST_CASE("field transport satisfies the chain rule identity") {
    // pullback_field(x, phi, n) returns x' with Dphi(y) x'(y) = x(phi(y));
    // multiply back through the jacobian and compare as polynomials.
    const int n = 5;
    for (int t = 0; t < 10; ++t) {
        // Exact polynomial changes (identity plus a quadratic) so that the
        // jacobian does not lose an order of jet information.
        std::vector<QPoly> images, comps;
        for (std::size_t j = 0; j < 2; ++j) {
            images.push_back(QPoly::variable(2, j) +
                             random_poly(2, n, 2, true).homogeneous_component(2));
            comps.push_back(random_poly(2, 3, 3));
        }
        const CoordinateChange<Rational> phi(images);
        const PolyVectorField<Rational> x(comps);
        const auto xp = pullback_field(x, phi, n);
        const auto dphi = jacobian(phi.images());
        for (std::size_t i = 0; i < 2; ++i) {
            QPoly lhs(2);
            for (std::size_t j = 0; j < 2; ++j) lhs += dphi[i][j] * xp.component(j);
            const QPoly rhs = x.component(i).substitute(phi.images());
            CHECK(lhs.truncate(n) == rhs.truncate(n));
        }
        // Carrying the pulled-back field forward again restores the original.
        const auto back = pushforward_field(xp, phi, n);
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(back.component(j) == x.component(j).truncate(n));
    }
}

TEST_CASE("generic rank detects functional dependence") {
    const QPoly f1 = QPoly::variable(2, 0) * QPoly::variable(2, 1);
    const QPoly f2 = f1 * QPoly::variable(2, 1);
    const QPoly f3 = QPoly::variable(2, 1);
    // Two independent functions of two variables saturate the rank...
    CHECK(generic_rank(jacobian(std::vector<QPoly>{f1, f2, f3})) == 2);
    CHECK(generic_rank(jacobian(std::vector<QPoly>{f1, f3})) == 2);
    // ...while a function and its square share a gradient direction.
    CHECK(generic_rank(jacobian(std::vector<QPoly>{f1, f1 * f1})) == 1);
}
