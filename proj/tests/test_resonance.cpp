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
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "isl/resonance.hpp"

using namespace isl;

namespace {

std::mt19937_64 rng(777001);

bool satisfies(const CoefficientMatrix& cm, const Monomial& alpha) {
    for (std::size_t i = 0; i < cm.generators(); ++i) {
        Rational dot(0);
        for (std::size_t j = 0; j < cm.vars(); ++j) dot += Rational(alpha[j]) * cm.c(i, j);
        if (!dot.is_zero()) return false;
    }
    return true;
}

// Exhaustively enumerate all nonzero solutions of degree <= cap.
std::vector<Monomial> brute_solutions(const CoefficientMatrix& cm, int cap) {
    std::vector<Monomial> out;
    for (const Monomial& mono : monomials_in_degree_range(cm.vars(), 1, cap))
        if (satisfies(cm, mono)) out.push_back(mono);
    return out;
}

// Greedy decomposability check with backtracking: can alpha be written as a
// nonnegative integer combination of the basis?
bool decomposes(const Monomial& alpha, const std::vector<Monomial>& basis) {
    if (alpha.degree() == 0) return true;
    for (const Monomial& b : basis) {
        if (b.degree() == 0 || !b.divides(alpha)) continue;
        if (decomposes(alpha / b, basis)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("resonance space is the rational kernel of the weight matrix") {
    QMatrix c(2, 4);
    // Weights: (1, -1, 2, 0) and (0, 1, 1, -1).
    c(0, 0) = Rational(1);
    c(0, 1) = Rational(-1);
    c(0, 2) = Rational(2);
    c(1, 1) = Rational(1);
    c(1, 2) = Rational(1);
    c(1, 3) = Rational(-1);
    const CoefficientMatrix cm{c};
    const auto space = resonance_space(cm);
    CHECK(space.size() == 2);
    for (const auto& v : space)
        for (std::size_t i = 0; i < 2; ++i) {
            Rational dot(0);
            for (std::size_t j = 0; j < 4; ++j) dot += c(i, j) * v[j];
            CHECK(dot.is_zero());
        }
}

TEST_CASE("joint resonance of field terms follows the eigenvalue identity") {
    // Single saddle: weights (1, -1). Field terms x^a * d_j survive iff
    // <a, c> = c_j: the classic x1*(x1x2)^k and x2*(x1x2)^k families.
    QMatrix c(1, 2);
    c(0, 0) = Rational(1);
    c(0, 1) = Rational(-1);
    const CoefficientMatrix cm{c};
    CHECK(is_jointly_resonant(cm, Monomial({2, 1}), 0));
    CHECK(is_jointly_resonant(cm, Monomial({1, 2}), 1));
    CHECK_FALSE(is_jointly_resonant(cm, Monomial({2, 1}), 1));
    CHECK_FALSE(is_jointly_resonant(cm, Monomial({0, 2}), 0));
    CHECK(is_resonant_monomial(cm, Monomial({3, 3})));
    CHECK_FALSE(is_resonant_monomial(cm, Monomial({2, 1})));
}

TEST_CASE("the opposite-weight scaling family has the four product generators") {
    QMatrix c(1, 4);
    c(0, 0) = Rational(1);
    c(0, 1) = Rational(1);
    c(0, 2) = Rational(-1);
    c(0, 3) = Rational(-1);
    const ResonanceLattice lat = monoid_hilbert_basis(CoefficientMatrix{c});
    CHECK(lat.solution_space.size() == 3);
    CHECK(lat.integer_lattice.rank() == 3);
    CHECK(lat.monoid_dimension == 3);
    REQUIRE(lat.hilbert_basis.size() == 4);
    const std::set<Monomial, GrlexLess> basis(lat.hilbert_basis.begin(), lat.hilbert_basis.end());
    CHECK(basis.count(Monomial({1, 0, 1, 0})) == 1);
    CHECK(basis.count(Monomial({1, 0, 0, 1})) == 1);
    CHECK(basis.count(Monomial({0, 1, 1, 0})) == 1);
    CHECK(basis.count(Monomial({0, 1, 0, 1})) == 1);
}

TEST_CASE("rational weights are handled through row-space integerization") {
    QMatrix c(1, 2);
    c(0, 0) = Rational(1, 2);
    c(0, 1) = Rational(-1, 3);
    const ResonanceLattice lat = monoid_hilbert_basis(CoefficientMatrix{c});
    REQUIRE(lat.hilbert_basis.size() == 1);
    CHECK(lat.hilbert_basis[0] == Monomial({2, 3}));
}

TEST_CASE("positive weights leave only the trivial monoid") {
    QMatrix c(1, 3);
    c(0, 0) = Rational(1);
    c(0, 1) = Rational(2);
    c(0, 2) = Rational(3);
    const ResonanceLattice lat = monoid_hilbert_basis(CoefficientMatrix{c});
    CHECK(lat.hilbert_basis.empty());
    CHECK(lat.monoid_dimension == 0);
    CHECK(lat.solution_space.size() == 2);  // rational kernel is still there
}

TEST_CASE("hilbert basis is complete and minimal against brute force") {
    std::uniform_int_distribution<int> dim(2, 4), rows(1, 2);
    std::uniform_int_distribution<long> entry(-2, 2);
    int done = 0;
    while (done < 12) {
        const std::size_t m = static_cast<std::size_t>(dim(rng));
        const std::size_t p = static_cast<std::size_t>(rows(rng));
        QMatrix c(p, m);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < m; ++j) c(i, j) = Rational(entry(rng));
        const CoefficientMatrix cm{c};
        ResonanceLattice lat;
        try {
            lat = monoid_hilbert_basis(cm, 24);
        } catch (const DegreeCapExceeded&) {
            continue;  // pathological draw; the completion itself is capped
        }
        ++done;
        const int cap = 7;
        const auto all = brute_solutions(cm, cap);
        // Completeness: every solution decomposes over the basis.
        const std::vector<std::string> names = default_var_names(m);
        for (const Monomial& alpha : all) {
            CAPTURE(alpha.str(names));
            CHECK(decomposes(alpha, lat.hilbert_basis));
        }
        // Soundness: each basis element is a solution...
        for (const Monomial& b : lat.hilbert_basis) CHECK(satisfies(cm, b));
        // ...and is non-decomposable: no nonzero solution strictly below it.
        for (const Monomial& b : lat.hilbert_basis)
            for (const Monomial& s : all) {
                if (s == b || !s.divides(b)) continue;
                CHECK_FALSE(satisfies(cm, b / s));
            }
    }
}

TEST_CASE("diagonal family extraction rejects non-diagonal generators") {
    QMatrix d(2, 2);
    d(0, 0) = Rational(1);
    d(1, 1) = Rational(-1);
    QMatrix n(2, 2);
    n(0, 1) = Rational(1);
    CHECK_THROWS_AS(CoefficientMatrix::from_diagonal_family({d, n}), ValueError);
    const CoefficientMatrix cm = CoefficientMatrix::from_diagonal_family({d});
    CHECK(cm.c(0, 0) == Rational(1));
    CHECK(cm.c(0, 1) == Rational(-1));
}
