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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isl/classify.hpp"

namespace isl {

using GPolyVec = PolyVectorField<GaussianRational>;

/// Exact two-way bridge between the original real coordinates and complex
/// eigen-coordinates of a commuting family: x = P w block-diagonalises the
/// linear parts over R, and each rotation plane (u, v) is traded for the
/// conjugate pair z = u + iv, z' = u - iv on which they act diagonally.
class ComplexBridge {
  public:
    explicit ComplexBridge(EigenStructure es) : es_(std::move(es)) {
        const std::size_t m = dim();
        const GaussianRational i = GaussianRational::i();
        const Rational half(1, 2);
        for (std::size_t a = 0; a < m; ++a) {
            const auto za = GPoly::variable(m, a);
            const auto wa = GPoly::variable(m, a);
            if (es_.conj[a] == a) {
                w_in_z_.push_back(za);
                z_in_w_.push_back(wa);
            } else if (es_.conj[a] == a + 1) {
                const auto zb = GPoly::variable(m, a + 1);
                const auto wb = GPoly::variable(m, a + 1);
                w_in_z_.push_back(GaussianRational(half) * (za + zb));          // u
                w_in_z_.push_back(GaussianRational(Rational(0), -half) * (za - zb));  // v
                z_in_w_.push_back(wa + i * wb);
                z_in_w_.push_back(wa - i * wb);
                ++a;
            } else {
                detail::ensure(false, "malformed conjugation pairing");
            }
        }
    }

    std::size_t dim() const { return es_.conj.size(); }
    const EigenStructure& eigen() const { return es_; }

    /// Divisor of the field term z^alpha d/dz_j under generator i:
    /// <c_i, alpha> - c_i[j]. The term is jointly resonant iff all vanish.
    GaussianRational divisor(std::size_t i, const Monomial& alpha, std::size_t j) const {
        GaussianRational d = -es_.cmat(i, j);
        for (std::size_t k = 0; k < dim(); ++k)
            if (alpha[k] != 0) d += GaussianRational(Rational(alpha[k])) * es_.cmat(i, k);
        return d;
    }

    bool field_term_resonant(const Monomial& alpha, std::size_t j) const {
        for (std::size_t i = 0; i < es_.cmat.rows(); ++i)
            if (!divisor(i, alpha, j).is_zero()) return false;
        return true;
    }

    bool function_monomial_resonant(const Monomial& alpha) const {
        for (std::size_t i = 0; i < es_.cmat.rows(); ++i) {
            GaussianRational d;
            for (std::size_t k = 0; k < dim(); ++k)
                if (alpha[k] != 0) d += GaussianRational(Rational(alpha[k])) * es_.cmat(i, k);
            if (!d.is_zero()) return false;
        }
        return true;
    }

    GPoly poly_to_complex(const QPoly& f) const {
        return to_block(f).mapped<GaussianRational>(embed).substitute(w_in_z_);
    }

    QPoly poly_to_real(const GPoly& g) const {
        return from_block(make_real(g.substitute(z_in_w_)));
    }

    GPolyVec field_to_complex(const PolyVectorField<Rational>& x) const {
        const std::size_t m = dim();
        // components in block coordinates: P^-1 (X o P)
        std::vector<GPoly> subst;
        for (std::size_t k = 0; k < m; ++k) subst.push_back(to_block(x.component(k)).mapped<GaussianRational>(embed));
        std::vector<GPoly> wcomp;
        for (std::size_t j = 0; j < m; ++j) {
            GPoly c(m);
            for (std::size_t k = 0; k < m; ++k) {
                const Rational& pij = es_.p_inverse(j, k);
                if (!pij.is_zero()) c += GaussianRational(pij) * subst[k];
            }
            wcomp.push_back(std::move(c));
        }
        const GaussianRational i = GaussianRational::i();
        std::vector<GPoly> zcomp;
        for (std::size_t a = 0; a < m; ++a) {
            if (es_.conj[a] == a) {
                zcomp.push_back(wcomp[a].substitute(w_in_z_));
            } else {
                zcomp.push_back((wcomp[a] + i * wcomp[a + 1]).substitute(w_in_z_));
                zcomp.push_back((wcomp[a] - i * wcomp[a + 1]).substitute(w_in_z_));
                ++a;
            }
        }
        return GPolyVec(std::move(zcomp));
    }

    PolyVectorField<Rational> field_to_real(const GPolyVec& v) const {
        const std::size_t m = dim();
        const GaussianRational mhalf_i(Rational(0), Rational(-1, 2));
        const GaussianRational half(Rational(1, 2));
        std::vector<QPoly> wcomp(m, QPoly(m));
        for (std::size_t a = 0; a < m; ++a) {
            if (es_.conj[a] == a) {
                wcomp[a] = make_real(v.component(a).substitute(z_in_w_));
            } else {
                wcomp[a] = make_real((half * (v.component(a) + v.component(a + 1))).substitute(z_in_w_));
                wcomp[a + 1] = make_real((mhalf_i * (v.component(a) - v.component(a + 1))).substitute(z_in_w_));
                ++a;
            }
        }
        // back to the original coordinates: P (X_w o P^-1)
        std::vector<QPoly> xcomp;
        for (std::size_t j = 0; j < m; ++j) {
            QPoly c(m);
            for (std::size_t k = 0; k < m; ++k) {
                const Rational& pjk = es_.p(j, k);
                if (!pjk.is_zero()) c += pjk * from_block(wcomp[k]);
            }
            xcomp.push_back(std::move(c));
        }
        return PolyVectorField<Rational>(std::move(xcomp));
    }

    /// Carries a change of complex coordinates z_old = phi(z_new) back to a
    /// change of the original coordinates with the same geometric meaning.
    CoordinateChange<Rational> change_to_real(const CoordinateChange<GaussianRational>& phi) const {
        const std::size_t m = dim();
        const GaussianRational mhalf_i(Rational(0), Rational(-1, 2));
        const GaussianRational half(Rational(1, 2));
        std::vector<QPoly> wimg(m, QPoly(m));
        for (std::size_t a = 0; a < m; ++a) {
            if (es_.conj[a] == a) {
                wimg[a] = make_real(phi.image(a).substitute(z_in_w_));
            } else {
                wimg[a] = make_real((half * (phi.image(a) + phi.image(a + 1))).substitute(z_in_w_));
                wimg[a + 1] = make_real((mhalf_i * (phi.image(a) - phi.image(a + 1))).substitute(z_in_w_));
                ++a;
            }
        }
        // x_old = P w_old, w_old = psi(w_new), w_new = P^-1 x_new
        std::vector<QPoly> ximg;
        for (std::size_t j = 0; j < m; ++j) {
            QPoly c(m);
            for (std::size_t k = 0; k < m; ++k) {
                const Rational& pjk = es_.p(j, k);
                if (!pjk.is_zero()) c += pjk * from_block(wimg[k]);
            }
            ximg.push_back(std::move(c));
        }
        return CoordinateChange<Rational>(std::move(ximg));
    }

  private:
    static GaussianRational embed(const Rational& r) { return GaussianRational(r); }

    /// f(x) -> f(P w) as a polynomial in the block coordinates.
    QPoly to_block(const QPoly& f) const {
        const std::size_t m = dim();
        std::vector<QPoly> images;
        for (std::size_t k = 0; k < m; ++k) {
            QPoly img(m);
            for (std::size_t j = 0; j < m; ++j)
                if (!es_.p(k, j).is_zero()) img += es_.p(k, j) * QPoly::variable(m, j);
            images.push_back(std::move(img));
        }
        return f.substitute(images);
    }

    /// g(w) -> g(P^-1 x) back in the original coordinates.
    QPoly from_block(const QPoly& g) const {
        const std::size_t m = dim();
        std::vector<QPoly> images;
        for (std::size_t k = 0; k < m; ++k) {
            QPoly img(m);
            for (std::size_t j = 0; j < m; ++j)
                if (!es_.p_inverse(k, j).is_zero()) img += es_.p_inverse(k, j) * QPoly::variable(m, j);
            images.push_back(std::move(img));
        }
        return g.substitute(images);
    }

    QPoly make_real(const GPoly& g) const {
        return g.mapped<Rational>([](const GaussianRational& c) {
            detail::ensure(c.im().is_zero(), "conjugate symmetry violated: imaginary residue " + c.str());
            return c.re();
        });
    }

    EigenStructure es_;
    std::vector<GPoly> w_in_z_;  ///< block coordinates expressed in complex ones
    std::vector<GPoly> z_in_w_;  ///< complex coordinates expressed in block ones
};

/// Output of the resonant normalization: an equivalent system, at the same
/// truncation order, whose nonlinear field terms all commute with every
/// semisimple linear part, together with the identity-tangent polynomial
/// change that realizes it.
struct NormalFormResult {
    IntegrableSystem normalized;
    CoordinateChange<Rational> change;  ///< x = change(y), linear part = identity
    EigenStructure eigen;
    int order = 0;
    int removed_terms = 0;
    std::vector<std::string> notes;
};

/// Degree-by-degree resonant normalization of a commuting family at a fixed
/// point. Works in exact complex eigen-coordinates; each degree solves the
/// homological equation against the diagonal linear parts and removes every
/// term with a nonzero divisor. Commutativity makes one change serve all
/// fields at once: for a non-resonant term the coefficients across fields
/// are proportional to the divisors, so cancelling it in one field cancels
/// it in every field. That fact is not assumed: after the run every
/// surviving nonlinear term is checked to be jointly resonant and every
/// transformed integral to be a resonant function.
inline NormalFormResult poincare_dulac(const IntegrableSystem& s, int order = -1) {
    const int n = order < 0 ? s.working_order() : order;
    detail::require(n >= 1, "normalization order must be at least 1");

    // input contract: commuting fields, invariant integrals (mod the order)
    for (std::size_t i = 0; i < s.p(); ++i)
        for (std::size_t j = i + 1; j < s.p(); ++j) {
            const auto br = lie_bracket(s.fields[i], s.fields[j]).truncate(n);
            detail::require(br.is_zero(), "fields " + s.field_names[i] + " and " + s.field_names[j] +
                                              " do not commute: bracket " + br.str(s.vars));
        }
    for (std::size_t i = 0; i < s.p(); ++i)
        for (std::size_t j = 0; j < s.q(); ++j) {
            const auto lf = lie_derivative(s.fields[i], s.integrals[j]).truncate(n);
            detail::require(lf.is_zero(), "integral " + s.integral_names[j] + " is not invariant under " +
                                              s.field_names[i] + ": derivative " + lf.str(s.vars));
        }

    const LinearPartExtraction lp = linear_parts_of(s);
    std::string why;
    auto es = simultaneous_eigenstructure(lp.family, &why);
    if (!es) throw ValueError("cannot normalize: " + why);
    const ComplexBridge bridge(std::move(*es));
    const std::size_t m = s.m;

    std::vector<GPolyVec> cf;
    for (const auto& x : s.fields) cf.push_back(bridge.field_to_complex(x.truncate(n)));
    std::vector<GPoly> ci;
    for (const auto& f : s.integrals) ci.push_back(bridge.poly_to_complex(f.truncate(n)));

    NormalFormResult out{s, CoordinateChange<Rational>::identity(m, n), bridge.eigen(), n, 0, {}};
    auto total = CoordinateChange<GaussianRational>::identity(m, n);

    const auto term_less = [](const std::pair<Monomial, std::size_t>& x,
                              const std::pair<Monomial, std::size_t>& y) {
        const GrlexLess less;
        if (less(x.first, y.first)) return true;
        if (less(y.first, x.first)) return false;
        return x.second < y.second;
    };
    for (int d = 2; d <= n; ++d) {
        std::vector<GPoly> gen(m, GPoly(m).truncate(n));
        std::set<std::pair<Monomial, std::size_t>, decltype(term_less)> seen(term_less);
        bool any = false;
        for (std::size_t i = 0; i < cf.size(); ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (const auto& [alpha, a] : cf[i].component(j).terms()) {
                    if (alpha.degree() != d) continue;
                    if (!seen.emplace(alpha, j).second) continue;
                    std::size_t pick = cf.size();
                    GaussianRational delta;
                    for (std::size_t k = 0; k < cf.size(); ++k) {
                        delta = bridge.divisor(k, alpha, j);
                        if (!delta.is_zero()) { pick = k; break; }
                    }
                    if (pick == cf.size()) continue;  // jointly resonant, keep
                    const GaussianRational g = cf[pick].component(j).coefficient(alpha) / delta;
                    if (g.is_zero()) continue;
                    gen[j].add_term(alpha, g);
                    any = true;
                    ++out.removed_terms;
                }
        if (!any) continue;
        std::vector<GPoly> images;
        for (std::size_t j = 0; j < m; ++j)
            images.push_back((GPoly::variable(m, j) + gen[j]).truncate(n));
        const CoordinateChange<GaussianRational> step(std::move(images));
        for (auto& f : cf) f = pullback_field(f, step, n);
        for (auto& f : ci) f = apply_change(f, step).truncate(n);
        total = compose_changes(total, step);
    }

    // Certify the outcome before leaving the complex chart.
    for (std::size_t i = 0; i < cf.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& [alpha, a] : cf[i].component(j).terms())
                detail::ensure(alpha.degree() <= 1 || bridge.field_term_resonant(alpha, j),
                               "normalization left a non-resonant field term");
    for (const auto& f : ci)
        for (const auto& [alpha, a] : f.terms())
            detail::ensure(bridge.function_monomial_resonant(alpha),
                           "normalized integral carries a non-resonant monomial");

    std::vector<PolyVectorField<Rational>> rfields;
    for (const auto& f : cf) rfields.push_back(bridge.field_to_real(f));
    std::vector<QPoly> rints;
    for (const auto& f : ci) rints.push_back(bridge.poly_to_real(f));
    out.change = bridge.change_to_real(total);
    detail::ensure(out.change.is_origin_preserving() &&
                       out.change.linear_part() == QMatrix::identity(m),
                   "normalization change is not tangent to the identity");

    // Round trip: pulling the original fields back through the real change
    // must reproduce the realified normal form exactly.
    for (std::size_t i = 0; i < rfields.size(); ++i) {
        detail::ensure(rfields[i].linear_part() == s.fields[i].linear_part(),
                       "normalization altered a linear part");
        detail::ensure(pullback_field(s.fields[i], out.change, n) == rfields[i],
                       "normalized field disagrees with the pullback witness");
    }

    out.normalized = IntegrableSystem::make(std::move(rfields), std::move(rints), n, s.vars);
    out.normalized.field_names = s.field_names;
    out.normalized.integral_names = s.integral_names;
    if (out.removed_terms > 0)
        out.notes.push_back("removed " + std::to_string(out.removed_terms) +
                            " non-resonant terms through degree " + std::to_string(n));
    return out;
}

/// X_i = sum_k coefficients[i][k] * Y_k, where Y_k are the linear parts of
/// the system's fields and each coefficient is a first integral of every
/// Y_k. Exact division witness of the pointwise dependence of the fields on
/// their own linear family.
struct DivisionResult {
    std::vector<std::vector<QPoly>> coefficients;
    LinearPartFamily family;
    std::vector<std::string> notes;
};

/// Divides each field by the family of linear parts: writes X_i as a
/// combination of the Y_k with coefficients that are invariants of the whole
/// family. Requires the fields to be in resonant normal form (every term
/// commutes with the linear parts) and to depend pointwise on the family;
/// both are checked and violations reported with the offending term.
inline DivisionResult divide_by_linear_family(const IntegrableSystem& s) {
    const LinearPartExtraction lp = linear_parts_of(s);
    std::string why;
    auto eso = simultaneous_eigenstructure(lp.family, &why);
    if (!eso) throw ValueError("cannot divide: " + why);
    const ComplexBridge bridge(std::move(*eso));
    const std::size_t m = s.m;
    const std::size_t p = s.p();

    // coefficient solve matrix: row j, column i = eigenvalue of generator i
    // on coordinate j
    Matrix<GaussianRational> mat(m, p);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < p; ++i) mat(j, i) = bridge.eigen().cmat(i, j);

    DivisionResult out{{}, lp.family, {}};
    for (std::size_t i = 0; i < p; ++i) {
        const GPolyVec v = bridge.field_to_complex(s.fields[i]);
        const int ft = v.trunc() >= kOrderUnbounded ? kOrderUnbounded : v.trunc() - 1;
        // quotients g_j = V_j / z_j
        std::vector<GPoly> quot;
        for (std::size_t j = 0; j < m; ++j) {
            for (const auto& [alpha, a] : v.component(j).terms()) {
                if (!bridge.field_term_resonant(alpha, j))
                    throw ValueError("field " + s.field_names[i] +
                                     " is not in resonant normal form with respect to its linear parts");
                if (alpha[j] == 0)
                    throw ValueError(
                        "field " + s.field_names[i] + ", component " + std::to_string(j + 1) +
                        " has a term not divisible by its coordinate; the fields do not depend "
                        "pointwise on their linear parts");
            }
            quot.push_back(v.component(j).divide_by_variable(j));
        }
        // per-monomial solve: (g_j[beta])_j must be C^T f[beta]
        std::map<Monomial, std::vector<GaussianRational>, GrlexLess> rhs;
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& [beta, a] : quot[j].terms()) {
                auto it = rhs.find(beta);
                if (it == rhs.end()) it = rhs.emplace(beta, std::vector<GaussianRational>(m)).first;
                it->second[j] = a;
            }
        std::vector<GPoly> fcoeff(p, GPoly(m).truncate(ft));
        for (const auto& [beta, vec] : rhs) {
            const auto sol = solve(mat, vec);
            if (!sol)
                throw ValueError("field " + s.field_names[i] +
                                 " does not lie in the pointwise span of the linear parts at monomial " +
                                 beta.str(default_var_names(m)));
            detail::ensure(bridge.function_monomial_resonant(beta),
                           "division produced a non-invariant coefficient monomial");
            for (std::size_t k = 0; k < p; ++k)
                if (!(*sol)[k].is_zero()) fcoeff[k].add_term(beta, (*sol)[k]);
        }
        // realify and verify against the original field exactly
        std::vector<QPoly> real_coeffs;
        for (auto& f : fcoeff) real_coeffs.push_back(bridge.poly_to_real(f));
        PolyVectorField<Rational> recombined(std::vector<QPoly>(m, QPoly(m)));
        for (std::size_t k = 0; k < p; ++k)
            recombined = recombined +
                         real_coeffs[k] * PolyVectorField<Rational>::linear(lp.family.generators[k]);
        detail::ensure(recombined == s.fields[i].truncate(s.trunc),
                       "division residual is nonzero for " + s.field_names[i]);
        out.coefficients.push_back(std::move(real_coeffs));
    }
    return out;
}

/// Normalization followed by exact division: the fields of the normalized
/// system are expressed as invariant-coefficient combinations of their own
/// linear parts, with coefficient matrix equal to the identity at the
/// origin. This realizes the geometric picture: inside the normalized
/// chart, the flow foliation is the one generated by the linear family.
struct GeometricLinearization {
    NormalFormResult normal;
    DivisionResult division;
    bool coefficients_constant = false;  ///< fields are exactly linear combinations
};

inline GeometricLinearization geometric_linearize(const IntegrableSystem& s, int order = -1) {
    GeometricLinearization out{poincare_dulac(s, order), DivisionResult{{}, {}, {}}, false};
    out.division = divide_by_linear_family(out.normal.normalized);
    const std::size_t p = s.p();
    bool constant = true;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < p; ++k) {
            const QPoly& f = out.division.coefficients[i][k];
            detail::ensure(f.constant_term() == (i == k ? Rational(1) : Rational(0)),
                           "coefficient matrix is not the identity at the origin");
            if (f.degree() > 0) constant = false;
        }
    out.coefficients_constant = constant;
    return out;
}

/// Full local model at a singular point: flow-box factor for the regular
/// part, then nondegeneracy analysis and geometric linearization of the
/// reduced transversal system.
struct ProductDecomposition {
    ReductionResult reduction;
    bool pure_regular = false;
    NondegeneracyVerdict verdict;
    CartanResult cartan;
    std::optional<GeometricLinearization> linearization;
    std::vector<std::string> notes;
};

inline ProductDecomposition product_decomposition(const IntegrableSystem& s,
                                                  const std::vector<Rational>& z, int order = -1) {
    ProductDecomposition out;
    out.reduction = reduce_at_singular_point(s, z, order);
    if (out.reduction.reduced.p() == 0) {
        out.pure_regular = true;
        out.verdict.nondegenerate = true;
        out.cartan.ok = true;
        out.notes.push_back("all fields are regular at the point; the model is a full flow box");
        return out;
    }
    out.verdict = is_nondegenerate(out.reduction.reduced);
    if (!out.verdict.nondegenerate) {
        out.cartan.note = "transversal family is degenerate";
        out.notes.push_back("transversal system is degenerate; no linearization attempted");
        return out;
    }
    out.cartan = cartan_type(linear_parts_of(out.reduction.reduced).family);
    out.linearization = geometric_linearize(out.reduction.reduced, out.reduction.reduced.trunc);
    return out;
}

}  // namespace isl
