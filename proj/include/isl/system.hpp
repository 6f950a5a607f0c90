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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isl/vectorfield.hpp"

namespace isl {

/// A commuting family of polynomial vector fields together with joint first
/// integrals on a fixed coordinate patch. The struct itself imposes only
/// shape constraints; the semantic requirements (commutation, invariance,
/// independence) are checked by verify(), which reports rather than throws
/// so callers can show the user every violated property at once.
struct IntegrableSystem {
    std::size_t m = 0;                ///< number of variables
    int trunc = kOrderUnbounded;      ///< working jet order for analyses
    std::vector<std::string> vars;    ///< variable names (display only)
    std::vector<std::string> field_names;
    std::vector<std::string> integral_names;
    std::vector<PolyVectorField<Rational>> fields;
    std::vector<QPoly> integrals;

    std::size_t p() const { return fields.size(); }
    std::size_t q() const { return integrals.size(); }

    static IntegrableSystem make(std::vector<PolyVectorField<Rational>> fields,
                                 std::vector<QPoly> integrals, int trunc = kOrderUnbounded,
                                 std::vector<std::string> vars = {}) {
        IntegrableSystem s;
        detail::require(!fields.empty() || !integrals.empty(), "empty system");
        s.m = fields.empty() ? integrals.front().dim() : fields.front().dim();
        for (const auto& x : fields) detail::require(x.dim() == s.m, "field dimension mismatch");
        for (const auto& f : integrals) detail::require(f.dim() == s.m, "integral dimension mismatch");
        s.trunc = trunc;
        s.fields = std::move(fields);
        s.integrals = std::move(integrals);
        s.vars = vars.empty() ? default_var_names(s.m) : std::move(vars);
        detail::require(s.vars.size() == s.m, "variable name count mismatch");
        for (std::size_t i = 0; i < s.p(); ++i) s.field_names.push_back("X" + std::to_string(i + 1));
        for (std::size_t i = 0; i < s.q(); ++i) s.integral_names.push_back("F" + std::to_string(i + 1));
        return s;
    }

    /// Effective jet order for analyses that need a finite one.
    int working_order(int fallback = 6) const { return trunc >= kOrderUnbounded ? fallback : trunc; }
};

/// Outcome of the integrability checks, with human-readable witnesses for
/// every failure.
struct SystemReport {
    bool commutation_ok = true;
    bool integrals_invariant_ok = true;
    bool fields_independent_ok = true;
    bool integrals_independent_ok = true;
    bool dimension_balanced = true;  ///< p + q == m (informational)
    std::size_t field_rank = 0;
    std::size_t integral_rank = 0;
    std::vector<std::string> witnesses;

    bool all_ok() const {
        return commutation_ok && integrals_invariant_ok && fields_independent_ok && integrals_independent_ok;
    }
};

/// Checks the defining properties of an integrable family modulo the
/// system's truncation order: pairwise commutation, invariance of every
/// integral under every field, and generic independence of the fields and of
/// the integrals.
inline SystemReport verify(const IntegrableSystem& s) {
    SystemReport r;
    for (std::size_t i = 0; i < s.p(); ++i)
        for (std::size_t j = i + 1; j < s.p(); ++j) {
            const auto br = lie_bracket(s.fields[i], s.fields[j]).truncate(s.trunc);
            if (!br.is_zero()) {
                r.commutation_ok = false;
                r.witnesses.push_back("[" + s.field_names[i] + ", " + s.field_names[j] + "] = " +
                                      br.str(s.vars));
            }
        }
    for (std::size_t i = 0; i < s.p(); ++i)
        for (std::size_t j = 0; j < s.q(); ++j) {
            const auto lf = lie_derivative(s.fields[i], s.integrals[j]).truncate(s.trunc);
            if (!lf.is_zero()) {
                r.integrals_invariant_ok = false;
                r.witnesses.push_back(s.field_names[i] + "(" + s.integral_names[j] + ") = " +
                                      lf.str(s.vars));
            }
        }
    if (s.p() > 0) {
        std::vector<std::vector<QPoly>> comp(s.p(), std::vector<QPoly>(s.m, QPoly(s.m)));
        for (std::size_t i = 0; i < s.p(); ++i)
            for (std::size_t j = 0; j < s.m; ++j) comp[i][j] = s.fields[i].component(j);
        r.field_rank = generic_rank(comp);
        if (r.field_rank != s.p()) {
            r.fields_independent_ok = false;
            r.witnesses.push_back("fields span rank " + std::to_string(r.field_rank) + " < " +
                                  std::to_string(s.p()) + " at a generic point");
        }
    }
    if (s.q() > 0) {
        r.integral_rank = generic_rank(jacobian(s.integrals));
        if (r.integral_rank != s.q()) {
            r.integrals_independent_ok = false;
            r.witnesses.push_back("integral differentials span rank " + std::to_string(r.integral_rank) +
                                  " < " + std::to_string(s.q()) + " at a generic point");
        }
    }
    r.dimension_balanced = s.p() + s.q() == s.m;
    if (!r.dimension_balanced)
        r.witnesses.push_back("note: p + q = " + std::to_string(s.p() + s.q()) + " differs from m = " +
                              std::to_string(s.m));
    return r;
}

/// Rank data of the family at a specific point.
struct SingularPointInfo {
    std::vector<Rational> point;
    std::size_t rank = 0;                    ///< dimension of the span of the field values
    std::vector<std::size_t> independent;    ///< greedily chosen independent field indices
};

inline SingularPointInfo singular_rank_at(const IntegrableSystem& s, const std::vector<Rational>& z) {
    detail::require(z.size() == s.m, "point has wrong dimension");
    SingularPointInfo info;
    info.point = z;
    QMatrix chosen(0, s.m);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < s.p(); ++i) {
        std::vector<Rational> v = s.fields[i].value_at(z);
        rows.push_back(v);
        QMatrix candidate(rows.size(), s.m);
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < s.m; ++b) candidate(a, b) = rows[a][b];
        if (rank(candidate) == rows.size()) {
            info.independent.push_back(i);
        } else {
            rows.pop_back();
        }
    }
    info.rank = info.independent.size();
    return info;
}

/// Replaces the generators by function-matrix combinations X_i' = sum_j
/// f[i][j] X_j. The matrix must be invertible at the origin; invertibility
/// as a function matrix (det a unit) then holds on a neighbourhood. The
/// caller is responsible for choosing entries (typically first integrals)
/// that keep the family commuting; verify() will tell.
inline IntegrableSystem geometric_recombine(const IntegrableSystem& s,
                                            const std::vector<std::vector<QPoly>>& f) {
    detail::require(f.size() == s.p(), "recombination matrix must be p x p");
    for (const auto& row : f) detail::require(row.size() == s.p(), "recombination matrix must be p x p");
    detail::require(s.p() > 0, "cannot recombine an empty family");
    const QPoly d = poly_det(f);
    detail::require(!d.constant_term().is_zero(), "recombination matrix is singular at the origin");
    IntegrableSystem out = s;
    for (std::size_t i = 0; i < s.p(); ++i) {
        PolyVectorField<Rational> acc(s.m, s.trunc);
        for (std::size_t j = 0; j < s.p(); ++j) acc = acc + f[i][j] * s.fields[j];
        out.fields[i] = acc.truncate(s.trunc);
    }
    return out;
}

namespace detail {

/// Time-t flow jet of an exact polynomial field applied to given coordinate
/// images: sum_r tau^r / r! (L_X^r x_j) o C, truncated at `order` in the
/// target variables. tau is the target variable with index time_var.
inline std::vector<QPoly> flow_images(const PolyVectorField<Rational>& x, std::size_t time_var,
                                      const std::vector<QPoly>& c, int order) {
    const std::size_t m = x.dim();
    const std::size_t mu = c.front().dim();
    std::vector<QPoly> out(m, QPoly(mu, order));
    // iterated Lie derivatives of the coordinate functions
    std::vector<QPoly> lr;
    for (std::size_t j = 0; j < m; ++j) lr.push_back(QPoly::variable(m, j));
    Rational factorial(1);
    QPoly tau_pow = QPoly::constant(mu, Rational(1));
    const QPoly tau = QPoly::variable(mu, time_var);
    for (int r = 0; r <= order; ++r) {
        if (r > 0) {
            factorial *= Rational(r);
            tau_pow = tau_pow * tau;
            for (std::size_t j = 0; j < m; ++j) lr[j] = lie_derivative(x, lr[j]);
        }
        const Rational inv = factorial.reciprocal();
        for (std::size_t j = 0; j < m; ++j) {
            if (lr[j].is_zero()) continue;
            out[j] += (inv * (tau_pow * lr[j].substitute(c))).truncate(order);
        }
    }
    return out;
}

}  // namespace detail

/// Result of straightening the independent directions at a singular point.
struct ReductionResult {
    IntegrableSystem reduced;                 ///< the transversal system in m - k variables
    CoordinateChange<Rational> change;        ///< x = change(u), u = (t_1..t_k, s_1..s_{m-k})
    SingularPointInfo info;
    std::vector<std::size_t> transversal;     ///< original coordinate indices kept as s
    std::vector<std::size_t> reduced_fields;  ///< original indices of the fields that survive
    /// Components of the surviving fields along the straightened directions,
    /// as functions of the transversal variables (needed to reassemble the
    /// original system exactly).
    std::vector<std::vector<QPoly>> dropped_components;
    std::vector<std::string> notes;
};

/// Straightens a maximal independent subfamily at z into coordinate
/// directions d/dt_a (a flow-box chart built from the exact Lie-series flow
/// jets) and drops those directions. Commutation makes the remaining fields
/// and all integrals independent of the straightened coordinates; any
/// residual dependence is reported as an error since it means the input did
/// not commute (or integrals were not invariant) to this order.
inline ReductionResult reduce_at_singular_point(const IntegrableSystem& s, const std::vector<Rational>& z,
                                                int order = -1) {
    const int n = order > 0 ? order : s.working_order();
    ReductionResult out;
    out.info = singular_rank_at(s, z);
    const std::size_t k = out.info.rank;
    const std::size_t m = s.m;
    if (k == 0) {
        out.reduced = s;
        out.change = CoordinateChange<Rational>::identity(m);
        for (std::size_t i = 0; i < s.p(); ++i) out.reduced_fields.push_back(i);
        for (std::size_t j = 0; j < m; ++j) out.transversal.push_back(j);
        out.dropped_components.assign(s.p(), {});
        return out;
    }
    for (const auto& x : s.fields)
        detail::require(x.trunc() >= kOrderUnbounded,
                        "flow-box reduction needs exact polynomial fields");

    // Transversal coordinate directions: the non-pivot columns of the value
    // matrix of the chosen fields.
    QMatrix values(k, m);
    for (std::size_t a = 0; a < k; ++a) {
        const auto v = s.fields[out.info.independent[a]].value_at(z);
        for (std::size_t b = 0; b < m; ++b) values(a, b) = v[b];
    }
    std::vector<std::size_t> pivots;
    rref(values, &pivots);
    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t j = 0; j < m; ++j)
        if (!is_pivot[j]) out.transversal.push_back(j);

    // sigma(s) = z + sum s_j e_{J_j}, then one flow per straightened field.
    // Build one order higher than requested so the final jets are honest.
    const int inner = detail::order_add(n, 1);
    std::vector<QPoly> images;
    for (std::size_t j = 0; j < m; ++j) images.push_back(QPoly::constant(m, z[j]));
    for (std::size_t jj = 0; jj < out.transversal.size(); ++jj)
        images[out.transversal[jj]] += QPoly::variable(m, k + jj);
    for (std::size_t a = k; a-- > 0;)
        images = detail::flow_images(s.fields[out.info.independent[a]], a, images, inner);
    const CoordinateChange<Rational> chart{images};

    // Straightened fields must become coordinate directions.
    for (std::size_t a = 0; a < k; ++a) {
        const auto r = pullback_field(s.fields[out.info.independent[a]], chart, n);
        PolyVectorField<Rational> ea(m, r.trunc());
        ea.component(a).add_term(Monomial(m), Rational(1));
        detail::ensure(r.truncate(n) == ea.truncate(n),
                       "flow-box chart failed to straighten its own field");
    }

    const auto depends_on_t = [&](const QPoly& f) {
        for (const auto& [mono, coeff] : f.terms()) {
            (void)coeff;
            for (std::size_t a = 0; a < k; ++a)
                if (mono[a] > 0) return true;
        }
        return false;
    };

    // Transform the surviving fields and all integrals, then check that the
    // straightened coordinates have genuinely disappeared.
    std::vector<PolyVectorField<Rational>> survivors;
    for (std::size_t i = 0; i < s.p(); ++i) {
        bool straightened = false;
        for (std::size_t a : out.info.independent) straightened |= (a == i);
        if (straightened) continue;
        out.reduced_fields.push_back(i);
        survivors.push_back(pullback_field(s.fields[i], chart, n));
    }
    std::vector<QPoly> new_integrals;
    for (const auto& f : s.integrals) new_integrals.push_back(apply_change(f, chart).truncate(n));

    const std::size_t mr = m - k;
    const auto restrict_poly = [&](const QPoly& f) {
        QPoly g(mr, f.trunc());
        for (const auto& [mono, coeff] : f.terms()) {
            std::vector<int> e(mr);
            for (std::size_t j = 0; j < mr; ++j) e[j] = mono[k + j];
            g.add_term(Monomial(std::move(e)), coeff);
        }
        return g;
    };

    std::vector<PolyVectorField<Rational>> red_fields;
    out.dropped_components.assign(survivors.size(), std::vector<QPoly>(k, QPoly(mr)));
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        std::vector<QPoly> comps;
        for (std::size_t j = 0; j < m; ++j) {
            const QPoly& cj = survivors[i].component(j);
            if (depends_on_t(cj))
                throw ValueError("field " + s.field_names[out.reduced_fields[i]] +
                                 " still depends on a straightened coordinate; the family does not "
                                 "commute to order " + std::to_string(n));
            if (j < k) out.dropped_components[i][j] = restrict_poly(cj);
            else comps.push_back(restrict_poly(cj));
        }
        red_fields.push_back(PolyVectorField<Rational>(std::move(comps)));
    }
    std::vector<QPoly> red_integrals;
    for (std::size_t j = 0; j < new_integrals.size(); ++j) {
        if (depends_on_t(new_integrals[j]))
            throw ValueError("integral " + s.integral_names[j] +
                             " still depends on a straightened coordinate; it is not invariant "
                             "under the straightened fields to order " + std::to_string(n));
        red_integrals.push_back(restrict_poly(new_integrals[j]));
    }

    IntegrableSystem red;
    red.m = mr;
    red.trunc = n;
    for (std::size_t j : out.transversal) red.vars.push_back(s.vars[j]);
    for (std::size_t i : out.reduced_fields) red.field_names.push_back(s.field_names[i]);
    red.integral_names = s.integral_names;
    red.fields = std::move(red_fields);
    red.integrals = std::move(red_integrals);
    out.reduced = std::move(red);
    out.change = chart.truncate(n);
    if (out.reduced.p() + out.reduced.q() != mr)
        out.notes.push_back("reduced system has p + q = " +
                            std::to_string(out.reduced.p() + out.reduced.q()) + " in " +
                            std::to_string(mr) + " variables");
    return out;
}

/// Adjoins the s trailing variables as formal parameters: fields must not
/// move them, and each parameter becomes a first integral of the suspended
/// system. This realizes a parametric family as a single autonomous system
/// one dimension up per parameter.
inline IntegrableSystem suspend_family(const IntegrableSystem& family, std::size_t params) {
    detail::require(params >= 1 && params < family.m, "parameter count out of range");
    const std::size_t first = family.m - params;
    for (std::size_t i = 0; i < family.p(); ++i)
        for (std::size_t j = first; j < family.m; ++j)
            detail::require(family.fields[i].component(j).is_zero(),
                            "field " + family.field_names[i] + " moves parameter " + family.vars[j]);
    IntegrableSystem out = family;
    for (std::size_t j = first; j < family.m; ++j) {
        out.integrals.push_back(QPoly::variable(family.m, j, family.trunc));
        out.integral_names.push_back(family.vars[j]);
    }
    const SystemReport rep = verify(out);
    if (!rep.all_ok()) {
        std::string msg = "suspension is not integrable:";
        for (const auto& w : rep.witnesses) msg += "\n  " + w;
        throw ValueError(msg);
    }
    return out;
}

}  // namespace isl
