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

#include <Eigen/Dense>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isl/realroots.hpp"
#include "isl/system.hpp"

namespace isl {

/// Commuting family of linear parts at a fixed point: square rational
/// matrices with pairwise vanishing commutators (enforced on construction).
struct LinearPartFamily {
    std::size_t m = 0;
    std::vector<QMatrix> generators;

    static LinearPartFamily make(std::vector<QMatrix> gens) {
        detail::require(!gens.empty(), "empty linear family");
        LinearPartFamily f;
        f.m = gens.front().rows();
        for (const auto& g : gens)
            detail::require(g.is_square() && g.rows() == f.m, "generator shape mismatch");
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                detail::require((gens[i] * gens[j] - gens[j] * gens[i]).is_zero(),
                                "linear parts do not commute");
        f.generators = std::move(gens);
        return f;
    }

    std::size_t p() const { return generators.size(); }
};

struct LinearPartExtraction {
    LinearPartFamily family;
    std::vector<QPoly> homogeneous_integrals;  ///< lowest nonconstant homogeneous parts
    std::vector<std::string> notes;
};

/// Extracts the linear parts of the fields (the origin must be a fixed
/// point) and the lowest-degree homogeneous parts of the integrals with
/// their constants dropped.
inline LinearPartExtraction linear_parts_of(const IntegrableSystem& s) {
    detail::require(s.p() > 0, "system has no fields");
    LinearPartExtraction out;
    std::vector<QMatrix> gens;
    for (std::size_t i = 0; i < s.p(); ++i) {
        for (std::size_t j = 0; j < s.m; ++j)
            detail::require(s.fields[i].component(j).constant_term().is_zero(),
                            "origin is not a fixed point of " + s.field_names[i]);
        gens.push_back(s.fields[i].linear_part());
    }
    out.family = LinearPartFamily::make(std::move(gens));
    for (std::size_t j = 0; j < s.q(); ++j) {
        QPoly g = s.integrals[j];
        g.set_coefficient(Monomial(s.m), Rational(0));
        if (g.is_zero()) {
            out.homogeneous_integrals.push_back(QPoly(s.m));
            out.notes.push_back("integral " + s.integral_names[j] + " has no nonconstant part");
        } else {
            out.homogeneous_integrals.push_back(g.homogeneous_component(g.valuation()));
        }
    }
    return out;
}

/// Diagnosis of the linear data at a fixed point: semisimplicity of each
/// generator (with minimal-polynomial witnesses), linear independence of the
/// family, and functional independence of the lowest homogeneous integral
/// parts.
struct NondegeneracyVerdict {
    bool nondegenerate = false;
    std::vector<bool> generator_semisimple;
    std::vector<std::string> generator_minpoly;
    bool family_independent = false;
    std::size_t family_rank = 0;
    bool integrals_independent = false;
    std::size_t integral_rank = 0;
    std::vector<std::string> witnesses;
};

inline NondegeneracyVerdict is_nondegenerate(const IntegrableSystem& s) {
    const LinearPartExtraction lp = linear_parts_of(s);
    NondegeneracyVerdict v;
    bool all_ss = true;
    for (std::size_t i = 0; i < lp.family.p(); ++i) {
        const UniPoly mp = minimal_polynomial(lp.family.generators[i]);
        const bool ss = is_squarefree(mp);
        v.generator_semisimple.push_back(ss);
        v.generator_minpoly.push_back(mp.str());
        if (!ss) {
            all_ss = false;
            v.witnesses.push_back("linear part of " + s.field_names[i] +
                                  " is not semisimple: minimal polynomial " + mp.str());
        }
    }
    // Linear independence of the generators as vectors of matrix entries.
    QMatrix flat(lp.family.p(), lp.family.m * lp.family.m);
    for (std::size_t i = 0; i < lp.family.p(); ++i)
        for (std::size_t a = 0; a < lp.family.m; ++a)
            for (std::size_t b = 0; b < lp.family.m; ++b)
                flat(i, a * lp.family.m + b) = lp.family.generators[i](a, b);
    v.family_rank = rank(flat);
    v.family_independent = v.family_rank == lp.family.p();
    if (!v.family_independent)
        v.witnesses.push_back("linear parts span only " + std::to_string(v.family_rank) +
                              " dimensions for " + std::to_string(lp.family.p()) + " fields");
    if (s.q() > 0) {
        v.integral_rank = generic_rank(jacobian(lp.homogeneous_integrals));
        v.integrals_independent = v.integral_rank == s.q();
        if (!v.integrals_independent)
            v.witnesses.push_back("lowest homogeneous integral parts span rank " +
                                  std::to_string(v.integral_rank) + " < " + std::to_string(s.q()));
    } else {
        v.integrals_independent = true;
    }
    for (const auto& n : lp.notes) v.witnesses.push_back(n);
    v.nondegenerate = all_ss && v.family_independent && v.integrals_independent;
    return v;
}

/// Counts of real-line and rotational eigen-directions of a commuting
/// family; h + 2e equals the dimension on which the family acts.
struct CartanType {
    int h = 0;
    int e = 0;
};

struct CartanResult {
    bool ok = false;
    CartanType type;
    int attempts = 0;
    long theta = 0;       ///< the weight base that produced a separating combination
    QMatrix combination;  ///< the separating generic element
    std::string note;
};

inline constexpr long kGenericityPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                             37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                             83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

/// Cartan type (h, e) of a commuting family: h real eigenvalues and e
/// conjugate pairs of a generic element. Genericity is certified, not
/// assumed: a combination Z = sum theta^i Y_i qualifies only if its
/// characteristic polynomial is squarefree (n distinct eigenvalues), in
/// which case Sturm counting gives h exactly. Distinctness also proves every
/// generator semisimple, since they preserve the eigenline decomposition.
/// Families whose joint eigenvalues are intrinsically repeated never qualify
/// and are reported as such after 32 deterministic attempts.
inline CartanResult cartan_type(const LinearPartFamily& fam) {
    CartanResult r;
    for (long theta : kGenericityPrimes) {
        ++r.attempts;
        QMatrix z(fam.m, fam.m);
        Rational w(1);
        for (const auto& y : fam.generators) {
            z = z + w * y;
            w *= Rational(theta);
        }
        const UniPoly chi = characteristic_polynomial(z);
        if (!is_squarefree(chi)) continue;
        const int h = sturm_real_root_count(chi);
        detail::ensure((static_cast<int>(fam.m) - h) % 2 == 0, "complex eigenvalues not paired");
        r.ok = true;
        r.type = {h, (static_cast<int>(fam.m) - h) / 2};
        r.theta = theta;
        r.combination = std::move(z);
        return r;
    }
    r.note = "no combination with distinct eigenvalues found in " + std::to_string(r.attempts) +
             " attempts; the family has intrinsically repeated joint eigenvalues";
    return r;
}

/// One joint eigenspace of the family in the basis P: either a real block
/// (size columns, each an eigenvector of every generator) or a complex block
/// (size = 2w columns arranged u_1, v_1, ..., u_w, v_w on which every
/// generator acts as alpha + beta J with J u = v, J v = -u).
struct EigenBlock {
    bool complex_pair = false;
    std::size_t start = 0;
    std::size_t size = 0;
    std::vector<GaussianRational> eigen;  ///< per-generator eigenvalue (alpha + i beta)
};

struct EigenStructure {
    QMatrix p;                      ///< basis change; columns ordered real blocks then pairs
    QMatrix p_inverse;
    std::vector<EigenBlock> blocks;
    Matrix<GaussianRational> cmat;  ///< p x m eigenvalue of each complexified coordinate
    std::vector<std::size_t> conj; ///< index of the conjugate coordinate (self for real)
};

/// Finds an exact simultaneous block-diagonalisation of the family over Q
/// and Q(i), or explains why none is reachable exactly. A generic
/// combination Z separates the joint eigenspaces; the decomposition is
/// certified afterwards by checking that every generator acts as a rational
/// scalar (real blocks) or as alpha + beta J (complex blocks), so a bad draw
/// can only cost retries, never correctness.
inline std::optional<EigenStructure> simultaneous_eigenstructure(const LinearPartFamily& fam,
                                                                 std::string* why = nullptr) {
    const std::size_t m = fam.m;
    const auto explain = [&](const std::string& msg) {
        if (why) *why = msg;
        return std::nullopt;
    };
    for (std::size_t i = 0; i < fam.p(); ++i) {
        const UniPoly mp = minimal_polynomial(fam.generators[i]);
        if (!is_squarefree(mp))
            return explain("generator " + std::to_string(i + 1) +
                           " is not semisimple (minimal polynomial " + mp.str() + ")");
    }
    std::string last = "no separating combination found";
    for (long theta : kGenericityPrimes) {
        QMatrix z(m, m);
        Rational w(1);
        for (const auto& y : fam.generators) {
            z = z + w * y;
            w *= Rational(theta);
        }
        const UniPoly mu = minimal_polynomial(z);
        if (!is_squarefree(mu)) continue;  // cannot happen for commuting semisimple generators
        const LowDegreeSplit split = split_low_degree_factors(mu);
        if (!split.leftover.is_constant())
            return explain("joint eigenvalues lie outside Q and Q(i): irreducible factor " +
                           split.leftover.str() + " of the generic combination's minimal polynomial");

        struct RawBlock {
            bool complex_pair;
            GaussianRational zeigen;
            std::vector<std::vector<Rational>> cols;  ///< real blocks: eigenvectors; pairs: u,v,...
            std::vector<GaussianRational> eigen;
        };
        std::vector<RawBlock> raw;
        bool separated = true;

        for (const Rational& lambda : split.rational_roots) {
            QMatrix shifted = z;
            for (std::size_t d = 0; d < m; ++d) shifted(d, d) -= lambda;
            RawBlock blk{false, GaussianRational(lambda), kernel_basis(shifted), {}};
            detail::ensure(!blk.cols.empty(), "eigenvalue without eigenvector");
            for (const auto& y : fam.generators) {
                // The generator must act on this eigenspace by a rational scalar.
                const std::vector<Rational> img0 = y.apply(blk.cols.front());
                std::size_t piv = 0;
                while (piv < m && blk.cols.front()[piv].is_zero()) ++piv;
                const Rational c = img0[piv] / blk.cols.front()[piv];
                bool scalar = true;
                for (const auto& col : blk.cols) {
                    const std::vector<Rational> img = y.apply(col);
                    for (std::size_t d = 0; d < m && scalar; ++d)
                        if (img[d] != c * col[d]) scalar = false;
                    if (!scalar) break;
                }
                if (!scalar) { separated = false; break; }
                blk.eigen.push_back(GaussianRational(c));
            }
            if (!separated) break;
            raw.push_back(std::move(blk));
        }
        if (separated)
            for (const GaussianRational& pair : split.complex_pairs) {
                const Rational a = pair.re(), b = pair.im();
                // kernel of (Z - a)^2 + b^2, with J = (Z - a)/b the complex structure
                QMatrix za = z;
                for (std::size_t d = 0; d < m; ++d) za(d, d) -= a;
                QMatrix q = za * za;
                const Rational b2 = b * b;
                for (std::size_t d = 0; d < m; ++d) q(d, d) += b2;
                const auto kernel = kernel_basis(q);
                detail::ensure(kernel.size() % 2 == 0, "complex eigenspace has odd dimension");
                const QMatrix j = b.reciprocal() * za;

                RawBlock blk{true, pair, {}, {}};
                QMatrix chosen(m, 0);
                std::vector<std::vector<Rational>> cols;
                const auto dim_with = [&](const std::vector<Rational>& extra) {
                    QMatrix c(m, cols.size() + 1);
                    for (std::size_t cc = 0; cc < cols.size(); ++cc)
                        for (std::size_t d = 0; d < m; ++d) c(d, cc) = cols[cc][d];
                    for (std::size_t d = 0; d < m; ++d) c(d, cols.size()) = extra[d];
                    return rank(c);
                };
                for (const auto& u : kernel) {
                    if (dim_with(u) != cols.size() + 1) continue;
                    const std::vector<Rational> v = j.apply(u);
                    cols.push_back(u);
                    detail::ensure(dim_with(v) == cols.size() + 1, "J image not independent");
                    cols.push_back(v);
                }
                detail::ensure(cols.size() == kernel.size(), "J-adapted basis incomplete");
                blk.cols = std::move(cols);

                for (const auto& y : fam.generators) {
                    // Solve y u1 = alpha u1 + beta v1, then certify on the whole block.
                    QMatrix uv(m, 2);
                    for (std::size_t d = 0; d < m; ++d) {
                        uv(d, 0) = blk.cols[0][d];
                        uv(d, 1) = blk.cols[1][d];
                    }
                    const auto ab = solve(uv, y.apply(blk.cols[0]));
                    if (!ab) { separated = false; break; }
                    const Rational alpha = (*ab)[0], beta = (*ab)[1];
                    bool matches = true;
                    for (std::size_t r2 = 0; r2 + 1 < blk.cols.size() && matches; r2 += 2) {
                        const auto& u = blk.cols[r2];
                        const auto& vv = blk.cols[r2 + 1];
                        const auto yu = y.apply(u);
                        const auto yv = y.apply(vv);
                        for (std::size_t d = 0; d < m && matches; ++d) {
                            if (yu[d] != alpha * u[d] + beta * vv[d]) matches = false;
                            if (matches && yv[d] != alpha * vv[d] - beta * u[d]) matches = false;
                        }
                    }
                    if (!matches) { separated = false; break; }
                    blk.eigen.push_back(GaussianRational(alpha, beta));
                }
                if (!separated) break;
                raw.push_back(std::move(blk));
            }
        if (!separated) {
            last = "combination with theta = " + std::to_string(theta) +
                   " did not act diagonally on its joint eigenspaces";
            continue;
        }

        // Canonical order: real blocks first, then pairs, each sorted by the
        // per-generator eigenvalue tuples.
        const auto tuple_less = [](const RawBlock& x, const RawBlock& y) {
            for (std::size_t i = 0; i < x.eigen.size(); ++i) {
                const auto &a = x.eigen[i], &b = y.eigen[i];
                if (a.re() != b.re()) return a.re() < b.re();
                if (a.im() != b.im()) return a.im() < b.im();
            }
            return false;
        };
        std::stable_sort(raw.begin(), raw.end(), [&](const RawBlock& x, const RawBlock& y) {
            if (x.complex_pair != y.complex_pair) return !x.complex_pair;
            return tuple_less(x, y);
        });

        EigenStructure es;
        es.p = QMatrix(m, m);
        es.cmat = Matrix<GaussianRational>(fam.p(), m);
        es.conj.assign(m, 0);
        std::size_t col = 0;
        for (const RawBlock& blk : raw) {
            EigenBlock eb;
            eb.complex_pair = blk.complex_pair;
            eb.start = col;
            eb.size = blk.cols.size();
            eb.eigen = blk.eigen;
            for (const auto& c : blk.cols) {
                for (std::size_t d = 0; d < m; ++d) es.p(d, col) = c[d];
                ++col;
            }
            for (std::size_t cc = eb.start; cc < eb.start + eb.size; ++cc) {
                if (!blk.complex_pair) {
                    es.conj[cc] = cc;
                    for (std::size_t i = 0; i < fam.p(); ++i) es.cmat(i, cc) = blk.eigen[i];
                } else {
                    const bool is_u = (cc - eb.start) % 2 == 0;
                    es.conj[cc] = is_u ? cc + 1 : cc - 1;
                    for (std::size_t i = 0; i < fam.p(); ++i)
                        es.cmat(i, cc) = is_u ? blk.eigen[i] : blk.eigen[i].conj();
                }
            }
            es.blocks.push_back(std::move(eb));
        }
        detail::ensure(col == m, "eigenbasis does not span");
        const auto pinv = inverse(es.p);
        detail::ensure(pinv.has_value(), "eigenbasis is singular");
        es.p_inverse = *pinv;
        return es;
    }
    return explain(last);
}

/// Canonical description of a Cartan family: the generator recombination v
/// and coordinate change P that carry the family onto the standard block
/// generators (coordinate lines and rotation planes). Exact when the joint
/// eigenvalues live in Q and Q(i); otherwise a floating-point change is
/// produced with its residual reported.
struct CanonicalForm {
    bool exact = false;
    CartanType type;
    QMatrix generator_basis;  ///< v: canonical generator r = sum_j v(r,j) * input j
    QMatrix p;                ///< exact coordinate change (columns = new basis)
    std::vector<QMatrix> canonical_generators;
    std::vector<std::vector<double>> p_numeric;
    std::vector<std::vector<double>> generator_basis_numeric;
    double residual = 0.0;
    std::string note;
};

namespace detail {

inline QMatrix canonical_block_matrix(std::size_t m, int h, int gen_index) {
    QMatrix g(m, m);
    if (gen_index < h) {
        g(static_cast<std::size_t>(gen_index), static_cast<std::size_t>(gen_index)) = Rational(1);
    } else {
        const int pair = (gen_index - h) / 2;
        const std::size_t base = static_cast<std::size_t>(h + 2 * pair);
        if ((gen_index - h) % 2 == 0) {  // radial generator of the pair
            g(base, base) = Rational(1);
            g(base + 1, base + 1) = Rational(1);
        } else {  // rotation generator
            g(base, base + 1) = Rational(-1);
            g(base + 1, base) = Rational(1);
        }
    }
    return g;
}

}  // namespace detail

inline CanonicalForm canonical_linear_form(const LinearPartFamily& fam) {
    detail::require(fam.p() == fam.m,
                    "a Cartan family on " + std::to_string(fam.m) + " variables needs exactly " +
                        std::to_string(fam.m) + " generators, got " + std::to_string(fam.p()));
    const std::size_t m = fam.m;
    CanonicalForm out;
    std::string why;
    const auto es = simultaneous_eigenstructure(fam, &why);
    if (es) {
        int h = 0, e = 0;
        for (const auto& blk : es->blocks) {
            if (!blk.complex_pair && blk.size != 1)
                throw ValueError("family is rank-deficient: a joint eigenvalue has multiplicity " +
                                 std::to_string(blk.size));
            if (blk.complex_pair && blk.size != 2)
                throw ValueError("family is rank-deficient: a complex joint eigenvalue has multiplicity " +
                                 std::to_string(blk.size / 2));
            if (blk.complex_pair) ++e;
            else ++h;
        }
        // Solve v * C = I where C collects the real data of the eigenvalue
        // rows: one column per real coordinate, (alpha, beta) column pair
        // per rotation plane.
        QMatrix c(m, m);
        for (std::size_t i = 0; i < fam.p(); ++i) {
            std::size_t col = 0;
            for (const auto& blk : es->blocks) {
                if (!blk.complex_pair) {
                    c(i, col++) = blk.eigen[i].re();
                } else {
                    c(i, col++) = blk.eigen[i].re();
                    c(i, col++) = blk.eigen[i].im();
                }
            }
        }
        const auto cinv = inverse(c);
        if (!cinv)
            throw ValueError("family is rank-deficient: eigenvalue data spans only rank " +
                             std::to_string(rank(c)) + " of " + std::to_string(m));
        out.exact = true;
        out.type = {h, e};
        out.generator_basis = *cinv;  // row r: coefficients of canonical generator r
        out.p = es->p;
        for (std::size_t r = 0; r < m; ++r) {
            QMatrix combo(m, m);
            for (std::size_t j = 0; j < m; ++j) combo = combo + out.generator_basis(r, j) * fam.generators[j];
            const QMatrix transformed = es->p_inverse * combo * es->p;
            const QMatrix expected = detail::canonical_block_matrix(m, h, static_cast<int>(r));
            detail::ensure(transformed == expected, "canonical form verification failed");
            out.canonical_generators.push_back(expected);
        }
        return out;
    }

    // Numeric fallback: the Cartan type is still computed exactly; the
    // basis comes from a floating-point eigendecomposition of the same
    // separating combination, and the achieved residual is reported.
    const CartanResult ct = cartan_type(fam);
    if (!ct.ok)
        throw ValueError("no canonical form: " + why + "; additionally " + ct.note);
    out.exact = false;
    out.type = ct.type;
    out.note = "exact path unavailable (" + why + "); numeric change computed";
    Eigen::MatrixXd z(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ct.combination(i, j).to_double();
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(z);
    detail::ensure(solver.info() == Eigen::Success, "numeric eigendecomposition failed");
    struct NumBlock {
        bool complex_pair;
        double key_re, key_im;
        Eigen::VectorXd u, v;
    };
    std::vector<NumBlock> nblocks;
    const double tol = 1e-9;
    std::vector<bool> used(m, false);
    for (std::size_t k = 0; k < m; ++k) {
        if (used[k]) continue;
        const std::complex<double> lam = solver.eigenvalues()(static_cast<Eigen::Index>(k));
        const Eigen::VectorXcd vec = solver.eigenvectors().col(static_cast<Eigen::Index>(k));
        if (std::abs(lam.imag()) <= tol) {
            used[k] = true;
            NumBlock nb{false, lam.real(), 0.0, vec.real(), Eigen::VectorXd()};
            nb.u.normalize();
            nblocks.push_back(std::move(nb));
        } else if (lam.imag() > tol) {
            used[k] = true;
            // mark the conjugate partner as consumed
            for (std::size_t k2 = k + 1; k2 < m; ++k2) {
                const std::complex<double> l2 = solver.eigenvalues()(static_cast<Eigen::Index>(k2));
                if (!used[k2] && std::abs(l2.real() - lam.real()) <= tol && std::abs(l2.imag() + lam.imag()) <= tol) {
                    used[k2] = true;
                    break;
                }
            }
            NumBlock nb{true, lam.real(), lam.imag(), vec.real(), -vec.imag()};
            const double scale = std::sqrt(nb.u.squaredNorm() + nb.v.squaredNorm());
            nb.u /= scale;
            nb.v /= scale;
            nblocks.push_back(std::move(nb));
        } else {
            used[k] = true;  // handled with its conjugate
        }
    }
    std::stable_sort(nblocks.begin(), nblocks.end(), [](const NumBlock& a, const NumBlock& b) {
        if (a.complex_pair != b.complex_pair) return !a.complex_pair;
        if (std::abs(a.key_re - b.key_re) > 1e-12) return a.key_re < b.key_re;
        return a.key_im < b.key_im;
    });
    Eigen::MatrixXd pn(m, m);
    Eigen::Index col = 0;
    for (const auto& nb : nblocks) {
        pn.col(col++) = nb.u;
        if (nb.complex_pair) pn.col(col++) = nb.v;
    }
    detail::ensure(col == static_cast<Eigen::Index>(m), "numeric eigenbasis does not span");
    const Eigen::MatrixXd pinv = pn.inverse();
    // Recover the eigenvalue data of every generator on the numeric basis.
    const int h = out.type.h;
    Eigen::MatrixXd cnum(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        Eigen::MatrixXd yi(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) yi(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = fam.generators[i](a, b).to_double();
        const Eigen::MatrixXd t = pinv * yi * pn;
        Eigen::Index cc = 0;
        for (int blk = 0; blk < h; ++blk, ++cc) cnum(static_cast<Eigen::Index>(i), cc) = t(cc, cc);
        for (int blk = 0; blk < out.type.e; ++blk) {
            const Eigen::Index base = static_cast<Eigen::Index>(h + 2 * blk);
            cnum(static_cast<Eigen::Index>(i), base) = (t(base, base) + t(base + 1, base + 1)) / 2.0;
            cnum(static_cast<Eigen::Index>(i), base + 1) = (t(base + 1, base) - t(base, base + 1)) / 2.0;
            cc += 2;
        }
    }
    const Eigen::MatrixXd vnum = cnum.inverse();
    double residual = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(m, m);
        for (std::size_t j = 0; j < m; ++j) {
            Eigen::MatrixXd yj(m, m);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) yj(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = fam.generators[j](a, b).to_double();
            combo += vnum(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) * yj;
        }
        const QMatrix expected = detail::canonical_block_matrix(m, h, static_cast<int>(r));
        Eigen::MatrixXd en(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) en(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = expected(a, b).to_double();
        residual = std::max(residual, (pinv * combo * pn - en).cwiseAbs().maxCoeff());
        out.canonical_generators.push_back(expected);
    }
    out.residual = residual;
    out.p_numeric.assign(m, std::vector<double>(m));
    out.generator_basis_numeric.assign(m, std::vector<double>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            out.p_numeric[a][b] = pn(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            out.generator_basis_numeric[a][b] = vnum(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        }
    return out;
}

/// Everything classify reports about one singular point: the rank data, the
/// transversal reduction, and the nondegeneracy/Cartan analysis of the
/// reduced singular part.
struct SingularPointClassification {
    SingularPointInfo info;
    std::size_t corank = 0;
    bool pure_regular = false;  ///< no singular fields remain after reduction
    NondegeneracyVerdict verdict;
    CartanResult cartan;
    ReductionResult reduction;
};

inline SingularPointClassification classify_singular_point(const IntegrableSystem& s,
                                                           const std::vector<Rational>& z) {
    SingularPointClassification out;
    out.reduction = reduce_at_singular_point(s, z);
    out.info = out.reduction.info;
    out.corank = s.m - out.info.rank;
    if (out.reduction.reduced.p() == 0) {
        out.pure_regular = true;
        out.verdict.nondegenerate = true;
        out.cartan.ok = true;
        out.cartan.type = {0, 0};
        out.cartan.note = "no singular fields remain at this point";
        return out;
    }
    out.verdict = is_nondegenerate(out.reduction.reduced);
    if (out.verdict.nondegenerate) {
        out.cartan = cartan_type(linear_parts_of(out.reduction.reduced).family);
    } else {
        out.cartan.ok = false;
        out.cartan.note = "family is degenerate; Cartan type not defined";
    }
    return out;
}

}  // namespace isl
