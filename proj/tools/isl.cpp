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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isl/isl.hpp"
#include "isl/report.hpp"

namespace {

using namespace isl;

// exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 bad input (parse errors, contract violations, degree cap),
// 3 internal verification failure
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Loaded {
    std::string path;
    std::string text;
    SourceFile source;
    IntegrableSystem system;
};

Loaded load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValueError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Loaded l{path, buf.str(), {}, {}};
    l.source = parse_system(l.text, path);
    l.system = l.source.system();
    return l;
}

std::vector<Rational> resolve_point(const Loaded& l, const std::string& spec) {
    if (spec.empty()) {
        if (const auto* p = l.source.find_point("origin")) return *p;
        return std::vector<Rational>(l.system.m, Rational(0));
    }
    if (const auto* p = l.source.find_point(spec)) return *p;
    std::vector<Rational> coords;
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ValueError("empty coordinate in point '" + spec + "'");
        coords.push_back(Rational::from_string(item.substr(b, e - b + 1)));
    }
    if (coords.size() != l.system.m)
        throw ValueError("point '" + spec + "' has " + std::to_string(coords.size()) +
                         " coordinates for " + std::to_string(l.system.m) + " variables");
    return coords;
}

SourceFile as_source(const IntegrableSystem& s) {
    SourceFile src;
    src.vars = s.vars;
    src.truncation = s.trunc;
    for (std::size_t i = 0; i < s.p(); ++i) src.fields.emplace_back(s.field_names[i], s.fields[i]);
    for (std::size_t j = 0; j < s.q(); ++j)
        src.integrals.emplace_back(s.integral_names[j], s.integrals[j]);
    return src;
}

void emit(const ReportBuilder& rb, bool json) {
    if (json) std::cout << rb.finish().dump(2) << "\n";
}

int cmd_check(const Loaded& l, bool json) {
    const SystemReport rep = verify(l.system);
    ReportBuilder rb("isl check", l.path, l.text);
    rb.body()["commutation"] = rep.commutation_ok;
    rb.body()["integrals_invariant"] = rep.integrals_invariant_ok;
    rb.body()["fields_independent"] = rep.fields_independent_ok;
    rb.body()["integrals_independent"] = rep.integrals_independent_ok;
    rb.body()["dimension_balanced"] = rep.dimension_balanced;
    rb.body()["field_rank"] = rep.field_rank;
    rb.body()["integral_rank"] = rep.integral_rank;
    rb.body()["witnesses"] = rep.witnesses;
    rb.body()["ok"] = rep.all_ok();
    if (json) {
        emit(rb, json);
    } else {
        std::cout << "commutation:            " << (rep.commutation_ok ? "ok" : "FAIL") << "\n"
                  << "integrals invariant:    " << (rep.integrals_invariant_ok ? "ok" : "FAIL") << "\n"
                  << "fields independent:     " << (rep.fields_independent_ok ? "ok" : "FAIL")
                  << " (rank " << rep.field_rank << ")\n"
                  << "integrals independent:  " << (rep.integrals_independent_ok ? "ok" : "FAIL")
                  << " (rank " << rep.integral_rank << ")\n"
                  << "dimension balanced:     " << (rep.dimension_balanced ? "yes" : "no") << "\n";
        for (const auto& w : rep.witnesses) std::cout << "  witness: " << w << "\n";
        std::cout << "verdict: " << (rep.all_ok() ? "consistent" : "inconsistent") << "\n";
    }
    return rep.all_ok() ? kExitOk : kExitNegative;
}

int cmd_classify(const Loaded& l, const std::string& point, bool json) {
    const auto z = resolve_point(l, point);
    const auto cls = classify_singular_point(l.system, z);
    ReportBuilder rb("isl classify", l.path, l.text);
    rb.body()["point"] = to_json(z);
    rb.body()["rank"] = cls.info.rank;
    rb.body()["corank"] = cls.corank;
    rb.body()["pure_regular"] = cls.pure_regular;
    rb.body()["nondegenerate"] = cls.verdict.nondegenerate;
    rb.body()["witnesses"] = cls.verdict.witnesses;
    Json cj;
    cj["ok"] = cls.cartan.ok;
    if (cls.cartan.ok) {
        cj["h"] = cls.cartan.type.h;
        cj["e"] = cls.cartan.type.e;
        cj["attempts"] = cls.cartan.attempts;
    } else {
        cj["note"] = cls.cartan.note;
    }
    rb.body()["cartan"] = std::move(cj);
    if (json) {
        emit(rb, json);
    } else {
        std::cout << "rank at point: " << cls.info.rank << " (corank " << cls.corank << ")\n";
        if (cls.pure_regular) {
            std::cout << "no singular fields remain; the point is regular for the family\n";
        } else {
            std::cout << "nondegenerate: " << (cls.verdict.nondegenerate ? "yes" : "no") << "\n";
            for (const auto& w : cls.verdict.witnesses) std::cout << "  witness: " << w << "\n";
            if (cls.cartan.ok)
                std::cout << "type: (h, e) = (" << cls.cartan.type.h << ", " << cls.cartan.type.e
                          << ")  [" << cls.cartan.attempts << " attempt(s)]\n";
            else
                std::cout << "type: unavailable (" << cls.cartan.note << ")\n";
        }
    }
    return cls.verdict.nondegenerate ? kExitOk : kExitNegative;
}

int cmd_resonance(const Loaded& l, int max_degree, bool json) {
    const LinearPartExtraction lp = linear_parts_of(l.system);
    std::string why;
    const auto es = simultaneous_eigenstructure(lp.family, &why);
    if (!es) throw ValueError("cannot compute resonances: " + why);
    // Real coefficient rows: one per generator, two when the eigenvalues
    // carry imaginary parts (real and imaginary constraints separately).
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < lp.family.p(); ++i) {
        std::vector<Rational> re(l.system.m), im(l.system.m);
        bool has_im = false;
        for (std::size_t j = 0; j < l.system.m; ++j) {
            re[j] = es->cmat(i, j).re();
            im[j] = es->cmat(i, j).im();
            if (!im[j].is_zero()) has_im = true;
        }
        rows.push_back(std::move(re));
        if (has_im) rows.push_back(std::move(im));
    }
    CoefficientMatrix cm{QMatrix(rows.size(), l.system.m)};
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < l.system.m; ++j) cm.c(i, j) = rows[i][j];
    const int cap = max_degree > 0 ? max_degree : default_degree_cap();
    const ResonanceLattice lat = monoid_hilbert_basis(cm, cap);
    ReportBuilder rb("isl resonance", l.path, l.text);
    rb.body()["generators"] = lp.family.p();
    rb.body()["solution_dimension"] = lat.solution_space.size();
    rb.body()["lattice_rank"] = lat.integer_lattice.rank();
    rb.body()["monoid_dimension"] = lat.monoid_dimension;
    rb.body()["degree_cap"] = cap;
    Json basis = Json::array();
    for (const auto& mset : lat.hilbert_basis) basis.push_back(mset.str(l.system.vars));
    rb.body()["hilbert_basis"] = std::move(basis);
    if (json) {
        emit(rb, json);
    } else {
        std::cout << "resonance solution space dimension: " << lat.solution_space.size() << "\n"
                  << "integer lattice rank:               " << lat.integer_lattice.rank() << "\n"
                  << "monoid dimension:                   " << lat.monoid_dimension << "\n"
                  << "minimal generating monomials (" << lat.hilbert_basis.size() << "):\n";
        for (const auto& mset : lat.hilbert_basis)
            std::cout << "  " << mset.str(l.system.vars) << "\n";
    }
    return kExitOk;
}

int cmd_normalize(const Loaded& l, int order, bool emit_change, bool json) {
    const GeometricLinearization gl = geometric_linearize(l.system, order);
    const NormalFormResult& nf = gl.normal;
    ReportBuilder rb("isl normalize", l.path, l.text);
    rb.body()["order"] = nf.order;
    rb.body()["removed_terms"] = nf.removed_terms;
    rb.body()["normalized"] = print_system(as_source(nf.normalized));
    if (emit_change) {
        Json imgs = Json::array();
        for (std::size_t j = 0; j < l.system.m; ++j)
            imgs.push_back(nf.change.image(j).str(l.system.vars));
        rb.body()["change"] = std::move(imgs);
    }
    Json rows = Json::array();
    for (const auto& row : gl.division.coefficients) {
        Json r = Json::array();
        for (const auto& f : row) r.push_back(f.str(l.system.vars));
        rows.push_back(std::move(r));
    }
    rb.body()["coefficients"] = std::move(rows);
    rb.body()["coefficients_constant"] = gl.coefficients_constant;
    rb.body()["notes"] = nf.notes;
    if (json) {
        emit(rb, json);
    } else {
        std::cout << "order: " << nf.order << ", removed non-resonant terms: " << nf.removed_terms
                  << "\n"
                  << print_system(as_source(nf.normalized));
        if (emit_change) {
            std::cout << "# change of coordinates (old in terms of new)\n";
            for (std::size_t j = 0; j < l.system.m; ++j)
                std::cout << "#   " << l.system.vars[j] << " = "
                          << nf.change.image(j).str(l.system.vars) << "\n";
        }
        std::cout << "# geometric coefficients over the linear family: "
                  << (gl.coefficients_constant ? "constant" : "first integrals") << "\n";
    }
    return kExitOk;
}

int cmd_divide(const Loaded& l, const std::string& field, bool json) {
    const DivisionResult div = divide_by_linear_family(l.system);
    std::vector<std::size_t> rows(l.system.p());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    if (!field.empty()) {
        const auto& names = l.system.field_names;
        const auto it = std::find(names.begin(), names.end(), field);
        if (it == names.end()) throw ValueError("no field named '" + field + "' in " + l.path);
        rows = {static_cast<std::size_t>(it - names.begin())};
    }
    ReportBuilder rb("isl divide", l.path, l.text);
    Json rowsj = Json::array();
    bool constant = true;
    for (const std::size_t i : rows) {
        Json row = Json::array();
        for (const auto& f : div.coefficients[i]) {
            row.push_back(f.str(l.system.vars));
            if (f.degree() > 0) constant = false;
        }
        rowsj.push_back(std::move(row));
    }
    if (!field.empty()) rb.body()["field"] = field;
    rb.body()["coefficients"] = std::move(rowsj);
    rb.body()["constant"] = constant;
    if (json) {
        emit(rb, json);
    } else {
        for (const std::size_t i : rows) {
            std::cout << l.system.field_names[i] << " =";
            for (std::size_t k = 0; k < div.coefficients[i].size(); ++k)
                std::cout << (k ? " + (" : " (") << div.coefficients[i][k].str(l.system.vars)
                          << ") * L[" << l.system.field_names[k] << "]";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_reduce(const Loaded& l, const std::string& point, int order, bool json) {
    const auto z = resolve_point(l, point);
    const ReductionResult red = reduce_at_singular_point(l.system, z, order);
    ReportBuilder rb("isl reduce", l.path, l.text);
    rb.body()["point"] = to_json(z);
    rb.body()["rank"] = red.info.rank;
    Json tv = Json::array();
    for (const auto j : red.transversal) tv.push_back(l.system.vars[j]);
    rb.body()["transversal"] = std::move(tv);
    rb.body()["reduced"] = print_system(as_source(red.reduced));
    rb.body()["notes"] = red.notes;
    if (json) {
        emit(rb, json);
    } else {
        std::cout << "regular rank: " << red.info.rank << "\n";
        std::cout << "transversal variables:";
        for (const auto j : red.transversal) std::cout << " " << l.system.vars[j];
        std::cout << "\n" << print_system(as_source(red.reduced));
        for (const auto& n : red.notes) std::cout << "# " << n << "\n";
    }
    return kExitOk;
}

int cmd_canonical(const Loaded& l, bool json) {
    const LinearPartExtraction lp = linear_parts_of(l.system);
    const CanonicalForm cf = canonical_linear_form(lp.family);
    ReportBuilder rb("isl canonical", l.path, l.text);
    rb.body()["exact"] = cf.exact;
    rb.body()["h"] = cf.type.h;
    rb.body()["e"] = cf.type.e;
    if (cf.exact) {
        rb.body()["generator_basis"] = to_json(cf.generator_basis);
        rb.body()["p"] = to_json(cf.p);
    } else {
        rb.body()["generator_basis_numeric"] = cf.generator_basis_numeric;
        rb.body()["p_numeric"] = cf.p_numeric;
        rb.body()["residual"] = cf.residual;
        rb.body()["note"] = cf.note;
    }
    if (json) {
        emit(rb, json);
    } else {
        std::cout << "type: (h, e) = (" << cf.type.h << ", " << cf.type.e << ") -- "
                  << (cf.exact ? "exact" : "numeric") << "\n";
        if (cf.exact) {
            std::cout << "generator recombination: " << to_string(cf.generator_basis) << "\n"
                      << "coordinate change:       " << to_string(cf.p) << "\n";
        } else {
            std::cout << "residual: " << cf.residual << "\n" << cf.note << "\n";
        }
    }
    return kExitOk;
}

int cmd_suspend(const Loaded& l, std::size_t params, bool json) {
    const IntegrableSystem sus = suspend_family(l.system, params);
    ReportBuilder rb("isl suspend", l.path, l.text);
    rb.body()["params"] = params;
    rb.body()["suspended"] = print_system(as_source(sus));
    if (json) {
        emit(rb, json);
    } else {
        std::cout << print_system(as_source(sus));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local analysis of commuting polynomial vector fields"};
    app.require_subcommand(1);

    std::string file, point, field;
    int order = -1, max_degree = 0;
    std::size_t params = 1;
    bool json = false, emit_change = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "system description file")->required();
        sub->add_flag("--json", json, "emit a JSON report");
    };
    auto* c_check = app.add_subcommand("check", "verify commutation, invariance and independence");
    add_common(c_check);
    auto* c_classify = app.add_subcommand("classify", "rank, nondegeneracy and type at a point");
    add_common(c_classify);
    c_classify->add_option("--point", point, "named point or comma-separated coordinates");
    auto* c_resonance = app.add_subcommand("resonance", "resonance lattice and minimal monomials");
    add_common(c_resonance);
    c_resonance->add_option("--max-degree", max_degree, "degree cap for the monomial search");
    auto* c_normalize =
        app.add_subcommand("normalize", "resonant normal form and geometric linearization");
    add_common(c_normalize);
    c_normalize->add_option("--degree", order, "jet degree (default: declared truncation)");
    c_normalize->add_flag("--emit-change", emit_change, "include the coordinate change");
    auto* c_divide = app.add_subcommand("divide", "express fields over their linear parts");
    add_common(c_divide);
    c_divide->add_option("--field", field, "restrict the output to one named field");
    auto* c_reduce = app.add_subcommand("reduce", "flow-box reduction at a singular point");
    add_common(c_reduce);
    c_reduce->add_option("--point", point, "named point or comma-separated coordinates");
    c_reduce->add_option("--order", order, "jet order for the reduction");
    auto* c_canonical = app.add_subcommand("canonical", "canonical form of the linear family");
    add_common(c_canonical);
    auto* c_suspend = app.add_subcommand("suspend", "treat trailing variables as parameters");
    add_common(c_suspend);
    c_suspend->add_option("--params", params, "number of trailing parameter variables");

    CLI11_PARSE(app, argc, argv);

    try {
        const Loaded l = load(file);
        if (c_check->parsed()) return cmd_check(l, json);
        if (c_classify->parsed()) return cmd_classify(l, point, json);
        if (c_resonance->parsed()) return cmd_resonance(l, max_degree, json);
        if (c_normalize->parsed()) return cmd_normalize(l, order, emit_change, json);
        if (c_divide->parsed()) return cmd_divide(l, field, json);
        if (c_reduce->parsed()) return cmd_reduce(l, point, order, json);
        if (c_canonical->parsed()) return cmd_canonical(l, json);
        if (c_suspend->parsed()) return cmd_suspend(l, params, json);
        std::cerr << "no subcommand selected\n";
        return kExitInput;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ValueError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
