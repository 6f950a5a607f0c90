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

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isl/system.hpp"

namespace isl {

/// Position inside a source file, 1-based.
struct SourcePos {
    int line = 1;
    int col = 1;
};

/// Syntax or semantic error in a system description, carrying the position
/// it was detected at.
class ParseError : public ValueError {
  public:
    ParseError(const std::string& file, SourcePos pos, const std::string& msg)
        : ValueError(file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col) +
                     ": " + msg),
          pos_(pos) {}
    SourcePos pos() const { return pos_; }

  private:
    SourcePos pos_;
};

/// Parsed system description: variables, optional truncation order, named
/// fields, named integrals, and named rational points.
struct SourceFile {
    std::vector<std::string> vars;
    int truncation = kOrderUnbounded;
    std::vector<std::pair<std::string, PolyVectorField<Rational>>> fields;
    std::vector<std::pair<std::string, QPoly>> integrals;
    std::vector<std::pair<std::string, std::vector<Rational>>> points;

    /// Assembles the model, truncating everything to the declared order.
    IntegrableSystem system() const {
        detail::require(!fields.empty(), "system declares no fields");
        std::vector<PolyVectorField<Rational>> fs;
        std::vector<QPoly> is;
        for (const auto& [name, f] : fields) fs.push_back(f.truncate(truncation));
        for (const auto& [name, f] : integrals) is.push_back(f.truncate(truncation));
        IntegrableSystem s = IntegrableSystem::make(std::move(fs), std::move(is), truncation, vars);
        s.field_names.clear();
        for (const auto& [name, f] : fields) s.field_names.push_back(name);
        s.integral_names.clear();
        for (const auto& [name, f] : integrals) s.integral_names.push_back(name);
        return s;
    }

    const std::vector<Rational>* find_point(const std::string& name) const {
        for (const auto& [n, p] : points)
            if (n == name) return &p;
        return nullptr;
    }
};

namespace dsl_detail {

enum class Tok { End, Ident, Integer, Punct, Terminator };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePos pos;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

/// Tokenizer. Newlines terminate statements except inside parentheses;
/// '#' starts a comment running to the end of the line.
inline std::vector<Token> lex(const std::string& text, const std::string& file) {
    std::vector<Token> out;
    SourcePos pos;
    int depth = 0;
    std::size_t i = 0;
    const auto advance = [&](char c) {
        if (c == '\n') {
            ++pos.line;
            pos.col = 1;
        } else {
            ++pos.col;
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        const SourcePos here = pos;
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(text[i++]);
            continue;
        }
        if (c == '\n') {
            advance(c);
            ++i;
            if (depth == 0) out.push_back({Tok::Terminator, "\n", here});
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::string w;
            while (i < text.size() && ident_char(text[i])) {
                w += text[i];
                advance(text[i++]);
            }
            out.push_back({Tok::Ident, std::move(w), here});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string w;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                w += text[i];
                advance(text[i++]);
            }
            out.push_back({Tok::Integer, std::move(w), here});
            continue;
        }
        if (c == ';') {
            advance(c);
            ++i;
            out.push_back({Tok::Terminator, ";", here});
            continue;
        }
        if (std::string("+-*/^(),=").find(c) != std::string::npos) {
            if (c == '(') ++depth;
            if (c == ')') depth = depth > 0 ? depth - 1 : 0;
            advance(c);
            ++i;
            out.push_back({Tok::Punct, std::string(1, c), here});
            continue;
        }
        throw ParseError(file, here, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", pos});
    return out;
}

/// Value of an expression: a scalar polynomial plus one coefficient
/// polynomial per differential generator d(x_j).
struct ExprValue {
    QPoly scalar;
    std::vector<QPoly> dcoeff;

    explicit ExprValue(std::size_t m) : scalar(m), dcoeff(m, QPoly(m)) {}
    bool has_d() const {
        for (const auto& c : dcoeff)
            if (!c.is_zero()) return true;
        return false;
    }
};

class Parser {
  public:
    Parser(std::string text, std::string file)
        : file_(std::move(file)), toks_(lex(text, file_)) {}

    SourceFile run() {
        SourceFile out;
        skip_terminators();
        while (!at(Tok::End)) {
            const Token head = expect(Tok::Ident, "statement keyword");
            if (head.text == "vars") {
                if (!out.vars.empty()) throw err(head.pos, "duplicate vars statement");
                parse_vars(out);
            } else if (head.text == "truncation") {
                if (out.truncation != kOrderUnbounded)
                    throw err(head.pos, "duplicate truncation statement");
                const Token n = expect(Tok::Integer, "truncation order");
                if (n.text.size() > 6) throw err(n.pos, "truncation order out of range");
                out.truncation = std::stoi(n.text);
                if (out.truncation < 1) throw err(n.pos, "truncation order must be at least 1");
            } else if (head.text == "field" || head.text == "integral" || head.text == "point") {
                if (out.vars.empty()) throw err(head.pos, "vars must be declared first");
                const Token name = expect(Tok::Ident, head.text + " name");
                check_fresh(out, name);
                expect_punct("=");
                if (head.text == "field") {
                    ExprValue v = parse_expr(out);
                    if (!v.scalar.is_zero())
                        throw err(name.pos, "field " + name.text +
                                                " has a non-differential part: " + v.scalar.str(out.vars));
                    out.fields.emplace_back(name.text, PolyVectorField<Rational>(std::move(v.dcoeff)));
                } else if (head.text == "integral") {
                    ExprValue v = parse_expr(out);
                    if (v.has_d())
                        throw err(name.pos, "integral " + name.text + " contains differential generators");
                    out.integrals.emplace_back(name.text, std::move(v.scalar));
                } else {
                    out.points.emplace_back(name.text, parse_point(out, name.pos));
                }
            } else {
                throw err(head.pos, "unknown statement '" + head.text + "'");
            }
            end_statement();
        }
        if (out.vars.empty()) throw err(toks_.back().pos, "missing vars statement");
        if (out.fields.empty()) throw err(toks_.back().pos, "system declares no fields");
        return out;
    }

  private:
    ParseError err(SourcePos pos, const std::string& msg) const { return ParseError(file_, pos, msg); }

    const Token& peek() const { return toks_[at_]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_punct(const std::string& p) const { return at(Tok::Punct) && peek().text == p; }
    Token take() { return toks_[at_++]; }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) throw err(peek().pos, "expected " + what + ", found '" + peek().text + "'");
        return take();
    }
    void expect_punct(const std::string& p) {
        if (!at_punct(p)) throw err(peek().pos, "expected '" + p + "', found '" + peek().text + "'");
        take();
    }
    void skip_terminators() {
        while (at(Tok::Terminator)) take();
    }
    void end_statement() {
        if (at(Tok::End)) return;
        if (!at(Tok::Terminator))
            throw err(peek().pos, "expected end of statement, found '" + peek().text + "'");
        skip_terminators();
    }

    void parse_vars(SourceFile& out) {
        while (true) {
            const Token v = expect(Tok::Ident, "variable name");
            for (const auto& existing : out.vars)
                if (existing == v.text) throw err(v.pos, "duplicate variable " + v.text);
            out.vars.push_back(v.text);
            if (at_punct(",")) {
                take();
                continue;
            }
            if (at(Tok::Ident)) continue;  // bare space-separated list
            break;
        }
    }

    void check_fresh(const SourceFile& out, const Token& name) const {
        for (const auto& [n, f] : out.fields)
            if (n == name.text) throw err(name.pos, "duplicate name " + name.text);
        for (const auto& [n, f] : out.integrals)
            if (n == name.text) throw err(name.pos, "duplicate name " + name.text);
        for (const auto& [n, f] : out.points)
            if (n == name.text) throw err(name.pos, "duplicate name " + name.text);
    }

    std::vector<Rational> parse_point(const SourceFile& out, SourcePos at_pos) {
        expect_punct("(");
        std::vector<Rational> coords;
        while (true) {
            const SourcePos here = peek().pos;
            ExprValue v = parse_expr(out);
            if (v.has_d() || v.scalar.degree() > 0)
                throw err(here, "point coordinates must be rational constants");
            coords.push_back(v.scalar.constant_term());
            if (at_punct(",")) {
                take();
                continue;
            }
            break;
        }
        expect_punct(")");
        if (coords.size() != out.vars.size())
            throw err(at_pos, "point has " + std::to_string(coords.size()) + " coordinates for " +
                                  std::to_string(out.vars.size()) + " variables");
        return coords;
    }

    ExprValue parse_expr(const SourceFile& out) {
        ExprValue v = parse_term(out);
        while (at_punct("+") || at_punct("-")) {
            const bool minus = take().text == "-";
            ExprValue r = parse_term(out);
            if (minus) {
                v.scalar -= r.scalar;
                for (std::size_t j = 0; j < v.dcoeff.size(); ++j) v.dcoeff[j] -= r.dcoeff[j];
            } else {
                v.scalar += r.scalar;
                for (std::size_t j = 0; j < v.dcoeff.size(); ++j) v.dcoeff[j] += r.dcoeff[j];
            }
        }
        return v;
    }

    ExprValue parse_term(const SourceFile& out) {
        ExprValue v = parse_factor(out);
        while (at_punct("*") || at_punct("/")) {
            const Token op = take();
            ExprValue r = parse_factor(out);
            if (op.text == "*") {
                if (v.has_d() && r.has_d())
                    throw err(op.pos, "differential generators cannot be multiplied together");
                if (r.has_d()) std::swap(v, r);
                for (std::size_t j = 0; j < v.dcoeff.size(); ++j)
                    v.dcoeff[j] = v.dcoeff[j] * r.scalar;
                v.scalar = v.scalar * r.scalar;
            } else {
                if (r.has_d() || r.scalar.degree() > 0)
                    throw err(op.pos, "division is only defined by nonzero rational constants");
                const Rational c = r.scalar.constant_term();
                if (c.is_zero()) throw err(op.pos, "division by zero");
                const Rational inv = c.reciprocal();
                v.scalar = inv * v.scalar;
                for (auto& d : v.dcoeff) d = inv * d;
            }
        }
        return v;
    }

    ExprValue parse_factor(const SourceFile& out) {
        bool neg = false;
        while (at_punct("-") || at_punct("+")) neg ^= (take().text == "-");
        ExprValue v = parse_primary(out);
        if (at_punct("^")) {
            const Token op = take();
            if (v.has_d()) throw err(op.pos, "differential generators cannot be raised to powers");
            const Token e = expect(Tok::Integer, "exponent");
            if (e.text.size() > 6) throw err(e.pos, "exponent out of range");
            const int k = std::stoi(e.text);
            QPoly acc = QPoly::constant(out.vars.size(), Rational(1));
            for (int it = 0; it < k; ++it) acc = acc * v.scalar;
            v.scalar = std::move(acc);
        }
        if (neg) {
            v.scalar = -v.scalar;
            for (auto& d : v.dcoeff) d = -d;
        }
        return v;
    }

    ExprValue parse_primary(const SourceFile& out) {
        const std::size_t m = out.vars.size();
        if (at(Tok::Integer)) {
            const Token n = take();
            ExprValue v(m);
            v.scalar = QPoly::constant(m, Rational(Int(n.text)));
            return v;
        }
        if (at_punct("(")) {
            take();
            ExprValue v = parse_expr(out);
            expect_punct(")");
            return v;
        }
        if (at(Tok::Ident)) {
            const Token id = take();
            if (id.text == "d" && at_punct("(")) {
                take();
                const Token var = expect(Tok::Ident, "variable name");
                expect_punct(")");
                ExprValue v(m);
                v.dcoeff[var_index(out, var)] = QPoly::constant(m, Rational(1));
                return v;
            }
            ExprValue v(m);
            v.scalar = QPoly::variable(m, var_index(out, id));
            return v;
        }
        throw err(peek().pos, "expected an expression, found '" + peek().text + "'");
    }

    std::size_t var_index(const SourceFile& out, const Token& id) const {
        for (std::size_t j = 0; j < out.vars.size(); ++j)
            if (out.vars[j] == id.text) return j;
        throw err(id.pos, "unknown variable " + id.text);
    }

    std::string file_;
    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

}  // namespace dsl_detail

/// Parses a system description. Statements: `vars`, `truncation`, `field`,
/// `integral`, `point`, separated by `;` or line breaks; `#` comments.
inline SourceFile parse_system(const std::string& text, const std::string& file = "<input>") {
    return dsl_detail::Parser(text, file).run();
}

/// Canonical text form: fixed statement order, fixed spacing, monomials in
/// ascending graded order. Printing is idempotent across a parse round trip.
inline std::string print_system(const SourceFile& src) {
    std::string out = "vars ";
    for (std::size_t j = 0; j < src.vars.size(); ++j) {
        if (j) out += ", ";
        out += src.vars[j];
    }
    out += ";\n";
    if (src.truncation != kOrderUnbounded)
        out += "truncation " + std::to_string(src.truncation) + ";\n";
    for (const auto& [name, f] : src.fields)
        out += "field " + name + " = " + f.str(src.vars) + ";\n";
    for (const auto& [name, f] : src.integrals)
        out += "integral " + name + " = " + f.str(src.vars) + ";\n";
    for (const auto& [name, p] : src.points) {
        out += "point " + name + " = (";
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) out += ", ";
            out += p[j].str();
        }
        out += ");\n";
    }
    return out;
}

}  // namespace isl
