// Concrete syntax for arithmetic theories.
//
//   theory <name>:
//   # comment
//   forall x,y (x*y = 0) => (x = 0) \/ (y = 0)
//   true => (6 = 0)
//   forall x (x = 0) => false
//   for n in 1..
//   forall x (x^n = 0) => (x = 0)
//
// A sentence  forall xs (/\ f_i = 0) => \/_j exists ys_j (/\ g_jl = 0)
// becomes the normal axiom [Z[xs]/(fs), {Z[xs]/(fs) -> Z[xs,ys_j]/(fs,gs_j)}].
// The left side may also be `true` (no relations) or a bare parenthesized
// conjunction (no quantified variables, as in the nontriviality axiom
// `(1 = 0) => false`), and `forall xs true => ...` is accepted for relation-
// free domains.  A `for n in 1..` header turns the following sentence into an
// axiom schema with cursor n (usable in exponents and as an integer literal).
// The printer emits exactly this grammar and is golden-file stable.
#ifndef RINGLAB_DSL_HPP
#define RINGLAB_DSL_HPP

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/theory.hpp"

namespace ringlab {

namespace dsl {

// ---------------------------------------------------------------------------
// Expression templates: polynomials whose integer literals and exponents may
// be the schema cursor.

struct PExpr;
using PExprPtr = std::shared_ptr<const PExpr>;

struct PExpr {
    enum class K { Num, Cursor, Var, Add, Sub, Mul, Neg, Pow };
    K k = K::Num;
    Int num;
    std::string var;
    PExprPtr l, r;
    int exp = 0;
    bool exp_is_cursor = false;

    static PExprPtr number(Int v) {
        auto e = std::make_shared<PExpr>();
        e->k = K::Num;
        e->num = std::move(v);
        return e;
    }
    static PExprPtr cursor() {
        auto e = std::make_shared<PExpr>();
        e->k = K::Cursor;
        return e;
    }
    static PExprPtr variable(std::string n) {
        auto e = std::make_shared<PExpr>();
        e->k = K::Var;
        e->var = std::move(n);
        return e;
    }
    static PExprPtr binary(K kk, PExprPtr a, PExprPtr b) {
        auto e = std::make_shared<PExpr>();
        e->k = kk;
        e->l = std::move(a);
        e->r = std::move(b);
        return e;
    }
    static PExprPtr negate(PExprPtr a) {
        auto e = std::make_shared<PExpr>();
        e->k = K::Neg;
        e->l = std::move(a);
        return e;
    }
    static PExprPtr power(PExprPtr base, int exp, bool is_cursor) {
        auto e = std::make_shared<PExpr>();
        e->k = K::Pow;
        e->l = std::move(base);
        e->exp = exp;
        e->exp_is_cursor = is_cursor;
        return e;
    }

    bool uses_cursor() const {
        if (k == K::Cursor) return true;
        if (k == K::Pow && exp_is_cursor) return true;
        if (l && l->uses_cursor()) return true;
        if (r && r->uses_cursor()) return true;
        return false;
    }

    Poly eval(const VarTable& vars, int cursor_value) const {
        switch (k) {
            case K::Num: return Poly::constant(num);
            case K::Cursor:
                if (cursor_value < 0) throw parse_error("cursor used outside a schema");
                return Poly::constant(cursor_value);
            case K::Var: {
                int i = vars.index_of(var);
                if (i < 0) throw parse_error("unknown variable '" + var + "'");
                return Poly::variable(i);
            }
            case K::Add: return l->eval(vars, cursor_value) + r->eval(vars, cursor_value);
            case K::Sub: return l->eval(vars, cursor_value) - r->eval(vars, cursor_value);
            case K::Mul: return l->eval(vars, cursor_value) * r->eval(vars, cursor_value);
            case K::Neg: return -l->eval(vars, cursor_value);
            case K::Pow: {
                int e = exp;
                if (exp_is_cursor) {
                    if (cursor_value < 0) throw parse_error("cursor used outside a schema");
                    e = cursor_value;
                }
                return l->eval(vars, cursor_value).pow(static_cast<unsigned>(e));
            }
        }
        throw parse_error("bad expression");
    }

    // precedence: Add/Sub 0, Mul 1, Neg 1, Pow 2, atoms 3
    int prec() const {
        switch (k) {
            case K::Add:
            case K::Sub: return 0;
            case K::Mul: return 1;
            case K::Neg: return 1;
            case K::Pow: return 2;
            default: return 3;
        }
    }

    std::string print() const {
        auto wrap = [](const PExprPtr& e, int minprec) {
            std::string s = e->print();
            if (e->prec() < minprec) return "(" + s + ")";
            return s;
        };
        switch (k) {
            case K::Num: return num.str();
            case K::Cursor: return "n";
            case K::Var: return var;
            case K::Add: return wrap(l, 0) + " + " + wrap(r, 1);
            case K::Sub: return wrap(l, 0) + " - " + wrap(r, 1);
            case K::Mul: return wrap(l, 1) + "*" + wrap(r, 2);
            case K::Neg: return "-" + wrap(l, 2);
            case K::Pow:
                return wrap(l, 3) + "^" + (exp_is_cursor ? std::string("n") : std::to_string(exp));
        }
        return "?";
    }
};

struct Disjunct {
    std::vector<std::string> exists_vars;
    std::vector<PExprPtr> eqs;  // each equation as lhs - rhs
};

struct Sentence {
    std::vector<std::string> forall_vars;
    std::vector<PExprPtr> lhs;  // empty = true
    bool rhs_false = false;
    std::vector<Disjunct> disjuncts;

    bool uses_cursor() const {
        for (auto& e : lhs)
            if (e->uses_cursor()) return true;
        for (auto& d : disjuncts)
            for (auto& e : d.eqs)
                if (e->uses_cursor()) return true;
        return false;
    }
};

// ---------------------------------------------------------------------------
// Tokenizer

struct Token {
    enum class T { Ident, Int, Sym, End } t = T::End;
    std::string text;
    int col = 0;
};

inline std::vector<Token> tokenize(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') break;  // comment
        int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) ||
                                       line[i] == '_' || line[i] == '\''))
                id += line[i++];
            out.push_back({Token::T::Ident, id, col});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
                num += line[i++];
            out.push_back({Token::T::Int, num, col});
        } else if (line.compare(i, 2, "=>") == 0) {
            out.push_back({Token::T::Sym, "=>", col});
            i += 2;
        } else if (line.compare(i, 2, "\\/") == 0) {
            out.push_back({Token::T::Sym, "\\/", col});
            i += 2;
        } else if (line.compare(i, 2, "/\\") == 0) {
            out.push_back({Token::T::Sym, "/\\", col});
            i += 2;
        } else if (line.compare(i, 2, "..") == 0) {
            out.push_back({Token::T::Sym, "..", col});
            i += 2;
        } else if (std::string("+-*^()=,:").find(c) != std::string::npos) {
            out.push_back({Token::T::Sym, std::string(1, c), col});
            ++i;
        } else {
            throw parse_error(std::string("unexpected character '") + c + "'", lineno, col);
        }
    }
    out.push_back({Token::T::End, "", static_cast<int>(line.size()) + 1});
    return out;
}

struct TokenStream {
    std::vector<Token> toks;
    std::size_t pos = 0;
    int lineno = 0;
    std::string cursor_name;  // nonempty inside a schema sentence

    const Token& peek() const { return toks[pos]; }
    Token get() { return toks[pos++]; }
    bool at_end() const { return toks[pos].t == Token::T::End; }

    bool accept_sym(const std::string& s) {
        if (toks[pos].t == Token::T::Sym && toks[pos].text == s) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect_sym(const std::string& s) {
        if (!accept_sym(s))
            throw parse_error("expected '" + s + "'", lineno, toks[pos].col);
    }
    bool accept_ident(const std::string& s) {
        if (toks[pos].t == Token::T::Ident && toks[pos].text == s) {
            ++pos;
            return true;
        }
        return false;
    }
};

// ---------------------------------------------------------------------------
// Expression parser (over tokens, cursor-aware)

PExprPtr parse_pexpr(TokenStream& ts);

inline PExprPtr parse_patom(TokenStream& ts) {
    const Token& t = ts.peek();
    if (t.t == Token::T::Int) return PExpr::number(Int(ts.get().text));
    if (t.t == Token::T::Ident) {
        std::string id = ts.get().text;
        if (id == ts.cursor_name && !ts.cursor_name.empty()) return PExpr::cursor();
        return PExpr::variable(id);
    }
    if (ts.accept_sym("(")) {
        PExprPtr e = parse_pexpr(ts);
        ts.expect_sym(")");
        return e;
    }
    throw parse_error("expected polynomial atom", ts.lineno, t.col);
}

inline PExprPtr parse_pfactor(TokenStream& ts) {
    PExprPtr base = parse_patom(ts);
    if (ts.accept_sym("^")) {
        const Token& t = ts.peek();
        if (t.t == Token::T::Int) {
            int e = std::stoi(ts.get().text);
            return PExpr::power(base, e, false);
        }
        if (t.t == Token::T::Ident && t.text == ts.cursor_name && !ts.cursor_name.empty()) {
            ts.get();
            return PExpr::power(base, 0, true);
        }
        throw parse_error("expected exponent", ts.lineno, t.col);
    }
    return base;
}

inline PExprPtr parse_pterm(TokenStream& ts) {
    PExprPtr e = parse_pfactor(ts);
    while (ts.accept_sym("*")) e = PExpr::binary(PExpr::K::Mul, e, parse_pfactor(ts));
    return e;
}

inline PExprPtr parse_pexpr(TokenStream& ts) {
    PExprPtr e;
    if (ts.accept_sym("-"))
        e = PExpr::negate(parse_pterm(ts));
    else
        e = parse_pterm(ts);
    while (true) {
        if (ts.accept_sym("+"))
            e = PExpr::binary(PExpr::K::Add, e, parse_pterm(ts));
        else if (ts.accept_sym("-"))
            e = PExpr::binary(PExpr::K::Sub, e, parse_pterm(ts));
        else
            break;
    }
    return e;
}

// equation := poly "=" "0" | poly "=" poly   (stored as the difference)
inline PExprPtr parse_equation(TokenStream& ts) {
    PExprPtr lhs = parse_pexpr(ts);
    ts.expect_sym("=");
    PExprPtr rhs = parse_pexpr(ts);
    if (rhs->k == PExpr::K::Num && rhs->num == 0) return lhs;
    return PExpr::binary(PExpr::K::Sub, lhs, rhs);
}

// conj := "true" | equation ("/\" equation)*
inline std::vector<PExprPtr> parse_conj(TokenStream& ts) {
    std::vector<PExprPtr> eqs;
    if (ts.accept_ident("true")) return eqs;
    eqs.push_back(parse_equation(ts));
    while (ts.accept_sym("/\\")) eqs.push_back(parse_equation(ts));
    return eqs;
}

inline std::vector<std::string> parse_varlist(TokenStream& ts) {
    std::vector<std::string> vars;
    while (true) {
        const Token& t = ts.peek();
        if (t.t != Token::T::Ident) throw parse_error("expected variable name", ts.lineno, t.col);
        std::string nm = ts.get().text;
        if (!ts.cursor_name.empty() && nm == ts.cursor_name)
            throw parse_error("variable shadows the schema cursor", ts.lineno, t.col);
        vars.push_back(nm);
        if (!ts.accept_sym(",")) break;
    }
    return vars;
}

inline Sentence parse_sentence_tokens(TokenStream& ts) {
    Sentence s;
    if (ts.accept_ident("forall")) {
        s.forall_vars = parse_varlist(ts);
        if (ts.accept_ident("true")) {
            // no relations on the left
        } else {
            ts.expect_sym("(");
            s.lhs = parse_conj(ts);
            ts.expect_sym(")");
        }
    } else if (ts.accept_ident("true")) {
        // no variables, no relations
    } else {
        ts.expect_sym("(");
        s.lhs = parse_conj(ts);
        ts.expect_sym(")");
    }
    ts.expect_sym("=>");
    if (ts.accept_ident("false")) {
        s.rhs_false = true;
    } else {
        while (true) {
            Disjunct d;
            if (ts.accept_ident("exists")) {
                d.exists_vars = parse_varlist(ts);
                ts.expect_sym("(");
                d.eqs = parse_conj(ts);
                ts.expect_sym(")");
            } else {
                ts.expect_sym("(");
                d.eqs = parse_conj(ts);
                ts.expect_sym(")");
            }
            s.disjuncts.push_back(std::move(d));
            if (!ts.accept_sym("\\/")) break;
        }
    }
    if (!ts.at_end()) throw parse_error("trailing input after sentence", ts.lineno, ts.peek().col);
    return s;
}

// ---------------------------------------------------------------------------
// Sentence <-> axiom

inline Axiom sentence_to_axiom(const Sentence& s, int cursor_value, const std::string& name) {
    VarTable forall = VarTable::fixed(s.forall_vars);
    Axiom a;
    a.name = name;
    a.pres.nvars = static_cast<int>(s.forall_vars.size());
    a.pres.var_names = s.forall_vars;
    for (const PExprPtr& e : s.lhs) a.pres.relations.push_back(e->eval(forall, cursor_value));
    a.pres.validate();
    a.formula.dom = a.pres;
    if (!s.rhs_false) {
        for (const Disjunct& d : s.disjuncts) {
            std::vector<std::string> all = s.forall_vars;
            for (const std::string& y : d.exists_vars) {
                if (std::find(all.begin(), all.end(), y) != all.end())
                    throw parse_error("existential variable '" + y + "' shadows a universal one");
                all.push_back(y);
            }
            VarTable full = VarTable::fixed(all);
            std::vector<Poly> extra;
            for (const PExprPtr& e : d.eqs) extra.push_back(e->eval(full, cursor_value));
            a.formula.morphisms.push_back(normal_morphism(
                a.pres, static_cast<int>(d.exists_vars.size()), extra, d.exists_vars));
        }
    }
    a.validate();
    return a;
}

inline std::string print_sentence(const Sentence& s) {
    std::string out;
    auto conj = [](const std::vector<PExprPtr>& eqs) {
        if (eqs.empty()) return std::string("true");
        std::string r;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i) r += " /\\ ";
            r += eqs[i]->print() + " = 0";
        }
        return r;
    };
    if (!s.forall_vars.empty()) {
        out += "forall ";
        for (std::size_t i = 0; i < s.forall_vars.size(); ++i) {
            if (i) out += ",";
            out += s.forall_vars[i];
        }
        out += " ";
        out += s.lhs.empty() ? "true" : "(" + conj(s.lhs) + ")";
    } else {
        out += s.lhs.empty() ? "true" : "(" + conj(s.lhs) + ")";
    }
    out += " => ";
    if (s.rhs_false || s.disjuncts.empty()) {
        out += "false";
        return out;
    }
    for (std::size_t j = 0; j < s.disjuncts.size(); ++j) {
        if (j) out += " \\/ ";
        const Disjunct& d = s.disjuncts[j];
        if (!d.exists_vars.empty()) {
            out += "exists ";
            for (std::size_t i = 0; i < d.exists_vars.size(); ++i) {
                if (i) out += ",";
                out += d.exists_vars[i];
            }
            out += " ";
        }
        out += "(" + conj(d.eqs) + ")";
    }
    return out;
}

// An axiom is printable when its members are normal; the sentence prints the
// domain relations and, per member, the codomain relations beyond them.
inline Sentence axiom_to_sentence(const Axiom& a) {
    Sentence s;
    std::vector<std::string> xs = a.pres.all_var_names();
    s.forall_vars = xs;
    VarTable base = VarTable::fixed(xs);
    for (const Poly& r : a.pres.relations) {
        // re-parse the printed polynomial to an expression template
        TokenStream ts{tokenize(poly_to_string(r, xs), 0), 0, 0, ""};
        s.lhs.push_back(parse_pexpr(ts));
    }
    if (a.formula.morphisms.empty()) {
        s.rhs_false = true;
        return s;
    }
    for (const PrimMorphism& m : a.formula.morphisms) {
        if (!m.is_normal())
            throw invalid_argument_error("axiom_to_sentence: member is not a normal morphism");
        Disjunct d;
        std::vector<std::string> all = m.cod.all_var_names();
        for (int j = a.pres.nvars; j < m.cod.nvars; ++j) d.exists_vars.push_back(all[j]);
        for (std::size_t i = a.pres.relations.size(); i < m.cod.relations.size(); ++i) {
            TokenStream ts{tokenize(poly_to_string(m.cod.relations[i], all), 0), 0, 0, ""};
            d.eqs.push_back(parse_pexpr(ts));
        }
        s.disjuncts.push_back(std::move(d));
    }
    return s;
}

inline std::string print_axiom(const Axiom& a) { return print_sentence(axiom_to_sentence(a)); }

}  // namespace dsl

// ---------------------------------------------------------------------------
// Theory files.

inline Theory parse_theory(const std::string& src) {
    Theory T;
    std::istringstream in(src);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::string pending_cursor;  // set by a "for n in 1.." header
    int pending_first = 1;
    int sentence_index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!have_header) {
            std::string head = line;
            std::size_t hash = head.find('#');
            if (hash != std::string::npos) head = head.substr(0, hash);
            head = detail::strip(head);
            if (head.empty()) continue;
            if (head.rfind("theory ", 0) != 0 || head.back() != ':')
                throw parse_error("expected 'theory <name>:'", lineno, 1);
            T.name = detail::strip(head.substr(7, head.size() - 8));
            if (T.name.empty()) throw parse_error("expected theory name", lineno, 8);
            have_header = true;
            continue;
        }
        std::vector<dsl::Token> toks = dsl::tokenize(line, lineno);
        if (toks.size() == 1) continue;  // blank or comment
        dsl::TokenStream ts{std::move(toks), 0, lineno, ""};
        if (ts.accept_ident("for")) {
            if (ts.peek().t != dsl::Token::T::Ident)
                throw parse_error("expected cursor name", lineno, ts.peek().col);
            pending_cursor = ts.get().text;
            if (!ts.accept_ident("in")) throw parse_error("expected 'in'", lineno, ts.peek().col);
            if (ts.peek().t != dsl::Token::T::Int)
                throw parse_error("expected range start", lineno, ts.peek().col);
            pending_first = std::stoi(ts.get().text);
            ts.expect_sym("..");
            if (!ts.at_end()) throw parse_error("trailing input after range", lineno, ts.peek().col);
            continue;
        }
        ts.cursor_name = pending_cursor;
        dsl::Sentence s = dsl::parse_sentence_tokens(ts);
        ++sentence_index;
        std::string base_name = T.name + "." + std::to_string(sentence_index);
        if (!pending_cursor.empty()) {
            AxiomSchema schema;
            schema.name = base_name;
            schema.first = pending_first;
            schema.step = 1;
            schema.dsl_template = dsl::print_sentence(s);
            schema.generate = [s, base_name](int k) {
                return std::vector<Axiom>{
                    dsl::sentence_to_axiom(s, k, base_name + "[n=" + std::to_string(k) + "]")};
            };
            T.schemas.push_back(std::move(schema));
            pending_cursor.clear();
            pending_first = 1;
        } else {
            T.axioms.push_back(dsl::sentence_to_axiom(s, -1, base_name));
        }
    }
    if (!have_header) throw parse_error("empty theory source");
    return T;
}

// one standalone sentence (no theory header), for CLI --axiom
inline Axiom parse_sentence(const std::string& text, const std::string& name = "axiom") {
    dsl::TokenStream ts{dsl::tokenize(text, 1), 0, 1, ""};
    return dsl::sentence_to_axiom(dsl::parse_sentence_tokens(ts), -1, name);
}

// Pretty-printer emitting exactly the grammar above.  Template-backed schemas
// print with their `for` header; native schemas expand to `bound`.
inline std::string print_theory(const Theory& T, int bound) {
    std::string out = "theory " + (T.name.empty() ? std::string("unnamed") : T.name) + ":\n";
    for (const Axiom& a : T.axioms) out += dsl::print_axiom(a) + "\n";
    for (const AxiomSchema& s : T.schemas) {
        if (!s.dsl_template.empty()) {
            out += "for n in " + std::to_string(s.first) + "..\n";
            out += s.dsl_template + "\n";
        } else {
            for (int k = s.first; k <= bound; k += s.step)
                for (const Axiom& a : s.generate(k)) out += dsl::print_axiom(a) + "\n";
        }
    }
    return out;
}

}  // namespace ringlab

#endif
