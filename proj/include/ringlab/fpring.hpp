// Finitely presented rings Z[x1..xn]/(p1..pm) as syntactic data, primitive
// morphisms between them, and the finite colimits built from presentations:
// pushouts, coequalizers, tensor products and finite diagram colimits.
//
// Presentations are never normalized or minimized; equality is structural.
// Fresh variables in pushout/tensor/colimit constructions shift the second
// factor's indices by the first's variable count, and the symbol table keeps
// primed names for printing.
#ifndef RINGLAB_FPRING_HPP
#define RINGLAB_FPRING_HPP

#include <string>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

struct Presentation {
    int nvars = 0;
    std::vector<Poly> relations;          // integer polynomials in vars < nvars
    std::string label;
    std::vector<std::string> var_names;   // display only; may be shorter than nvars

    bool operator==(const Presentation& o) const {
        return nvars == o.nvars && relations == o.relations;
    }

    void validate() const {
        for (const Poly& r : relations) {
            if (r.modulus() != 0)
                throw invalid_argument_error("Presentation: relations must have integer coefficients");
            if (r.max_var() >= nvars)
                throw invalid_argument_error("Presentation: relation uses undeclared variable");
        }
    }

    std::string var_name(int v) const { return default_var_name(v, var_names); }

    std::vector<std::string> all_var_names() const {
        std::vector<std::string> ns;
        for (int v = 0; v < nvars; ++v) ns.push_back(var_name(v));
        return ns;
    }

    std::string to_string() const {
        std::string s = "Z[";
        for (int v = 0; v < nvars; ++v) {
            if (v) s += ",";
            s += var_name(v);
        }
        s += "]";
        if (!relations.empty()) {
            s += "/(";
            for (std::size_t i = 0; i < relations.size(); ++i) {
                if (i) s += ", ";
                s += poly_to_string(relations[i], var_names);
            }
            s += ")";
        }
        return s;
    }

    static Presentation free_ring(int n, std::vector<std::string> names = {}) {
        Presentation p;
        p.nvars = n;
        p.var_names = std::move(names);
        return p;
    }

    // Z, the initial ring
    static Presentation integers() { return {}; }

    // the trivial ring 1, presented as Z[]/(1)
    static Presentation one() {
        Presentation p;
        p.relations.push_back(Poly::constant(1));
        p.label = "ONE";
        return p;
    }
};

// verification status of a primitive morphism (well-definedness)
enum class Verification { Refuted = 0, Unknown = 1, Assumed = 2, Proved = 3 };

inline const char* to_string(Verification v) {
    switch (v) {
        case Verification::Refuted: return "refuted";
        case Verification::Unknown: return "unknown";
        case Verification::Assumed: return "assumed";
        case Verification::Proved: return "proved";
    }
    return "?";
}

// A ring homomorphism between presentations, given by a variable-to-polynomial
// map.  Well-defined iff each domain relation maps into the ideal generated by
// the codomain's relations; `verification` records the strongest known status.
struct PrimMorphism {
    Presentation dom, cod;
    std::vector<Poly> images;  // size dom.nvars, polynomials in cod's variables
    Verification verification = Verification::Unknown;
    std::string label;

    void validate() const {
        if (static_cast<int>(images.size()) != dom.nvars)
            throw invalid_argument_error("PrimMorphism: one image per domain variable required");
        for (const Poly& q : images) {
            if (q.modulus() != 0)
                throw invalid_argument_error("PrimMorphism: images must have integer coefficients");
            if (q.max_var() >= cod.nvars)
                throw invalid_argument_error("PrimMorphism: image uses undeclared codomain variable");
        }
    }

    // structural equality of the underlying map (verification tag ignored)
    bool same_map(const PrimMorphism& o) const {
        return dom == o.dom && cod == o.cod && images == o.images;
    }

    bool is_identity() const {
        if (!(dom == cod)) return false;
        for (int i = 0; i < dom.nvars; ++i)
            if (!(images[i] == Poly::variable(i))) return false;
        return true;
    }

    // identity images on the domain variables (x_i -> x_i)
    bool is_variable_inclusion() const {
        if (cod.nvars < dom.nvars) return false;
        for (int i = 0; i < dom.nvars; ++i)
            if (!(images[i] == Poly::variable(i))) return false;
        return true;
    }

    // normal morphism shape: identity on dom variables and cod relations
    // extend dom relations
    bool is_normal() const {
        if (!is_variable_inclusion()) return false;
        if (cod.relations.size() < dom.relations.size()) return false;
        for (std::size_t i = 0; i < dom.relations.size(); ++i)
            if (!(cod.relations[i] == dom.relations[i])) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = dom.to_string() + " -> " + cod.to_string() + " ; ";
        for (int i = 0; i < dom.nvars; ++i) {
            if (i) s += ", ";
            s += dom.var_name(i) + " -> " + poly_to_string(images[i], cod.var_names);
        }
        if (dom.nvars == 0) s += "(no variables)";
        return s;
    }

    static PrimMorphism identity(const Presentation& P) {
        PrimMorphism m;
        m.dom = m.cod = P;
        for (int i = 0; i < P.nvars; ++i) m.images.push_back(Poly::variable(i));
        m.verification = Verification::Proved;
        return m;
    }
};

inline Verification min_verification(Verification a, Verification b) {
    return static_cast<int>(a) < static_cast<int>(b) ? a : b;
}

// n after m: P -> Q -> R
inline PrimMorphism compose(const PrimMorphism& m, const PrimMorphism& n) {
    if (!(m.cod == n.dom)) throw invalid_argument_error("compose: domain mismatch");
    PrimMorphism r;
    r.dom = m.dom;
    r.cod = n.cod;
    for (const Poly& q : m.images) r.images.push_back(q.substitute(n.images));
    r.verification = min_verification(m.verification, n.verification);
    return r;
}

// canonical quotient P -> Z[P vars]/(P relations + extra), identity images
inline PrimMorphism canonical_quotient(const Presentation& P, std::vector<Poly> extra) {
    PrimMorphism m;
    m.dom = P;
    m.cod = P;
    for (Poly& q : extra) {
        if (q.max_var() >= P.nvars)
            throw invalid_argument_error("canonical_quotient: relation uses undeclared variable");
        m.cod.relations.push_back(q);
    }
    m.cod.label.clear();
    for (int i = 0; i < P.nvars; ++i) m.images.push_back(Poly::variable(i));
    m.verification = Verification::Proved;
    return m;
}

// normal morphism Z[xs]/(fs) -> Z[xs,ys]/(fs,gs): identity on xs.
// extra_rels are polynomials in the extended variable list.
inline PrimMorphism normal_morphism(const Presentation& dom, int extra_vars,
                                    std::vector<Poly> extra_rels,
                                    std::vector<std::string> extra_names = {}) {
    PrimMorphism m;
    m.dom = dom;
    m.cod.nvars = dom.nvars + extra_vars;
    m.cod.relations = dom.relations;
    m.cod.var_names = dom.all_var_names();
    for (int j = 0; j < extra_vars; ++j) {
        if (j < static_cast<int>(extra_names.size()))
            m.cod.var_names.push_back(extra_names[j]);
        else
            m.cod.var_names.push_back("y" + std::to_string(j));
    }
    for (Poly& g : extra_rels) {
        if (g.max_var() >= m.cod.nvars)
            throw invalid_argument_error("normal_morphism: relation uses undeclared variable");
        m.cod.relations.push_back(g);
    }
    for (int i = 0; i < dom.nvars; ++i) m.images.push_back(Poly::variable(i));
    m.verification = Verification::Proved;
    return m;
}

namespace detail {

// left names kept, right names primed until distinct
inline std::vector<std::string> merge_var_names(const std::vector<std::string>& left,
                                                const std::vector<std::string>& right) {
    std::vector<std::string> out = left;
    for (std::string n : right) {
        while (std::find(out.begin(), out.end(), n) != out.end()) n += "'";
        out.push_back(n);
    }
    return out;
}

}  // namespace detail

// tensor over Z: disjoint union of variables and relations
inline Presentation tensor(const Presentation& P, const Presentation& Q) {
    Presentation r;
    r.nvars = P.nvars + Q.nvars;
    r.relations = P.relations;
    for (const Poly& q : Q.relations) r.relations.push_back(q.shift_vars(P.nvars));
    r.var_names = detail::merge_var_names(P.all_var_names(), Q.all_var_names());
    return r;
}

struct PushoutResult {
    Presentation apex;       // S
    PrimMorphism from_cod;   // inQ : Q -> S
    PrimMorphism from_other; // inR : R -> S
};

// pushout of m : P -> Q and a : P -> R.  S has Q's variables followed by R's
// (shifted), relations Q's + R's + the identifications m(x_i) = a(x_i).
inline PushoutResult pushout(const PrimMorphism& m, const PrimMorphism& a) {
    if (!(m.dom == a.dom)) throw invalid_argument_error("pushout: domain mismatch");
    const Presentation& Q = m.cod;
    const Presentation& R = a.cod;
    PushoutResult res;
    res.apex = tensor(Q, R);
    for (int i = 0; i < m.dom.nvars; ++i)
        res.apex.relations.push_back(m.images[i] - a.images[i].shift_vars(Q.nvars));

    res.from_cod.dom = Q;
    res.from_cod.cod = res.apex;
    for (int i = 0; i < Q.nvars; ++i) res.from_cod.images.push_back(Poly::variable(i));
    res.from_cod.verification = Verification::Proved;

    res.from_other.dom = R;
    res.from_other.cod = res.apex;
    for (int i = 0; i < R.nvars; ++i) res.from_other.images.push_back(Poly::variable(Q.nvars + i));
    res.from_other.verification = Verification::Proved;
    return res;
}

// coequalizer of the parallel pair u, v : P -> Q; returns the canonical
// quotient Q -> E with E = Q plus the identifications u(x_i) = v(x_i).
inline PrimMorphism coequalizer(const PrimMorphism& u, const PrimMorphism& v) {
    if (!(u.dom == v.dom) || !(u.cod == v.cod))
        throw invalid_argument_error("coequalizer: morphisms are not parallel");
    std::vector<Poly> idents;
    for (int i = 0; i < u.dom.nvars; ++i) {
        Poly d = u.images[i] - v.images[i];
        if (!d.is_zero()) idents.push_back(d);
    }
    return canonical_quotient(u.cod, std::move(idents));
}

// m (x) n : P(x)R -> Q(x)S over Z
inline PrimMorphism tensor_z(const PrimMorphism& m, const PrimMorphism& n) {
    PrimMorphism r;
    r.dom = tensor(m.dom, n.dom);
    r.cod = tensor(m.cod, n.cod);
    r.images = m.images;
    for (const Poly& q : n.images) r.images.push_back(q.shift_vars(m.cod.nvars));
    r.verification = min_verification(m.verification, n.verification);
    return r;
}

// ---------------------------------------------------------------------------
// Finite diagram colimits at the presentation level.  Arrows u : src -> dst
// are primitive morphisms objs[src] -> objs[dst]; the apex is the tensor of
// all objects quotiented by the identifications inj_src(x_i) = inj_dst(u(x_i)).

struct PresArrow {
    int src = 0, dst = 0;
    PrimMorphism u;
};

struct ColimitResult {
    Presentation apex;
    std::vector<PrimMorphism> injections;  // one per object
};

inline ColimitResult pres_colimit(const std::vector<Presentation>& objs,
                                  const std::vector<PresArrow>& arrows) {
    ColimitResult res;
    std::vector<int> offset(objs.size(), 0);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < objs.size(); ++k) {
        offset[k] = res.apex.nvars;
        res.apex.nvars += objs[k].nvars;
        names = detail::merge_var_names(names, objs[k].all_var_names());
        for (const Poly& r : objs[k].relations)
            res.apex.relations.push_back(r.shift_vars(offset[k]));
    }
    res.apex.var_names = names;
    for (const PresArrow& ar : arrows) {
        if (ar.src < 0 || ar.src >= static_cast<int>(objs.size()) || ar.dst < 0 ||
            ar.dst >= static_cast<int>(objs.size()))
            throw invalid_argument_error("pres_colimit: arrow endpoint out of range");
        if (!(ar.u.dom == objs[ar.src]) || !(ar.u.cod == objs[ar.dst]))
            throw invalid_argument_error("pres_colimit: arrow morphism does not match objects");
        for (int i = 0; i < ar.u.dom.nvars; ++i) {
            Poly lhs = Poly::variable(offset[ar.src] + i);
            Poly rhs = ar.u.images[i].shift_vars(offset[ar.dst]);
            Poly d = lhs - rhs;
            if (!d.is_zero()) res.apex.relations.push_back(d);
        }
    }
    for (std::size_t k = 0; k < objs.size(); ++k) {
        PrimMorphism inj;
        inj.dom = objs[k];
        inj.cod = res.apex;
        for (int i = 0; i < objs[k].nvars; ++i)
            inj.images.push_back(Poly::variable(offset[k] + i));
        inj.verification = Verification::Proved;
        res.injections.push_back(std::move(inj));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Presentation text syntax:
//   ring <name> = Z[<vars>]/(<polys>)   |   Z[<vars>]   |   Z[]/(1)
// The "ring <name> =" prefix is optional and sets the label.

inline Presentation parse_presentation(const std::string& text) {
    std::string s = detail::strip(text);
    Presentation p;
    if (s.rfind("ring ", 0) == 0) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) throw parse_error("presentation: expected '='");
        p.label = detail::strip(s.substr(5, eq - 5));
        s = detail::strip(s.substr(eq + 1));
    }
    if (s.rfind("Z[", 0) != 0) throw parse_error("presentation must start with Z[");
    std::size_t close = s.find(']');
    if (close == std::string::npos) throw parse_error("presentation: expected ']'");
    std::string varpart = s.substr(2, close - 2);
    VarTable vt;
    {
        std::size_t start = 0;
        while (start < varpart.size()) {
            std::size_t comma = varpart.find(',', start);
            std::string nm = detail::strip(
                varpart.substr(start, comma == std::string::npos ? std::string::npos
                                                                 : comma - start));
            if (!nm.empty()) vt.lookup_or_add(nm);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    vt.frozen = true;
    p.nvars = static_cast<int>(vt.names.size());
    p.var_names = vt.names;
    std::string rest = detail::strip(s.substr(close + 1));
    if (!rest.empty()) {
        if (rest.size() < 3 || rest[0] != '/' || rest[1] != '(' || rest.back() != ')')
            throw parse_error("presentation: expected /(...) after Z[...]");
        std::string relpart = rest.substr(2, rest.size() - 3);
        int depth = 0;
        std::string current;
        auto flush = [&]() {
            std::string t = detail::strip(current);
            if (!t.empty()) p.relations.push_back(parse_poly(t, vt));
            current.clear();
        };
        for (std::size_t i = 0; i < relpart.size(); ++i) {
            char c = relpart[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                flush();
            } else {
                current += c;
            }
        }
        flush();
    }
    p.validate();
    return p;
}

}  // namespace ringlab

#endif
