// Arithmetic formulas, axioms and theories: a formula on P is a finite set of
// primitive morphisms with domain P, an axiom [P, F] holds in A when
// A_P = union of exists_m A over m in F, and a theory is a set of axioms,
// possibly generated by schemas with an integer cursor.
//
// Also here: satisfaction checking with verified witnesses, universal / Horn /
// negative classification, resultants and complement covers relative to a
// finite family, the change-of-basis constructor for anchored diagrams, the
// builtin theories, and the named relation morphisms (equality, inequality,
// square order, strict order, p-adic divisibility).
#ifndef RINGLAB_THEORY_HPP
#define RINGLAB_THEORY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/checks.hpp"
#include "ringlab/points.hpp"

namespace ringlab {

struct ArithFormula {
    Presentation dom;
    std::vector<PrimMorphism> morphisms;  // all with domain `dom`; may be empty

    void validate() const {
        for (const PrimMorphism& m : morphisms) {
            m.validate();
            if (!(m.dom == dom))
                throw invalid_argument_error("ArithFormula: member domain mismatch");
        }
    }
};

struct Axiom {
    Presentation pres;
    ArithFormula formula;
    std::string name;

    void validate() const {
        if (!(formula.dom == pres)) throw invalid_argument_error("Axiom: formula.dom != pres");
        formula.validate();
    }

    bool same_axiom(const Axiom& o) const {
        if (!(pres == o.pres)) return false;
        if (formula.morphisms.size() != o.formula.morphisms.size()) return false;
        for (std::size_t i = 0; i < formula.morphisms.size(); ++i)
            if (!formula.morphisms[i].same_map(o.formula.morphisms[i])) return false;
        return true;
    }
};

// A schema contributes axioms per integer cursor value; expansion to a bound
// is deterministic.
struct AxiomSchema {
    std::string name;
    int first = 1;
    int step = 1;
    std::function<std::vector<Axiom>(int)> generate;
    std::string dsl_template;  // canonical sentence text with the cursor symbol, when DSL-expressible
};

struct Theory {
    std::string name;
    std::vector<Axiom> axioms;
    std::vector<AxiomSchema> schemas;

    std::vector<Axiom> expand(int bound) const {
        std::vector<Axiom> out = axioms;
        for (const AxiomSchema& s : schemas)
            for (int k = s.first; k <= bound; k += s.step)
                for (Axiom& a : s.generate(k)) out.push_back(std::move(a));
        return out;
    }

    Theory& merge(const Theory& o) {
        for (const Axiom& a : o.axioms) axioms.push_back(a);
        for (const AxiomSchema& s : o.schemas) schemas.push_back(s);
        return *this;
    }
};

// ---------------------------------------------------------------------------
// Satisfaction: A |= [P, F] iff every point of A_P lies in some exists_m A.

struct SatReport {
    std::string axiom_name;
    bool holds = true;
    std::optional<std::vector<int>> witness;  // a point avoiding every member
    std::vector<int> realizers;               // verbose: per point, first realizing member (-1 none)
};

inline SatReport satisfies(const FiniteRing& A, const Axiom& chi, const EnumBudget& budget = {},
                           bool verbose = false) {
    chi.validate();
    SatReport rep;
    rep.axiom_name = chi.name;
    PointSet all = homs(chi.pres, A, budget);
    std::vector<PointSet> member_sets;
    for (const PrimMorphism& m : chi.formula.morphisms)
        member_sets.push_back(exists_set(m, A, budget));
    for (const auto& a : all.members) {
        int realizer = -1;
        for (std::size_t i = 0; i < member_sets.size(); ++i)
            if (member_sets[i].contains(a)) {
                realizer = static_cast<int>(i);
                break;
            }
        if (verbose) rep.realizers.push_back(realizer);
        if (realizer < 0 && rep.holds) {
            rep.holds = false;
            rep.witness = a;
            if (!verbose) break;
        }
    }
    // witness re-check: re-enumerate each member's codomain points directly
    if (rep.witness) {
        for (const PrimMorphism& m : chi.formula.morphisms) {
            PointSet qs = homs(m.cod, A, budget);
            for (const auto& b : qs.members)
                if (precompose_values(m, A, b) == *rep.witness)
                    throw error("satisfies: witness re-verification failed");
        }
    }
    return rep;
}

struct TheorySatEntry {
    SatReport report;
};

inline std::vector<SatReport> satisfies_theory(const FiniteRing& A, const Theory& T, int bound,
                                               const EnumBudget& budget = {},
                                               bool verbose = false) {
    std::vector<SatReport> out;
    for (const Axiom& chi : T.expand(bound)) out.push_back(satisfies(A, chi, budget, verbose));
    return out;
}

// holds in every ring of the family (no claim beyond the family)
inline bool family_consequence(const Axiom& chi, const std::vector<FiniteRing>& family,
                               const EnumBudget& budget = {}) {
    for (const FiniteRing& B : family)
        if (!satisfies(B, chi, budget).holds) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Classification: universal (all members surjective, three-valued), Horn
// (at most one member), negative (no members).

struct AxiomClass {
    Verification universal = Verification::Proved;
    bool horn = false;
    bool negative = false;
    std::vector<Verification> member_surjectivity;
};

inline AxiomClass classify(const Axiom& chi, const GroebnerBudget& budget = {}) {
    chi.validate();
    AxiomClass c;
    c.horn = chi.formula.morphisms.size() <= 1;
    c.negative = chi.formula.morphisms.empty();
    for (const PrimMorphism& m : chi.formula.morphisms) {
        Verification v = is_surjective(m, budget);
        c.member_surjectivity.push_back(v);
        c.universal = min_verification(c.universal, v);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Resultants and complement covers relative to an explicit finite family C.

// n is in the resultant of m relative to the family iff the two exists-sets
// are disjoint in every listed ring.
inline bool resultant_member(const PrimMorphism& n, const PrimMorphism& m,
                             const std::vector<FiniteRing>& C, const EnumBudget& budget = {}) {
    if (!(n.dom == m.dom)) throw invalid_argument_error("resultant_member: domain mismatch");
    for (const FiniteRing& B : C) {
        PointSet em = exists_set(m, B, budget);
        PointSet en = exists_set(n, B, budget);
        for (const auto& v : en.members)
            if (em.contains(v)) return false;
    }
    return true;
}

struct CoverEntry {
    std::string ring;
    bool exact = true;
    std::vector<std::vector<int>> uncovered;  // complement points missed by the union
    std::vector<std::vector<int>> excess;     // union points inside exists_m (or outside B_P)
};

struct CoverReport {
    std::vector<CoverEntry> entries;
    bool all_exact = true;
};

// does union of exists_n (n in X) equal B_P - exists_m exactly, per ring of C
inline CoverReport complement_cover(const PrimMorphism& m, const std::vector<PrimMorphism>& X,
                                    const std::vector<FiniteRing>& C,
                                    const EnumBudget& budget = {}) {
    for (const PrimMorphism& n : X)
        if (!(n.dom == m.dom)) throw invalid_argument_error("complement_cover: domain mismatch");
    CoverReport rep;
    for (const FiniteRing& B : C) {
        CoverEntry entry;
        entry.ring = B.name();
        PointSet all = homs(m.dom, B, budget);
        PointSet em = exists_set(m, B, budget);
        std::vector<std::vector<int>> un;
        for (const PrimMorphism& n : X) {
            PointSet en = exists_set(n, B, budget);
            un.insert(un.end(), en.members.begin(), en.members.end());
        }
        detail::sort_unique(un);
        for (const auto& a : all.members) {
            bool in_complement = !em.contains(a);
            bool in_union = std::binary_search(un.begin(), un.end(), a);
            if (in_complement && !in_union) entry.uncovered.push_back(a);
            if (!in_complement && in_union) entry.excess.push_back(a);
        }
        entry.exact = entry.uncovered.empty() && entry.excess.empty();
        rep.all_exact = rep.all_exact && entry.exact;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Change of basis (the diagram-to-axiom constructor): given primitive
// morphisms with parameters anchored at objects of a finite anchored diagram,
// build the axiom [P*, {m_k*}] with P* the colimit and m_k* the pushout of
// m_k along the anchor's injection.

inline Axiom change_of_basis(const std::vector<std::pair<PrimMorphism, int>>& X,
                             const Diagram& D) {
    ColimitResult col = colimit(D);
    Axiom chi;
    chi.pres = col.apex;
    chi.formula.dom = col.apex;
    chi.name = "change_of_basis";
    for (const auto& [m, obj] : X) {
        if (obj < 0 || obj >= static_cast<int>(D.objects.size()))
            throw invalid_argument_error("change_of_basis: anchor object out of range");
        if (!(m.dom == D.objects[obj]))
            throw invalid_argument_error("change_of_basis: morphism not anchored at its object");
        PushoutResult po = pushout(m, col.injections[obj]);
        chi.formula.morphisms.push_back(po.from_other);  // P* -> Q_k*
    }
    return chi;
}

// Both sides of the change-of-basis equivalence for a vertex B: satisfaction
// of [P*, {m_k*}], and "every cocone realises some (m_k, a_k)".
struct DiamorCheck {
    bool axiom_holds = false;
    bool cocones_realise = false;
    bool agree() const { return axiom_holds == cocones_realise; }
};

inline DiamorCheck diamor_check(const Diagram& D, const std::vector<std::pair<PrimMorphism, int>>& X,
                                const FiniteRing& B, const EnumBudget& budget = {}) {
    DiamorCheck out;
    Axiom chi = change_of_basis(X, D);
    out.axiom_holds = satisfies(B, chi, budget).holds;
    std::vector<PointSet> member_sets;
    for (const auto& [m, obj] : X) member_sets.push_back(exists_set(m, B, budget));
    out.cocones_realise = true;
    for (const Cocone& c : cocones(D, B, budget)) {
        bool realised = false;
        for (std::size_t k = 0; k < X.size() && !realised; ++k)
            realised = member_sets[k].contains(c[X[k].second]);
        if (!realised) {
            out.cocones_realise = false;
            break;
        }
    }
    return out;
}

// (m, a) pairs from the pool that A avoids, with a ranging over all points of
// dom(m); every reported pair is re-checked by enumeration.
inline std::vector<std::pair<std::size_t, std::vector<int>>> negative_diagram(
    const FiniteRing& A, const std::vector<PrimMorphism>& pool, const EnumBudget& budget = {}) {
    std::vector<std::pair<std::size_t, std::vector<int>>> out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        PointSet em = exists_set(pool[i], A, budget);
        for (const auto& a : homs(pool[i].dom, A, budget).members)
            if (!em.contains(a)) out.emplace_back(i, a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named relation morphisms (graphs of =, !=, <=, < and p-adic divisibility).

inline Presentation pres_xy() { return Presentation::free_ring(2, {"x", "y"}); }

// e : Z[x,y] -> Z[x,y]/(x-y)
inline PrimMorphism equality_morphism() {
    PrimMorphism m = canonical_quotient(pres_xy(), {Poly::variable(0) - Poly::variable(1)});
    m.label = "e";
    return m;
}

// i : Z[x,y] -> Z[x,y,z]/(z(y-x)-1)
inline PrimMorphism inequality_morphism() {
    Poly z = Poly::variable(2), x = Poly::variable(0), y = Poly::variable(1);
    PrimMorphism m = normal_morphism(pres_xy(), 1, {z * (y - x) - Poly::constant(1)}, {"z"});
    m.label = "i";
    return m;
}

// o : Z[x,y] -> Z[x,y,z]/(z^2-y+x)
inline PrimMorphism square_order_morphism() {
    Poly z = Poly::variable(2), x = Poly::variable(0), y = Poly::variable(1);
    PrimMorphism m = normal_morphism(pres_xy(), 1, {z.pow(2) - y + x}, {"z"});
    m.label = "o";
    return m;
}

// s : Z[x,y] -> Z[x,y,z]/(z^2(x-y)-1)
inline PrimMorphism strict_order_morphism() {
    Poly z = Poly::variable(2), x = Poly::variable(0), y = Poly::variable(1);
    PrimMorphism m = normal_morphism(pres_xy(), 1, {z.pow(2) * (x - y) - Poly::constant(1)}, {"z"});
    m.label = "s";
    return m;
}

// d_p : Z[x,y] -> Z[x,y,z]/(f_p), f_2 = z^3(x^3+2y^3)-1, f_p = z^2(x^2+py^2)-1
inline PrimMorphism dp_morphism(long p) {
    if (p < 2 || !FiniteRing::is_prime(p))
        throw invalid_argument_error("dp_morphism: p must be prime");
    Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2);
    Poly f = p == 2 ? z.pow(3) * (x.pow(3) + Poly::constant(2) * y.pow(3)) - Poly::constant(1)
                    : z.pow(2) * (x.pow(2) + Poly::constant(p) * y.pow(2)) - Poly::constant(1);
    PrimMorphism m = normal_morphism(pres_xy(), 1, {f}, {"z"});
    m.label = "d_" + std::to_string(p);
    return m;
}

inline std::optional<PrimMorphism> named_morphism(const std::string& name) {
    if (name == "e") return equality_morphism();
    if (name == "i") return inequality_morphism();
    if (name == "o") return square_order_morphism();
    if (name == "s") return strict_order_morphism();
    if (name.rfind("dp", 0) == 0 && name.size() > 2) {
        std::string num = name.substr(2);
        if (num.find_first_not_of("0123456789") == std::string::npos)
            return dp_morphism(std::stol(num));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Builtin theories.

namespace builtin_detail {

inline Axiom nontrivial_axiom() {
    Axiom a;
    a.pres = Presentation::one();
    a.formula.dom = a.pres;
    a.name = "nontrivial";
    return a;
}

inline Axiom char_axiom(long n) {
    Axiom a;
    a.pres = Presentation::integers();
    a.formula.dom = a.pres;
    PrimMorphism m;
    m.dom = a.pres;
    m.cod.nvars = 0;
    m.cod.relations.push_back(Poly::constant(n));
    m.verification = Verification::Proved;
    a.formula.morphisms.push_back(std::move(m));
    a.name = "char(" + std::to_string(n) + ")";
    return a;
}

inline Axiom char0_axiom(int n) {
    Axiom a;
    a.pres.nvars = 0;
    a.pres.relations.push_back(Poly::constant(n));
    a.formula.dom = a.pres;
    a.name = "char0[n=" + std::to_string(n) + "]";
    return a;
}

inline Axiom id_axiom() {
    Presentation P = Presentation::free_ring(2, {"x", "y"});
    P.relations.push_back(Poly::variable(0) * Poly::variable(1));
    Axiom a;
    a.pres = P;
    a.formula.dom = P;
    a.formula.morphisms.push_back(canonical_quotient(P, {Poly::variable(0)}));
    a.formula.morphisms.push_back(canonical_quotient(P, {Poly::variable(1)}));
    a.name = "t_id.no-zero-divisors";
    return a;
}

inline Axiom rr_axiom(int n) {
    Presentation P = Presentation::free_ring(1, {"x"});
    P.relations.push_back(Poly::variable(0).pow(static_cast<unsigned>(n)));
    Axiom a;
    a.pres = P;
    a.formula.dom = P;
    a.formula.morphisms.push_back(canonical_quotient(P, {Poly::variable(0)}));
    a.name = "t_rr[n=" + std::to_string(n) + "]";
    return a;
}

inline Axiom field_axiom() {
    Presentation P = Presentation::free_ring(1, {"x"});
    Axiom a;
    a.pres = P;
    a.formula.dom = P;
    a.formula.morphisms.push_back(canonical_quotient(P, {Poly::variable(0)}));
    a.formula.morphisms.push_back(normal_morphism(
        P, 1, {Poly::variable(0) * Poly::variable(1) - Poly::constant(1)}, {"y"}));
    a.name = "t_f.inverses";
    return a;
}

inline Axiom acf_axiom(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    Presentation P = Presentation::free_ring(n, names);
    Poly y = Poly::variable(n);
    Poly g = y.pow(static_cast<unsigned>(n));
    for (int i = 1; i <= n; ++i)
        g = g + Poly::variable(i - 1) * y.pow(static_cast<unsigned>(n - i));
    Axiom a;
    a.pres = P;
    a.formula.dom = P;
    a.formula.morphisms.push_back(normal_morphism(P, 1, {g}, {"y"}));
    a.name = "t_acf[n=" + std::to_string(n) + "]";
    return a;
}

inline Axiom rd_axiom(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    Presentation P = Presentation::free_ring(n, names);
    Poly s = Poly::zero();
    for (int i = 0; i < n; ++i) s = s + Poly::variable(i).pow(2);
    P.relations.push_back(s);
    Axiom a;
    a.pres = P;
    a.formula.dom = P;
    a.formula.morphisms.push_back(canonical_quotient(P, {Poly::variable(0)}));
    a.name = "t_rd[n=" + std::to_string(n) + "]";
    return a;
}

inline Axiom pr_axiom(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    Presentation P = Presentation::free_ring(n, names);
    Poly s = Poly::constant(1);
    for (int i = 0; i < n; ++i) s = s + Poly::variable(i).pow(2);
    P.relations.push_back(s);
    Axiom a;
    a.pres = P;
    a.formula.dom = P;
    a.name = "t_pr[n=" + std::to_string(n) + "]";
    return a;
}

inline Axiom rcf_square_axiom() {
    Presentation P = Presentation::free_ring(1, {"x"});
    Poly x = Poly::variable(0), y = Poly::variable(1);
    Axiom a;
    a.pres = P;
    a.formula.dom = P;
    a.formula.morphisms.push_back(normal_morphism(P, 1, {y.pow(2) - x}, {"y"}));
    a.formula.morphisms.push_back(normal_morphism(P, 1, {y.pow(2) + x}, {"y"}));
    a.name = "t_rcf.squares";
    return a;
}

inline Axiom real_horn_axiom(int m, int n) {
    std::vector<std::string> names{"x"};
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    Presentation P = Presentation::free_ring(n + 1, names);
    Poly s = Poly::variable(0).pow(static_cast<unsigned>(2 * m));
    for (int i = 1; i <= n; ++i) s = s + Poly::variable(i).pow(2);
    P.relations.push_back(s);
    Axiom a;
    a.pres = P;
    a.formula.dom = P;
    a.formula.morphisms.push_back(canonical_quotient(P, {Poly::variable(0)}));
    a.name = "real_horn[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]";
    return a;
}

}  // namespace builtin_detail

// Theories with schemas attached; expand with Theory::expand(bound).
inline Theory builtin_theory(const std::string& name) {
    using namespace builtin_detail;
    Theory T;
    T.name = name;
    if (name == "nontrivial") {
        T.axioms.push_back(nontrivial_axiom());
        return T;
    }
    if (name.rfind("char(", 0) == 0 && name.back() == ')') {
        long n = std::stol(name.substr(5, name.size() - 6));
        if (n < 2) throw invalid_argument_error("char(n) requires n >= 2");
        T.axioms.push_back(char_axiom(n));
        return T;
    }
    if (name == "char0") {
        T.schemas.push_back({"char0", 1, 1, [](int n) { return std::vector<Axiom>{char0_axiom(n)}; }, ""});
        return T;
    }
    if (name == "t_id") {
        T.axioms.push_back(nontrivial_axiom());
        T.axioms.push_back(id_axiom());
        return T;
    }
    if (name == "t_rr") {
        T.schemas.push_back({"t_rr", 1, 1, [](int n) { return std::vector<Axiom>{rr_axiom(n)}; }, ""});
        return T;
    }
    if (name == "t_f") {
        T = builtin_theory("t_id");
        T.name = name;
        T.axioms.push_back(field_axiom());
        return T;
    }
    if (name == "t_acf") {
        T = builtin_theory("t_f");
        T.name = name;
        T.schemas.push_back({"t_acf", 1, 1, [](int n) { return std::vector<Axiom>{acf_axiom(n)}; }, ""});
        return T;
    }
    if (name == "t_rd") {
        T = builtin_theory("t_id");
        T.name = name;
        T.schemas.push_back({"t_rd", 1, 1, [](int n) { return std::vector<Axiom>{rd_axiom(n)}; }, ""});
        return T;
    }
    if (name == "t_rf") {
        T = builtin_theory("t_f");
        T.name = name;
        Theory rd = builtin_theory("t_rd");
        // t_rd repeats t_id; keep only its schema part on top of t_f
        T.schemas.insert(T.schemas.end(), rd.schemas.begin(), rd.schemas.end());
        return T;
    }
    if (name == "t_pr") {
        T.schemas.push_back({"t_pr", 0, 1, [](int n) { return std::vector<Axiom>{pr_axiom(n)}; }, ""});
        return T;
    }
    if (name == "t_rcf") {
        T = builtin_theory("t_rf");
        T.name = name;
        T.axioms.push_back(rcf_square_axiom());
        T.schemas.push_back({"t_rcf.odd", 1, 2,
                             [](int n) {
                                 Axiom a = acf_axiom(n);
                                 a.name = "t_rcf.odd[n=" + std::to_string(n) + "]";
                                 return std::vector<Axiom>{a};
                             },
                             ""});
        return T;
    }
    if (name == "real_horn") {
        T.schemas.push_back({"real_horn", 0, 1,
                             [](int k) {
                                 std::vector<Axiom> out;
                                 // all pairs (m, n) with max(m, n) == k
                                 for (int m = 0; m <= k; ++m)
                                     for (int n = 0; n <= k; ++n)
                                         if (std::max(m, n) == k)
                                             out.push_back(real_horn_axiom(m, n));
                                 return out;
                             },
                             ""});
        return T;
    }
    if (name.rfind("dp(", 0) == 0 && name.back() == ')') {
        long p = std::stol(name.substr(3, name.size() - 4));
        Axiom a;
        a.pres = pres_xy();
        a.formula.dom = a.pres;
        a.formula.morphisms.push_back(dp_morphism(p));
        a.name = "dp(" + std::to_string(p) + ")";
        T.axioms.push_back(std::move(a));
        return T;
    }
    throw invalid_argument_error("unknown builtin theory '" + name + "'");
}

// builtin theory with its schemas expanded to the bound
inline Theory builtin(const std::string& name, int bound) {
    Theory T = builtin_theory(name);
    Theory out;
    out.name = T.name;
    out.axioms = T.expand(bound);
    return out;
}

}  // namespace ringlab

#endif
