// The semantic layer over finite rings: point sets A_P = hom(P, A), the
// exists_m calculus, zero sets with parameters, vanishing ideals, Zariski
// closure, relative radicals, Nullstellensatz consistency checks, purity /
// existential-closedness instance checks, anchored diagrams with cocones, and
// the continuation/embedding/special-category searches.
//
// All semantic sets are extensional: members are tuples of element indices,
// kept sorted, so reports are byte-stable.  Enumeration order is always
// lexicographic over the canonical element order.
#ifndef RINGLAB_POINTS_HPP
#define RINGLAB_POINTS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/finring.hpp"
#include "ringlab/fpring.hpp"
#include "ringlab/linalg.hpp"

namespace ringlab {

struct Point {
    FiniteRing ring;
    Presentation pres;
    std::vector<int> values;
};

inline bool is_point_of(const Presentation& P, const FiniteRing& A, const std::vector<int>& values) {
    if (static_cast<int>(values.size()) != P.nvars) return false;
    for (int v : values)
        if (v < 0 || v >= A.cardinality()) return false;
    for (const Poly& r : P.relations)
        if (evaluate(r, A, values) != A.zero()) return false;
    return true;
}

inline Point make_point(const FiniteRing& A, const Presentation& P, std::vector<int> values) {
    if (!is_point_of(P, A, values))
        throw invalid_argument_error("make_point: values do not satisfy the presentation");
    return Point{A, P, std::move(values)};
}

struct PointSet {
    FiniteRing ring;
    Presentation pres;
    std::vector<std::vector<int>> members;  // sorted lexicographically
    std::string provenance;

    bool contains(const std::vector<int>& v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
    std::size_t size() const { return members.size(); }
};

namespace detail {

inline void sort_unique(std::vector<std::vector<int>>& ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

inline void check_enum_budget(const Int& card, int nvars, const EnumBudget& budget,
                              const char* who) {
    Int space = 1;
    for (int i = 0; i < nvars; ++i) {
        space *= card;
        if (space > budget.max_tuples) throw budget_error(std::string(who) + ": enumeration budget exceeded");
    }
}

// odometer over [0, card)^n, last coordinate fastest (lexicographic order)
inline bool next_tuple(std::vector<int>& t, long card) {
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < card) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace detail

// All points of P in A: exactly the tuples satisfying every relation.
inline PointSet homs(const Presentation& P, const FiniteRing& A, const EnumBudget& budget = {}) {
    P.validate();
    detail::check_enum_budget(A.cardinality(), P.nvars, budget, "homs");
    PointSet out{A, P, {}, "homs(" + P.to_string() + ", " + A.name() + ")"};
    std::vector<int> t(P.nvars, 0);
    while (true) {
        bool ok = true;
        for (const Poly& r : P.relations)
            if (evaluate(r, A, t) != A.zero()) {
                ok = false;
                break;
            }
        if (ok) out.members.push_back(t);
        if (P.nvars == 0 || !detail::next_tuple(t, A.cardinality())) break;
    }
    return out;
}

// b |-> b o m = A_m(b) for b a point of cod(m)
inline std::vector<int> precompose_values(const PrimMorphism& m, const FiniteRing& A,
                                          const std::vector<int>& bvals) {
    std::vector<int> out;
    out.reserve(m.images.size());
    for (const Poly& q : m.images) out.push_back(evaluate(q, A, bvals));
    return out;
}

inline Point precompose(const PrimMorphism& m, const Point& b) {
    if (!(b.pres == m.cod)) throw invalid_argument_error("precompose: point not over cod(m)");
    if (!is_point_of(m.cod, b.ring, b.values))
        throw invalid_argument_error("precompose: invalid point");
    return Point{b.ring, m.dom, precompose_values(m, b.ring, b.values)};
}

// exists_m A: image of A_Q under precomposition with m : P -> Q
inline PointSet exists_set(const PrimMorphism& m, const FiniteRing& A,
                           const EnumBudget& budget = {}) {
    m.validate();
    PointSet qs = homs(m.cod, A, budget);
    PointSet out{A, m.dom, {}, "exists[" + m.to_string() + "](" + A.name() + ")"};
    for (const auto& b : qs.members) out.members.push_back(precompose_values(m, A, b));
    detail::sort_unique(out.members);
    return out;
}

// ---------------------------------------------------------------------------
// Polynomials with coefficients in a finite ring A: an integer polynomial in
// X-variables [0, nx) plus parameter variables [nx, nx+params.size()) whose
// values are elements of A.  Pushing the coefficients through a homomorphism
// f : A -> B is evaluation with parameters f(params).

struct ParamPoly {
    Poly p;
    int nx = 0;
    FiniteRing coeff_ring;   // required when params is nonempty
    std::vector<int> params;

    static ParamPoly plain(Poly q, int nx) {
        ParamPoly pp;
        pp.p = std::move(q);
        pp.nx = nx;
        if (pp.p.max_var() >= nx)
            throw invalid_argument_error("ParamPoly::plain: variable out of range");
        return pp;
    }

    static ParamPoly with_params(Poly q, int nx, const FiniteRing& A, std::vector<int> params) {
        ParamPoly pp;
        pp.p = std::move(q);
        pp.nx = nx;
        pp.coeff_ring = A;
        pp.params = std::move(params);
        if (pp.p.max_var() >= nx + static_cast<int>(pp.params.size()))
            throw invalid_argument_error("ParamPoly: variable out of range");
        return pp;
    }

    int eval(const FiniteRing& B, const std::vector<int>& xs, const RingHom* f = nullptr) const {
        if (static_cast<int>(xs.size()) != nx)
            throw invalid_argument_error("ParamPoly::eval: wrong point length");
        std::vector<int> full = xs;
        for (int a : params) {
            if (f) {
                if (!f->dom.same_as(coeff_ring))
                    throw invalid_argument_error("ParamPoly::eval: hom domain mismatch");
                full.push_back(f->images[a]);
            } else {
                if (!B.same_as(coeff_ring))
                    throw invalid_argument_error("ParamPoly::eval: coefficient ring mismatch");
                full.push_back(a);
            }
        }
        return evaluate(p, B, full);
    }
};

// Zero set of a system with coefficients in A, in A^nx (or in B^nx through f).
inline PointSet zero_set(const std::vector<ParamPoly>& gens, int nx, const FiniteRing& A,
                         const RingHom* f = nullptr, const EnumBudget& budget = {}) {
    FiniteRing B = f ? f->cod : A;
    if (f && !f->dom.same_as(A)) throw invalid_argument_error("zero_set: hom domain mismatch");
    for (const ParamPoly& g : gens)
        if (g.nx != nx) throw invalid_argument_error("zero_set: inconsistent variable count");
    detail::check_enum_budget(B.cardinality(), nx, budget, "zero_set");
    PointSet out{B, Presentation::free_ring(nx), {}, "zero_set"};
    std::vector<int> t(nx, 0);
    while (true) {
        bool ok = true;
        for (const ParamPoly& g : gens)
            if (g.eval(B, t, f) != B.zero()) {
                ok = false;
                break;
            }
        if (ok) out.members.push_back(t);
        if (nx == 0 || !detail::next_tuple(t, B.cardinality())) break;
    }
    return out;
}

inline PointSet zero_set(const std::vector<Poly>& gens, int nx, const FiniteRing& A,
                         const RingHom* f = nullptr, const EnumBudget& budget = {}) {
    std::vector<ParamPoly> pps;
    for (const Poly& g : gens) pps.push_back(ParamPoly::plain(g, nx));
    return zero_set(pps, nx, A, f, budget);
}

// true iff q vanishes at every point of E (vacuously true on the empty set)
inline bool vanishes(const ParamPoly& q, const PointSet& E, const RingHom* f = nullptr) {
    for (const auto& member : E.members)
        if (q.eval(E.ring, member, f) != E.ring.zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Zariski closure of a finite subset of A^X: the points satisfying every
// polynomial of per-variable degree < D that vanishes on E.  Over a finite
// field with D = |A| this is Z(I(E)) exactly; over Z/n the bound D must be
// supplied and the result is the D-bounded closure.

inline PointSet zariski_closure(const PointSet& E, std::optional<int> degree_bound = {},
                                const EnumBudget& budget = {}) {
    const FiniteRing& A = E.ring;
    const int n = E.pres.nvars;
    bool field = ring_is_field(A);
    int D;
    if (degree_bound) {
        D = *degree_bound;
        if (D < 1) throw invalid_argument_error("zariski_closure: degree bound must be >= 1");
    } else if (field) {
        D = static_cast<int>(A.cardinality());
    } else {
        throw invalid_argument_error(
            "zariski_closure: non-field ring requires a degree bound");
    }
    if (!field && A.kind() != FiniteRing::Kind::Zmod)
        throw invalid_argument_error("zariski_closure: ring must be a finite field or Z/n");

    // monomial columns: exponent tuples in [0, D)^n, lexicographic
    detail::check_enum_budget(D, n, budget, "zariski_closure");
    detail::check_enum_budget(A.cardinality(), n, budget, "zariski_closure");
    std::vector<std::vector<int>> monos;
    {
        std::vector<int> e(n, 0);
        while (true) {
            monos.push_back(e);
            if (n == 0 || !detail::next_tuple(e, D)) break;
        }
    }
    auto mono_value = [&](const std::vector<int>& e, const std::vector<int>& pt) {
        int v = A.one();
        for (int i = 0; i < n; ++i) v = A.mul(v, A.pow(pt[i], static_cast<unsigned>(e[i])));
        return v;
    };

    std::vector<std::vector<int>> kernel;  // coefficient vectors (element indices)
    if (field) {
        std::vector<std::vector<int>> M;
        for (const auto& pt : E.members) {
            std::vector<int> row;
            row.reserve(monos.size());
            for (const auto& e : monos) row.push_back(mono_value(e, pt));
            M.push_back(std::move(row));
        }
        kernel = field_kernel(A, std::move(M), static_cast<int>(monos.size()));
    } else {
        Int nn = A.cardinality();
        std::vector<std::vector<Int>> M;
        for (const auto& pt : E.members) {
            std::vector<Int> row;
            row.reserve(monos.size());
            for (const auto& e : monos) row.push_back(mono_value(e, pt));
            M.push_back(std::move(row));
        }
        if (M.empty()) M.push_back(std::vector<Int>(monos.size(), 0));
        for (const auto& v : kernel_mod_n(M, nn)) {
            std::vector<int> vi;
            vi.reserve(v.size());
            for (const Int& c : v) vi.push_back(static_cast<int>(static_cast<long>(c)));
            kernel.push_back(std::move(vi));
        }
    }

    PointSet out{A, E.pres, {}, "closure(" + E.provenance + ")"};
    std::vector<int> t(n, 0);
    while (true) {
        bool ok = true;
        if (is_point_of(E.pres, A, t)) {
            for (const auto& coeffs : kernel) {
                int acc = A.zero();
                for (std::size_t c = 0; c < monos.size(); ++c)
                    acc = A.add(acc, A.mul(coeffs[c], mono_value(monos[c], t)));
                if (acc != A.zero()) {
                    ok = false;
                    break;
                }
            }
        } else {
            ok = false;
        }
        if (ok) out.members.push_back(t);
        if (n == 0 || !detail::next_tuple(t, A.cardinality())) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Relative radical membership: q in crad_C(I) iff for every B in C, every
// homomorphism f : A -> B and every point b of Z_f(I), q pushed through f
// vanishes at b.  An empty range yields true.

inline bool crad_member(const ParamPoly& q, const std::vector<ParamPoly>& I, int nx,
                        const FiniteRing& A, const std::vector<FiniteRing>& C,
                        const EnumBudget& budget = {}) {
    for (const FiniteRing& B : C) {
        for (const RingHom& f : ring_homs(A, B, budget)) {
            PointSet zf = zero_set(I, nx, A, &f, budget);
            for (const auto& b : zf.members)
                if (q.eval(B, b, &f) != B.zero()) return false;
        }
    }
    return true;
}

// Relative-Nullstellensatz consistency: per q, compare membership in
// I(Z(I)) over A against crad_C membership.  Mismatches certify failure of
// geometric closedness relative to C.
struct GcEntry {
    bool in_vanishing_of_zero_set;
    bool in_crad;
    bool match() const { return in_vanishing_of_zero_set == in_crad; }
};

struct GcReport {
    std::vector<GcEntry> entries;
    bool consistent = true;
};

inline GcReport gc_check(const FiniteRing& A, const std::vector<FiniteRing>& C,
                         const std::vector<ParamPoly>& I, int nx,
                         const std::vector<ParamPoly>& qs, const EnumBudget& budget = {}) {
    GcReport rep;
    PointSet z = zero_set(I, nx, A, nullptr, budget);
    for (const ParamPoly& q : qs) {
        GcEntry e{vanishes(q, z), crad_member(q, I, nx, A, C, budget)};
        rep.consistent = rep.consistent && e.match();
        rep.entries.push_back(e);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Purity / existential closedness at an instance (m, a):
//   pure condition:  f(a) realized above  =>  a realized below;
//   e.c. condition:  Z_f(I) != 0  =>  Z(I) != 0, for the parameterized system
// obtained from a variable-inclusion m by anchoring the domain variables at a.
// Both phrasings are computed and asserted equal whenever m is a variable
// inclusion (canonical quotients and normal morphisms in particular).

struct PurityReport {
    bool realized_below = false;
    bool realized_above = false;
    bool pure_violation = false;
    bool zero_phrasing = false;
    bool z_below_nonempty = false;
    bool z_above_nonempty = false;
    bool ec_violation = false;
    bool phrasings_agree = true;
};

inline PurityReport purity_check(const RingHom& f, const PrimMorphism& m,
                                 const std::vector<int>& a_values,
                                 const EnumBudget& budget = {}) {
    m.validate();
    const FiniteRing& A = f.dom;
    const FiniteRing& B = f.cod;
    if (!is_point_of(m.dom, A, a_values))
        throw invalid_argument_error("purity_check: parameter is not a point of dom(m)");
    std::vector<int> fa;
    for (int v : a_values) fa.push_back(f.images[v]);

    PurityReport rep;
    rep.realized_below = exists_set(m, A, budget).contains(a_values);
    rep.realized_above = exists_set(m, B, budget).contains(fa);
    rep.pure_violation = rep.realized_above && !rep.realized_below;

    if (m.is_variable_inclusion()) {
        rep.zero_phrasing = true;
        int dn = m.dom.nvars;
        int ny = m.cod.nvars - dn;
        // renumber: cod var dn+j -> j (unknowns), cod var i < dn -> ny+i (parameters)
        std::vector<int> perm(m.cod.nvars);
        for (int i = 0; i < dn; ++i) perm[i] = ny + i;
        for (int j = 0; j < ny; ++j) perm[dn + j] = j;
        std::vector<ParamPoly> system;
        for (const Poly& r : m.cod.relations)
            system.push_back(ParamPoly::with_params(r.rename_vars(perm), ny, A, a_values));
        rep.z_below_nonempty = !zero_set(system, ny, A, nullptr, budget).members.empty();
        rep.z_above_nonempty = !zero_set(system, ny, A, &f, budget).members.empty();
        rep.ec_violation = rep.z_above_nonempty && !rep.z_below_nonempty;
        rep.phrasings_agree = rep.z_below_nonempty == rep.realized_below &&
                              rep.z_above_nonempty == rep.realized_above;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Anchored diagrams (the category of elements of A), their colimits, cocones
// with arbitrary vertex B, and realisation of primitive morphisms with
// parameters.

struct Diagram {
    FiniteRing ring;  // A
    std::vector<Presentation> objects;
    std::vector<std::vector<int>> anchors;  // one point per object
    struct Arrow {
        int src = 0, dst = 0;
        PrimMorphism u;
    };
    std::vector<Arrow> arrows;

    void validate(const EnumBudget& = {}) const {
        if (objects.size() != anchors.size())
            throw invalid_argument_error("Diagram: one anchor per object required");
        for (std::size_t k = 0; k < objects.size(); ++k)
            if (!is_point_of(objects[k], ring, anchors[k]))
                throw invalid_argument_error("Diagram: anchor is not a point of its object");
        for (const Arrow& ar : arrows) {
            if (ar.src < 0 || ar.src >= static_cast<int>(objects.size()) || ar.dst < 0 ||
                ar.dst >= static_cast<int>(objects.size()))
                throw invalid_argument_error("Diagram: arrow endpoint out of range");
            if (!(ar.u.dom == objects[ar.src]) || !(ar.u.cod == objects[ar.dst]))
                throw invalid_argument_error("Diagram: arrow morphism does not match endpoints");
            if (precompose_values(ar.u, ring, anchors[ar.dst]) != anchors[ar.src])
                throw invalid_argument_error("Diagram: arrow incompatible with anchors");
        }
    }
};

inline ColimitResult colimit(const Diagram& D) {
    D.validate();
    std::vector<PresArrow> arrows;
    for (const auto& ar : D.arrows) arrows.push_back({ar.src, ar.dst, ar.u});
    return pres_colimit(D.objects, arrows);
}

using Cocone = std::vector<std::vector<int>>;  // one point per object

inline std::vector<Cocone> cocones(const Diagram& D, const FiniteRing& B,
                                   const EnumBudget& budget = {}) {
    D.validate();
    std::vector<PointSet> object_points;
    Int total = 1;
    for (const Presentation& P : D.objects) {
        object_points.push_back(homs(P, B, budget));
        total *= static_cast<long>(object_points.back().size());
        if (total > budget.max_tuples) throw budget_error("cocones: enumeration budget exceeded");
    }
    std::vector<Cocone> out;
    if (object_points.empty()) {
        out.push_back({});
        return out;
    }
    for (const auto& ps : object_points)
        if (ps.members.empty()) return out;
    std::vector<std::size_t> idx(object_points.size(), 0);
    while (true) {
        Cocone c;
        for (std::size_t k = 0; k < object_points.size(); ++k)
            c.push_back(object_points[k].members[idx[k]]);
        bool ok = true;
        for (const auto& ar : D.arrows)
            if (precompose_values(ar.u, B, c[ar.dst]) != c[ar.src]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(c));
        std::size_t i = idx.size();
        bool done = true;
        while (i-- > 0) {
            if (++idx[i] < object_points[i].members.size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
        if (done) break;
    }
    return out;
}

// whether the cocone realises (m, anchor of object `anchor_obj`)
inline bool realises(const Diagram& D, const FiniteRing& B, const Cocone& c,
                     const PrimMorphism& m, int anchor_obj, const EnumBudget& budget = {}) {
    if (anchor_obj < 0 || anchor_obj >= static_cast<int>(D.objects.size()))
        throw invalid_argument_error("realises: anchor object out of range");
    if (!(m.dom == D.objects[anchor_obj]))
        throw invalid_argument_error("realises: morphism domain does not match anchor object");
    return exists_set(m, B, budget).contains(c[anchor_obj]);
}

// ---------------------------------------------------------------------------
// Category membership relative to a finite family C: continuation into a
// member, embedding into a member, and embedding into a bounded product of
// members, searched through the kernels of all homomorphisms into the family.

enum class MembershipKind { Continues, Embeds, Special };

struct MembershipResult {
    enum class Verdict { Found, NotFound, NotFoundAtBound };
    Verdict verdict = Verdict::NotFound;
    std::vector<std::pair<int, RingHom>> witness;  // (index into C, hom)
    std::string detail;
};

inline MembershipResult category_membership(const FiniteRing& A, const std::vector<FiniteRing>& C,
                                            MembershipKind kind, int max_factors = 3,
                                            const EnumBudget& budget = {}) {
    MembershipResult res;
    if (kind == MembershipKind::Continues || kind == MembershipKind::Embeds) {
        for (std::size_t ci = 0; ci < C.size(); ++ci) {
            for (const RingHom& h : ring_homs(A, C[ci], budget)) {
                if (kind == MembershipKind::Embeds && !h.injective) continue;
                res.verdict = MembershipResult::Verdict::Found;
                res.witness.emplace_back(static_cast<int>(ci), h);
                res.detail = kind == MembershipKind::Embeds ? "embedding found" : "continuation found";
                return res;
            }
        }
        res.detail = "exhaustive search over the family found none";
        return res;
    }

    // Special: injective map into a product of at most max_factors members,
    // searched through the kernels of all homs A -> B (B in C).
    std::vector<std::pair<int, RingHom>> candidates;
    std::vector<std::vector<int>> kernels;
    for (std::size_t ci = 0; ci < C.size(); ++ci)
        for (const RingHom& h : ring_homs(A, C[ci], budget)) {
            std::vector<int> k = h.kernel();
            if (std::find(kernels.begin(), kernels.end(), k) != kernels.end()) continue;
            kernels.push_back(std::move(k));
            candidates.emplace_back(static_cast<int>(ci), h);
        }

    std::vector<int> chosen;
    auto intersect_trivial = [&](const std::vector<int>& sel) {
        std::vector<char> in(A.cardinality(), 1);
        for (int s : sel) {
            std::vector<char> next(A.cardinality(), 0);
            for (int a : kernels[s])
                if (in[a]) next[a] = 1;
            in = std::move(next);
        }
        int count = 0;
        for (char c : in) count += c;
        return count == 1;  // only 0
    };

    // combinations in lexicographic order, smallest size first
    for (int k = 1; k <= max_factors && res.verdict != MembershipResult::Verdict::Found; ++k) {
        chosen.clear();
        std::function<bool(std::size_t, int, int)> exact = [&](std::size_t start, int size,
                                                               int target) -> bool {
            if (size == target) return intersect_trivial(chosen);
            for (std::size_t i = start; i < candidates.size(); ++i) {
                chosen.push_back(static_cast<int>(i));
                if (exact(i + 1, size + 1, target)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (exact(0, 0, k)) {
            res.verdict = MembershipResult::Verdict::Found;
            for (int s : chosen) res.witness.push_back(candidates[s]);
            res.detail = "injective into a product of " + std::to_string(k) + " member(s)";
            // verify injectivity of the product map exhaustively
            std::vector<char> seen;
            std::vector<FiniteRing> targets;
            for (int s : chosen) targets.push_back(candidates[s].second.cod);
            FiniteRing prod = FiniteRing::product(targets);
            seen.assign(static_cast<std::size_t>(prod.cardinality()), 0);
            for (int a = 0; a < A.cardinality(); ++a) {
                std::vector<int> comps;
                for (int s : chosen) comps.push_back(candidates[s].second.images[a]);
                int idx = prod.join(comps);
                if (seen[idx]) throw error("category_membership: injectivity check failed");
                seen[idx] = 1;
            }
            return res;
        }
    }
    if (max_factors >= static_cast<int>(candidates.size()))
        res.verdict = MembershipResult::Verdict::NotFound;  // all kernel combinations exhausted
    else
        res.verdict = MembershipResult::Verdict::NotFoundAtBound;
    res.detail = res.verdict == MembershipResult::Verdict::NotFound
                     ? "no product of members embeds A (all kernel combinations tried)"
                     : "not found at bound " + std::to_string(max_factors);
    return res;
}

// ---------------------------------------------------------------------------
// Intensional set expressions.  "Arithmetic" expressions are complement-free;
// adding parameters gives the positively definable class; complements give
// the definable class.  Evaluation is extensional structural recursion.

enum class DefClass { Arithmetic, PositivelyDefinable, Definable };

inline const char* to_string(DefClass c) {
    switch (c) {
        case DefClass::Arithmetic: return "arithmetic";
        case DefClass::PositivelyDefinable: return "positively-definable";
        case DefClass::Definable: return "definable";
    }
    return "?";
}

struct SetExpr;
using SetExprPtr = std::shared_ptr<const SetExpr>;

struct SetExpr {
    enum class Kind { Full, Exists, Union, Intersection, Complement, FiberedProduct, AddParameter };

    Kind kind = Kind::Full;
    Presentation pres;  // the presentation this set lives on
    PrimMorphism m1;    // Exists: the morphism; FiberedProduct: u : R -> P
    PrimMorphism m2;    // FiberedProduct: v : R -> Q
    PrimMorphism inj1, inj2;  // FiberedProduct: pushout injections
    SetExprPtr a, b;
    Presentation param_pres;        // AddParameter: Q
    std::vector<int> param_values;  // AddParameter: b in A_Q

    static SetExprPtr full(Presentation P) {
        auto e = std::make_shared<SetExpr>();
        e->kind = Kind::Full;
        e->pres = std::move(P);
        return e;
    }
    static SetExprPtr exists(PrimMorphism m, SetExprPtr sub) {
        if (!(sub->pres == m.cod))
            throw invalid_argument_error("SetExpr::exists: subexpression must live on cod(m)");
        auto e = std::make_shared<SetExpr>();
        e->kind = Kind::Exists;
        e->pres = m.dom;
        e->m1 = std::move(m);
        e->a = std::move(sub);
        return e;
    }
    static SetExprPtr exists_full(PrimMorphism m) {
        auto sub = full(m.cod);
        return exists(std::move(m), sub);
    }
    static SetExprPtr union_(SetExprPtr x, SetExprPtr y) {
        if (!(x->pres == y->pres))
            throw invalid_argument_error("SetExpr::union: presentation mismatch");
        auto e = std::make_shared<SetExpr>();
        e->kind = Kind::Union;
        e->pres = x->pres;
        e->a = std::move(x);
        e->b = std::move(y);
        return e;
    }
    static SetExprPtr intersection_(SetExprPtr x, SetExprPtr y) {
        if (!(x->pres == y->pres))
            throw invalid_argument_error("SetExpr::intersection: presentation mismatch");
        auto e = std::make_shared<SetExpr>();
        e->kind = Kind::Intersection;
        e->pres = x->pres;
        e->a = std::move(x);
        e->b = std::move(y);
        return e;
    }
    static SetExprPtr complement(SetExprPtr x) {
        auto e = std::make_shared<SetExpr>();
        e->kind = Kind::Complement;
        e->pres = x->pres;
        e->a = std::move(x);
        return e;
    }
    // X *_R Y along u : R -> P, v : R -> Q; lives on the pushout presentation
    static SetExprPtr fibered(PrimMorphism u, PrimMorphism v, SetExprPtr X, SetExprPtr Y) {
        if (!(u.dom == v.dom)) throw invalid_argument_error("SetExpr::fibered: base mismatch");
        if (!(X->pres == u.cod) || !(Y->pres == v.cod))
            throw invalid_argument_error("SetExpr::fibered: factor presentation mismatch");
        PushoutResult po = pushout(u, v);
        auto e = std::make_shared<SetExpr>();
        e->kind = Kind::FiberedProduct;
        e->pres = po.apex;
        e->m1 = std::move(u);
        e->m2 = std::move(v);
        e->inj1 = po.from_cod;
        e->inj2 = po.from_other;
        e->a = std::move(X);
        e->b = std::move(Y);
        return e;
    }
    // { a in A_P : a (x) b in Y }, Y over P (x) Q, b in A_Q
    static SetExprPtr add_parameter(SetExprPtr Y, Presentation P, Presentation Q,
                                    std::vector<int> b) {
        if (!(Y->pres == tensor(P, Q)))
            throw invalid_argument_error("SetExpr::add_parameter: Y must live on the tensor");
        auto e = std::make_shared<SetExpr>();
        e->kind = Kind::AddParameter;
        e->pres = std::move(P);
        e->a = std::move(Y);
        e->param_pres = std::move(Q);
        e->param_values = std::move(b);
        return e;
    }
};

inline DefClass classify(const SetExprPtr& e) {
    if (!e) throw invalid_argument_error("classify: null expression");
    bool has_complement = false, has_param = false;
    std::function<void(const SetExprPtr&)> walk = [&](const SetExprPtr& x) {
        if (!x) return;
        if (x->kind == SetExpr::Kind::Complement) has_complement = true;
        if (x->kind == SetExpr::Kind::AddParameter) has_param = true;
        walk(x->a);
        walk(x->b);
    };
    walk(e);
    if (has_complement) return DefClass::Definable;
    if (has_param) return DefClass::PositivelyDefinable;
    return DefClass::Arithmetic;
}

inline PointSet eval_setexpr(const SetExprPtr& e, const FiniteRing& A,
                             const EnumBudget& budget = {}) {
    switch (e->kind) {
        case SetExpr::Kind::Full: return homs(e->pres, A, budget);
        case SetExpr::Kind::Exists: {
            PointSet sub = eval_setexpr(e->a, A, budget);
            PointSet out{A, e->pres, {}, "image"};
            for (const auto& b : sub.members)
                out.members.push_back(precompose_values(e->m1, A, b));
            detail::sort_unique(out.members);
            return out;
        }
        case SetExpr::Kind::Union: {
            PointSet x = eval_setexpr(e->a, A, budget);
            PointSet y = eval_setexpr(e->b, A, budget);
            PointSet out{A, e->pres, x.members, "union"};
            out.members.insert(out.members.end(), y.members.begin(), y.members.end());
            detail::sort_unique(out.members);
            return out;
        }
        case SetExpr::Kind::Intersection: {
            PointSet x = eval_setexpr(e->a, A, budget);
            PointSet y = eval_setexpr(e->b, A, budget);
            PointSet out{A, e->pres, {}, "intersection"};
            for (const auto& v : x.members)
                if (y.contains(v)) out.members.push_back(v);
            return out;
        }
        case SetExpr::Kind::Complement: {
            PointSet x = eval_setexpr(e->a, A, budget);
            PointSet all = homs(e->pres, A, budget);
            PointSet out{A, e->pres, {}, "complement"};
            for (const auto& v : all.members)
                if (!x.contains(v)) out.members.push_back(v);
            return out;
        }
        case SetExpr::Kind::FiberedProduct: {
            PointSet x = eval_setexpr(e->a, A, budget);
            PointSet y = eval_setexpr(e->b, A, budget);
            PointSet apex_points = homs(e->pres, A, budget);
            PointSet out{A, e->pres, {}, "fibered-product"};
            for (const auto& s : apex_points.members) {
                if (x.contains(precompose_values(e->inj1, A, s)) &&
                    y.contains(precompose_values(e->inj2, A, s)))
                    out.members.push_back(s);
            }
            return out;
        }
        case SetExpr::Kind::AddParameter: {
            if (!is_point_of(e->param_pres, A, e->param_values))
                throw invalid_argument_error("eval_setexpr: parameter is not a point");
            PointSet y = eval_setexpr(e->a, A, budget);
            PointSet base = homs(e->pres, A, budget);
            PointSet out{A, e->pres, {}, "with-parameter"};
            for (const auto& a : base.members) {
                std::vector<int> joint = a;
                joint.insert(joint.end(), e->param_values.begin(), e->param_values.end());
                if (y.contains(joint)) out.members.push_back(a);
            }
            return out;
        }
    }
    throw invalid_argument_error("eval_setexpr: bad expression");
}

}  // namespace ringlab

#endif
