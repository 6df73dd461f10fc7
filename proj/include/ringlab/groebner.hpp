// Ideal-membership engines: Buchberger over the rationals and Z/p, strong
// Groebner bases over the integers, radical membership via the Rabinowitsch
// device, and elimination ideals.
//
// Rational-coefficient computations are carried on integer polynomials
// (content is cleared and signs normalized), Z/p ones on modulus-tagged
// polynomials.  Over Z, pairs contribute both S-polynomials and G-polynomials
// (Bezout combinations of the leading coefficients) and reduction uses the
// truncated Euclidean quotient; the resulting strong basis decides integer
// ideal membership.  All budgets are explicit; exceeding one raises
// budget_error, never a wrong basis.
#ifndef RINGLAB_GROEBNER_HPP
#define RINGLAB_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

enum class GBDomain { Integers, Rationals, ModP };

inline const char* to_string(GBDomain d) {
    switch (d) {
        case GBDomain::Integers: return "Z";
        case GBDomain::Rationals: return "Q";
        case GBDomain::ModP: return "Z/p";
    }
    return "?";
}

struct GBasis {
    GBDomain domain = GBDomain::Rationals;
    Int p = 0;  // prime for ModP
    MonomialOrder order;
    std::vector<Poly> gens;  // reduced, normalized, sorted by decreasing leading monomial
};

namespace gbdetail {

inline CoeffMode mode_of(GBDomain d) {
    switch (d) {
        case GBDomain::Integers: return CoeffMode::IntegersStrong;
        case GBDomain::Rationals: return CoeffMode::RationalsScaled;
        case GBDomain::ModP: return CoeffMode::ModP;
    }
    return CoeffMode::RationalsScaled;
}

// canonical representative of a basis element
inline Poly normalize(const Poly& f, const MonomialOrder& ord, GBDomain dom, const Int& p) {
    if (f.is_zero()) return f;
    if (dom == GBDomain::ModP) {
        Int lc = f.leading_term(ord).second;
        return f * inv_mod(lc, p);  // monic
    }
    Poly g = dom == GBDomain::Rationals ? f.primitive_part() : f;
    if (g.leading_term(ord).second < 0) g = -g;
    return g;
}

inline void check_budget(const Poly& f, const GroebnerBudget& budget) {
    if (f.total_degree() > budget.max_degree)
        throw budget_error("groebner: degree budget exceeded");
    for (auto& [m, c] : f.terms())
        if (bit_length(c) > budget.max_coeff_bits)
            throw budget_error("groebner: coefficient budget exceeded");
}

}  // namespace gbdetail

// Normal form of q modulo the basis.  Over the rationals the remainder is
// returned content-normalized (zero-ness is exact either way).
inline Poly normal_form(const Poly& q, const GBasis& gb) {
    Poly qq = q;
    if (gb.domain == GBDomain::ModP && q.modulus() == 0) qq = q.with_modulus(gb.p);
    if (gb.gens.empty()) return qq;
    DivisionResult dr = divide(qq, gb.gens, gb.order, gbdetail::mode_of(gb.domain));
    if (gb.domain == GBDomain::Rationals && !dr.remainder.is_zero()) {
        Poly r = dr.remainder.primitive_part();
        if (r.leading_term(gb.order).second < 0) r = -r;
        return r;
    }
    return dr.remainder;
}

inline GBasis gbasis(std::vector<Poly> gens, const MonomialOrder& ord, GBDomain dom,
                     const Int& p = 0, const GroebnerBudget& budget = {}) {
    if (dom == GBDomain::ModP && p <= 1)
        throw invalid_argument_error("gbasis: ModP requires a prime modulus");
    GBasis gb;
    gb.domain = dom;
    gb.p = dom == GBDomain::ModP ? p : Int(0);
    gb.order = ord;

    std::vector<Poly> basis;
    for (Poly& f : gens) {
        Poly g = dom == GBDomain::ModP ? f.with_modulus(p) : f;
        if (g.is_zero()) continue;
        basis.push_back(gbdetail::normalize(g, ord, dom, p));
    }

    // pending pairs: (is_gpair, i, j), processed in (lcm degree, index) order
    struct Pair {
        int deg;
        std::size_t seq;
        std::size_t i, j;
        bool gpair;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            return seq < o.seq;
        }
    };
    std::set<Pair> queue;
    std::size_t seq = 0;

    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto [ui, ci] = basis[i].leading_term(ord);
            auto [uj, cj] = basis[j].leading_term(ord);
            int deg = Monomial::lcm(ui, uj).degree();
            if (dom != GBDomain::Integers) {
                // Buchberger's product criterion (valid over fields)
                if (Monomial::lcm(ui, uj).degree() != ui.degree() + uj.degree())
                    queue.insert({deg, seq++, i, j, false});
                // coprime leading monomials: S-pair reduces to zero
            } else {
                queue.insert({deg, seq++, i, j, false});
                Int g = int_gcd(ci, cj);
                if (g != int_abs(ci) && g != int_abs(cj))
                    queue.insert({deg, seq++, i, j, true});
            }
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    std::size_t processed = 0;
    while (!queue.empty()) {
        if (++processed > budget.max_pairs) throw budget_error("groebner: pair budget exceeded");
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        const Poly& f = basis[pr.i];
        const Poly& g = basis[pr.j];
        auto [u, a] = f.leading_term(ord);
        auto [v, b] = g.leading_term(ord);
        Monomial L = Monomial::lcm(u, v);
        Poly candidate = Poly::zero(f.modulus());
        if (!pr.gpair) {
            if (dom == GBDomain::ModP) {
                candidate = f.mul_term(L.quotient_by(u), 1) - g.mul_term(L.quotient_by(v), 1);
                // basis is monic, leading terms cancel
            } else {
                Int d = int_gcd(a, b);
                candidate = f.mul_term(L.quotient_by(u), b / d) - g.mul_term(L.quotient_by(v), a / d);
            }
        } else {
            Int s, t;
            ext_gcd(a, b, s, t);
            candidate = f.mul_term(L.quotient_by(u), s) + g.mul_term(L.quotient_by(v), t);
        }
        if (candidate.is_zero()) continue;
        Poly r = divide(candidate, basis, ord, gbdetail::mode_of(dom)).remainder;
        if (r.is_zero()) continue;
        r = gbdetail::normalize(r, ord, dom, p);
        gbdetail::check_budget(r, budget);
        basis.push_back(r);
        if (basis.size() > budget.max_basis) throw budget_error("groebner: basis budget exceeded");
        push_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose leading term is reducible by another's
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto [u, a] = basis[i].leading_term(ord);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            auto [v, b] = basis[j].leading_term(ord);
            bool divides = v.divides(u) && (dom != GBDomain::Integers || a % b == 0);
            if (!divides) continue;
            if (u == v && ((dom == GBDomain::Integers && int_abs(a) == int_abs(b)) ||
                           dom != GBDomain::Integers)) {
                redundant = j < i;  // identical leading terms: keep the first
            } else {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce to a fixpoint
    bool changed = true;
    std::size_t rounds = 0;
    while (changed) {
        if (++rounds > budget.max_pairs) throw budget_error("groebner: reduction budget exceeded");
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            if (others.empty()) continue;
            Poly r = divide(minimal[i], others, ord, gbdetail::mode_of(dom)).remainder;
            if (!r.is_zero()) r = gbdetail::normalize(r, ord, dom, p);
            if (!(r == minimal[i])) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    --i;
                } else {
                    minimal[i] = r;
                }
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Poly& x, const Poly& y) {
        auto lx = x.leading_term(ord);
        auto ly = y.leading_term(ord);
        if (!(lx.first == ly.first)) return ord.greater(lx.first, ly.first);
        if (lx.second != ly.second) return lx.second < ly.second;
        return y < x;
    });
    gb.gens = std::move(minimal);
    return gb;
}

inline bool ideal_member(const Poly& q, const std::vector<Poly>& gens, const MonomialOrder& ord,
                         GBDomain dom, const Int& p = 0, const GroebnerBudget& budget = {}) {
    GBasis gb = gbasis(gens, ord, dom, p, budget);
    return normal_form(q, gb).is_zero();
}

// q in the radical of (gens) over a field (Q when p = 0 else Z/p), decided by
// 1 in (gens, q*y - 1) with y a fresh variable.
inline bool radical_member(const Poly& q, const std::vector<Poly>& gens, const Int& p = 0,
                           const GroebnerBudget& budget = {}) {
    int mv = q.max_var();
    for (const Poly& g : gens) mv = std::max(mv, g.max_var());
    int fresh = mv + 1;
    std::vector<Poly> ext = gens;
    ext.push_back(q * Poly::variable(fresh) - Poly::constant(1));
    GBDomain dom = p == 0 ? GBDomain::Rationals : GBDomain::ModP;
    return ideal_member(Poly::constant(1), ext, MonomialOrder::grlex(), dom, p, budget);
}

// Generators of the elimination ideal restricted to `keep` (field domains).
inline std::vector<Poly> eliminate(const std::vector<Poly>& gens, const std::vector<int>& keep,
                                   GBDomain dom, const Int& p = 0,
                                   const GroebnerBudget& budget = {}) {
    if (dom == GBDomain::Integers)
        throw invalid_argument_error("eliminate: field domain required");
    int mv = -1;
    for (const Poly& g : gens) mv = std::max(mv, g.max_var());
    std::vector<int> elim;
    for (int v = 0; v <= mv; ++v)
        if (std::find(keep.begin(), keep.end(), v) == keep.end()) elim.push_back(v);
    std::vector<int> prio = elim;
    for (int v : keep) prio.push_back(v);
    MonomialOrder ord = MonomialOrder::lex(prio);
    GBasis gb = gbasis(gens, ord, dom, p, budget);
    std::vector<Poly> out;
    for (const Poly& g : gb.gens) {
        bool pure = true;
        for (int v : g.variables())
            if (std::find(keep.begin(), keep.end(), v) == keep.end()) pure = false;
        if (pure) out.push_back(g);
    }
    return out;
}

}  // namespace ringlab

#endif
