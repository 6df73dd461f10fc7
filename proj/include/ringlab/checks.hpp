// Soundness gates for primitive morphisms: three-valued well-definedness and
// surjectivity classification.
//
// Well-definedness of m : P -> Q asks that every relation of P maps into the
// ideal generated by Q's relations over Z.  Finite rings refute cheaply (a
// relation image that fails to vanish at a point of Q), a rational Groebner
// basis refutes soundly (membership failing over Q fails over Z), and a
// strong integer basis decides.  Surjectivity is proved syntactically or by
// an integer normal-form generation certificate, and refuted by rational
// elimination (subring membership failing over Q fails over Z).
#ifndef RINGLAB_CHECKS_HPP
#define RINGLAB_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ringlab/fpring.hpp"
#include "ringlab/groebner.hpp"
#include "ringlab/points.hpp"

namespace ringlab {

struct WellDefinedTools {
    std::vector<FiniteRing> finite_refute;  // rings to probe for counterexample points
    bool field_refute = true;               // Groebner over Q
    bool int_prove = true;                  // strong Groebner over Z
    GroebnerBudget gb;
    EnumBudget enumeration;
};

struct WellDefinedReport {
    Verification verdict = Verification::Unknown;
    std::string certificate;  // human-readable witness for refutations
};

inline WellDefinedReport verify_well_defined(const PrimMorphism& m,
                                             const WellDefinedTools& tools = {}) {
    m.validate();
    std::vector<Poly> images_of_relations;
    for (const Poly& r : m.dom.relations) images_of_relations.push_back(r.substitute(m.images));

    // finite refutation: an image that fails to vanish at a point of cod
    for (const FiniteRing& B : tools.finite_refute) {
        try {
            PointSet pts = homs(m.cod, B, tools.enumeration);
            for (const auto& b : pts.members)
                for (std::size_t i = 0; i < images_of_relations.size(); ++i)
                    if (evaluate(images_of_relations[i], B, b) != B.zero()) {
                        WellDefinedReport rep;
                        rep.verdict = Verification::Refuted;
                        rep.certificate = "relation #" + std::to_string(i) +
                                          " fails at a point of cod in " + B.name();
                        return rep;
                    }
        } catch (const budget_error&) {
            // this tool is inconclusive; fall through
        }
    }

    // rational refutation: membership failing over Q fails over Z
    if (tools.field_refute) {
        try {
            GBasis gq = gbasis(m.cod.relations, MonomialOrder::grlex(), GBDomain::Rationals, 0,
                               tools.gb);
            for (std::size_t i = 0; i < images_of_relations.size(); ++i)
                if (!normal_form(images_of_relations[i], gq).is_zero()) {
                    WellDefinedReport rep;
                    rep.verdict = Verification::Refuted;
                    rep.certificate = "relation #" + std::to_string(i) +
                                      " has nonzero normal form over Q";
                    return rep;
                }
        } catch (const budget_error&) {
        }
    }

    // integer decision via a strong basis
    if (tools.int_prove) {
        try {
            GBasis gz =
                gbasis(m.cod.relations, MonomialOrder::grlex(), GBDomain::Integers, 0, tools.gb);
            for (std::size_t i = 0; i < images_of_relations.size(); ++i)
                if (!normal_form(images_of_relations[i], gz).is_zero()) {
                    WellDefinedReport rep;
                    rep.verdict = Verification::Refuted;
                    rep.certificate = "relation #" + std::to_string(i) +
                                      " has nonzero normal form over Z";
                    return rep;
                }
            return {Verification::Proved, ""};
        } catch (const budget_error&) {
        }
    }
    return {Verification::Unknown, ""};
}

inline PrimMorphism with_verification(PrimMorphism m, const WellDefinedTools& tools = {}) {
    m.verification = verify_well_defined(m, tools).verdict;
    return m;
}

// ---------------------------------------------------------------------------
// Surjectivity.  Tag variables t_i = image_i are appended after cod's
// variables; under the elimination order (cod vars first) a normal form of a
// codomain variable lying in Z[t] is a generation certificate.

namespace detail {

// J = cod relations + (t_i - image_i) in cod vars followed by tag vars
inline std::vector<Poly> surjectivity_ideal(const PrimMorphism& m) {
    std::vector<Poly> J = m.cod.relations;
    for (int i = 0; i < m.dom.nvars; ++i)
        J.push_back(Poly::variable(m.cod.nvars + i) - m.images[i]);
    return J;
}

inline bool vars_within_tags(const Poly& p, int ncod) {
    for (int v : p.variables())
        if (v < ncod) return false;
    return true;
}

}  // namespace detail

inline Verification is_surjective(const PrimMorphism& m, const GroebnerBudget& budget = {}) {
    m.validate();
    // syntactic hit: every codomain variable literally among the images
    {
        bool all = true;
        for (int v = 0; v < m.cod.nvars && all; ++v) {
            bool hit = false;
            for (const Poly& q : m.images)
                if (q == Poly::variable(v)) {
                    hit = true;
                    break;
                }
            all = hit;
        }
        if (all) return Verification::Proved;
    }

    std::vector<Poly> J = detail::surjectivity_ideal(m);
    std::vector<int> prio;
    for (int v = 0; v < m.cod.nvars; ++v) prio.push_back(v);
    for (int i = 0; i < m.dom.nvars; ++i) prio.push_back(m.cod.nvars + i);
    MonomialOrder ord = MonomialOrder::lex(prio);

    // integer generation certificate
    try {
        GBasis gz = gbasis(J, ord, GBDomain::Integers, 0, budget);
        bool all = true;
        for (int v = 0; v < m.cod.nvars && all; ++v)
            all = detail::vars_within_tags(normal_form(Poly::variable(v), gz), m.cod.nvars);
        if (all) return Verification::Proved;
    } catch (const budget_error&) {
    }

    // rational refutation: outside the Q-subalgebra implies outside over Z
    try {
        GBasis gq = gbasis(J, ord, GBDomain::Rationals, 0, budget);
        for (int v = 0; v < m.cod.nvars; ++v)
            if (!detail::vars_within_tags(normal_form(Poly::variable(v), gq), m.cod.nvars))
                return Verification::Refuted;
    } catch (const budget_error&) {
    }
    return Verification::Unknown;
}

}  // namespace ringlab

#endif
