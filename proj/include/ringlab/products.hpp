// Filters on finite index sets and reduced products of finite ring families.
//
// On a finite index set the filter generated by a family of subsets is the
// set of supersets of their intersection S0, ultrafilters are principal, and
// the directed colimit along (filter, >=) collapses to the product over S0.
// The carrier is materialized over S0; the colimit equality is a test, not
// the representation.
#ifndef RINGLAB_PRODUCTS_HPP
#define RINGLAB_PRODUCTS_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/finring.hpp"
#include "ringlab/theory.hpp"

namespace ringlab {

struct Filter {
    int n = 0;  // index set {0, ..., n-1}
    std::vector<std::uint32_t> gens;
    std::uint32_t s0 = 0;  // minimum element: intersection of the generators

    bool is_ultra() const { return std::popcount(s0) == 1; }
    bool contains(std::uint32_t s) const { return (s & s0) == s0 && s < (1u << n); }

    std::vector<std::uint32_t> members() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t s = 0; s < (1u << n); ++s)
            if (contains(s)) out.push_back(s);
        return out;
    }

    std::vector<int> s0_indices() const {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (s0 & (1u << i)) out.push_back(i);
        return out;
    }
};

inline std::uint32_t subset_mask(const std::vector<int>& subset, int n) {
    std::uint32_t m = 0;
    for (int i : subset) {
        if (i < 0 || i >= n) throw invalid_argument_error("subset index out of range");
        m |= 1u << i;
    }
    return m;
}

inline Filter make_filter(int n, const std::vector<std::vector<int>>& gens) {
    if (n < 1 || n > 20) throw invalid_argument_error("make_filter: index set size out of range");
    Filter f;
    f.n = n;
    std::uint32_t s0 = (1u << n) - 1;  // empty generating family gives the trivial filter
    for (const auto& g : gens) {
        std::uint32_t m = subset_mask(g, n);
        f.gens.push_back(m);
        s0 &= m;
    }
    if (s0 == 0) throw invalid_argument_error("make_filter: improper (empty intersection)");
    f.s0 = s0;
    return f;
}

// product of the subfamily selected by `mask`, factors in increasing index order
inline FiniteRing subproduct_ring(const std::vector<FiniteRing>& family, std::uint32_t mask) {
    std::vector<FiniteRing> fs;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (mask & (1u << i)) fs.push_back(family[i]);
    if (fs.empty()) throw invalid_argument_error("subproduct_ring: empty subfamily");
    return FiniteRing::product(fs);
}

// canonical projection pi^T_S on element indices (S subset of T)
inline int project_elem(const std::vector<FiniteRing>& family, std::uint32_t T, std::uint32_t S,
                        int idx) {
    if ((S & T) != S) throw invalid_argument_error("project_elem: S must be a subset of T");
    std::vector<int> comps;  // components of idx over T, increasing index order
    std::vector<long> cards;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (T & (1u << i)) cards.push_back(family[i].cardinality());
    comps.resize(cards.size());
    long x = idx;
    for (std::size_t i = cards.size(); i-- > 0;) {
        comps[i] = static_cast<int>(x % cards[i]);
        x /= cards[i];
    }
    long out = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!(T & (1u << i))) continue;
        if (S & (1u << i)) {
            out = out * family[i].cardinality() + comps[pos];
        }
        ++pos;
    }
    return static_cast<int>(out);
}

struct ReducedProduct {
    std::vector<FiniteRing> family;
    Filter filter;
    FiniteRing carrier;  // product over S0
    // Principal-ultrafilter collapse: carrier -> the single factor, verified
    // as a bijective homomorphism exhaustively.
    std::optional<RingHom> collapse_iso;

    // transition map pi^T_S between subproducts, S subset of T in the filter
    int transition(std::uint32_t T, std::uint32_t S, int idx) const {
        if (!filter.contains(T) || !filter.contains(S))
            throw invalid_argument_error("transition: subsets must belong to the filter");
        return project_elem(family, T, S, idx);
    }
};

inline ReducedProduct reduced_product(const std::vector<FiniteRing>& family, const Filter& f) {
    if (static_cast<int>(family.size()) != f.n)
        throw invalid_argument_error("reduced_product: family size does not match index set");
    ReducedProduct rp;
    rp.family = family;
    rp.filter = f;
    rp.carrier = subproduct_ring(family, f.s0);
    if (f.is_ultra()) {
        int i0 = f.s0_indices()[0];
        const FiniteRing& target = family[i0];
        RingHom h{rp.carrier, target, {}};
        h.images.resize(rp.carrier.cardinality());
        for (int a = 0; a < rp.carrier.cardinality(); ++a) h.images[a] = a;  // single factor
        // exhaustive verification: bijective unital homomorphism
        if (rp.carrier.cardinality() != target.cardinality())
            throw error("reduced_product: collapse cardinality mismatch");
        if (h.images[rp.carrier.one()] != target.one())
            throw error("reduced_product: collapse does not preserve 1");
        for (int a = 0; a < rp.carrier.cardinality(); ++a)
            for (int b = 0; b < rp.carrier.cardinality(); ++b) {
                if (h.images[rp.carrier.add(a, b)] != target.add(h.images[a], h.images[b]))
                    throw error("reduced_product: collapse does not preserve +");
                if (h.images[rp.carrier.mul(a, b)] != target.mul(h.images[a], h.images[b]))
                    throw error("reduced_product: collapse does not preserve *");
            }
        h.injective = h.surjective = true;
        rp.collapse_iso = std::move(h);
    }
    return rp;
}

// Los-style preservation on the finite shadow: over a (principal) ultrafilter
// the reduced product is a factor, so satisfaction must transfer; Horn axioms
// transfer along arbitrary products.  A violation of either expectation is a
// fatal bug, reported as such.
struct PreservationReport {
    bool is_ultra = false;
    bool horn = false;
    std::vector<bool> factor_holds;  // factors over S0, increasing index order
    bool all_factors_hold = false;
    bool carrier_holds = false;
    bool preservation_expected = false;
    bool violated = false;
    std::optional<std::vector<int>> carrier_witness;
};

inline PreservationReport preservation_check(const Axiom& chi,
                                             const std::vector<FiniteRing>& family,
                                             const Filter& f, const EnumBudget& budget = {}) {
    ReducedProduct rp = reduced_product(family, f);
    PreservationReport rep;
    rep.is_ultra = f.is_ultra();
    rep.horn = chi.formula.morphisms.size() <= 1;
    rep.all_factors_hold = true;
    for (int i : f.s0_indices()) {
        bool h = satisfies(family[i], chi, budget).holds;
        rep.factor_holds.push_back(h);
        rep.all_factors_hold = rep.all_factors_hold && h;
    }
    SatReport sr = satisfies(rp.carrier, chi, budget);
    rep.carrier_holds = sr.holds;
    rep.carrier_witness = sr.witness;
    rep.preservation_expected = rep.all_factors_hold && (rep.is_ultra || rep.horn);
    rep.violated = rep.preservation_expected && !rep.carrier_holds;
    return rep;
}

}  // namespace ringlab

#endif
