#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "ringlab/products.hpp"

using namespace ringlab;

namespace {

// Test-side oracle: compute the directed colimit over (filter, >=) by
// actually chasing the diagram of projections (union-find over the disjoint
// union of all subproducts), then compare it with the materialized carrier.
struct ColimitChase {
    std::vector<std::pair<std::uint32_t, int>> nodes;  // (subset mask, element)
    std::vector<int> parent;

    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

int chase_classes(const std::vector<FiniteRing>& family, const Filter& f,
                  std::map<std::pair<std::uint32_t, int>, int>* node_index = nullptr,
                  ColimitChase* out = nullptr) {
    ColimitChase ch;
    std::map<std::pair<std::uint32_t, int>, int> index;
    for (std::uint32_t S : f.members()) {
        FiniteRing prod = subproduct_ring(family, S);
        for (int x = 0; x < prod.cardinality(); ++x) {
            index[{S, x}] = static_cast<int>(ch.nodes.size());
            ch.nodes.emplace_back(S, x);
        }
    }
    ch.parent.resize(ch.nodes.size());
    std::iota(ch.parent.begin(), ch.parent.end(), 0);
    for (std::uint32_t T : f.members())
        for (std::uint32_t S : f.members()) {
            if (S == T || (S & T) != S) continue;  // need S subset of T
            FiniteRing pt = subproduct_ring(family, T);
            for (int x = 0; x < pt.cardinality(); ++x)
                ch.unite(index[{T, x}], index[{S, project_elem(family, T, S, x)}]);
        }
    std::map<int, int> roots;
    for (std::size_t i = 0; i < ch.nodes.size(); ++i) roots[ch.find(static_cast<int>(i))] = 1;
    if (node_index) *node_index = std::move(index);
    if (out) *out = std::move(ch);
    return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("filters on finite index sets") {
    Filter trivial = make_filter(3, {});
    REQUIRE(trivial.s0 == 0b111);
    REQUIRE(!trivial.is_ultra());
    REQUIRE(trivial.members().size() == 1);

    Filter ultra = make_filter(3, {{1}});
    REQUIRE(ultra.is_ultra());
    REQUIRE(ultra.s0_indices() == std::vector<int>{1});
    REQUIRE(ultra.members().size() == 4);  // all supersets of {1}

    // spec instance (0-based): gens {0,1} and {1,2} intersect in {1}
    Filter two = make_filter(3, {{0, 1}, {1, 2}});
    REQUIRE(two.s0_indices() == std::vector<int>{1});
    REQUIRE(two.is_ultra());

    REQUIRE_THROWS_AS(make_filter(3, {{0}, {1}}), invalid_argument_error);  // improper
}

TEST_CASE("filter laws hold per instance") {
    Filter f = make_filter(3, {{0, 1}});
    auto members = f.members();
    REQUIRE(!members.empty());
    for (std::uint32_t S : members) {
        REQUIRE(S != 0);  // proper
        // upward closure within the powerset
        for (std::uint32_t T = 0; T < 8; ++T)
            if ((S & T) == S) REQUIRE(f.contains(T));
        // closure under intersection
        for (std::uint32_t T : members) REQUIRE(f.contains(S & T));
    }
}

TEST_CASE("reduced product over a principal ultrafilter collapses to the factor") {
    std::vector<FiniteRing> family = {make_ring("Z/3"), make_ring("Z/4")};
    for (int i = 0; i < 2; ++i) {
        Filter u = make_filter(2, {{i}});
        ReducedProduct rp = reduced_product(family, u);
        REQUIRE(rp.collapse_iso.has_value());  // verified exhaustively inside
        REQUIRE(rp.carrier.cardinality() == family[i].cardinality());
    }
}

TEST_CASE("reduced product over the trivial filter is the full product") {
    std::vector<FiniteRing> family = {make_ring("Z/2"), make_ring("Z/3")};
    ReducedProduct rp = reduced_product(family, make_filter(2, {}));
    REQUIRE(rp.carrier.cardinality() == 6);
    REQUIRE(!rp.collapse_iso.has_value());
    // transition maps live on the filter only
    REQUIRE_THROWS_AS(rp.transition(0b11, 0b01, 0), invalid_argument_error);
    Filter withsub = make_filter(2, {{0}});
    ReducedProduct rp2 = reduced_product(family, withsub);
    REQUIRE(rp2.transition(0b11, 0b01, 5) == 1);  // (1,2) |-> component of Z/2

    // CRT: the carrier is isomorphic to Z/6, found by hom search and
    // verified bijective
    FiniteRing z6 = make_ring("Z/6");
    bool found = false;
    for (const RingHom& h : ring_homs(rp.carrier, z6))
        if (h.injective && h.surjective) found = true;
    REQUIRE(found);
}

TEST_CASE("chased colimit is isomorphic to the product over S0") {
    std::vector<std::vector<std::string>> families = {
        {"Z/2"}, {"Z/2", "Z/3"}, {"Z/2", "Z/3", "Z/4"}, {"Z/4", "GF(4)", "Z/3"}};
    std::vector<std::vector<std::vector<int>>> gensets = {
        {}, {{0}}, {{0, 1}}, {{0, 1}, {1, 2}}, {{2}}, {{0, 1, 2}}};
    for (const auto& fam_spec : families) {
        std::vector<FiniteRing> family;
        for (const auto& s : fam_spec) family.push_back(make_ring(s));
        int n = static_cast<int>(family.size());
        for (const auto& gens : gensets) {
            bool in_range = true;
            for (const auto& g : gens)
                for (int i : g)
                    if (i >= n) in_range = false;
            if (!in_range) continue;
            Filter f = make_filter(n, gens);
            ReducedProduct rp = reduced_product(family, f);

            std::map<std::pair<std::uint32_t, int>, int> index;
            ColimitChase ch;
            int classes = chase_classes(family, f, &index, &ch);
            REQUIRE(classes == rp.carrier.cardinality());

            // the map "class of (S0, x)" is a bijection, and the induced ring
            // structure matches the carrier's componentwise one
            FiniteRing carrier = rp.carrier;
            for (int x = 0; x < carrier.cardinality(); ++x)
                for (int y = 0; y < carrier.cardinality(); ++y) {
                    int sum = carrier.add(x, y), prod = carrier.mul(x, y);
                    // compute in the top product and project: must land in the
                    // same class
                    std::uint32_t top = (1u << n) - 1;
                    if (f.contains(top)) {
                        // lift x, y to the top product (choose any preimages)
                        FiniteRing ptop = subproduct_ring(family, top);
                        for (int lx = 0; lx < ptop.cardinality(); ++lx) {
                            if (project_elem(family, top, f.s0, lx) != x) continue;
                            for (int ly = 0; ly < ptop.cardinality(); ++ly) {
                                if (project_elem(family, top, f.s0, ly) != y) continue;
                                int lsum = ptop.add(lx, ly), lprod = ptop.mul(lx, ly);
                                REQUIRE(project_elem(family, top, f.s0, lsum) == sum);
                                REQUIRE(project_elem(family, top, f.s0, lprod) == prod);
                            }
                        }
                    }
                }
        }
    }
}

TEST_CASE("preservation: ultrafilter instance from the spec") {
    // ultrafilter at the F_3 index of (F_3, Z/4); t_rr at n = 2 holds in the
    // reduced product because the carrier is the field factor
    std::vector<FiniteRing> family = {make_ring("Z/3"), make_ring("Z/4")};
    Filter u = make_filter(2, {{0}});
    Axiom rr2 = builtin_theory("t_rr").expand(2)[1];
    PreservationReport rep = preservation_check(rr2, family, u);
    REQUIRE(rep.is_ultra);
    REQUIRE(rep.all_factors_hold);
    REQUIRE(rep.carrier_holds);
    REQUIRE(!rep.violated);

    // at the Z/4 index the factor fails, so nothing is asserted
    PreservationReport rep2 = preservation_check(rr2, family, make_filter(2, {{1}}));
    REQUIRE(!rep2.all_factors_hold);
    REQUIRE(!rep2.carrier_holds);
    REQUIRE(!rep2.violated);
}

TEST_CASE("preservation: Horn transfer along the full product") {
    std::vector<FiniteRing> family = {make_ring("Z/2"), make_ring("Z/3")};
    Filter triv = make_filter(2, {});
    Axiom rr2 = builtin_theory("t_rr").expand(2)[1];
    PreservationReport rep = preservation_check(rr2, family, triv);
    REQUIRE(rep.horn);
    REQUIRE(rep.all_factors_hold);
    REQUIRE(rep.carrier_holds);  // Z/6 is reduced
    REQUIRE(!rep.violated);

    // non-Horn: the integral-domain disjunction fails in the product, which
    // is expected (witness (1,0)*(0,1) = 0)
    Axiom xy = builtin_theory("t_id").axioms[1];
    PreservationReport rep2 = preservation_check(xy, family, triv);
    REQUIRE(!rep2.horn);
    REQUIRE(rep2.all_factors_hold);
    REQUIRE(!rep2.carrier_holds);
    REQUIRE(!rep2.preservation_expected);
    REQUIRE(!rep2.violated);
    REQUIRE(rep2.carrier_witness.has_value());
    // the witness is a pair of nonzero elements multiplying to zero
    FiniteRing carrier = reduced_product(family, triv).carrier;
    const auto& w = *rep2.carrier_witness;
    REQUIRE(carrier.mul(w[0], w[1]) == carrier.zero());
    REQUIRE(w[0] != carrier.zero());
    REQUIRE(w[1] != carrier.zero());
}

TEST_CASE("Horn product preservation over the full test matrix") {
    std::vector<FiniteRing> rings = {make_ring("Z/2"), make_ring("Z/3"), make_ring("Z/4"),
                                     make_ring("GF(4)")};
    std::vector<Axiom> horn;
    for (const char* name : {"t_rr", "char(2)", "real_horn"})
        for (const Axiom& a : builtin(name, 2).axioms)
            if (classify(a).horn) horn.push_back(a);
    for (const Axiom& chi : horn)
        for (std::size_t i = 0; i < rings.size(); ++i)
            for (std::size_t j = 0; j < rings.size(); ++j) {
                std::vector<FiniteRing> family = {rings[i], rings[j]};
                PreservationReport rep = preservation_check(chi, family, make_filter(2, {}));
                REQUIRE(!rep.violated);
            }
}
