#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "khoflow/errors.hpp"
#include "khoflow/flow_category.hpp"
#include "oracles.hpp"

using namespace khoflow;

namespace {

// The two-critical-point skeleton of the circle: one object per critical
// point, two connecting trajectories with cancelling signs, so the count is
// zero while the order relation still holds.
FlowCategorySkeleton circle_skeleton() {
    FlowCategorySkeleton fc;
    fc.objects = {"min", "max"};
    fc.mu = {0, 1};
    fc.counts[{1, 0}] = 0;
    fc.relation.insert({1, 0});
    return fc;
}

int top_vertex(const FlowCategorySkeleton& fc) {
    return static_cast<int>(fc.objects.size()) - 1;
}

}  // namespace

TEST_CASE("cube flow category: objects, grading, counts, order") {
    FlowCategorySkeleton c2 = cube_flow_category(2);
    CHECK(c2.objects == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(c2.mu == std::vector<int>{0, 1, 1, 2});
    // Edge signs: the standard convention flips with each earlier 1-bit.
    CHECK(c2.counts.at({3, 1}) == 1);
    CHECK(c2.counts.at({3, 2}) == -1);
    CHECK(c2.counts.at({1, 0}) == 1);
    CHECK(c2.counts.at({2, 0}) == 1);
    CHECK(c2.counts.size() == 4);
    CHECK(c2.relation.count({3, 0}) == 1);
    CHECK(c2.relation.count({1, 2}) == 0);
    CHECK(c2.relation.count({0, 0}) == 0);
    // 3^n - 2^n strictly comparable pairs.
    CHECK(c2.relation.size() == 5);

    CHECK_THROWS_AS(cube_flow_category(0), DimensionError);
    CHECK_THROWS_AS(cube_flow_category(11), ResourceError);
    CHECK_THROWS_AS(cube_flow_category(3, 2), ResourceError);
}

TEST_CASE("strata: single point for n=1, interval for n=2") {
    FlowCategorySkeleton c1 = cube_flow_category(1);
    auto s = strata(c1, 1, 0);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Chain{1, 0});

    FlowCategorySkeleton c2 = cube_flow_category(2);
    auto s2 = strata(c2, 3, 0);
    REQUIRE(s2.size() == 3);
    CHECK(std::count(s2.begin(), s2.end(), Chain{3, 0}) == 1);
    CHECK(std::count(s2.begin(), s2.end(), Chain{3, 1, 0}) == 1);
    CHECK(std::count(s2.begin(), s2.end(), Chain{3, 2, 0}) == 1);

    CHECK(strata(c2, 1, 1) == std::vector<Chain>{{1}});
    CHECK(strata(c2, 1, 2).empty());
    CHECK_THROWS_AS(strata(c2, 4, 0), DimensionError);
    CHECK_THROWS_AS(strata(c2, 0, -1), DimensionError);
}

TEST_CASE("hexagon: counts of strata per codimension and Euler number") {
    FlowCategorySkeleton c3 = cube_flow_category(3);
    FacePoset fp = build_face_poset(c3, top_vertex(c3), 0);
    FaceReport rep = verify_face_axioms(fp);
    CHECK(rep.ok);
    CHECK(rep.dimension == 2);
    CHECK(rep.strata_per_codim.at(0) == 1);
    CHECK(rep.strata_per_codim.at(1) == 6);
    CHECK(rep.strata_per_codim.at(2) == 6);
    // Disk: vertices - edges + interior = 6 - 6 + 1.
    CHECK(rep.strata_per_codim.at(2) - rep.strata_per_codim.at(1) +
              rep.strata_per_codim.at(0) ==
          1);
    CHECK(rep.maximal_chains == 6);
}

TEST_CASE("chain counts match the closed-form oracle") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        FlowCategorySkeleton c = cube_flow_category(n);
        auto chains = strata(c, top_vertex(c), 0);
        std::map<int, std::uint64_t> by_len;
        for (const Chain& ch : chains) ++by_len[static_cast<int>(ch.size())];
        for (int k = 2; k <= n + 1; ++k) {
            CAPTURE(k);
            CHECK(by_len[k] == oracle::cube_chain_count(n, k));
        }
        // Maximal chains correspond to full coordinate orderings.
        FaceReport rep = verify_face_axioms(build_face_poset(c, top_vertex(c), 0));
        CHECK(static_cast<std::uint64_t>(rep.maximal_chains) == oracle::factorial(n));
    }
}

TEST_CASE("face axioms hold for every comparable pair up to n=4") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        FlowCategorySkeleton c = cube_flow_category(n);
        for (const auto& [a, b] : c.relation) {
            FaceReport rep = verify_face_axioms(build_face_poset(c, a, b));
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("composition closure: concatenated chains are chains") {
    FlowCategorySkeleton c = cube_flow_category(3);
    const int objs = static_cast<int>(c.objects.size());
    for (int a = 0; a < objs; ++a)
        for (int b = 0; b < objs; ++b) {
            if (!c.relation.count({a, b})) continue;
            for (int e = 0; e < objs; ++e) {
                if (!c.relation.count({b, e})) continue;
                auto upper = strata(c, a, b);
                auto lower = strata(c, b, e);
                auto whole = strata(c, a, e);
                std::set<Chain> all(whole.begin(), whole.end());
                for (const Chain& hi : upper)
                    for (const Chain& lo : lower) {
                        Chain glued = hi;
                        glued.insert(glued.end(), lo.begin() + 1, lo.end());
                        CHECK(all.count(glued) == 1);
                    }
            }
        }
}

TEST_CASE("corrupted posets are rejected with the offending stratum named") {
    FlowCategorySkeleton c3 = cube_flow_category(3);
    FacePoset good = build_face_poset(c3, top_vertex(c3), 0);
    REQUIRE(verify_face_axioms(good).ok);

    SUBCASE("a deleted maximal chain breaks refinement completeness") {
        FacePoset fp = good;
        auto it = std::find(fp.strata.begin(), fp.strata.end(), Chain{7, 3, 1, 0});
        REQUIRE(it != fp.strata.end());
        fp.strata.erase(it);
        CHECK_THROWS_AS(verify_face_axioms(fp), AxiomViolation);
    }
    SUBCASE("a deleted codimension-1 chain breaks face closure") {
        FacePoset fp = good;
        auto it = std::find(fp.strata.begin(), fp.strata.end(), Chain{7, 3, 0});
        REQUIRE(it != fp.strata.end());
        fp.strata.erase(it);
        CHECK_THROWS_AS(verify_face_axioms(fp), AxiomViolation);
    }
    SUBCASE("a missing open stratum is detected") {
        FacePoset fp = good;
        auto it = std::find(fp.strata.begin(), fp.strata.end(), Chain{7, 0});
        REQUIRE(it != fp.strata.end());
        fp.strata.erase(it);
        CHECK_THROWS_AS(verify_face_axioms(fp), AxiomViolation);
    }
    SUBCASE("a duplicate stratum is detected") {
        FacePoset fp = good;
        fp.strata.push_back(Chain{7, 3, 0});
        CHECK_THROWS_AS(verify_face_axioms(fp), AxiomViolation);
    }
    SUBCASE("a chain that does not descend is detected") {
        FacePoset fp = good;
        fp.strata.push_back(Chain{7, 1, 3, 0});
        CHECK_THROWS_AS(verify_face_axioms(fp), AxiomViolation);
    }
    SUBCASE("an empty poset is detected") {
        FacePoset fp = good;
        fp.strata.clear();
        CHECK_THROWS_AS(verify_face_axioms(fp), AxiomViolation);
    }
    SUBCASE("a chain outside the order is detected") {
        FacePoset fp = build_face_poset(c3, 3, 0);
        fp.strata.push_back(Chain{3, 2, 1, 0});  // 2 and 1 are incomparable
        CHECK_THROWS_AS(verify_face_axioms(fp), AxiomViolation);
    }
    SUBCASE("a tampered order relation is detected") {
        FacePoset fp = good;
        fp.order.erase({7, 0});  // the open stratum no longer descends
        CHECK_THROWS_AS(verify_face_axioms(fp), AxiomViolation);
    }
}

TEST_CASE("floer complex of the cube is acyclic") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        ChainComplex cc = floer_complex(cube_flow_category(n));
        CHECK(chain_homology(cc).empty());
    }
    // n = 1 explicitly: a single +/-1 between two rank-one groups.
    ChainComplex c1 = floer_complex(cube_flow_category(1));
    REQUIRE(c1.d.count(1) == 1);
    REQUIRE(c1.d.at(1).entries.size() == 1);
    CHECK(std::abs(c1.d.at(1).entries[0].val) == 1);
}

TEST_CASE("incoherent counts are rejected by the complex extraction") {
    FlowCategorySkeleton c2 = cube_flow_category(2);
    c2.counts[{3, 1}] = -1;  // both squares' signs now agree: boundary^2 = -2
    CHECK_THROWS_AS(floer_complex(c2), ComplexError);

    FlowCategorySkeleton bad = circle_skeleton();
    bad.counts[{1, 1}] = 1;  // grading gap 0
    CHECK_THROWS_AS(floer_complex(bad), ComplexError);
}

TEST_CASE("circle skeleton has the homology of the circle") {
    FlowCategorySkeleton s1 = circle_skeleton();
    ChainComplex cc = floer_complex(s1);
    auto h = chain_homology(cc);
    REQUIRE(h.size() == 2);
    CHECK(h.at(0).free_rank == 1);
    CHECK(h.at(0).torsion.empty());
    CHECK(h.at(1).free_rank == 1);
    CHECK(h.at(1).torsion.empty());

    // Its lone moduli space passes the face check as a point.
    FaceReport rep = verify_face_axioms(build_face_poset(s1, 1, 0));
    CHECK(rep.ok);
    CHECK(rep.dimension == 0);
}

TEST_CASE("broken-flow report: every gap-two pair balances") {
    FlowCategorySkeleton c2 = cube_flow_category(2);
    BrokenFlowReport rep = d_squared_from_boundary(c2);
    CHECK(rep.balanced);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].above == 3);
    CHECK(rep.pairs[0].below == 0);
    REQUIRE(rep.pairs[0].legs.size() == 2);
    // Two broken flows through the two intermediate vertices, opposite signs.
    const auto& [m0, a0, b0] = rep.pairs[0].legs[0];
    const auto& [m1, a1, b1] = rep.pairs[0].legs[1];
    CHECK(m0 == 1);
    CHECK(m1 == 2);
    CHECK(a0 * b0 + a1 * b1 == 0);
    CHECK(rep.pairs[0].signed_sum == 0);

    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        BrokenFlowReport r = d_squared_from_boundary(cube_flow_category(n));
        CHECK(r.balanced);
        for (const BrokenPair& p : r.pairs) {
            CHECK(p.signed_sum == 0);
            CHECK(p.legs.size() % 2 == 0);  // interval ends come in pairs
        }
    }
}

TEST_CASE("broken-flow report flags corrupted signs without throwing") {
    FlowCategorySkeleton c2 = cube_flow_category(2);
    c2.counts[{3, 1}] = -1;
    BrokenFlowReport rep = d_squared_from_boundary(c2);
    CHECK_FALSE(rep.balanced);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].signed_sum == -2);
}
