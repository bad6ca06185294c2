#include <set>

#include "doctest.h"
#include "khoflow/errors.hpp"
#include "khoflow/resolution.hpp"
#include "oracles.hpp"

using namespace khoflow;

namespace {
const char* kHopfMinus = "X(4,2,1,3) X(2,4,3,1)";
const char* kTrefoilGloss = "X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)";
const char* kTrefoilRight = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

BitVec bits(std::initializer_list<int> v) {
    BitVec u;
    for (int b : v) u.push_back(static_cast<std::uint8_t>(b));
    return u;
}

// Compare the library's circle partition against the occurrence-walk oracle.
void check_against_oracle(const LinkDiagram& d, const BitVec& u) {
    ResolutionConfiguration c = resolve(d, u);
    auto expected = oracle::circle_partition(d, u);
    REQUIRE(static_cast<int>(c.circles.size()) ==
            static_cast<int>(expected.size()) + d.unknot_components);
    for (const auto& ids : expected) {
        bool found = false;
        for (const Circle& z : c.circles)
            if (std::set<int>(z.strands.begin(), z.strands.end()) == ids) found = true;
        CHECK(found);
    }
}
}  // namespace

TEST_CASE("hopf link resolutions match the tracing oracle") {
    LinkDiagram d = parse_pd(kHopfMinus);
    ResolutionConfiguration c00 = resolve(d, bits({0, 0}));
    CHECK(c00.circles.size() == 2);
    CHECK(c00.arcs.size() == 2);
    ResolutionConfiguration c01 = resolve(d, bits({0, 1}));
    CHECK(c01.circles.size() == 1);
    CHECK(c01.arcs.size() == 1);
    CHECK(c01.arcs[0].crossing == 0);
    for (auto u : {bits({0, 0}), bits({0, 1}), bits({1, 0}), bits({1, 1})})
        check_against_oracle(d, u);
    CHECK_THROWS_AS(resolve(d, bits({0})), DimensionError);
}

TEST_CASE("trefoil resolution carries arcs at its 0-resolved crossings") {
    for (const char* text : {kTrefoilGloss, kTrefoilRight}) {
        LinkDiagram d = parse_pd(text);
        ResolutionConfiguration c = resolve(d, bits({0, 1, 0}));
        REQUIRE(c.arcs.size() == 2);
        CHECK(c.arcs[0].crossing == 0);
        CHECK(c.arcs[1].crossing == 2);
        CHECK(static_cast<int>(c.circles.size()) == oracle::circle_count(d, bits({0, 1, 0})));
        for (int k = 0; k < 8; ++k) check_against_oracle(d, lex_vertex(3, k));
    }
}

TEST_CASE("unknot components add synthetic circles everywhere") {
    LinkDiagram d = parse_pd("X(4,2,1,3) X(2,4,3,1) U");
    for (int k = 0; k < 4; ++k) {
        ResolutionConfiguration c = resolve(d, lex_vertex(2, k));
        CHECK(static_cast<int>(c.circles.size()) == oracle::circle_count(d, lex_vertex(2, k)));
        CHECK(c.circles.back().strands.empty());
        CHECK(c.circles.back().id == 5);
    }
    ResolutionConfiguration only = resolve(parse_pd("U U"), {});
    REQUIRE(only.circles.size() == 2);
    CHECK(only.circles[0].id != only.circles[1].id);
}

TEST_CASE("edge classification: hopf merges and splits") {
    LinkDiagram d = parse_pd(kHopfMinus);
    EdgeClass merge = edge_type(d, bits({0, 0}), 1);
    CHECK(merge.kind == EdgeKind::merge);
    CHECK(merge.sources.size() == 2);
    CHECK(merge.targets.size() == 1);
    EdgeClass split = edge_type(d, bits({0, 1}), 0);
    CHECK(split.kind == EdgeKind::split);
    CHECK(split.sources.size() == 1);
    CHECK(split.targets.size() == 2);
    CHECK_THROWS_AS(edge_type(d, bits({0, 1}), 1), BitError);
    CHECK_THROWS_AS(edge_type(d, bits({0, 1}), 7), DimensionError);
}

TEST_CASE("every cube edge of small diagrams changes the circle count by one") {
    for (const char* text : {kHopfMinus, kTrefoilGloss, kTrefoilRight}) {
        LinkDiagram d = parse_pd(text);
        const int n = static_cast<int>(d.crossings.size());
        for (int k = 0; k < (1 << n); ++k) {
            BitVec u = lex_vertex(n, k);
            for (int i = 0; i < n; ++i) {
                if (u[static_cast<std::size_t>(i)] != 0) continue;
                BitVec v = u;
                v[static_cast<std::size_t>(i)] = 1;
                const int cu = oracle::circle_count(d, u);
                const int cv = oracle::circle_count(d, v);
                CHECK(std::abs(cu - cv) == 1);
                EdgeClass e = edge_type(d, u, i);
                CHECK((e.kind == EdgeKind::merge ? cu - 1 : cu + 1) == cv);
            }
        }
    }
}

TEST_CASE("degenerate one-crossing diagram fails edge classification") {
    LinkDiagram d = parse_pd("X(1,2,1,2)");
    CHECK_THROWS_AS(edge_type(d, bits({0}), 0), TopologyError);
}

TEST_CASE("surgery composes by bit union") {
    LinkDiagram d = parse_pd(kTrefoilRight);
    CHECK(surgery(d, bits({0, 0, 0}), {}) == resolve(d, bits({0, 0, 0})));
    CHECK(surgery(d, bits({0, 0, 0}), {0, 1, 2}) == resolve(d, bits({1, 1, 1})));
    CHECK(surgery(d, bits({0, 1, 0}), {2}) == resolve(d, bits({0, 1, 1})));
    // surgery(surgery(., A1), A2) = surgery(., A1 u A2) for disjoint subsets.
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            ResolutionConfiguration two_step =
                surgery(d, surgery(d, bits({0, 0, 0}), {a}).vertex, {b});
            CHECK(two_step == surgery(d, bits({0, 0, 0}), {a, b}));
        }
    CHECK_THROWS_AS(surgery(d, bits({0, 1, 0}), {1}), BitError);
    CHECK_THROWS_AS(surgery(d, bits({0, 1, 0}), {5}), DimensionError);
}

TEST_CASE("core keeps only arc-touched circles") {
    LinkDiagram d = parse_pd(kHopfMinus);
    // Full 1-resolution: no arcs left, so the core is empty.
    ResolutionConfiguration top = resolve(d, bits({1, 1}));
    CHECK(top.arcs.empty());
    CHECK(core(top).circles.empty());
    CHECK_FALSE(is_basic(top));
    // Bottom vertex: both circles touch arcs.
    ResolutionConfiguration bottom = resolve(d, bits({0, 0}));
    CHECK(core(bottom) == bottom);
    CHECK(is_basic(bottom));
    CHECK(is_basic(core(top)));
    // A free unknot component is never basic.
    ResolutionConfiguration with_u = resolve(parse_pd("X(4,2,1,3) X(2,4,3,1) U"), bits({0, 0}));
    CHECK_FALSE(is_basic(with_u));
    CHECK(core(with_u).circles.size() == 2);
}

namespace {
LabeledConfiguration labeled(const ResolutionConfiguration& c, std::initializer_list<Label> ls) {
    LabeledConfiguration lc;
    lc.config = c;
    auto it = ls.begin();
    for (const Circle& z : c.circles) lc.labels[z.id] = *it++;
    return lc;
}
}  // namespace

TEST_CASE("covering relation follows the label rules") {
    LinkDiagram d = parse_pd(kHopfMinus);
    ResolutionConfiguration lo = resolve(d, bits({0, 0}));
    ResolutionConfiguration hi = resolve(d, bits({1, 0}));
    REQUIRE(lo.circles.size() == 2);
    REQUIRE(hi.circles.size() == 1);

    auto pp = labeled(lo, {Label::plus, Label::plus});
    auto pm = labeled(lo, {Label::plus, Label::minus});
    auto mm = labeled(lo, {Label::minus, Label::minus});
    auto top_p = labeled(hi, {Label::plus});
    auto top_m = labeled(hi, {Label::minus});

    CHECK(covers(pp, top_p));
    CHECK_FALSE(covers(pp, top_m));
    CHECK(covers(pm, top_m));
    CHECK_FALSE(covers(pm, top_p));
    CHECK_FALSE(covers(mm, top_p));
    CHECK_FALSE(covers(mm, top_m));

    // Equal vertices never cover; order matters.
    CHECK_FALSE(covers(pp, pm));
    CHECK_FALSE(covers(top_p, pp));

    LinkDiagram other = parse_pd(kTrefoilRight);
    auto foreign = labeled(resolve(other, bits({0, 0, 0})), {Label::plus, Label::plus});
    CHECK_THROWS_AS(covers(pp, foreign), DiagramMismatch);
}

TEST_CASE("covers needs equal labels on shared circles") {
    LinkDiagram d = parse_pd("X(4,2,1,3) X(2,4,3,1) U");
    ResolutionConfiguration lo = resolve(d, bits({0, 0}));  // 2 circles + unknot
    ResolutionConfiguration hi = resolve(d, bits({1, 0}));  // 1 circle + unknot
    auto low = labeled(lo, {Label::plus, Label::plus, Label::plus});
    auto high_match = labeled(hi, {Label::plus, Label::plus});
    auto high_clash = labeled(hi, {Label::plus, Label::minus});  // unknot label flips
    CHECK(covers(low, high_match));
    CHECK_FALSE(covers(low, high_clash));
}

TEST_CASE("frobenius coefficient counts per labeled source") {
    // Over every corpus-relevant edge, a labeled source covers exactly the
    // predicted number of labeled targets: merge (+,+) or mixed -> 1,
    // (-,-) -> 0; split + -> 2, - -> 1.
    for (const char* text : {kHopfMinus, kTrefoilRight}) {
        LinkDiagram d = parse_pd(text);
        const int n = static_cast<int>(d.crossings.size());
        for (int k = 0; k < (1 << n); ++k) {
            BitVec u = lex_vertex(n, k);
            for (int i = 0; i < n; ++i) {
                if (u[static_cast<std::size_t>(i)] != 0) continue;
                BitVec v = u;
                v[static_cast<std::size_t>(i)] = 1;
                ResolutionConfiguration cu = resolve(d, u);
                ResolutionConfiguration cv = resolve(d, v);
                EdgeClass ec = classify_edge(cu, cv);
                const int nc_u = static_cast<int>(cu.circles.size());
                const int nc_v = static_cast<int>(cv.circles.size());
                for (int mu = 0; mu < (1 << nc_u); ++mu) {
                    LabeledConfiguration y;
                    y.config = cu;
                    for (int p = 0; p < nc_u; ++p)
                        y.labels[cu.circles[static_cast<std::size_t>(p)].id] =
                            (mu >> p) & 1 ? Label::minus : Label::plus;
                    int expected;
                    if (ec.kind == EdgeKind::merge) {
                        int plus = (y.labels.at(ec.sources[0]) == Label::plus ? 1 : 0) +
                                   (y.labels.at(ec.sources[1]) == Label::plus ? 1 : 0);
                        expected = plus == 0 ? 0 : 1;
                    } else {
                        expected = y.labels.at(ec.sources[0]) == Label::plus ? 2 : 1;
                    }
                    int found = 0;
                    for (int mv = 0; mv < (1 << nc_v); ++mv) {
                        LabeledConfiguration x;
                        x.config = cv;
                        for (int p = 0; p < nc_v; ++p)
                            x.labels[cv.circles[static_cast<std::size_t>(p)].id] =
                                (mv >> p) & 1 ? Label::minus : Label::plus;
                        if (covers(y, x)) ++found;
                    }
                    CHECK(found == expected);
                }
            }
        }
    }
}
