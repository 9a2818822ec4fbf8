#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ribbon/database.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/tangle.hpp"
#include "testutil.hpp"

using namespace ribbon;

namespace {

Tangle one_crossing_tangle() {
    Tangle t;
    t.interior = parse_pd("X_{1,2,3,4}");
    t.tops = {2, 3};
    t.bottoms = {1, 4};
    return t;
}

}  // namespace

TEST_CASE("stitch with an empty pair list is the identity") {
    auto t = one_crossing_tangle();
    CHECK(stitch(t, {}) == t);
}

TEST_CASE("stitching a one-crossing tangle closed gives a kinked unknot") {
    auto t = one_crossing_tangle();
    auto closed = stitch(t, {{1, 4}, {2, 3}});
    CHECK(closed.interior.is_closed());
    CHECK(closed.open_end_count() == 0);
    CHECK(closed.interior.crossing_count() == 1);
    CHECK(trace_components(closed.interior).count == 1);
    CHECK(jones(closed.interior) == jones(testutil::unknot()));
}

TEST_CASE("stitch contract errors") {
    auto t = one_crossing_tangle();
    CHECK_THROWS_AS(stitch(t, {{1, 1}}), ContractError);
    CHECK_THROWS_AS(stitch(t, {{1, 9}}), ContractError);
    CHECK_THROWS_AS(stitch(t, {{1, 2}, {1, 3}}), ContractError);
}

TEST_CASE("untangle builds crossingless strands") {
    auto u1 = untangle(1);
    CHECK(u1.tops.size() == 1);
    CHECK(u1.bottoms.size() == 1);
    CHECK(u1.interior.crossing_count() == 0);
    CHECK(u1.interior.arcs().size() == 1);
    CHECK_THROWS_AS(untangle(0), ContractError);

    auto u2 = stitch(untangle(2), {{untangle(2).tops[0], untangle(2).tops[1]}});
    CHECK(u2.interior.arcs().size() == 1);  // U-shape: one strand left
    CHECK(u2.tops.empty());
    CHECK(u2.bottoms.size() == 2);
}

TEST_CASE("top closure of the 4-strand untangle") {
    auto u = untangle(4);
    auto closed = top_closure(u);
    CHECK(closed.tops.empty());
    CHECK(closed.bottoms.size() == 4);
    CHECK(closed.interior.crossing_count() == 0);
    CHECK(closed.interior.arcs().size() == 2);  // two nested arcs
    CHECK_THROWS_AS(top_closure(untangle(3)), ContractError);
}

TEST_CASE("closure pair bookkeeping") {
    // phi applies 2n-1 stitchings, tau and beta n each, and phi's bottom
    // stitchings are exactly beta's
    for (int n = 1; n <= 4; ++n) {
        auto u = untangle(2 * n);
        auto full = full_closure_pairs(u);
        auto bot = bottom_closure_pairs(u);
        auto top = top_closure_pairs(u);
        CHECK(top.size() == static_cast<std::size_t>(n));
        CHECK(bot.size() == static_cast<std::size_t>(n));
        CHECK(full.size() == static_cast<std::size_t>(2 * n - 1));
        for (const auto& p : bot)
            CHECK(std::find(full.begin(), full.end(), p) != full.end());
        std::size_t bottoms_in_full = 0;
        for (const auto& p : full)
            bottoms_in_full += std::find(bot.begin(), bot.end(), p) != bot.end();
        CHECK(bottoms_in_full == bot.size());
    }
    // same bookkeeping on a genuine database tangle
    const auto& rec = load_builtin().front();
    auto t = cut(rec.diagram(), rec.cut_set());
    CHECK(full_closure_pairs(t).size() == 3);
    CHECK(top_closure_pairs(t).size() == 2);
    CHECK(bottom_closure_pairs(t).size() == 2);
}

TEST_CASE("beta after tau on untangles gives crossingless unlinks") {
    for (int n = 1; n <= 5; ++n) {
        auto closed = bottom_closure(top_closure(untangle(2 * n)));
        CHECK(closed.open_end_count() == 0);
        CHECK(closed.interior.crossing_count() == 0);
        CHECK(trace_components(closed.interior).count == n);
        // the closures commute as diagram operations
        auto other = top_closure(bottom_closure(untangle(2 * n)));
        CHECK(closed.interior == other.interior);
    }
}

TEST_CASE("full closure leaves t1 and t_2n open") {
    auto u = untangle(4);
    auto t = full_closure(u);
    CHECK(t.tops.size() == 2);
    CHECK(t.tops.front() == u.tops.front());
    CHECK(t.tops.back() == u.tops.back());
    CHECK(t.bottoms.empty());
    CHECK(t.interior.crossing_count() == 0);
    // a single unknotted arc remains, no closed circle
    CHECK(t.interior.arcs().size() == 1);
    CHECK(t.interior.free_loops() == 0);

    auto two = full_closure(untangle(2));
    CHECK(two.tops.size() == 2);
    CHECK(two.interior.arcs().size() == 1);
    CHECK(two.interior.free_loops() == 0);
}

TEST_CASE("closures commute on cut database tangles") {
    for (const auto& rec : {load_builtin()[0], load_builtin()[6]}) {  // 6_1, 9_46
        auto t = cut(rec.diagram(), rec.cut_set());
        auto a = bottom_closure(top_closure(t)).interior;
        auto b = top_closure(bottom_closure(t)).interior;
        CHECK(equal_up_to_relabel(a, b));
    }
}

TEST_CASE("top closure halves the cut tangle's strand count") {
    auto t = cut(load_builtin().front().diagram(), load_builtin().front().cut_set());
    auto closed = top_closure(t);
    CHECK(closed.interior.crossing_count() == 11);  // stitching adds no crossings
    CHECK(closed.open_end_count() == 4);            // a 2-strand tangle remains
    CHECK(closed.tops.empty());
    CHECK(closed.bottoms.size() == 4);
}

TEST_CASE("cut produces a braid-form 4-strand tangle") {
    const auto& rec = load_builtin().front();  // 6_1
    auto t = cut(rec.diagram(), rec.cut_set());
    CHECK(t.tops.size() == 4);
    CHECK(t.bottoms.size() == 4);
    CHECK(t.is_braid_form());
    CHECK(t.interior.crossing_count() == 11);
    CHECK(t.interior.boundary_labels().size() == 8);
    // strand-entry ends keep the cut labels
    CHECK(t.tops[0] == 1);
    CHECK(t.tops[2] == rec.values.v2);
    CHECK(t.bottoms[1] == rec.values.v1);
    CHECK(t.bottoms[3] == rec.values.v3);
}

TEST_CASE("cut then restitch reproduces the knot, for every clean row") {
    for (const auto& rec : load_builtin()) {
        CutSet cs = rec.cut_set();
        std::set<Edge> uniq{cs.t1t4, cs.v1, cs.v2, cs.v3};
        if (uniq.size() != 4) continue;  // degenerate row, checked elsewhere
        auto pd = rec.diagram();
        auto t = cut(pd, cs);
        auto restitched = stitch(t, {{t.tops[0], t.tops[3]},
                                     {t.tops[1], t.tops[2]},
                                     {t.bottoms[0], t.bottoms[1]},
                                     {t.bottoms[2], t.bottoms[3]}});
        CHECK(restitched.interior.is_closed());
        CHECK(equal_up_to_relabel(restitched.interior, pd));
    }
}

TEST_CASE("cut rejections") {
    const auto& rec = load_builtin().front();
    auto pd = rec.diagram();
    CHECK_THROWS_AS(cut(pd, CutSet{1, 9, 15, 1}), DegenerateCutError);
    CHECK_THROWS_AS(cut(pd, CutSet{1, 9, 13, 999}), ContractError);
    CHECK_THROWS_AS(cut(parse_pd("X_{1,2,3,4}"), CutSet{1, 2, 3, 4}), ContractError);
    // multi-component diagrams are rejected
    auto split = parse_pd("X_{1,4,2,5} X_{3,6,4,1} X_{5,2,6,3} X_{7,7,8,8}");
    CHECK_THROWS_AS(cut(split, CutSet{1, 2, 3, 7}), ContractError);
}

TEST_CASE("unlink candidates: components and crossing counts") {
    const auto& sixone = load_builtin().front();
    auto cand = unlink_candidate(sixone.diagram(), sixone.cut_set());
    CHECK(cand.crossing_count() == 11);
    CHECK(trace_components(cand).count == 2);
    CHECK(jones(cand).str() == "-t^-1/2 - t^1/2");

    for (const auto& rec : load_builtin()) {
        if (rec.name == "9_46") {
            auto c = unlink_candidate(rec.diagram(), rec.cut_set());
            CHECK(c.crossing_count() == 13);
            CHECK(trace_components(c).count == 2);
        }
    }
}

TEST_CASE("synthetic record from an untangle closes to the exact unlink") {
    // beta∘tau of the 4-strand untangle, assembled through the same stitch path
    auto u = untangle(4);
    auto pairs = top_closure_pairs(u);
    auto bp = bottom_closure_pairs(u);
    pairs.insert(pairs.end(), bp.begin(), bp.end());
    auto closed = stitch(u, pairs);
    CHECK(closed.interior.is_closed());
    CHECK(closed.interior.crossing_count() == 0);
    CHECK(closed.interior.free_loops() == 2);
}
