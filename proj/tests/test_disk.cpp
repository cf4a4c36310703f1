#include "doctest.h"

#include "fsk/disk.hpp"
#include "fsk/families.hpp"

#include <algorithm>
#include <set>

using namespace fsk;

TEST_CASE("arc labels and tags")
{
    CHECK(arc_label(3, 1) == ArcLabel{1, 3});
    ArcPair p = arc_pair({0, 2}, {0, 1});
    CHECK(p.first == ArcLabel{0, 1});
    CHECK(p.tag() == "01x02");
}

TEST_CASE("disjointness by cyclic order")
{
    auto pos = arc_positions(6, {{0, 3}, {1, 4}, {1, 2}});
    CHECK(arcs_cross(pos, {0, 3}, {1, 4}));
    CHECK_FALSE(arcs_cross(pos, {0, 3}, {1, 2}));
    for (int n = 3; n <= 10; ++n)
        for (auto sys : {acampo_arcs(n).arcs(), iyama_arcs(n).arcs()}) {
            auto ps = arc_positions(n, sys);
            for (const auto& a : sys)
                for (const auto& b : sys)
                    if (a != b) CHECK_FALSE(arcs_cross(ps, a, b));
        }
}

TEST_CASE("named collections")
{
    for (int n = 3; n <= 10; ++n) {
        auto A = acampo_arcs(n);
        auto I = iyama_arcs(n);
        CHECK(A.pairs.size() == static_cast<std::size_t>((n - 1) * (n - 2) / 2));
        CHECK(I.pairs.size() == A.pairs.size());
        CHECK(acampo_arc_labels(n).size() == static_cast<std::size_t>(n - 1));
        for (const auto& p : I.pairs) {
            CHECK(p.first.first == 0);
            CHECK(p.second.first == 0);
        }
        CHECK(lex_ordered(I));
        CHECK(auroux_generation_check(A));
        CHECK(auroux_generation_check(I));
    }
    CHECK(iyama_arcs(4).pairs.front().tag() == "01x02");
}

TEST_CASE("a system missing a segment does not generate")
{
    CHECK_FALSE(auroux_generation_check(5, {{0, 1}}));
}

TEST_CASE("endomorphism quivers")
{
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(presented_iso_check(endo_quiver(acampo_arcs(n)), gamma_tilde(n), acampo_vertex_map(n)).ok());
        CHECK(presented_iso_check(endo_quiver(iyama_arcs(n)), gamma(n), iyama_vertex_map(n)).ok());
    }
}

TEST_CASE("local Hom and orthogonality")
{
    ArcPair x = arc_pair({0, 1}, {0, 2}), y = arc_pair({0, 1}, {0, 3});
    auto [xy, yx] = local_hom(5, x, y);
    CHECK(xy + yx >= 1);
    CHECK_FALSE(orthogonal(5, x, y));
    CHECK(orthogonal(5, x, x) == false);
}

TEST_CASE("rotation of labels")
{
    auto I = iyama_arcs(6);
    CHECK(rotate_labels(rotate_labels(I, 2), 4).pairs == I.pairs);
    CHECK(rotate_labels(I, 1).provenance == "intermediate");
    CHECK(rotate_pair(6, arc_pair({0, 1}, {0, 2}), 1) == arc_pair({1, 2}, {1, 3}));
}

TEST_CASE("Auroux isomorphism and cones")
{
    ArcPair x = arc_pair({0, 1}, {1, 2});
    ArcPair y = iso_auroux(5, x);
    CHECK(y == arc_pair({0, 1}, {0, 2}));
}

TEST_CASE("combing")
{
    const std::size_t expected_steps[] = {0, 3, 9, 30, 70, 158, 283, 528};
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        auto t = comb(n);
        CHECK(t.steps.size() == expected_steps[n - 3]);
        auto r = replay_trace(t);
        CHECK(r.ok());
        CHECK(verify_lex_order(t));
        CHECK(t.end.provenance == "iyama");
        auto states = trace_states(t);
        CHECK(states.size() == t.steps.size() + 1);
        CHECK(states.back().pairs == t.end.pairs);
        for (const auto& s : t.steps)
            if (s.kind.rfind("cone", 0) == 0) CHECK_FALSE(s.triangle.empty());
    }
}

TEST_CASE("a tampered trace is rejected")
{
    auto t = comb(6);
    REQUIRE(!t.steps.empty());
    auto bad = t;
    bad.steps[0].kind = "transpose_disjoint";
    bad.steps[0].indices = {0, 2};
    CHECK_FALSE(replay_trace(bad).ok());
    auto bad2 = t;
    bad2.steps.pop_back();
    CHECK_FALSE(replay_trace(bad2).ok());
    auto bad3 = t;
    bad3.steps[0].kind = "teleport";
    CHECK_FALSE(replay_trace(bad3).ok());
}
