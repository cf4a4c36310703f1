#include "doctest.h"
#include "oracles.hpp"

#include "fsk/families.hpp"

using namespace fsk;

TEST_CASE("vertex indexing")
{
    CHECK(gt_index(6, 1, 2) == 0);
    CHECK(gt_index(6, 1, 3) == 1);
    CHECK(gt_index(6, 2, 3) == 2);
    CHECK(gt_index(6, 4, 5) == 9);
    CHECK(q_index(6, 2, 4) == 4);
    CHECK(gt_label(1, 3) != q_label(1, 3));
}

TEST_CASE("gamma_tilde small cases")
{
    auto A = gamma_tilde(3);
    CHECK(A.num_vertices() == 1);
    CHECK(A.dim() == 1);

    auto B = gamma_tilde(4);
    REQUIRE(B.num_vertices() == 3);
    REQUIRE(B.quiver.arrows.size() == 2);
    int center = B.quiver.vertex(gt_label(1, 3));
    for (const auto& a : B.quiver.arrows) CHECK(a.src == center);

    CHECK(gamma_tilde(5).num_vertices() == 6);
    CHECK(gamma_tilde(10).num_vertices() == 36);
}

TEST_CASE("gamma arrows and Hom pattern")
{
    auto G = gamma(5);
    CHECK(G.num_vertices() == 6);
    CHECK(G.quiver.arrows.size() == 6);
    CHECK(G.quiver.acyclic());
    for (int n = 3; n <= 8; ++n) {
        auto G = gamma(n);
        auto V = oracle::grid_vertices(n);
        REQUIRE(V.size() == G.num_vertices());
        for (std::size_t x = 0; x < V.size(); ++x)
            for (std::size_t y = 0; y < V.size(); ++y)
                CHECK(static_cast<int>(G.block(x, y).size()) ==
                      (oracle::cycle_hom(V[y].first, V[y].second, V[x].first, V[x].second) ? 1 : 0));
    }
}

TEST_CASE("interval modules")
{
    for (int m = 1; m <= 5; ++m) {
        auto mods = interval_modules(m);
        CHECK(mods.size() == static_cast<std::size_t>(m * (m + 1) / 2));
        for (const auto& X : mods)
            for (const auto& Y : mods) CHECK(hom_intervals(X, Y) == oracle::interval_hom(X.a, X.b, Y.a, Y.b));
    }
    CHECK_THROWS(interval_modules(0));
}

TEST_CASE("A_m quivers")
{
    auto lin = a_quiver(4, Orientation::linear);
    CHECK(lin.arrows.size() == 3);
    for (const auto& a : lin.arrows) CHECK(a.dst == a.src + 1);
    auto alt = a_quiver(4, Orientation::alternating);
    CHECK(alt.arrows[0].dst == 1);
    CHECK(alt.arrows[1].dst == 1);
    CHECK(alt.arrows[2].dst == 3);
}

TEST_CASE("gamma agrees with the Auslander algebra oracle")
{
    for (int n = 3; n <= 9; ++n) {
        CAPTURE(n);
        auto G = gamma(n);
        auto O = auslander_oracle(n - 2);
        CHECK(O.dim() == G.dim());
        auto r = presented_iso_check(G, O, gamma_to_auslander(n));
        CHECK(r.ok());
    }
}
