#include "doctest.h"
#include "oracles.hpp"

#include "fsk/divides.hpp"
#include "fsk/families.hpp"

#include <numeric>

using namespace fsk;

namespace {

std::vector<int> inverse(const std::vector<int>& m)
{
    std::vector<int> r(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) r[m[k]] = static_cast<int>(k);
    return r;
}

}  // namespace

TEST_CASE("g_n divides are valid and have the expected branch count")
{
    for (int n = 3; n <= 12; ++n) {
        Divide d = gn_divide(n);
        CHECK_NOTHROW(d.check());
        CHECK(d.branches == (n + 1) / 2);
    }
}

TEST_CASE("vertex counts")
{
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        auto c = milnor_counts(gn_divide(n));
        auto o = oracle::milnor_counts(n);
        CHECK(c.double_points == o.double_points);
        CHECK(c.negative == o.negative);
        CHECK(c.positive == o.positive);
        CHECK(c.milnor_number == oracle::milnor_number(n));
        auto f = gn_formula_counts(n);
        CHECK(f.milnor_number == oracle::milnor_number(n));
    }
    auto c5 = milnor_counts(gn_divide(5));
    CHECK(c5.double_points == 4);
    CHECK(c5.negative == 1);
    CHECK(c5.positive == 1);
}

TEST_CASE("regions carry alternating signs")
{
    for (int n = 3; n <= 9; ++n) {
        auto d = gn_divide(n);
        auto sr = regions_and_signs(d);
        for (const auto& r : sr.regions) CHECK((r.sign == 1 || r.sign == -1));
        for (std::size_t a = 0; a < sr.regions.size(); ++a)
            for (std::size_t b = a + 1; b < sr.regions.size(); ++b)
                for (int s : sr.regions[a].segments)
                    for (int t : sr.regions[b].segments)
                        if (s == t) CHECK(sr.regions[a].sign != sr.regions[b].sign);
    }
}

TEST_CASE("fibre invariants")
{
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        auto f = fibre_invariants(gn_divide(n));
        CHECK(f.euler_characteristic == oracle::euler_characteristic(n));
        CHECK(f.punctures == oracle::punctures(n));
        CHECK(f.genus == oracle::genus(n));
    }
}

TEST_CASE("A'Campo quiver of the g_n divide")
{
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        auto q = acampo_quiver(gn_divide(n));
        CHECK(q.algebra.num_vertices() == static_cast<std::size_t>(oracle::milnor_number(n)));
        auto r = presented_iso_check(gamma_tilde(n), q.algebra, inverse(gn_vertex_labels(n, q)));
        CHECK(r.ok());
    }
}

TEST_CASE("user divides are validated")
{
    Divide d = gn_divide(4);
    d.segments[0].branch = d.branches;
    CHECK_THROWS_AS(d.check(), InvalidDivide);
    Divide e = gn_divide(4);
    e.rotation[0].push_back(0);
    CHECK_THROWS_AS(e.check(), InvalidDivide);
}

TEST_CASE("Iyama surface and the cycle composition rule")
{
    for (int n = 3; n <= 12; ++n) CHECK(iyama_surface_check(n).ok());
    CHECK(composition_nonzero(1, 3, 2, 4, 2, 5));
    CHECK_FALSE(composition_nonzero(1, 2, 2, 3, 3, 4));
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        auto C = iyama_cycle_algebra(n);
        auto G = gamma(n);
        auto V = oracle::grid_vertices(n);
        for (std::size_t x = 0; x < V.size(); ++x)
            for (std::size_t y = 0; y < V.size(); ++y)
                CHECK(C.block(x, y).size() ==
                      (oracle::cycle_hom(V[y].first, V[y].second, V[x].first, V[x].second) ? 1u : 0u));
        std::vector<int> id(G.num_vertices());
        std::iota(id.begin(), id.end(), 0);
        CHECK(presented_iso_check(G, C, id).ok());
    }
}
