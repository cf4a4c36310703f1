#include "doctest.h"

#include "fsk/complexes.hpp"
#include "fsk/families.hpp"

#include <numeric>
#include <random>

using namespace fsk;

namespace {

std::shared_ptr<const FDAlgebra> shared_gamma(int n) { return std::make_shared<const FDAlgebra>(gamma(n)); }

std::shared_ptr<const FDAlgebra> a3(bool zero_relation)
{
    Quiver q;
    for (auto v : {"0", "1", "2"}) q.add_vertex(v);
    q.add_arrow(0, 1, "a");
    q.add_arrow(1, 2, "b");
    std::vector<Relation> rels;
    if (zero_relation) rels.push_back({{{Rational(1), Path{0, 2, {0, 1}}}}});
    return std::make_shared<const FDAlgebra>(build_algebra(q, rels));
}

ProjComplex two_term(std::shared_ptr<const FDAlgebra> G, int a, int b)
{
    std::vector<std::vector<int>> t(2);
    if (a >= 0) t[0] = {a};
    if (b >= 0) t[1] = {b};
    std::vector<EltMatrix> d(2);
    if (a >= 0 && b >= 0) {
        const auto& blk = G->block(a, b);
        REQUIRE(blk.size() == 1);
        d[0] = EltMatrix(1, std::vector<Elt>(1));
        d[0][0][0] = {{blk[0], Rational(1)}};
    }
    return make_complex(G, -1, t, d);
}

}  // namespace

TEST_CASE("differentials must square to zero")
{
    auto free = a3(false);
    auto rel = a3(true);
    auto build = [](std::shared_ptr<const FDAlgebra> A) {
        EltMatrix d0(1, std::vector<Elt>(1)), d1(1, std::vector<Elt>(1));
        d0[0][0] = {{A->block(2, 1).at(0), Rational(1)}};
        d1[0][0] = {{A->block(1, 0).at(0), Rational(1)}};
        return make_complex(A, 0, {{2}, {1}, {0}}, {d0, d1});
    };
    CHECK_THROWS_AS(build(free), InvalidComplex);
    ProjComplex K = build(rel);
    CHECK(K.total_rank() == 3);
    CHECK(K.hi() == 2);
}

TEST_CASE("stalks, shifts and Hom between projectives")
{
    auto G = shared_gamma(5);
    for (std::size_t x = 0; x < G->num_vertices(); ++x)
        for (std::size_t y = 0; y < G->num_vertices(); ++y) {
            auto t = ext_table(stalk(G, x), stalk(G, y));
            int e0 = t.count(0) ? t.at(0) : 0;
            CHECK(e0 == static_cast<int>(G->block(x, y).size()));
            CHECK(t.size() <= 1);
        }
    ProjComplex P = stalk(G, 0, 3);
    CHECK(shift(P, 2).lo == 1);
    CHECK(same_complex(shift(shift(P, 2), -2), P));
}

TEST_CASE("index constraints")
{
    CHECK_NOTHROW(check_k_index(5, t_indices(5).front()));
    CHECK_THROWS_AS(check_k_index(5, KIndex{3, 2, 1, 4}), IndexConstraintViolation);
    CHECK_THROWS_AS(check_k_index(5, KIndex{0, 1, 2, 9}), IndexConstraintViolation);
    CHECK(projective_vertex(6, 0, 3) == -1);
    CHECK(projective_vertex(6, 3, 3) == -1);
    CHECK(projective_vertex(6, 1, 3) >= 0);
    for (int n = 3; n <= 10; ++n) CHECK(t_indices(n).size() == static_cast<std::size_t>((n - 1) * (n - 2) / 2));
}

TEST_CASE("cone of the identity is contractible")
{
    auto G = shared_gamma(4);
    auto K = two_term(G, 1, 0);
    auto C = cone(identity_morphism(K));
    C.check();
    CHECK(minimize(C).total_rank() == 0);
    CHECK(iso_up_to_shift(K, shift(K, 2)) == std::optional<int>(-2));
    CHECK_FALSE(iso_up_to_shift(K, stalk(G, 0)));
}

TEST_CASE("T_n: d^2 = 0, no higher self-extensions, summand count")
{
    for (int n = 3; n <= 7; ++n) {
        CAPTURE(n);
        auto G = shared_gamma(n);
        auto T = t_complex(G, n);
        CHECK(T.size() == static_cast<std::size_t>((n - 1) * (n - 2) / 2));
        for (const auto& K : T) CHECK_NOTHROW(K.check());
        for (const auto& K : T)
            for (const auto& L : T)
                for (auto [t, d] : ext_table(K, L))
                    if (t != 0) CHECK(d == 0);
    }
}

TEST_CASE("Ext^0 between summands follows gamma_tilde")
{
    for (int n = 3; n <= 7; ++n) {
        CAPTURE(n);
        auto G = shared_gamma(n);
        auto T = t_complex(G, n);
        auto Gt = gamma_tilde(n);
        auto map = t_to_gamma_tilde(n);
        for (std::size_t a = 0; a < T.size(); ++a)
            for (std::size_t b = 0; b < T.size(); ++b)
                CHECK(ext(T[a], T[b], 0) == static_cast<int>(Gt.block(map[b], map[a]).size()));
    }
}

TEST_CASE("Ext is compatible with shifts")
{
    std::mt19937 rng(11);
    auto G = shared_gamma(6);
    auto T = t_complex(G, 6);
    std::vector<ProjComplex> objs = T;
    for (std::size_t v = 0; v < G->num_vertices(); ++v) objs.push_back(stalk(G, v));
    std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
    std::uniform_int_distribution<int> sh(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const auto& K = objs[pick(rng)];
        const auto& L = objs[pick(rng)];
        int s = sh(rng);
        for (int t = -3; t <= 3; ++t) CHECK(ext(K, shift(L, s), t) == ext(K, L, t + s));
    }
}

TEST_CASE("each K complex is an iterated cone")
{
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        auto G = shared_gamma(n);
        for (const auto& x : t_indices(n)) {
            CAPTURE(x.str());
            auto X = two_term(G, projective_vertex(n, x.l, x.i), projective_vertex(n, x.l, x.j));
            auto Y = shift(two_term(G, projective_vertex(n, x.i, x.m), projective_vertex(n, x.j, x.m)), -1);
            auto maps = ext0_basis(X, Y);
            REQUIRE(maps.size() <= 1);
            auto f = maps.empty() ? zero_morphism(X, Y) : maps[0];
            CHECK(f.is_chain_map());
            auto C = cone(f);
            CHECK_NOTHROW(C.check());
            CHECK(iso_up_to_shift(k_complex(G, n, x), C) == std::optional<int>(0));
        }
    }
}

TEST_CASE("chain maps compose and convert to cocycles")
{
    auto G = shared_gamma(6);
    auto T = t_complex(G, 6);
    for (std::size_t a = 0; a < T.size(); ++a)
        for (std::size_t b = 0; b < T.size(); ++b)
            for (const auto& f : ext0_basis(T[a], T[b])) {
                CHECK(f.is_chain_map());
                CHECK(compose(f, identity_morphism(T[b])).is_chain_map());
                auto H = hom_complex(T[a], T[b]);
                auto v = chain_map_to_cocycle(H, f);
                auto g = cocycle_to_chain_map(T[a], T[b], H, v);
                CHECK(g.is_chain_map());
            }
}

TEST_CASE("generation witness and endomorphism algebras")
{
    for (int n = 3; n <= 7; ++n) {
        CAPTURE(n);
        auto G = shared_gamma(n);
        auto w = generation_witness(G, n);
        CHECK(replay_witness(G, n, w).ok());

        std::vector<ProjComplex> P;
        std::vector<std::string> names;
        for (std::size_t v = 0; v < G->num_vertices(); ++v) {
            P.push_back(stalk(G, v));
            names.push_back(G->quiver.vertices[v]);
        }
        std::vector<int> id(G->num_vertices());
        std::iota(id.begin(), id.end(), 0);
        CHECK(presented_iso_check(end_algebra(P, names), opposite(*G), id).ok());

        std::vector<std::string> tn;
        for (const auto& x : t_indices(n)) tn.push_back(x.str());
        auto E = end_algebra(t_complex(G, n), tn);
        CHECK(presented_iso_check(E, gamma_tilde(n), t_to_gamma_tilde(n)).ok());
    }
    auto G = shared_gamma(4);
    CHECK_THROWS_AS(end_algebra({stalk(G, 0), stalk(G, 0, -1)}, {"a", "b"}), NotFormalCollection);
}
