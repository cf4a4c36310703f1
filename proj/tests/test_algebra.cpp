#include "doctest.h"

#include "fsk/algebra.hpp"
#include "fsk/disk.hpp"
#include "fsk/divides.hpp"
#include "fsk/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace fsk;

namespace {

std::vector<int> iota_map(std::size_t n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Path path_of(const Quiver& q, std::vector<std::string> labels)
{
    Path p;
    for (const auto& l : labels) {
        int a = q.arrow(l);
        if (p.arrows.empty()) p.src = q.arrows[a].src;
        p.arrows.push_back(a);
        p.dst = q.arrows[a].dst;
    }
    return p;
}

Quiver a3()
{
    Quiver q;
    for (auto v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrow(0, 1, "a");
    q.add_arrow(1, 2, "b");
    return q;
}

std::vector<FDAlgebra> zoo()
{
    std::vector<FDAlgebra> out;
    for (int n = 3; n <= 6; ++n) {
        out.push_back(gamma(n));
        out.push_back(gamma_tilde(n));
        out.push_back(endo_quiver(acampo_arcs(n)));
        out.push_back(acampo_quiver(gn_divide(n)).algebra);
        out.push_back(iyama_cycle_algebra(n));
    }
    out.push_back(auslander_oracle(3));
    return out;
}

}  // namespace

TEST_CASE("path algebra of A3 with and without the zero relation")
{
    Quiver q = a3();
    FDAlgebra free = build_algebra(q, {});
    CHECK(free.dim() == 6);
    Relation r;
    r.terms.emplace_back(Rational(1), path_of(q, {"a", "b"}));
    FDAlgebra A = build_algebra(q, {r});
    CHECK(A.dim() == 5);
    CHECK(A.block(2, 0).empty());
    CHECK(reduce_path(A, path_of(q, {"a", "b"})).empty());
    CHECK(reduce_path(free, path_of(q, {"a", "b"})).size() == 1);
}

TEST_CASE("cyclic quivers are rejected")
{
    Quiver q;
    q.add_vertex("x");
    q.add_vertex("y");
    q.add_arrow(0, 1, "f");
    q.add_arrow(1, 0, "g");
    CHECK_FALSE(q.acyclic());
    CHECK_THROWS_AS(build_algebra(q, {}), CyclicQuiver);
}

TEST_CASE("iso check: identity, a three-vertex source, and a failing pair")
{
    FDAlgebra A = gamma_tilde(4);
    CHECK(presented_iso_check(A, A, iota_map(A.num_vertices())).ok());

    Quiver q;
    for (auto v : {"x", "c", "y"}) q.add_vertex(v);
    q.add_arrow(1, 0, "p");
    q.add_arrow(1, 2, "r");
    FDAlgebra B = build_algebra(q, {});
    REQUIRE(A.quiver.vertices[1] == gt_label(1, 3));
    CHECK(presented_iso_check(A, B, {0, 1, 2}).ok());

    FDAlgebra G = gamma(4);
    std::vector<int> perm = iota_map(3);
    do {
        CHECK_FALSE(presented_iso_check(A, G, perm).ok());
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("a failing iso report carries details")
{
    auto r = presented_iso_check(gamma_tilde(5), gamma(5), iota_map(6));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.details.empty());
}

TEST_CASE("abstract algebra from structure constants")
{
    std::vector<BasisElement> basis(3);
    basis[0] = {0, 0, std::nullopt, "e0", true};
    basis[1] = {1, 1, std::nullopt, "e1", true};
    basis[2] = {0, 1, std::nullopt, "f", false};
    FDAlgebra A = make_abstract({"0", "1"}, basis, {});
    CHECK(A.dim() == 3);
    CHECK(A.quiver.arrows.size() == 1);
    CHECK(multiplicity_free(A));
    CHECK(A.block(1, 0) == std::vector<int>{2});
}

TEST_CASE("opposite algebra")
{
    FDAlgebra G = gamma(5);
    FDAlgebra O = opposite(G);
    CHECK(O.dim() == G.dim());
    for (std::size_t i = 0; i < G.num_vertices(); ++i)
        for (std::size_t j = 0; j < G.num_vertices(); ++j) CHECK(O.block(i, j).size() == G.block(j, i).size());
    CHECK(presented_iso_check(opposite(O), G, iota_map(G.num_vertices())).ok());
}

TEST_CASE("structural properties on every constructed algebra")
{
    std::mt19937 rng(7);
    for (const auto& A : zoo()) {
        CAPTURE(A.quiver.vertices.size());
        std::size_t total = 0;
        for (std::size_t i = 0; i < A.num_vertices(); ++i)
            for (std::size_t j = 0; j < A.num_vertices(); ++j) {
                total += A.block(i, j).size();
                CHECK(hom_projectives(A, i, j).size() == A.block(i, j).size());
            }
        CHECK(total == A.dim());

        AlgebraElement one(A.dim());
        for (std::size_t v = 0; v < A.num_vertices(); ++v) one[A.idempotent(v)] = 1;
        for (std::size_t v = 0; v < A.num_vertices(); ++v)
            for (std::size_t w = 0; w < A.num_vertices(); ++w) {
                auto ev = basis_vector(A, A.idempotent(v)), ew = basis_vector(A, A.idempotent(w));
                CHECK(multiply(A, ev, ew) == (v == w ? ev : AlgebraElement(A.dim())));
            }
        for (std::size_t b = 0; b < A.dim(); ++b) {
            auto x = basis_vector(A, b);
            CHECK(multiply(A, one, x) == x);
            CHECK(multiply(A, x, one) == x);
        }

        std::uniform_int_distribution<std::size_t> pick(0, A.dim() - 1);
        for (int t = 0; t < 100; ++t) {
            auto a = basis_vector(A, pick(rng)), b = basis_vector(A, pick(rng)), c = basis_vector(A, pick(rng));
            CHECK(multiply(A, multiply(A, a, b), c) == multiply(A, a, multiply(A, b, c)));
        }
        CHECK(presented_iso_check(A, A, iota_map(A.num_vertices())).ok());
    }
}
