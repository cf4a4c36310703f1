#include "doctest.h"
#include "oracles.hpp"

#include "fsk/linalg.hpp"

#include <random>

using namespace fsk;

TEST_CASE("parse and print rationals")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("rref of a small matrix")
{
    auto m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced(0, 2) == 1);
    CHECK(r.reduced(1, 2) == 1);
    CHECK(r.reduced(2, 2) == 0);
}

TEST_CASE("kernel and solve")
{
    auto m = RatMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(m.apply(k[0]) == RatVec{0, 0});
    auto x = solve(m, {2, 3});
    REQUIRE(x);
    CHECK(m.apply(*x) == RatVec{2, 3});
    auto z = RatMatrix::from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(solve(z, {1, 2}));
}

TEST_CASE("identity and products")
{
    auto a = RatMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a * RatMatrix::identity(2) == a);
    CHECK((a * a)(1, 1) == 22);
    CHECK(RatMatrix(2, 3).is_zero());
    CHECK(rank(RatMatrix(0, 0)) == 0);
}

TEST_CASE("rank-nullity on random integer matrices against Bareiss")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 7), val(-3, 3), sparse(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        int r = dim(rng), c = dim(rng);
        std::vector<std::vector<long>> rows(r, std::vector<long>(c));
        for (auto& row : rows)
            for (auto& x : row) x = sparse(rng) ? val(rng) : 0;
        auto m = RatMatrix::from_rows(rows);
        std::size_t rk = rank(m);
        auto ker = kernel_basis(m);
        CHECK(rk == static_cast<std::size_t>(oracle::rank(rows)));
        CHECK(rk + ker.size() == static_cast<std::size_t>(c));
        for (const auto& v : ker) CHECK(m.apply(v) == RatVec(r, 0));
    }
}
