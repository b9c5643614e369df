#include <doctest.h>

#include <set>

#include "../fixtures.hpp"
#include "latinext/core.hpp"

using namespace latinext;

TEST_CASE("grid stores row-major and rejects negative shapes")
{
    Grid<int> g(2, 3, 7);
    g(1, 2) = 4;
    CHECK(g.data()[5] == 4);
    CHECK(g(0, 0) == 7);
    CHECK_THROWS_AS(Grid<int>(-1, 2), ShapeError);
}

TEST_CASE("partial latin rectangle validation")
{
    Grid<int> g(2, 2, kEmpty);
    g(0, 0) = 0;
    g(0, 1) = 0;
    CHECK_THROWS_AS(PartialLatinRectangle(2, g), DuplicateInRow);
    g(0, 1) = kEmpty;
    g(1, 0) = 0;
    CHECK_THROWS_AS(PartialLatinRectangle(2, g), DuplicateInColumn);
    g(1, 0) = 2;
    CHECK_THROWS_AS(PartialLatinRectangle(2, g), SymbolOutOfRange);
    g(1, 0) = 1;
    PartialLatinRectangle p(2, g);
    CHECK(p.entry_count() == 2);
    CHECK(p.row_counts() == std::vector<int>{1, 1});
    CHECK(p.col_counts() == std::vector<int>{2, 0});
    CHECK(p.symbol_counts() == std::vector<int>{1, 1});
}

TEST_CASE("validate takes 1-based optional grids")
{
    auto p = validate({{1, std::nullopt}, {std::nullopt, 1}}, 3);
    CHECK(p.at(0, 0) == 0);
    CHECK(!p.filled(0, 1));
    CHECK_THROWS_AS(validate({{1, 2}, {3}}, 3), ShapeError);
    CHECK_THROWS_AS(validate({{0}}, 3), SymbolOutOfRange);
}

TEST_CASE("extension relation")
{
    auto p = fixtures::rect(fixtures::kSquareA);
    auto q = fixtures::rect(fixtures::kSquareA667);
    CHECK(p.is_extended_by(q));
    CHECK(!q.is_extended_by(p));
    CHECK(p.is_extended_by(p));
}

TEST_CASE("conjugates permute entry triples")
{
    auto p = fixtures::rect(fixtures::kSatP);
    std::set<std::array<int, 3>> base;
    for (auto e : p.entries()) base.insert({e.row, e.col, e.sym});
    for (const auto& sigma : RolePermutation::all()) {
        auto c = conjugate(p, sigma);
        std::set<std::array<int, 3>> got;
        for (auto e : c.entries()) got.insert({e.row, e.col, e.sym});
        std::set<std::array<int, 3>> want;
        for (const auto& t : base) want.insert(sigma.apply(t));
        CHECK(got == want);
        CHECK(conjugate(c, sigma.inverse()) == p);
    }
    CHECK_THROWS_AS(RolePermutation({0, 0, 1}), PreconditionViolated);
}

TEST_CASE("the saturated example and its conjugate agree with the displayed pair")
{
    auto p = fixtures::rect(fixtures::kSatP);
    auto c = conjugate(p, RolePermutation::swap_cols_syms());
    CHECK(c == fixtures::rect(fixtures::kSatPConj));
    CHECK(is_saturated(p));
    CHECK(!is_saturated(fixtures::rect(fixtures::kSatQ)));
    CHECK(saturation_size(4, 5, 4) == 16);
}

TEST_CASE("latin squares")
{
    auto l = cyclic_square(5);
    CHECK(l.order() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(l.at(i, j) == (i + j) % 5);
    CHECK(is_latin_rectangle(l.cells(), 5));
    Grid<int> bad(2, 2, 0);
    CHECK_THROWS_AS(LatinSquare{bad}, ValidationError);
    CHECK(LatinSquare::from_rows({{1, 2}, {2, 1}}).at(1, 0) == 1);
}

TEST_CASE("entry bound is integral and matches its formula")
{
    for (int n = 1; n <= 9; ++n)
        for (int r = 0; r <= n; ++r)
            for (int s = 0; s <= n; ++s)
                for (int t = 0; t <= n; ++t) {
                    const std::int64_t num = r * s * t + (n - r) * (n - s) * (n - t);
                    REQUIRE(num % n == 0);
                    CHECK(entry_bound(r, s, t, n) == num / n);
                }
}

TEST_CASE("cell sets are sorted and reject duplicates")
{
    CellSet s(3, 3, {{2, 1}, {0, 2}, {0, 1}});
    CHECK(s.cells().front() == Cell{0, 1});
    CHECK(s.contains({2, 1}));
    CHECK(!s.contains({1, 1}));
    CHECK(s.row_counts() == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(CellSet(3, 3, {{0, 0}, {0, 0}}), ValidationError);
    CHECK_THROWS_AS(CellSet(2, 2, {{2, 0}}), ShapeError);
}

TEST_CASE("condition report margins")
{
    ConditionResult lo{"x", BoundKind::AtLeast, 3, 5};
    ConditionResult hi{"y", BoundKind::AtMost, 3, 5};
    CHECK(lo.margin() == -2);
    CHECK(hi.margin() == 2);
    ConditionReport r;
    r.add(lo);
    r.add(hi);
    CHECK(!r.all_satisfied());
    CHECK(r.at("y").satisfied());
}
