#include <doctest.h>

#include <random>
#include <set>

#include "../fixtures.hpp"
#include "latinext/gapfill.hpp"

using namespace latinext;

TEST_CASE("gap fill labels cells without repeats in any line")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1500; ++trial) {
        const int rows = std::uniform_int_distribution<int>(1, 8)(rng);
        const int cols = std::uniform_int_distribution<int>(1, 8)(rng);
        const int k = std::uniform_int_distribution<int>(1, 5)(rng);
        const int offset = std::uniform_int_distribution<int>(0, 3)(rng);
        auto cells = fixtures::random_cells(rng, rows, cols, k);
        auto a = gap_fill(GapInstance(cells, k), offset);
        REQUIRE(a.size() == cells.size());
        std::set<std::pair<int, int>> row_used, col_used;
        for (auto [cell, sym] : a) {
            CHECK(cells.contains(cell));
            CHECK(sym >= offset);
            CHECK(sym < offset + k);
            CHECK(row_used.insert({cell.row, sym}).second);
            CHECK(col_used.insert({cell.col, sym}).second);
        }
    }
}

TEST_CASE("too many cells in a line")
{
    CellSet cells(2, 3, {{0, 0}, {0, 1}, {0, 2}});
    try {
        GapInstance(cells, 2);
        FAIL("expected TooManyCells");
    } catch (const TooManyCells& e) {
        CHECK(e.is_row);
        CHECK(e.index == 0);
    }
    CellSet col(3, 1, {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(GapInstance(col, 1), TooManyCells);
}

TEST_CASE("empty cells of a grid")
{
    auto g = fixtures::grid(fixtures::kWorked);
    auto e = empty_cells(g);
    CHECK(e.size() == 6);
    CHECK(e.contains({0, 1}));
    CHECK(e.contains({4, 0}));
}

TEST_CASE("filling the worked example's gaps with the new symbols")
{
    auto wide = fixtures::grid(fixtures::kWorkedWide);
    auto gaps = empty_cells(wide);
    auto a = gap_fill(GapInstance(gaps, 2), 5);
    for (auto [cell, sym] : a) wide(cell.row, cell.col) = sym;
    CHECK(is_latin_rectangle(wide, 7));
}
