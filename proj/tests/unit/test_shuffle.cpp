#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../fixtures.hpp"
#include "latinext/shuffle.hpp"

using namespace latinext;

namespace {

std::multiset<int> row_entries(const Grid<int>& g, int i)
{
    std::multiset<int> out;
    for (int j = 0; j < g.cols(); ++j)
        if (g(i, j) != kEmpty) out.insert(g(i, j));
    return out;
}

// Shuffle post-conditions, checked from scratch.
void expect_shuffled(const Grid<int>& in, const Grid<int>& out, int c)
{
    REQUIRE(out.rows() == in.rows());
    REQUIRE(out.cols() == in.cols());
    for (int i = 0; i < in.rows(); ++i) CHECK(row_entries(in, i) == row_entries(out, i));
    for (int j = 0; j < out.cols(); ++j) {
        std::set<int> seen;
        int filled = 0;
        for (int i = 0; i < out.rows(); ++i) {
            if (out(i, j) == kEmpty) continue;
            ++filled;
            CHECK(seen.insert(out(i, j)).second);
        }
        CHECK(filled >= c);
    }
}

} // namespace

TEST_CASE("the 6 x 3 example shuffles with two entries per column")
{
    auto g = fixtures::shuffle_example();
    auto out = shuffle(ShuffleInstance(g, 2));
    expect_shuffled(g, out, 2);
    CHECK(check_shuffle(g, out, 2));
}

TEST_CASE("random shuffle instances")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 2000; ++trial) {
        auto inst = fixtures::random_shuffle_instance(rng, 8, 6);
        auto out = shuffle(ShuffleInstance(inst.cells, inst.c));
        expect_shuffled(inst.cells, out, inst.c);
    }
}

TEST_CASE("shuffle preconditions")
{
    Grid<int> g(3, 2, kEmpty);
    g(0, 0) = 0, g(1, 0) = 0, g(2, 0) = 0;
    CHECK_THROWS_AS(ShuffleInstance(g, 0), PreconditionViolated);
    Grid<int> h(2, 2, kEmpty);
    h(0, 0) = 1, h(0, 1) = 1;
    CHECK_THROWS_AS(ShuffleInstance(h, 0), PreconditionViolated);
    Grid<int> few(2, 2, kEmpty);
    few(0, 0) = 1;
    CHECK_THROWS_AS(ShuffleInstance(few, 1), PreconditionViolated);
}

TEST_CASE("column extraction covers every symbol at full multiplicity")
{
    std::vector<std::vector<int>> rows{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    auto pick = extract_column(rows);
    REQUIRE(pick.size() == 4);
    std::set<int> chosen;
    for (size_t i = 0; i < rows.size(); ++i) chosen.insert(rows[i][static_cast<size_t>(pick[i])]);
    CHECK(chosen.size() == 4);
    CHECK(chosen == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("balancing evens out column counts")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        auto inst = fixtures::random_shuffle_instance(rng, 7, 5);
        auto out = shuffle(ShuffleInstance(inst.cells, 0));
        BalanceStats stats;
        auto bal = balance_columns(out, &stats);
        expect_shuffled(inst.cells, bal, 0);
        std::vector<int> counts(static_cast<size_t>(bal.cols()), 0);
        for (int i = 0; i < bal.rows(); ++i)
            for (int j = 0; j < bal.cols(); ++j) counts[static_cast<size_t>(j)] += bal(i, j) != kEmpty;
        auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
        CHECK(*hi - *lo <= 1);
        CHECK(stats.transfers <= stats.attempts);
    }
}
