#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "latinext/cruse.hpp"
#include "latinext/oracle.hpp"

using namespace latinext;

namespace {

bool is_square_of_order(const LatinSquare& l, int n) { return l.order() == n && is_latin_rectangle(l.cells(), n); }

} // namespace

TEST_CASE("square A fails at order 7 on symbol 1 and completes at order 8")
{
    auto a = fixtures::rect(fixtures::kSquareA);
    auto r7 = check_conditions(a, 7);
    CHECK(!r7.at("A3").satisfied());
    CHECK(r7.at("A3").index == 0);
    CHECK(r7.at("A1").satisfied());
    CHECK(r7.at("A2").satisfied());
    CHECK(r7.at("A4").satisfied());
    CHECK(!find_witness(a, 7));
    CHECK(!complete(a, 6));
    auto l = complete(a, 8);
    REQUIRE(l);
    CHECK(is_square_of_order(*l, 8));
    CHECK(a.is_extended_by(l->as_partial()));
}

TEST_CASE("embeddable orders of the three order-5 examples")
{
    CHECK(embeddable_orders(fixtures::rect(fixtures::kEmbedA), 10) == std::vector<int>{5, 6, 9, 10});
    CHECK(embeddable_orders(fixtures::rect(fixtures::kEmbedB), 10) == std::vector<int>{8, 9, 10});
    CHECK(embeddable_orders(fixtures::rect(fixtures::kEmbedC), 10) == std::vector<int>{7, 8, 9, 10});
}

TEST_CASE("worked example: widening then completing at order 7")
{
    auto p = fixtures::rect(fixtures::kWorked);
    auto rows = extend_to_latin_rows(p, 7);
    CHECK(rows.rows() == 6);
    CHECK(rows.cols() == 7);
    CHECK(is_latin_rectangle(rows, 7));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j)
            if (p.filled(i, j)) CHECK(rows(i, j) == p.at(i, j));
    auto l = complete_rectangle(rows);
    CHECK(is_square_of_order(l, 7));
    for (int i = 0; i < 6; ++i) CHECK(l.at(i, 3) == rows(i, 3));
    CHECK(is_latin_rectangle(fixtures::grid(fixtures::kWorkedFinal), 7));
}

TEST_CASE("completion decisions agree with backtracking on small rectangles")
{
    int yes = 0, no = 0;
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= std::min(n, 2); ++r)
            for (int s = 1; s <= std::min(n, 3); ++s)
                for (int t = 1; t <= std::min(n, 3); ++t)
                    fixtures::for_each_partial(r, s, t, [&](const PartialLatinRectangle& p) {
                        if (p.entry_count() > 4 && (p.entry_count() % 3)) return;
                        const bool want = oracle::brute_complete(p, n);
                        auto l = complete(p, n);
                        CHECK(l.has_value() == want);
                        CHECK(find_witness(p, n).has_value() == want);
                        if (l) {
                            CHECK(is_square_of_order(*l, n));
                            CHECK(p.is_extended_by(l->as_partial()));
                        }
                        (want ? yes : no)++;
                    });
    CHECK(yes > 100);
    CHECK(no > 100);
}

TEST_CASE("witnesses satisfy all four conditions and extend the input")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        auto l = fixtures::random_isotope(cyclic_square(6), rng);
        Grid<int> g(4, 5, kEmpty);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j)
                if (l.at(i, j) < 4 && std::bernoulli_distribution(0.5)(rng)) g(i, j) = l.at(i, j);
        PartialLatinRectangle p(4, g);
        auto w = find_witness(p, 6);
        REQUIRE(w);
        CHECK(check_conditions(*w, 6).all_satisfied());
        CHECK(p.is_extended_by(*w));
        CHECK(w->symbols() == 4);
    }
}

TEST_CASE("extension search honours bounds and hooks")
{
    Grid<int> start(2, 2, kEmpty);
    auto full = search_latin_extension(start, 2, {2, 2, 2, INT64_MAX});
    REQUIRE(full);
    CHECK(is_latin_rectangle(*full, 2));
    CHECK(!search_latin_extension(start, 2, {0, 0, 0, 1}, {[](const Grid<int>&) { return false; }, {}}));
    CHECK(!search_latin_extension(start, 1, {2, 0, 0, INT64_MAX}));
    int visits = 0;
    ExtensionHooks hooks{[](const Grid<int>& g) { return g(0, 0) == 1; },
                         [&](const Grid<int>&) { ++visits; return false; }};
    auto got = search_latin_extension(start, 2, {}, hooks);
    REQUIRE(got);
    CHECK((*got)(0, 0) == 1);
    CHECK(visits > 0);
}

TEST_CASE("latin rectangles complete row by row")
{
    std::mt19937_64 rng(42);
    for (int n = 1; n <= 9; ++n)
        for (int r = 0; r <= n; ++r) {
            auto l = fixtures::random_isotope(cyclic_square(n), rng);
            Grid<int> rows(r, n, kEmpty);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < n; ++j) rows(i, j) = l.at(i, j);
            auto sq = complete_rectangle(rows);
            CHECK(is_square_of_order(sq, n));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < n; ++j) CHECK(sq.at(i, j) == rows(i, j));
        }
}

TEST_CASE("the corollary test matches embeddability at order n + k")
{
    for (const char* text : {fixtures::kEmbedA, fixtures::kEmbedB, fixtures::kEmbedC, fixtures::kSquareA}) {
        auto p = fixtures::rect(text);
        auto orders = embeddable_orders(p, 10);
        for (int k = 0; k <= 5; ++k) {
            const bool embeds = std::count(orders.begin(), orders.end(), 5 + k) == 1;
            auto ext = corollary_check(p, k);
            CHECK(ext.has_value() == embeds);
            if (ext) CHECK(p.is_extended_by(*ext));
        }
    }
}

TEST_CASE("fit preconditions")
{
    auto p = fixtures::rect(fixtures::kWorked);
    CHECK_THROWS_AS(require_fits(p, 5), PreconditionViolated);
    CHECK_NOTHROW(require_fits(p, 6));
}
