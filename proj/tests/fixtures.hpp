// Shared grids and generators for the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "latinext/core.hpp"
#include "latinext/frequency.hpp"
#include "latinext/io.hpp"

namespace fixtures {

using namespace latinext;

// (5,5,5) square whose completions need order 8 or more.
inline const char* kSquareA = R"(5 5 5
5 . 3 4 2
. 5 4 2 3
1 2 5 . .
2 1 . 5 .
. . 2 3 4
)";

// Displayed 6x6 saturated extension of square A on 7 symbols.
inline const char* kSquareA667 = R"(6 6 7
5 6 3 4 2 1
7 5 4 2 3 6
1 2 5 7 6 3
2 1 6 5 7 4
6 7 2 3 4 5
4 3 1 6 5 2
)";

// Order-5 squares with embeddable orders {5,6,9,10}, {8,9,10}, {7,8,9,10} up to 10.
inline const char* kEmbedA = R"(5 5 5
. 1 2 3 4
1 . 3 4 5
2 3 . 5 1
3 4 5 . 2
4 5 1 2 .
)";
inline const char* kEmbedB = R"(5 5 5
4 1 2 3 .
1 2 3 4 .
2 3 4 1 .
3 4 1 2 .
. . . . .
)";
inline const char* kEmbedC = R"(5 5 5
5 . . 1 2
. 3 4 . 1
. 4 3 5 .
1 . 5 2 4
2 1 . 3 5
)";

// r = 6, s = 4, t = 5 rectangle completed at order 7.
inline const char* kWorked = R"(6 4 5
1 . 4 5
. 3 2 .
4 5 1 2
3 4 . .
. 2 5 3
2 1 3 4
)";

// The same rectangle widened to 6 x 7 before gap filling.
inline const char* kWorkedWide = R"(6 7 7
1 . 4 5 2 3 .
. 3 2 . 4 5 1
4 5 1 2 . . 3
3 4 . . 1 2 5
. 2 5 3 . 1 4
2 1 3 4 5 . .
)";

inline const char* kWorkedFinal = R"(6 7 7
1 6 4 5 2 3 7
6 3 2 7 4 5 1
4 5 1 2 7 6 3
3 4 7 6 1 2 5
7 2 5 3 6 1 4
2 1 3 4 5 7 6
)";

// (4,5,4) saturated rectangle P and its (4,4,5) conjugate.
inline const char* kSatP = R"(4 5 4
1 2 3 4 .
2 4 . 3 1
. 3 4 1 2
4 . 1 2 3
)";
inline const char* kSatPConj = R"(4 4 5
1 2 3 4
5 1 4 2
4 5 2 3
3 4 5 1
)";

// Maximal but unsaturated (4,5,4) rectangle Q and its conjugate.
inline const char* kSatQ = R"(4 5 4
1 2 . . 3
2 1 . . 4
. . 3 4 2
. . 4 3 1
)";
inline const char* kSatQConj = R"(4 4 5
1 2 5 .
2 1 . 5
. 5 3 4
5 . 4 3
)";

// 3 x 4 partial F-rectangle with mu = (2, 2).
inline const char* kFreq = R"(3 4 2
2 2
2 3
1 2 1 .
. 2 1 2
2 . 2 1
)";

inline const char* kFreq221 = R"(5 5 3
2 2 1
2 2 1
1 2 1 3 2
3 2 1 2 1
2 3 2 1 1
1 1 2 2 3
2 1 3 1 2
)";

inline const char* kFreq23 = R"(5 5 2
2 3
2 3
1 2 1 2 2
1 2 1 2 2
2 1 2 1 2
2 2 2 1 1
2 1 2 2 1
)";

// Shuffle instance with a = 6, b = 3, c = 2 (0-based symbols, kEmpty blanks).
inline Grid<int> shuffle_example()
{
    const int rows[6][3] = {{2, 3, 0}, {1, 4, 6}, {3, 0, 0}, {1, 2, 5}, {1, 6, 0}, {5, 0, 0}};
    Grid<int> g(6, 3, kEmpty);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = rows[i][j] ? rows[i][j] - 1 : kEmpty;
    return g;
}

inline PartialLatinRectangle rect(const char* text) { return parse_rectangle(text); }

inline Grid<int> grid(const char* text) { return parse_rectangle(text).cells(); }

// ----------------------------------------------------------------------------
// Generators
// ----------------------------------------------------------------------------

/// Calls `f` on every partial latin rectangle of type (r, s, t).
inline void for_each_partial(int r, int s, int t, const std::function<void(const PartialLatinRectangle&)>& f)
{
    Grid<int> g(r, s, kEmpty);
    std::vector<unsigned> row(static_cast<size_t>(r), 0), col(static_cast<size_t>(s), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == r * s) {
            f(PartialLatinRectangle(t, g));
            return;
        }
        const int i = pos / s, j = pos % s;
        rec(pos + 1);
        for (int v = 0; v < t; ++v) {
            const unsigned bit = 1u << v;
            if ((row[static_cast<size_t>(i)] | col[static_cast<size_t>(j)]) & bit) continue;
            row[static_cast<size_t>(i)] |= bit;
            col[static_cast<size_t>(j)] |= bit;
            g(i, j) = v;
            rec(pos + 1);
            g(i, j) = kEmpty;
            row[static_cast<size_t>(i)] &= ~bit;
            col[static_cast<size_t>(j)] &= ~bit;
        }
    };
    rec(0);
}

/// Every r x s class grid with class c at most mu[c] times per line.
inline void for_each_freq(int r, int s, const Partition& mu,
                          const std::function<void(const FrequencyRectangle&)>& f)
{
    const int k = mu.size();
    Grid<int> g(r, s, kEmpty);
    std::vector<int> row(static_cast<size_t>(r * k), 0), col(static_cast<size_t>(s * k), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == r * s) {
            f(FrequencyRectangle(mu, g));
            return;
        }
        const int i = pos / s, j = pos % s;
        rec(pos + 1);
        for (int c = 0; c < k; ++c) {
            auto& rc = row[static_cast<size_t>(i * k + c)];
            auto& cc = col[static_cast<size_t>(j * k + c)];
            if (rc >= mu[c] || cc >= mu[c]) continue;
            ++rc, ++cc;
            g(i, j) = c;
            rec(pos + 1);
            g(i, j) = kEmpty;
            --rc, --cc;
        }
    };
    rec(0);
}

/// Partitions of n into positive parts, nonincreasing.
inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Every mu with 0 <= mu[i] <= lambda[i].
inline std::vector<std::vector<int>> sub_partitions(const std::vector<int>& lambda)
{
    std::vector<std::vector<int>> out{{}};
    for (int l : lambda) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out)
            for (int m = 0; m <= l; ++m) {
                auto v = prefix;
                v.push_back(m);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

/// Applies independent random row, column and symbol permutations.
inline LatinSquare random_isotope(const LatinSquare& l, std::mt19937_64& rng)
{
    const int n = l.order();
    std::vector<int> pr(static_cast<size_t>(n)), pc(pr), ps(pr);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::iota(ps.begin(), ps.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    std::shuffle(ps.begin(), ps.end(), rng);
    Grid<int> g(n, n, kEmpty);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(pr[static_cast<size_t>(i)], pc[static_cast<size_t>(j)]) = ps[static_cast<size_t>(l.at(i, j))];
    return LatinSquare(std::move(g));
}

/// Random valid shuffle input: rows of distinct symbols at random positions,
/// each symbol at most b times, and the largest admissible c or a random one.
struct RandomShuffle
{
    Grid<int> cells;
    int c;
};

inline RandomShuffle random_shuffle_instance(std::mt19937_64& rng, int max_a, int max_b)
{
    std::uniform_int_distribution<int> da(1, max_a), db(1, max_b);
    const int a = da(rng), b = db(rng);
    const int symbols = std::uniform_int_distribution<int>(1, a + b)(rng);
    std::vector<int> uses(static_cast<size_t>(symbols), 0);
    Grid<int> g(a, b, kEmpty);
    int filled = 0;
    for (int i = 0; i < a; ++i) {
        const int want = std::uniform_int_distribution<int>(0, b)(rng);
        std::vector<int> pool(static_cast<size_t>(symbols));
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> pos(static_cast<size_t>(b));
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        int placed = 0;
        for (int v : pool) {
            if (placed == want) break;
            if (uses[static_cast<size_t>(v)] >= b) continue;
            ++uses[static_cast<size_t>(v)];
            g(i, pos[static_cast<size_t>(placed++)]) = v;
        }
        filled += placed;
    }
    const int c = std::uniform_int_distribution<int>(0, filled / b)(rng);
    return {std::move(g), c};
}

/// Random cell set inside a rows x cols area with at most k cells per line.
inline CellSet random_cells(std::mt19937_64& rng, int rows, int cols, int k)
{
    std::vector<Cell> all;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) all.push_back({i, j});
    std::shuffle(all.begin(), all.end(), rng);
    const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    std::vector<int> rc(static_cast<size_t>(rows), 0), cc(static_cast<size_t>(cols), 0);
    std::vector<Cell> chosen;
    for (auto c : all) {
        if (std::uniform_real_distribution<double>(0, 1)(rng) > density) continue;
        if (rc[static_cast<size_t>(c.row)] >= k || cc[static_cast<size_t>(c.col)] >= k) continue;
        ++rc[static_cast<size_t>(c.row)];
        ++cc[static_cast<size_t>(c.col)];
        chosen.push_back(c);
    }
    return CellSet(rows, cols, std::move(chosen));
}

} // namespace fixtures
