#include "latinext/shuffle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "latinext/engines.hpp"

namespace latinext {

ShuffleInstance::ShuffleInstance(Grid<int> cells, int c) : _cells(std::move(cells)), _c(c)
{
    const int a = _cells.rows(), b = _cells.cols();
    if (c < 0) throw PreconditionViolated("shuffle: c must be nonnegative");

    long filled = 0;
    std::map<int, int> occurrences;
    for (int i = 0; i < a; ++i) {
        std::vector<int> row;
        for (int j = 0; j < b; ++j) {
            int v = _cells(i, j);
            if (v == kEmpty) continue;
            if (v < 0) throw PreconditionViolated("shuffle: symbols must be nonnegative");
            row.push_back(v);
            ++occurrences[v];
            ++filled;
        }
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw PreconditionViolated("shuffle: row " + std::to_string(i + 1) + " repeats a symbol");
    }
    if (filled < static_cast<long>(b) * c)
        throw PreconditionViolated("shuffle: fewer than b*c filled cells");
    for (auto [sym, count] : occurrences)
        if (count > b)
            throw PreconditionViolated("shuffle: symbol " + std::to_string(sym) + " occurs more than b times");
}

std::vector<int> extract_column(const std::vector<std::vector<int>>& rows)
{
    if (rows.empty()) return {};
    const size_t width = rows.front().size();

    std::vector<int> alphabet;
    for (const auto& row : rows) {
        if (row.size() != width) throw PreconditionViolated("extract_column: rows differ in length");
        alphabet.insert(alphabet.end(), row.begin(), row.end());
    }
    std::sort(alphabet.begin(), alphabet.end());

    // compressed index -> occurrence count
    std::vector<int> symbols;
    std::vector<int> counts;
    for (int v : alphabet) {
        if (symbols.empty() || symbols.back() != v) {
            symbols.push_back(v);
            counts.push_back(0);
        }
        ++counts.back();
    }
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(symbols.begin(), symbols.end(), v) - symbols.begin());
    };

    SetFamily family(static_cast<int>(symbols.size()));
    for (const auto& row : rows) {
        std::vector<int> set;
        for (int v : row) set.push_back(index_of(v));
        family.add_set(std::move(set));
    }
    std::vector<int> necessary;
    for (size_t x = 0; x < counts.size(); ++x)
        if (static_cast<size_t>(counts[x]) == width) necessary.push_back(static_cast<int>(x));

    auto reps = sdr_with_necessary(family, necessary);

    std::vector<int> chosen;
    chosen.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        int sym = symbols[static_cast<size_t>(reps[i])];
        auto it = std::find(rows[i].begin(), rows[i].end(), sym);
        chosen.push_back(static_cast<int>(it - rows[i].begin()));
    }
    return chosen;
}

namespace {

std::vector<int> column_counts(const Grid<int>& g)
{
    std::vector<int> counts(static_cast<size_t>(g.cols()), 0);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            if (g(i, j) != kEmpty) ++counts[static_cast<size_t>(j)];
    return counts;
}

int find_in_column(const Grid<int>& g, int col, int sym, int skip_row)
{
    for (int i = 0; i < g.rows(); ++i)
        if (i != skip_row && g(i, col) == sym) return i;
    return -1;
}

/// Moves one entry from column `from` to column `to`; `from` must hold at
/// least two more entries than `to`. Each attempt flips one alternating
/// chain of rows; a chain that ends on a row empty in `from` changes no
/// counts, so the next attempt starts from a row no earlier chain touched.
void transfer(Grid<int>& g, int from, int to, BalanceStats& stats)
{
    const int a = g.rows();
    std::vector<char> touched(static_cast<size_t>(a), 0);
    auto swap_row = [&](int i) {
        if (touched[static_cast<size_t>(i)])
            throw std::logic_error("balance_columns: row swapped twice within one transfer");
        touched[static_cast<size_t>(i)] = 1;
        std::swap(g(i, from), g(i, to));
    };

    for (int start = 0; start < a; ++start) {
        if (touched[static_cast<size_t>(start)] || g(start, from) == kEmpty || g(start, to) != kEmpty)
            continue;
        ++stats.attempts;
        int swaps = 1;
        swap_row(start);
        int row = start;
        int entering = g(start, to);
        bool moved = false;
        while (true) {
            int clash = find_in_column(g, to, entering, row);
            if (clash < 0) {
                moved = true;
                break;
            }
            swap_row(clash);
            ++swaps;
            row = clash;
            entering = g(clash, to);
            if (entering == kEmpty) break;
        }
        stats.max_chain_swaps = std::max(stats.max_chain_swaps, swaps);
        if (swaps > a) throw std::logic_error("balance_columns: chain longer than the row count");
        if (moved) {
            ++stats.transfers;
            return;
        }
    }
    throw std::logic_error("balance_columns: no chain increased the smaller column");
}

} // namespace

Grid<int> balance_columns(const Grid<int>& arr, BalanceStats* stats)
{
    Grid<int> g = arr;
    BalanceStats local;
    BalanceStats& st = stats ? *stats : local;
    if (g.cols() < 2) return g;

    while (true) {
        auto counts = column_counts(g);
        auto hi = std::max_element(counts.begin(), counts.end());
        auto lo = std::min_element(counts.begin(), counts.end());
        if (*hi - *lo <= 1) break;
        transfer(g, static_cast<int>(hi - counts.begin()), static_cast<int>(lo - counts.begin()), st);
    }
    return g;
}

Grid<int> shuffle(const ShuffleInstance& inst)
{
    const int a = inst.a(), b = inst.b();
    if (a == 0 || b == 0) return inst.cells();

    // (a) pad every row to b symbols with distinct negative placeholders
    int next_placeholder = -2;
    std::vector<std::vector<int>> rows(static_cast<size_t>(a));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            int v = inst.cells()(i, j);
            rows[static_cast<size_t>(i)].push_back(v == kEmpty ? next_placeholder-- : v);
        }

    // (b) peel off columns of distinct symbols
    Grid<int> out(a, b, kEmpty);
    for (int col = 0; col < b; ++col) {
        auto chosen = extract_column(rows);
        for (int i = 0; i < a; ++i) {
            auto& row = rows[static_cast<size_t>(i)];
            out(i, col) = row[static_cast<size_t>(chosen[static_cast<size_t>(i)])];
            row.erase(row.begin() + chosen[static_cast<size_t>(i)]);
        }
    }

    // (c) drop placeholders
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (out(i, j) < 0) out(i, j) = kEmpty;

    // (d) balance, then order columns by decreasing count
    out = balance_columns(out);
    auto counts = column_counts(out);
    std::vector<int> order(static_cast<size_t>(b));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return counts[static_cast<size_t>(x)] > counts[static_cast<size_t>(y)];
    });
    Grid<int> sorted(a, b, kEmpty);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) sorted(i, j) = out(i, order[static_cast<size_t>(j)]);
    return sorted;
}

bool check_shuffle(const Grid<int>& input, const Grid<int>& output, int c)
{
    if (input.rows() != output.rows() || input.cols() != output.cols()) return false;
    for (int i = 0; i < input.rows(); ++i) {
        std::vector<int> x, y;
        for (int j = 0; j < input.cols(); ++j) {
            if (input(i, j) != kEmpty) x.push_back(input(i, j));
            if (output(i, j) != kEmpty) y.push_back(output(i, j));
        }
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    for (int j = 0; j < output.cols(); ++j) {
        std::vector<int> col;
        for (int i = 0; i < output.rows(); ++i)
            if (output(i, j) != kEmpty) col.push_back(output(i, j));
        if (static_cast<int>(col.size()) < c) return false;
        std::sort(col.begin(), col.end());
        if (std::adjacent_find(col.begin(), col.end()) != col.end()) return false;
    }
    return true;
}

} // namespace latinext
