// shuffle.hpp -- rearrange each row of an a x b array so that every column
// holds at least c entries and no column repeats a symbol.
//
// The construction pads the array with placeholder symbols, peels off one
// column at a time as a system of distinct representatives that contains
// every symbol still occurring in all remaining columns, drops the
// placeholders, then balances column counts pairwise by row swaps.

#pragma once

#include <vector>

#include "latinext/core.hpp"

namespace latinext {

/// An a x b array of optional symbols (kEmpty for blanks) plus the required
/// per-column fill c. Symbols are any nonnegative integers.
class ShuffleInstance
{
public:
    /// Throws `PreconditionViolated` unless at least b*c cells are filled,
    /// no symbol occurs more than b times, and rows are duplicate-free.
    ShuffleInstance(Grid<int> cells, int c);

    int a() const { return _cells.rows(); }
    int b() const { return _cells.cols(); }
    int c() const { return _c; }
    const Grid<int>& cells() const { return _cells; }

private:
    Grid<int> _cells;
    int _c;
};

Grid<int> shuffle(const ShuffleInstance& inst);

/// Chooses one element per row, pairwise distinct, that covers every symbol
/// occurring exactly `width` times (`width` being the common row length).
/// Returns the chosen position in each row.
///
/// Rows must share one length and hold distinct symbols; no symbol may occur
/// more than `width` times.
std::vector<int> extract_column(const std::vector<std::vector<int>>& rows);

struct BalanceStats
{
    int transfers = 0;         ///< successful single-entry moves
    int attempts = 0;          ///< chains started (successful or not)
    int max_chain_swaps = 0;   ///< most rows swapped by one chain
};

/// Moves entries within rows until column counts differ by at most one,
/// keeping every column free of repeated symbols. Requires that input.
Grid<int> balance_columns(const Grid<int>& arr, BalanceStats* stats = nullptr);

/// Checks the three shuffle post-conditions against the original input.
bool check_shuffle(const Grid<int>& input, const Grid<int>& output, int c);

} // namespace latinext
