// gapfill.hpp -- label a set of cells with k symbols so that no symbol
// repeats in a row or column, given at most k target cells per line.

#pragma once

#include <map>

#include "latinext/core.hpp"

namespace latinext {

class TooManyCells : public Error
{
public:
    TooManyCells(bool is_row, int index, int count, int k);
    bool is_row;
    int index;  ///< 0-based
};

struct GapInstance
{
    /// Throws `TooManyCells` if some row or column holds more than k cells.
    GapInstance(CellSet cells, int k);

    CellSet cells;
    int k;
};

using GapAssignment = std::map<Cell, int>;

/// Assigns each target cell a symbol in [offset, offset + k) via a Konig
/// decomposition of the cell incidence matrix: cells in part i get
/// `offset + i`.
GapAssignment gap_fill(const GapInstance& inst, int symbol_offset);

/// Convenience: the empty cells of `cells` (kEmpty) as a CellSet.
CellSet empty_cells(const Grid<int>& cells);

} // namespace latinext
