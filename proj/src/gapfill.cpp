#include "latinext/gapfill.hpp"

#include "latinext/engines.hpp"

namespace latinext {

TooManyCells::TooManyCells(bool is_row_, int index_, int count, int k)
  : Error(std::string(is_row_ ? "row " : "column ") + std::to_string(index_ + 1) + " has " +
          std::to_string(count) + " target cells, more than k = " + std::to_string(k)),
    is_row(is_row_), index(index_)
{
}

GapInstance::GapInstance(CellSet cells_, int k_) : cells(std::move(cells_)), k(k_)
{
    if (k < 0) throw PreconditionViolated("gap_fill: k must be nonnegative");
    auto rc = cells.row_counts();
    for (size_t i = 0; i < rc.size(); ++i)
        if (rc[i] > k) throw TooManyCells(true, static_cast<int>(i), rc[i], k);
    auto cc = cells.col_counts();
    for (size_t j = 0; j < cc.size(); ++j)
        if (cc[j] > k) throw TooManyCells(false, static_cast<int>(j), cc[j], k);
}

GapAssignment gap_fill(const GapInstance& inst, int symbol_offset)
{
    GapAssignment out;
    if (inst.cells.empty()) return out;

    // Incidence matrix over the bounding rectangle of the target cells.
    int max_row = 0, max_col = 0;
    for (auto c : inst.cells) {
        max_row = std::max(max_row, c.row);
        max_col = std::max(max_col, c.col);
    }
    Grid<int> incidence(max_row + 1, max_col + 1, 0);
    for (auto c : inst.cells) incidence(c.row, c.col) = 1;

    auto parts = konig_decompose(incidence, inst.k);
    for (size_t p = 0; p < parts.size(); ++p)
        for (auto c : inst.cells)
            if (parts[p](c.row, c.col)) out[c] = symbol_offset + static_cast<int>(p);
    return out;
}

CellSet empty_cells(const Grid<int>& cells)
{
    std::vector<Cell> out;
    for (int i = 0; i < cells.rows(); ++i)
        for (int j = 0; j < cells.cols(); ++j)
            if (cells(i, j) == kEmpty) out.push_back({i, j});
    return CellSet(cells.rows(), cells.cols(), std::move(out));
}

} // namespace latinext
