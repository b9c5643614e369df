#include "latinext/core.hpp"

#include <algorithm>
#include <set>

namespace latinext {

DuplicateInRow::DuplicateInRow(int row_, int sym_)
  : ValidationError("symbol " + std::to_string(sym_) + " repeated in row " +
                    std::to_string(row_)),
    row(row_), sym(sym_)
{
}

DuplicateInColumn::DuplicateInColumn(int col_, int sym_)
  : ValidationError("symbol " + std::to_string(sym_) + " repeated in column " +
                    std::to_string(col_)),
    col(col_), sym(sym_)
{
}

SymbolOutOfRange::SymbolOutOfRange(int sym_)
  : ValidationError("symbol " + std::to_string(sym_) + " out of range"), sym(sym_)
{
}

// ---------------------------------------------------------------------------

CellSet::CellSet(int rows, int cols, std::vector<Cell> cells)
  : _rows(rows), _cols(cols), _cells(std::move(cells))
{
    if (rows < 0 || cols < 0)
        throw ShapeError("cell set dimensions must be nonnegative");
    std::sort(_cells.begin(), _cells.end());
    if (std::adjacent_find(_cells.begin(), _cells.end()) != _cells.end())
        throw ValidationError("cell set contains a duplicate position");
    for (auto c : _cells)
        if (c.row < 0 || c.row >= rows || c.col < 0 || c.col >= cols)
            throw ShapeError("cell (" + std::to_string(c.row + 1) + "," +
                             std::to_string(c.col + 1) + ") outside the array");
}

bool CellSet::contains(Cell c) const
{
    return std::binary_search(_cells.begin(), _cells.end(), c);
}

std::vector<int> CellSet::row_counts() const
{
    std::vector<int> out(static_cast<size_t>(_rows), 0);
    for (auto c : _cells) ++out[static_cast<size_t>(c.row)];
    return out;
}

std::vector<int> CellSet::col_counts() const
{
    std::vector<int> out(static_cast<size_t>(_cols), 0);
    for (auto c : _cells) ++out[static_cast<size_t>(c.col)];
    return out;
}

// ---------------------------------------------------------------------------

RolePermutation::RolePermutation(std::array<int, 3> source) : _source(source)
{
    std::array<bool, 3> seen{};
    for (int s : source) {
        if (s < 0 || s > 2 || seen[static_cast<size_t>(s)])
            throw PreconditionViolated("role permutation must be a bijection on {row, col, sym}");
        seen[static_cast<size_t>(s)] = true;
    }
}

std::array<RolePermutation, 6> RolePermutation::all()
{
    return {RolePermutation({0, 1, 2}), RolePermutation({0, 2, 1}),
            RolePermutation({1, 0, 2}), RolePermutation({1, 2, 0}),
            RolePermutation({2, 0, 1}), RolePermutation({2, 1, 0})};
}

RolePermutation RolePermutation::inverse() const
{
    std::array<int, 3> inv{};
    for (int k = 0; k < 3; ++k) inv[static_cast<size_t>(_source[static_cast<size_t>(k)])] = k;
    return RolePermutation(inv);
}

// ---------------------------------------------------------------------------

PartialLatinRectangle::PartialLatinRectangle(int rows, int cols, int symbols)
  : _symbols(symbols), _cells(rows, cols, kEmpty)
{
    if (rows < 1 || cols < 1 || symbols < 1)
        throw ShapeError("rows, columns and symbols must all be positive");
}

PartialLatinRectangle::PartialLatinRectangle(int symbols, Grid<int> cells)
  : _symbols(symbols), _cells(std::move(cells))
{
    if (_cells.rows() < 1 || _cells.cols() < 1 || symbols < 1)
        throw ShapeError("rows, columns and symbols must all be positive");

    const int r = _cells.rows(), s = _cells.cols();
    std::vector<char> seen(static_cast<size_t>(symbols));
    for (int i = 0; i < r; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < s; ++j) {
            int v = _cells(i, j);
            if (v == kEmpty) continue;
            if (v < 0 || v >= symbols) throw SymbolOutOfRange(v + 1);
            if (seen[static_cast<size_t>(v)]) throw DuplicateInRow(i + 1, v + 1);
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    for (int j = 0; j < s; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < r; ++i) {
            int v = _cells(i, j);
            if (v == kEmpty) continue;
            if (seen[static_cast<size_t>(v)]) throw DuplicateInColumn(j + 1, v + 1);
            seen[static_cast<size_t>(v)] = 1;
        }
    }
}

int PartialLatinRectangle::entry_count() const
{
    return static_cast<int>(std::count_if(_cells.data().begin(), _cells.data().end(),
                                          [](int v) { return v != kEmpty; }));
}

std::vector<Entry> PartialLatinRectangle::entries() const
{
    std::vector<Entry> out;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (filled(i, j)) out.push_back({i, j, at(i, j)});
    return out;
}

std::vector<int> PartialLatinRectangle::row_counts() const
{
    std::vector<int> out(static_cast<size_t>(rows()), 0);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (filled(i, j)) ++out[static_cast<size_t>(i)];
    return out;
}

std::vector<int> PartialLatinRectangle::col_counts() const
{
    std::vector<int> out(static_cast<size_t>(cols()), 0);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (filled(i, j)) ++out[static_cast<size_t>(j)];
    return out;
}

std::vector<int> PartialLatinRectangle::symbol_counts() const
{
    std::vector<int> out(static_cast<size_t>(_symbols), 0);
    for (int v : _cells.data())
        if (v != kEmpty) ++out[static_cast<size_t>(v)];
    return out;
}

bool PartialLatinRectangle::is_extended_by(const PartialLatinRectangle& other) const
{
    if (other.rows() < rows() || other.cols() < cols()) return false;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (filled(i, j) && other.at(i, j) != at(i, j)) return false;
    return true;
}

PartialLatinRectangle validate(const std::vector<std::vector<std::optional<int>>>& grid,
                               int symbols)
{
    if (grid.empty() || grid.front().empty())
        throw ShapeError("grid must have at least one row and one column");
    const int r = static_cast<int>(grid.size());
    const int s = static_cast<int>(grid.front().size());
    if (symbols < 1) throw ShapeError("symbol count must be positive");

    Grid<int> cells(r, s, kEmpty);
    for (int i = 0; i < r; ++i) {
        const auto& row = grid[static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != s)
            throw ShapeError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(row.size()) + " cells, expected " +
                             std::to_string(s));
        for (int j = 0; j < s; ++j) {
            const auto& v = row[static_cast<size_t>(j)];
            if (!v) continue;
            if (*v < 1 || *v > symbols) throw SymbolOutOfRange(*v);
            cells(i, j) = *v - 1;
        }
    }
    return PartialLatinRectangle(symbols, std::move(cells));
}

PartialLatinRectangle conjugate(const PartialLatinRectangle& p, const RolePermutation& sigma)
{
    auto dims = sigma.apply(std::array<int, 3>{p.rows(), p.cols(), p.symbols()});
    Grid<int> cells(dims[0], dims[1], kEmpty);
    for (auto e : p.entries()) {
        auto t = sigma.apply(std::array<int, 3>{e.row, e.col, e.sym});
        cells(t[0], t[1]) = t[2];
    }
    return PartialLatinRectangle(dims[2], std::move(cells));
}

std::int64_t saturation_size(int rows, int cols, int symbols)
{
    std::int64_t r = rows, s = cols, t = symbols;
    return std::min({r * s, r * t, s * t});
}

bool is_saturated(const PartialLatinRectangle& p)
{
    return p.entry_count() == saturation_size(p.rows(), p.cols(), p.symbols());
}

// ---------------------------------------------------------------------------

LatinSquare::LatinSquare(Grid<int> cells) : _cells(std::move(cells))
{
    const int n = _cells.rows();
    if (n < 1 || _cells.cols() != n) throw ShapeError("latin square must be n x n with n >= 1");
    for (int v : _cells.data())
        if (v < 0 || v >= n) throw SymbolOutOfRange(v + 1);
    // duplicate checks
    PartialLatinRectangle(n, _cells);
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows)
{
    const int n = static_cast<int>(rows.size());
    Grid<int> cells(n, n, kEmpty);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw ShapeError("latin square rows must have n entries");
        for (int j = 0; j < n; ++j) cells(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)] - 1;
    }
    return LatinSquare(std::move(cells));
}

PartialLatinRectangle LatinSquare::as_partial() const
{
    return PartialLatinRectangle(order(), _cells);
}

LatinSquare cyclic_square(int n)
{
    Grid<int> cells(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells(i, j) = (i + j) % n;
    return LatinSquare(std::move(cells));
}

bool is_latin_rectangle(const Grid<int>& cells, int symbols)
{
    if (cells.cols() != symbols) return false;
    const int r = cells.rows();
    std::vector<char> seen(static_cast<size_t>(symbols));
    for (int i = 0; i < r; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < symbols; ++j) {
            int v = cells(i, j);
            if (v < 0 || v >= symbols || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    for (int j = 0; j < symbols; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < r; ++i) {
            int v = cells(i, j);
            if (seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

bool ConditionReport::all_satisfied() const
{
    return std::all_of(items.begin(), items.end(),
                       [](const ConditionResult& c) { return c.satisfied(); });
}

const ConditionResult& ConditionReport::at(const std::string& id) const
{
    for (const auto& c : items)
        if (c.id == id) return c;
    throw std::out_of_range("no condition named " + id);
}

std::int64_t entry_bound(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t n)
{
    // rt - (n-s)(r+t-n) equals the symmetric form divided by n.
    return r * t - (n - s) * (r + t - n);
}

} // namespace latinext
