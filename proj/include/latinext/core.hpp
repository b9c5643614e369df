// core.hpp -- domain types shared by every latinext module

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latinext {

/// Marker for an empty cell. Symbols are stored 0-based internally.
inline constexpr int kEmpty = -1;

// ============================================================================
// Errors
// ============================================================================

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a grid does not satisfy the partial latin rectangle invariants.
class ValidationError : public Error
{
public:
    using Error::Error;
};

class DuplicateInRow : public ValidationError
{
public:
    DuplicateInRow(int row, int sym);
    int row;  ///< 1-based
    int sym;  ///< 1-based
};

class DuplicateInColumn : public ValidationError
{
public:
    DuplicateInColumn(int col, int sym);
    int col;  ///< 1-based
    int sym;  ///< 1-based
};

class SymbolOutOfRange : public ValidationError
{
public:
    explicit SymbolOutOfRange(int sym);
    int sym;
};

class ShapeError : public ValidationError
{
public:
    using ValidationError::ValidationError;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolated : public Error
{
public:
    using Error::Error;
};

// ============================================================================
// Grid
// ============================================================================

/// Dense row-major 2-D array.
template <typename T>
class Grid
{
public:
    Grid() = default;
    Grid(int rows, int cols, T fill = T{})
      : _rows(rows), _cols(cols), _data(area(rows, cols), fill)
    {
    }

    int rows() const { return _rows; }
    int cols() const { return _cols; }

    T& operator()(int r, int c) { return _data[index(r, c)]; }
    const T& operator()(int r, int c) const { return _data[index(r, c)]; }

    const std::vector<T>& data() const { return _data; }

    bool operator==(const Grid&) const = default;

private:
    static size_t area(int rows, int cols)
    {
        if (rows < 0 || cols < 0)
            throw ShapeError("grid dimensions must be nonnegative");
        return static_cast<size_t>(rows) * static_cast<size_t>(cols);
    }

    size_t index(int r, int c) const
    {
        return static_cast<size_t>(r) * static_cast<size_t>(_cols) +
               static_cast<size_t>(c);
    }

    int _rows = 0;
    int _cols = 0;
    std::vector<T> _data;
};

// ============================================================================
// Cells and entries
// ============================================================================

/// A filled cell; all fields 0-based.
struct Entry
{
    int row;
    int col;
    int sym;
    bool operator==(const Entry&) const = default;
    auto operator<=>(const Entry&) const = default;
};

struct Cell
{
    int row;
    int col;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

/// Sorted, duplicate-free set of positions inside a rows x cols area.
class CellSet
{
public:
    CellSet() = default;
    CellSet(int rows, int cols, std::vector<Cell> cells);

    int rows() const { return _rows; }
    int cols() const { return _cols; }
    size_t size() const { return _cells.size(); }
    bool empty() const { return _cells.empty(); }
    bool contains(Cell c) const;

    const std::vector<Cell>& cells() const { return _cells; }
    auto begin() const { return _cells.begin(); }
    auto end() const { return _cells.end(); }

    std::vector<int> row_counts() const;
    std::vector<int> col_counts() const;

    bool operator==(const CellSet&) const = default;

private:
    int _rows = 0;
    int _cols = 0;
    std::vector<Cell> _cells;
};

// ============================================================================
// Conjugation
// ============================================================================

/// Role indices of an entry triple.
enum Role : int { kRowRole = 0, kColRole = 1, kSymRole = 2 };

/// A permutation of the three roles (row, column, symbol).
///
/// `source(k)` is the old role whose value lands in new role `k`; applied to
/// a triple `(x0, x1, x2)` it yields `(x[source(0)], x[source(1)], x[source(2)])`.
class RolePermutation
{
public:
    /// Throws `PreconditionViolated` unless `source` is a bijection on {0,1,2}.
    explicit RolePermutation(std::array<int, 3> source);

    static RolePermutation identity() { return RolePermutation({0, 1, 2}); }
    static RolePermutation swap_rows_cols() { return RolePermutation({1, 0, 2}); }
    static RolePermutation swap_cols_syms() { return RolePermutation({0, 2, 1}); }
    static RolePermutation swap_rows_syms() { return RolePermutation({2, 1, 0}); }
    static std::array<RolePermutation, 6> all();

    int source(int role) const { return _source[static_cast<size_t>(role)]; }
    RolePermutation inverse() const;

    template <typename T>
    std::array<T, 3> apply(const std::array<T, 3>& triple) const
    {
        return {triple[static_cast<size_t>(_source[0])],
                triple[static_cast<size_t>(_source[1])],
                triple[static_cast<size_t>(_source[2])]};
    }

    bool operator==(const RolePermutation&) const = default;

private:
    std::array<int, 3> _source;
};

// ============================================================================
// Partial latin rectangle
// ============================================================================

/// An r x s array of optional symbols drawn from t symbols, with no symbol
/// repeated in any row or column. Immutable once constructed.
class PartialLatinRectangle
{
public:
    /// Empty rectangle of type (rows, cols, symbols).
    PartialLatinRectangle(int rows, int cols, int symbols);

    /// Builds from 0-based cells (kEmpty for blanks); validates invariants.
    PartialLatinRectangle(int symbols, Grid<int> cells);

    int rows() const { return _cells.rows(); }
    int cols() const { return _cells.cols(); }
    int symbols() const { return _symbols; }

    /// 0-based symbol or kEmpty.
    int at(int r, int c) const { return _cells(r, c); }
    bool filled(int r, int c) const { return _cells(r, c) != kEmpty; }
    const Grid<int>& cells() const { return _cells; }

    int entry_count() const;
    std::vector<Entry> entries() const;
    std::vector<int> row_counts() const;
    std::vector<int> col_counts() const;
    std::vector<int> symbol_counts() const;

    /// True when every filled cell of `this` holds the same symbol in `other`.
    /// Shapes may differ; `other` must cover `this`.
    bool is_extended_by(const PartialLatinRectangle& other) const;

    bool operator==(const PartialLatinRectangle&) const = default;

private:
    int _symbols;
    Grid<int> _cells;
};

/// Validates a grid of 1-based optional symbols against the type (r, s, t).
/// Throws `DuplicateInRow`, `DuplicateInColumn`, `SymbolOutOfRange` or
/// `ShapeError`.
PartialLatinRectangle validate(const std::vector<std::vector<std::optional<int>>>& grid,
                               int symbols);

PartialLatinRectangle conjugate(const PartialLatinRectangle& p, const RolePermutation& sigma);

/// True iff the entry count equals min{rs, rt, st}.
bool is_saturated(const PartialLatinRectangle& p);

/// Maximum possible entry count for type (r, s, t).
std::int64_t saturation_size(int rows, int cols, int symbols);

// ============================================================================
// Latin square
// ============================================================================

/// A full n x n array where each of n symbols occurs once per row and column.
class LatinSquare
{
public:
    /// Throws `ValidationError` if `cells` is not a latin square.
    explicit LatinSquare(Grid<int> cells);

    /// From 1-based rows.
    static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return _cells.rows(); }
    int at(int r, int c) const { return _cells(r, c); }
    const Grid<int>& cells() const { return _cells; }

    PartialLatinRectangle as_partial() const;

    bool operator==(const LatinSquare&) const = default;

private:
    Grid<int> _cells;
};

/// Cyclic square L(i, j) = (i + j) mod n.
LatinSquare cyclic_square(int n);

/// True iff `cells` is an r x n array, n symbols, each row a permutation and
/// no column repeating a symbol.
bool is_latin_rectangle(const Grid<int>& cells, int symbols);

// ============================================================================
// Condition reports
// ============================================================================

enum class BoundKind { AtLeast, AtMost };

/// One checked inequality. For per-line conditions `attained` is the worst
/// line's value and `index` identifies that line (0-based, -1 otherwise).
struct ConditionResult
{
    std::string id;
    BoundKind kind;
    std::int64_t attained;
    std::int64_t bound;
    int index = -1;

    /// attained - bound for lower bounds, bound - attained for upper bounds.
    std::int64_t margin() const
    {
        return kind == BoundKind::AtLeast ? attained - bound : bound - attained;
    }
    bool satisfied() const { return margin() >= 0; }
};

struct ConditionReport
{
    std::vector<ConditionResult> items;

    bool all_satisfied() const;
    const ConditionResult& at(const std::string& id) const;
    void add(ConditionResult r) { items.push_back(std::move(r)); }
};

/// (rst + (n-r)(n-s)(n-t)) / n, which is always an integer.
std::int64_t entry_bound(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t n);

} // namespace latinext
