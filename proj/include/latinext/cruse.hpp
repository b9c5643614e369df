// cruse.hpp -- deciding and constructing completions of a partial latin
// rectangle of type (r, s, t) to a latin square of order n.
//
// A rectangle R completes to order n iff some extension P of R on the same
// t symbols has
//
//   A1  every row    >= s + t - n entries
//   A2  every column >= r + t - n entries
//   A3  every symbol >= r + s - n occurrences
//   A4  at most (rst + (n-r)(n-s)(n-t)) / n entries.
//
// Given such a P, the rows are widened to n columns by placing each row's
// missing symbols on the right and shuffling them into distinct columns,
// the remaining gaps receive the n - t new symbols by gap filling, and the
// resulting r x n latin rectangle is completed row by row.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latinext/core.hpp"

namespace latinext {

/// Throws `PreconditionViolated` unless r, s, t <= n.
void require_fits(const PartialLatinRectangle& p, int n);

ConditionReport check_conditions(const PartialLatinRectangle& p, int n);

// ----------------------------------------------------------------------------
// Extension search
// ----------------------------------------------------------------------------

/// Line and count requirements for `search_latin_extension`. Negative
/// minimums are trivially met.
struct ExtensionBounds
{
    std::int64_t row_min = 0;
    std::int64_t col_min = 0;
    std::int64_t sym_min = 0;
    std::int64_t max_entries = INT64_MAX;
};

struct ExtensionHooks
{
    /// Called on every complete candidate; return true to accept it.
    std::function<bool(const Grid<int>&)> accept;
    /// Called on partial states; return true to cut the subtree. Must be
    /// monotone: only return true if no superset of entries can be accepted.
    std::function<bool(const Grid<int>&)> prune;
};

/// Depth-first search over extensions of `start` (kEmpty = blank, symbols
/// 0..symbols-1), visiting blank cells in row-major order and trying
/// "leave blank" before symbols in increasing order. Returns the first
/// extension meeting `bounds` and accepted by `hooks.accept`.
std::optional<Grid<int>> search_latin_extension(const Grid<int>& start, int symbols,
                                                const ExtensionBounds& bounds,
                                                const ExtensionHooks& hooks = {});

// ----------------------------------------------------------------------------
// Completion pipeline
// ----------------------------------------------------------------------------

/// An extension of `r` on the same symbols satisfying A1-A4, or nullopt if
/// none exists.
std::optional<PartialLatinRectangle> find_witness(const PartialLatinRectangle& r, int n);

/// Widens a witness to an r x n latin rectangle (symbols 0..n-1) agreeing
/// with it on its filled cells. Throws `PreconditionViolated` if A1-A4 fail.
Grid<int> extend_to_latin_rows(const PartialLatinRectangle& witness, int n);

/// Completes an r x n latin rectangle to an order-n latin square.
LatinSquare complete_rectangle(const Grid<int>& rect);

/// Latin square of order n with `r` in its upper-left corner, or nullopt.
std::optional<LatinSquare> complete(const PartialLatinRectangle& r, int n);

/// Orders n in [max(r,s,t), n_max] for which `p` completes.
std::vector<int> embeddable_orders(const PartialLatinRectangle& p, int n_max);

/// For a partial latin square of order n: an extension on the same n symbols
/// where every row, column and symbol appears at least n - k times and at
/// least k(n - k) cells stay empty; nullopt if there is none. Such an
/// extension exists iff `p` embeds in a latin square of order n + k.
std::optional<PartialLatinRectangle> corollary_check(const PartialLatinRectangle& p, int k);

} // namespace latinext
