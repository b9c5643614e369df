// kplex.hpp -- partial k-plexes and quasi-embeddings.
//
// A partial k-plex of order m in a latin square is a set of m cells meeting
// every row, column and symbol at most k times. An order-n square L agrees
// with some order-(n+k) square outside k(n-k) of its cells iff L contains a
// partial k-plex of order k(n-k).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latinext/core.hpp"

namespace latinext {

bool is_partial_kplex(const LatinSquare& l, const CellSet& cells, int k);

/// Depth-first over cells in row-major order, taking a cell before skipping
/// it. Returns a partial k-plex with exactly m cells, or nullopt.
std::optional<CellSet> find_partial_kplex(const LatinSquare& l, int k, int m);

/// Deletes a partial k-plex of order k(n-k) from l and completes the rest to
/// order n + k. Requires 1 <= k <= n.
std::optional<LatinSquare> quasi_embed(const LatinSquare& l, int k);

/// Number of cells where `big` agrees with `l` in its top-left corner.
int agreement(const LatinSquare& l, const LatinSquare& big);

/// Latin squares of order n with first row and column in natural order,
/// lexicographic by rows.
std::vector<LatinSquare> reduced_squares(int n);

struct PlexReport
{
    int square_index;  ///< 0-based position in `reduced_squares(n)`
    int n;
    int k;
    int m;
    bool found;
    std::optional<CellSet> cells;

    bool operator==(const PlexReport&) const = default;
};

/// One report per reduced square of order n and per k in `ks`, sorted by
/// (square_index, k) whatever the number of worker threads.
std::vector<PlexReport> conjecture_scan(int n, const std::vector<int>& ks, int jobs = 1);

/// `square_index k m found cells...` with 1-based indices and cells as row,col.
std::string format_report(const PlexReport& report);
nlohmann::json to_json(const PlexReport& report);

} // namespace latinext
