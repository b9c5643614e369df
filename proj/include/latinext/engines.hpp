// engines.hpp -- combinatorial kernels: bipartite matching, systems of
// distinct representatives, Konig decomposition, flows with lower bounds.
//
// All routines are deterministic: ties are broken towards the lowest index.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "latinext/core.hpp"

namespace latinext {

// ============================================================================
// Bipartite matching
// ============================================================================

class Bigraph
{
public:
    Bigraph(int left_count, int right_count);

    /// Throws `PreconditionViolated` on out-of-range or duplicate edges.
    void add_edge(int left, int right);

    int left_count() const { return _left; }
    int right_count() const { return _right; }
    const std::vector<int>& neighbors(int left) const { return _adj[static_cast<size_t>(left)]; }
    bool has_edge(int left, int right) const;
    size_t edge_count() const;

private:
    int _left;
    int _right;
    std::vector<std::vector<int>> _adj;  // sorted
};

struct Matching
{
    std::vector<int> mate_left;   ///< right partner or -1
    std::vector<int> mate_right;  ///< left partner or -1
    int size = 0;

    std::vector<std::pair<int, int>> edges() const;
};

struct VertexCover
{
    std::vector<int> left;
    std::vector<int> right;
    size_t size() const { return left.size() + right.size(); }
};

/// Maximum matching by repeated augmenting-path search.
Matching max_matching(const Bigraph& g);

/// Konig cover derived from a maximum matching; its size equals the matching's.
VertexCover min_vertex_cover(const Bigraph& g, const Matching& m);

// ============================================================================
// Systems of distinct representatives
// ============================================================================

/// Ordered family of subsets of {0, ..., universe-1}.
class SetFamily
{
public:
    explicit SetFamily(int universe) : _universe(universe) {}
    SetFamily(int universe, std::vector<std::vector<int>> sets);

    /// Duplicate elements are collapsed; throws on elements outside the universe.
    void add_set(std::vector<int> set);

    int universe() const { return _universe; }
    size_t size() const { return _sets.size(); }
    const std::vector<int>& operator[](size_t i) const { return _sets[i]; }
    const std::vector<std::vector<int>>& sets() const { return _sets; }

private:
    int _universe;
    std::vector<std::vector<int>> _sets;
};

/// Witness that Hall's condition fails: `sets` (indices into the family)
/// have a union, `neighborhood`, with fewer elements than sets.
struct HallViolation
{
    std::vector<int> sets;
    std::vector<int> neighborhood;
};

using SdrResult = std::variant<std::vector<int>, HallViolation>;

SdrResult sdr(const SetFamily& family);

class AugmentationFailed : public Error
{
public:
    explicit AugmentationFailed(int symbol);
    int symbol;
};

/// An SDR that contains every element of `necessary`. Starts from `sdr` and
/// repairs it along breadth-first exchange chains (x0 -> x1 -> ... -> xk,
/// where x(i+1) represents a set containing x(i)) ending at a non-necessary
/// representative. Throws `PreconditionViolated` if no SDR exists and
/// `AugmentationFailed` if some necessary element cannot be brought in.
std::vector<int> sdr_with_necessary(const SetFamily& family, std::span<const int> necessary);

// ============================================================================
// Konig decomposition
// ============================================================================

class BoundExceeded : public Error
{
public:
    BoundExceeded(bool is_row, int index, std::int64_t sum, int k);
    bool is_row;
    int index;  ///< 0-based
};

/// Writes `m` as a sum of `k` (0,1)-matrices with at most one 1 per row and
/// column. Requires every row and column sum of `m` to be at most `k`.
std::vector<Grid<int>> konig_decompose(const Grid<int>& m, int k);

// ============================================================================
// Flows with lower bounds
// ============================================================================

struct FlowArc
{
    int from;
    int to;
    std::int64_t lower;
    std::int64_t upper;
};

class BoundedFlowNetwork
{
public:
    BoundedFlowNetwork(int node_count, int source, int sink);

    /// Returns the arc index. Throws `PreconditionViolated` unless
    /// 0 <= lower <= upper and both endpoints are valid.
    int add_arc(int from, int to, std::int64_t lower, std::int64_t upper);

    int node_count() const { return _nodes; }
    int source() const { return _source; }
    int sink() const { return _sink; }
    const std::vector<FlowArc>& arcs() const { return _arcs; }

private:
    int _nodes;
    int _source;
    int _sink;
    std::vector<FlowArc> _arcs;
};

/// Upper bound used for "unbounded" arcs.
inline constexpr std::int64_t kUnbounded = std::int64_t{1} << 40;

struct Flow
{
    std::vector<std::int64_t> arc_flow;  ///< indexed like `arcs()`
    std::int64_t value = 0;              ///< net flow out of the source
};

/// Hoffman certificate: with `side` the node set reachable in the final
/// residual graph, the lower bounds of arcs entering `side` exceed the
/// capacities of arcs leaving it (counting an unbounded sink->source return
/// arc) by `excess`.
struct Infeasible
{
    std::vector<int> side;
    std::int64_t excess = 0;
};

using FlowResult = std::variant<Flow, Infeasible>;

/// Finds an integral source-sink flow of nonnegative value meeting every
/// arc's bounds.
FlowResult feasible_flow(const BoundedFlowNetwork& net);

/// True if `flow` meets every bound and conserves flow at inner nodes.
bool check_flow(const BoundedFlowNetwork& net, const Flow& flow);

} // namespace latinext
