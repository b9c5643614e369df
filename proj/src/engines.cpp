#include "latinext/engines.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace latinext {

// ============================================================================
// Bigraph / matching
// ============================================================================

Bigraph::Bigraph(int left_count, int right_count)
  : _left(left_count), _right(right_count), _adj(static_cast<size_t>(std::max(left_count, 0)))
{
    if (left_count < 0 || right_count < 0)
        throw PreconditionViolated("bigraph sides must be nonnegative");
}

void Bigraph::add_edge(int left, int right)
{
    if (left < 0 || left >= _left || right < 0 || right >= _right)
        throw PreconditionViolated("bigraph edge out of range");
    auto& nb = _adj[static_cast<size_t>(left)];
    auto it = std::lower_bound(nb.begin(), nb.end(), right);
    if (it != nb.end() && *it == right) throw PreconditionViolated("duplicate bigraph edge");
    nb.insert(it, right);
}

bool Bigraph::has_edge(int left, int right) const
{
    const auto& nb = _adj[static_cast<size_t>(left)];
    return std::binary_search(nb.begin(), nb.end(), right);
}

size_t Bigraph::edge_count() const
{
    size_t n = 0;
    for (const auto& nb : _adj) n += nb.size();
    return n;
}

std::vector<std::pair<int, int>> Matching::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (size_t u = 0; u < mate_left.size(); ++u)
        if (mate_left[u] >= 0) out.emplace_back(static_cast<int>(u), mate_left[u]);
    return out;
}

namespace {

bool augment(const Bigraph& g, int u, std::vector<char>& seen, Matching& m)
{
    for (int v : g.neighbors(u)) {
        if (seen[static_cast<size_t>(v)]) continue;
        seen[static_cast<size_t>(v)] = 1;
        int w = m.mate_right[static_cast<size_t>(v)];
        if (w < 0 || augment(g, w, seen, m)) {
            m.mate_left[static_cast<size_t>(u)] = v;
            m.mate_right[static_cast<size_t>(v)] = u;
            return true;
        }
    }
    return false;
}

/// Vertices reachable from `starts` by alternating paths (free edges left to
/// right, matched edges right to left).
void alternating_reach(const Bigraph& g, const Matching& m, const std::vector<int>& starts,
                       std::vector<char>& left_seen, std::vector<char>& right_seen)
{
    std::deque<int> queue(starts.begin(), starts.end());
    for (int u : starts) left_seen[static_cast<size_t>(u)] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (right_seen[static_cast<size_t>(v)] || m.mate_left[static_cast<size_t>(u)] == v) continue;
            right_seen[static_cast<size_t>(v)] = 1;
            int w = m.mate_right[static_cast<size_t>(v)];
            if (w >= 0 && !left_seen[static_cast<size_t>(w)]) {
                left_seen[static_cast<size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
}

} // namespace

Matching max_matching(const Bigraph& g)
{
    Matching m;
    m.mate_left.assign(static_cast<size_t>(g.left_count()), -1);
    m.mate_right.assign(static_cast<size_t>(g.right_count()), -1);
    std::vector<char> seen(static_cast<size_t>(g.right_count()));
    for (int u = 0; u < g.left_count(); ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        if (augment(g, u, seen, m)) ++m.size;
    }
    return m;
}

VertexCover min_vertex_cover(const Bigraph& g, const Matching& m)
{
    std::vector<int> free_left;
    for (int u = 0; u < g.left_count(); ++u)
        if (m.mate_left[static_cast<size_t>(u)] < 0) free_left.push_back(u);
    std::vector<char> ls(static_cast<size_t>(g.left_count())), rs(static_cast<size_t>(g.right_count()));
    alternating_reach(g, m, free_left, ls, rs);

    VertexCover cover;
    for (int u = 0; u < g.left_count(); ++u)
        if (!ls[static_cast<size_t>(u)]) cover.left.push_back(u);
    for (int v = 0; v < g.right_count(); ++v)
        if (rs[static_cast<size_t>(v)]) cover.right.push_back(v);
    return cover;
}

// ============================================================================
// SDR
// ============================================================================

SetFamily::SetFamily(int universe, std::vector<std::vector<int>> sets) : _universe(universe)
{
    for (auto& s : sets) add_set(std::move(s));
}

void SetFamily::add_set(std::vector<int> set)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int x : set)
        if (x < 0 || x >= _universe) throw PreconditionViolated("set element outside the universe");
    _sets.push_back(std::move(set));
}

namespace {

Bigraph family_graph(const SetFamily& family)
{
    Bigraph g(static_cast<int>(family.size()), family.universe());
    for (size_t i = 0; i < family.size(); ++i)
        for (int x : family[i]) g.add_edge(static_cast<int>(i), x);
    return g;
}

} // namespace

SdrResult sdr(const SetFamily& family)
{
    Bigraph g = family_graph(family);
    Matching m = max_matching(g);
    if (m.size == static_cast<int>(family.size())) return m.mate_left;

    int first_free = 0;
    while (m.mate_left[static_cast<size_t>(first_free)] >= 0) ++first_free;
    std::vector<char> ls(family.size()), rs(static_cast<size_t>(family.universe()));
    alternating_reach(g, m, {first_free}, ls, rs);

    HallViolation hv;
    for (size_t i = 0; i < ls.size(); ++i)
        if (ls[i]) hv.sets.push_back(static_cast<int>(i));
    for (size_t x = 0; x < rs.size(); ++x)
        if (rs[x]) hv.neighborhood.push_back(static_cast<int>(x));
    return hv;
}

AugmentationFailed::AugmentationFailed(int symbol_)
  : Error("no exchange chain brings necessary element " + std::to_string(symbol_) +
          " into the representatives"),
    symbol(symbol_)
{
}

std::vector<int> sdr_with_necessary(const SetFamily& family, std::span<const int> necessary)
{
    auto first = sdr(family);
    if (std::holds_alternative<HallViolation>(first))
        throw PreconditionViolated("family has no system of distinct representatives");
    std::vector<int> reps = std::get<std::vector<int>>(std::move(first));

    const auto U = static_cast<size_t>(family.universe());
    std::vector<char> is_necessary(U);
    for (int x : necessary) {
        if (x < 0 || static_cast<size_t>(x) >= U) throw PreconditionViolated("necessary element outside the universe");
        is_necessary[static_cast<size_t>(x)] = 1;
    }

    // containing[x] = sets (ascending) that contain x
    std::vector<std::vector<int>> containing(U);
    for (size_t i = 0; i < family.size(); ++i)
        for (int x : family[i]) containing[static_cast<size_t>(x)].push_back(static_cast<int>(i));

    std::vector<int> holder(U, -1);  // set represented by x, or -1
    for (size_t i = 0; i < reps.size(); ++i) holder[static_cast<size_t>(reps[i])] = static_cast<int>(i);

    for (size_t x0 = 0; x0 < U; ++x0) {
        if (!is_necessary[x0] || holder[x0] >= 0) continue;

        // Breadth-first search over x -> reps[i] for sets i containing x.
        std::vector<int> parent_sym(U, -1), parent_set(U, -1);
        std::vector<char> seen(U);
        std::deque<int> queue{static_cast<int>(x0)};
        seen[x0] = 1;
        int end = -1;
        while (!queue.empty() && end < 0) {
            int x = queue.front();
            queue.pop_front();
            for (int i : containing[static_cast<size_t>(x)]) {
                int y = reps[static_cast<size_t>(i)];
                if (y == x || seen[static_cast<size_t>(y)]) continue;
                seen[static_cast<size_t>(y)] = 1;
                parent_sym[static_cast<size_t>(y)] = x;
                parent_set[static_cast<size_t>(y)] = i;
                if (!is_necessary[static_cast<size_t>(y)]) {
                    end = y;
                    break;
                }
                queue.push_back(y);
            }
        }
        if (end < 0) throw AugmentationFailed(static_cast<int>(x0));

        // Shift representatives back along the chain; `end` drops out.
        holder[static_cast<size_t>(end)] = -1;
        for (int y = end; y != static_cast<int>(x0);) {
            int x = parent_sym[static_cast<size_t>(y)];
            int i = parent_set[static_cast<size_t>(y)];
            reps[static_cast<size_t>(i)] = x;
            holder[static_cast<size_t>(x)] = i;
            y = x;
        }
    }
    return reps;
}

// ============================================================================
// Konig decomposition
// ============================================================================

BoundExceeded::BoundExceeded(bool is_row_, int index_, std::int64_t sum, int k)
  : Error(std::string(is_row_ ? "row " : "column ") + std::to_string(index_ + 1) + " sums to " +
          std::to_string(sum) + ", more than k = " + std::to_string(k)),
    is_row(is_row_), index(index_)
{
}

std::vector<Grid<int>> konig_decompose(const Grid<int>& m, int k)
{
    const int R = m.rows(), C = m.cols();
    if (k < 0) throw PreconditionViolated("k must be nonnegative");
    for (int v : m.data())
        if (v < 0) throw PreconditionViolated("matrix entries must be nonnegative");

    std::vector<std::int64_t> row_sum(static_cast<size_t>(R)), col_sum(static_cast<size_t>(C));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) {
            row_sum[static_cast<size_t>(i)] += m(i, j);
            col_sum[static_cast<size_t>(j)] += m(i, j);
        }
    for (int i = 0; i < R; ++i)
        if (row_sum[static_cast<size_t>(i)] > k) throw BoundExceeded(true, i, row_sum[static_cast<size_t>(i)], k);
    for (int j = 0; j < C; ++j)
        if (col_sum[static_cast<size_t>(j)] > k) throw BoundExceeded(false, j, col_sum[static_cast<size_t>(j)], k);

    Grid<int> rest = m;
    std::vector<Grid<int>> parts;
    for (int colors = k; colors >= 1; --colors) {
        // Matching that covers every line whose remaining sum equals the
        // remaining number of colors; such a matching always exists.
        const int source = R + C, sink = R + C + 1;
        BoundedFlowNetwork net(R + C + 2, source, sink);
        for (int i = 0; i < R; ++i)
            if (row_sum[static_cast<size_t>(i)] > 0)
                net.add_arc(source, i, row_sum[static_cast<size_t>(i)] == colors ? 1 : 0, 1);
        struct CellArc { int row, col, arc; };
        std::vector<CellArc> cell_arcs;
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j)
                if (rest(i, j) > 0) cell_arcs.push_back({i, j, net.add_arc(i, R + j, 0, 1)});
        for (int j = 0; j < C; ++j)
            if (col_sum[static_cast<size_t>(j)] > 0)
                net.add_arc(R + j, sink, col_sum[static_cast<size_t>(j)] == colors ? 1 : 0, 1);

        auto result = feasible_flow(net);
        if (!std::holds_alternative<Flow>(result))
            throw std::logic_error("konig_decompose: no matching covers the tight lines");
        const auto& flow = std::get<Flow>(result);

        Grid<int> part(R, C, 0);
        for (const auto& ca : cell_arcs) {
            if (flow.arc_flow[static_cast<size_t>(ca.arc)] == 0) continue;
            part(ca.row, ca.col) = 1;
            --rest(ca.row, ca.col);
            --row_sum[static_cast<size_t>(ca.row)];
            --col_sum[static_cast<size_t>(ca.col)];
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

// ============================================================================
// Flows
// ============================================================================

BoundedFlowNetwork::BoundedFlowNetwork(int node_count, int source, int sink)
  : _nodes(node_count), _source(source), _sink(sink)
{
    if (node_count < 2 || source < 0 || source >= node_count || sink < 0 || sink >= node_count ||
        source == sink)
        throw PreconditionViolated("flow network needs distinct source and sink nodes");
}

int BoundedFlowNetwork::add_arc(int from, int to, std::int64_t lower, std::int64_t upper)
{
    if (from < 0 || from >= _nodes || to < 0 || to >= _nodes)
        throw PreconditionViolated("arc endpoint out of range");
    if (lower < 0 || lower > upper)
        throw PreconditionViolated("arc bounds must satisfy 0 <= lower <= upper");
    _arcs.push_back({from, to, lower, upper});
    return static_cast<int>(_arcs.size()) - 1;
}

namespace {

/// Dinic max-flow over insertion-ordered adjacency lists.
class Dinic
{
public:
    explicit Dinic(int n) : _adj(static_cast<size_t>(n)), _level(static_cast<size_t>(n)), _it(static_cast<size_t>(n)) {}

    /// Returns an id usable with `flow_on`.
    std::pair<int, int> add_edge(int u, int v, std::int64_t cap)
    {
        auto& au = _adj[static_cast<size_t>(u)];
        auto& av = _adj[static_cast<size_t>(v)];
        au.push_back({v, static_cast<int>(av.size()), cap, cap});
        av.push_back({u, static_cast<int>(au.size()) - 1, 0, 0});
        return {u, static_cast<int>(au.size()) - 1};
    }

    std::int64_t flow_on(std::pair<int, int> id) const
    {
        const auto& e = _adj[static_cast<size_t>(id.first)][static_cast<size_t>(id.second)];
        return e.original - e.cap;
    }

    std::int64_t max_flow(int s, int t)
    {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            std::fill(_it.begin(), _it.end(), 0);
            while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
        }
        return total;
    }

    /// Nodes reachable from `s` in the residual graph.
    std::vector<char> reachable(int s) const
    {
        std::vector<char> seen(_adj.size());
        std::deque<int> q{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto& e : _adj[static_cast<size_t>(u)])
                if (e.cap > 0 && !seen[static_cast<size_t>(e.to)]) {
                    seen[static_cast<size_t>(e.to)] = 1;
                    q.push_back(e.to);
                }
        }
        return seen;
    }

private:
    struct Edge
    {
        int to;
        int rev;
        std::int64_t cap;
        std::int64_t original;
    };

    bool bfs(int s, int t)
    {
        std::fill(_level.begin(), _level.end(), -1);
        std::deque<int> q{s};
        _level[static_cast<size_t>(s)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto& e : _adj[static_cast<size_t>(u)])
                if (e.cap > 0 && _level[static_cast<size_t>(e.to)] < 0) {
                    _level[static_cast<size_t>(e.to)] = _level[static_cast<size_t>(u)] + 1;
                    q.push_back(e.to);
                }
        }
        return _level[static_cast<size_t>(t)] >= 0;
    }

    std::int64_t dfs(int u, int t, std::int64_t pushed)
    {
        if (u == t) return pushed;
        auto& edges = _adj[static_cast<size_t>(u)];
        for (size_t& i = _it[static_cast<size_t>(u)]; i < edges.size(); ++i) {
            Edge& e = edges[i];
            if (e.cap <= 0 || _level[static_cast<size_t>(e.to)] != _level[static_cast<size_t>(u)] + 1) continue;
            std::int64_t got = dfs(e.to, t, std::min(pushed, e.cap));
            if (got > 0) {
                e.cap -= got;
                _adj[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<Edge>> _adj;
    std::vector<int> _level;
    std::vector<size_t> _it;
};

} // namespace

FlowResult feasible_flow(const BoundedFlowNetwork& net)
{
    const int N = net.node_count();
    const int super_source = N, super_sink = N + 1;
    Dinic dinic(N + 2);

    std::vector<std::int64_t> excess(static_cast<size_t>(N), 0);
    std::vector<std::pair<int, int>> ids;
    ids.reserve(net.arcs().size());
    for (const auto& a : net.arcs()) {
        ids.push_back(dinic.add_edge(a.from, a.to, a.upper - a.lower));
        excess[static_cast<size_t>(a.to)] += a.lower;
        excess[static_cast<size_t>(a.from)] -= a.lower;
    }
    dinic.add_edge(net.sink(), net.source(), kUnbounded);

    std::int64_t demand = 0;
    for (int v = 0; v < N; ++v) {
        std::int64_t e = excess[static_cast<size_t>(v)];
        if (e > 0) {
            dinic.add_edge(super_source, v, e);
            demand += e;
        } else if (e < 0) {
            dinic.add_edge(v, super_sink, -e);
        }
    }

    if (dinic.max_flow(super_source, super_sink) != demand) {
        auto seen = dinic.reachable(super_source);
        Infeasible cert;
        for (int v = 0; v < N; ++v)
            if (seen[static_cast<size_t>(v)]) cert.side.push_back(v);
        std::int64_t in_lower = 0, out_upper = 0;
        for (const auto& a : net.arcs()) {
            bool from_in = seen[static_cast<size_t>(a.from)], to_in = seen[static_cast<size_t>(a.to)];
            if (!from_in && to_in) in_lower += a.lower;
            if (from_in && !to_in) out_upper += a.upper;
        }
        if (seen[static_cast<size_t>(net.sink())] && !seen[static_cast<size_t>(net.source())])
            out_upper += kUnbounded;
        cert.excess = in_lower - out_upper;
        return cert;
    }

    Flow flow;
    flow.arc_flow.resize(net.arcs().size());
    for (size_t i = 0; i < net.arcs().size(); ++i) {
        flow.arc_flow[i] = net.arcs()[i].lower + dinic.flow_on(ids[i]);
        const auto& a = net.arcs()[i];
        if (a.from == net.source()) flow.value += flow.arc_flow[i];
        if (a.to == net.source()) flow.value -= flow.arc_flow[i];
    }
    return flow;
}

bool check_flow(const BoundedFlowNetwork& net, const Flow& flow)
{
    if (flow.arc_flow.size() != net.arcs().size()) return false;
    std::vector<std::int64_t> balance(static_cast<size_t>(net.node_count()), 0);
    for (size_t i = 0; i < net.arcs().size(); ++i) {
        const auto& a = net.arcs()[i];
        std::int64_t f = flow.arc_flow[i];
        if (f < a.lower || f > a.upper) return false;
        balance[static_cast<size_t>(a.from)] -= f;
        balance[static_cast<size_t>(a.to)] += f;
    }
    for (int v = 0; v < net.node_count(); ++v)
        if (v != net.source() && v != net.sink() && balance[static_cast<size_t>(v)] != 0) return false;
    return balance[static_cast<size_t>(net.source())] == -flow.value &&
           balance[static_cast<size_t>(net.sink())] == flow.value;
}

} // namespace latinext
