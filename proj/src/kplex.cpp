#include "latinext/kplex.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "latinext/cruse.hpp"

namespace latinext {

bool is_partial_kplex(const LatinSquare& l, const CellSet& cells, int k)
{
    const int n = l.order();
    std::vector<int> rows(static_cast<size_t>(n), 0), cols(rows), syms(rows);
    for (auto c : cells) {
        if (c.row < 0 || c.row >= n || c.col < 0 || c.col >= n) return false;
        if (++rows[static_cast<size_t>(c.row)] > k || ++cols[static_cast<size_t>(c.col)] > k ||
            ++syms[static_cast<size_t>(l.at(c.row, c.col))] > k)
            return false;
    }
    return true;
}

namespace {

class PlexSearch
{
public:
    PlexSearch(const LatinSquare& l, int k, int m)
      : _l(l), _n(l.order()), _k(k), _m(m), _rows(static_cast<size_t>(_n), 0), _cols(_rows), _syms(_rows)
    {
    }

    std::optional<CellSet> run()
    {
        if (!dfs(0)) return std::nullopt;
        return CellSet(_n, _n, _chosen);
    }

private:
    /// Upper bound on what cells from `pos` onward can still add.
    int reachable(int pos) const
    {
        if (pos >= _n * _n) return 0;
        const int i = pos / _n, j = pos % _n;
        int total = std::min(_k - _rows[static_cast<size_t>(i)], _n - j);
        total += (_n - 1 - i) * std::min(_k, _n);
        return total;
    }

    bool dfs(int pos)
    {
        const int have = static_cast<int>(_chosen.size());
        if (have == _m) return true;
        if (have + reachable(pos) < _m) return false;
        const int i = pos / _n, j = pos % _n, v = _l.at(i, j);
        auto& r = _rows[static_cast<size_t>(i)];
        auto& c = _cols[static_cast<size_t>(j)];
        auto& s = _syms[static_cast<size_t>(v)];
        if (r < _k && c < _k && s < _k) {
            ++r, ++c, ++s;
            _chosen.push_back({i, j});
            if (dfs(pos + 1)) return true;
            _chosen.pop_back();
            --r, --c, --s;
        }
        return dfs(pos + 1);
    }

    const LatinSquare& _l;
    int _n, _k, _m;
    std::vector<int> _rows, _cols, _syms;
    std::vector<Cell> _chosen;
};

} // namespace

std::optional<CellSet> find_partial_kplex(const LatinSquare& l, int k, int m)
{
    const int n = l.order();
    if (k < 1 || k > n) throw PreconditionViolated("find_partial_kplex: need 1 <= k <= n");
    if (m < 0 || m > n * n) throw PreconditionViolated("find_partial_kplex: need 0 <= m <= n^2");
    return PlexSearch(l, k, m).run();
}

std::optional<LatinSquare> quasi_embed(const LatinSquare& l, int k)
{
    const int n = l.order();
    if (k < 1 || k > n) throw PreconditionViolated("quasi_embed: need 1 <= k <= n");
    auto plex = find_partial_kplex(l, k, k * (n - k));
    if (!plex) return std::nullopt;

    Grid<int> rest = l.cells();
    for (auto c : *plex) rest(c.row, c.col) = kEmpty;
    PartialLatinRectangle p(n, std::move(rest));
    auto big = complete(p, n + k);
    if (big && !p.is_extended_by(big->as_partial()))
        throw std::logic_error("quasi_embed: completion does not extend the complement");
    return big;
}

int agreement(const LatinSquare& l, const LatinSquare& big)
{
    int same = 0;
    for (int i = 0; i < l.order(); ++i)
        for (int j = 0; j < l.order(); ++j)
            if (i < big.order() && j < big.order() && big.at(i, j) == l.at(i, j)) ++same;
    return same;
}

// ============================================================================
// Reduced squares and the scan
// ============================================================================

namespace {

void fill_reduced(Grid<int>& g, std::vector<std::uint32_t>& row_used, std::vector<std::uint32_t>& col_used,
                  int pos, std::vector<LatinSquare>& out)
{
    const int n = g.rows();
    if (pos == n * n) {
        out.emplace_back(g);
        return;
    }
    const int i = pos / n, j = pos % n;
    if (i == 0 || j == 0) {
        fill_reduced(g, row_used, col_used, pos + 1, out);
        return;
    }
    for (int v = 0; v < n; ++v) {
        const std::uint32_t bit = 1u << v;
        if ((row_used[static_cast<size_t>(i)] | col_used[static_cast<size_t>(j)]) & bit) continue;
        g(i, j) = v;
        row_used[static_cast<size_t>(i)] |= bit;
        col_used[static_cast<size_t>(j)] |= bit;
        fill_reduced(g, row_used, col_used, pos + 1, out);
        row_used[static_cast<size_t>(i)] &= ~bit;
        col_used[static_cast<size_t>(j)] &= ~bit;
    }
}

} // namespace

std::vector<LatinSquare> reduced_squares(int n)
{
    if (n < 1 || n > 8) throw PreconditionViolated("reduced_squares: order must be in 1..8");
    Grid<int> g(n, n, kEmpty);
    std::vector<std::uint32_t> row_used(static_cast<size_t>(n), 0), col_used(row_used);
    for (int x = 0; x < n; ++x) {
        g(0, x) = x;
        g(x, 0) = x;
        row_used[0] |= 1u << x;
        col_used[0] |= 1u << x;
        row_used[static_cast<size_t>(x)] |= 1u << x;
        col_used[static_cast<size_t>(x)] |= 1u << x;
    }
    std::vector<LatinSquare> out;
    fill_reduced(g, row_used, col_used, 0, out);
    return out;
}

std::vector<PlexReport> conjecture_scan(int n, const std::vector<int>& ks, int jobs)
{
    auto squares = reduced_squares(n);
    std::vector<int> sorted_ks(ks);
    std::sort(sorted_ks.begin(), sorted_ks.end());
    sorted_ks.erase(std::unique(sorted_ks.begin(), sorted_ks.end()), sorted_ks.end());

    const size_t per = sorted_ks.size();
    std::vector<PlexReport> reports(squares.size() * per);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t q = next++; q < squares.size(); q = next++)
            for (size_t x = 0; x < per; ++x) {
                const int k = sorted_ks[x], m = k * (n - k);
                auto cells = find_partial_kplex(squares[q], k, m);
                reports[q * per + x] = {static_cast<int>(q), n, k, m, cells.has_value(), std::move(cells)};
            }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(1, jobs); ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return reports;
}

std::string format_report(const PlexReport& report)
{
    std::string out = std::to_string(report.square_index + 1) + ' ' + std::to_string(report.k) + ' ' +
                      std::to_string(report.m) + ' ' + (report.found ? "yes" : "no");
    if (report.cells)
        for (auto c : *report.cells) out += ' ' + std::to_string(c.row + 1) + ',' + std::to_string(c.col + 1);
    return out;
}

nlohmann::json to_json(const PlexReport& report)
{
    nlohmann::json cells = nullptr;
    if (report.cells) {
        cells = nlohmann::json::array();
        for (auto c : *report.cells) cells.push_back({c.row + 1, c.col + 1});
    }
    return {{"square_index", report.square_index + 1},
            {"n", report.n},
            {"k", report.k},
            {"m", report.m},
            {"found", report.found},
            {"cells", cells}};
}

} // namespace latinext
