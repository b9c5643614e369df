#include "latinext/oracle.hpp"

#include <bit>

#include "latinext/gapfill.hpp"

namespace latinext::oracle {

namespace {

// Fills an n x n grid of symbols by always branching on the empty cell with
// the fewest options.
class SquareFiller
{
public:
    SquareFiller(const PartialLatinRectangle& r, int n)
      : _n(n), _cells(static_cast<size_t>(n * n), kEmpty),
        _row(static_cast<size_t>(n), 0), _col(static_cast<size_t>(n), 0)
    {
        if (n < 1 || n > 31 || r.rows() > n || r.cols() > n || r.symbols() > n)
            throw PreconditionViolated("brute_complete: rectangle does not fit order " + std::to_string(n));
        for (auto e : r.entries()) set(e.row, e.col, e.sym);
    }

    std::uint64_t count(std::uint64_t limit)
    {
        _limit = limit;
        _found = 0;
        search();
        return _found;
    }

private:
    void set(int i, int j, int v)
    {
        _cells[static_cast<size_t>(i * _n + j)] = v;
        _row[static_cast<size_t>(i)] |= 1u << v;
        _col[static_cast<size_t>(j)] |= 1u << v;
    }
    void clear(int i, int j, int v)
    {
        _cells[static_cast<size_t>(i * _n + j)] = kEmpty;
        _row[static_cast<size_t>(i)] &= ~(1u << v);
        _col[static_cast<size_t>(j)] &= ~(1u << v);
    }

    void search()
    {
        const std::uint32_t all = (1u << _n) - 1;
        int best = -1, best_count = _n + 1;
        std::uint32_t best_mask = 0;
        for (int p = 0; p < _n * _n; ++p) {
            if (_cells[static_cast<size_t>(p)] != kEmpty) continue;
            std::uint32_t mask = all & ~(_row[static_cast<size_t>(p / _n)] | _col[static_cast<size_t>(p % _n)]);
            int c = std::popcount(mask);
            if (c < best_count) {
                best = p;
                best_count = c;
                best_mask = mask;
                if (c == 0) return;
            }
        }
        if (best < 0) {
            ++_found;
            return;
        }
        const int i = best / _n, j = best % _n;
        for (int v = 0; v < _n && _found < _limit; ++v) {
            if (!(best_mask & (1u << v))) continue;
            set(i, j, v);
            search();
            clear(i, j, v);
        }
    }

    int _n;
    std::vector<int> _cells;
    std::vector<std::uint32_t> _row, _col;
    std::uint64_t _limit = 0, _found = 0;
};

} // namespace

bool brute_complete(const PartialLatinRectangle& r, int n)
{
    return SquareFiller(r, n).count(1) > 0;
}

std::uint64_t count_completions(const PartialLatinRectangle& r, int n, std::uint64_t limit)
{
    return SquareFiller(r, n).count(limit);
}

// ----------------------------------------------------------------------------

namespace {

class ClassFiller
{
public:
    ClassFiller(const FrequencyRectangle& r, const Partition& lambda, int n)
      : _n(n), _k(lambda.size()), _lambda(lambda.parts()), _cells(static_cast<size_t>(n * n), kEmpty),
        _row(static_cast<size_t>(n * _k), 0), _col(static_cast<size_t>(n * _k), 0)
    {
        for (int i = 0; i < r.rows(); ++i)
            for (int j = 0; j < r.cols(); ++j) {
                int c = r.at(i, j);
                if (c == kEmpty) continue;
                if (c >= _k) _bad = true;
                else place(i, j, c, 1);
            }
        for (int x = 0; x < n * _k; ++x)
            if (_row[static_cast<size_t>(x)] > _lambda[static_cast<size_t>(x % _k)] ||
                _col[static_cast<size_t>(x)] > _lambda[static_cast<size_t>(x % _k)])
                _bad = true;
    }

    bool run() { return !_bad && search(); }

private:
    void place(int i, int j, int c, int d)
    {
        _cells[static_cast<size_t>(i * _n + j)] = d > 0 ? c : kEmpty;
        _row[static_cast<size_t>(i * _k + c)] += d;
        _col[static_cast<size_t>(j * _k + c)] += d;
    }
    bool allowed(int i, int j, int c) const
    {
        const int cap = _lambda[static_cast<size_t>(c)];
        return _row[static_cast<size_t>(i * _k + c)] < cap && _col[static_cast<size_t>(j * _k + c)] < cap;
    }

    bool search()
    {
        int best = -1, best_count = _k + 1;
        for (int p = 0; p < _n * _n; ++p) {
            if (_cells[static_cast<size_t>(p)] != kEmpty) continue;
            int c = 0;
            for (int x = 0; x < _k; ++x) c += allowed(p / _n, p % _n, x);
            if (c < best_count) {
                best = p;
                best_count = c;
                if (c == 0) return false;
            }
        }
        if (best < 0) return true;
        const int i = best / _n, j = best % _n;
        for (int x = 0; x < _k; ++x) {
            if (!allowed(i, j, x)) continue;
            place(i, j, x, 1);
            if (search()) return true;
            place(i, j, x, -1);
        }
        return false;
    }

    int _n, _k;
    std::vector<int> _lambda;
    std::vector<int> _cells;
    std::vector<int> _row, _col;
    bool _bad = false;
};

} // namespace

bool brute_freq_complete(const FrequencyRectangle& r, const Partition& lambda, int n)
{
    if (lambda.total() != n || r.rows() > n || r.cols() > n)
        throw PreconditionViolated("brute_freq_complete: lambda must sum to n and the rectangle fit");
    return ClassFiller(r, lambda, n).run();
}

// ----------------------------------------------------------------------------

namespace {

struct SatFill
{
    int R, S, T;
    std::int64_t target;
    std::vector<int> cells;
    std::vector<std::uint64_t> row, col;
    std::int64_t entries = 0;

    bool go(int pos)
    {
        const int total = R * S;
        if (entries + (total - pos) < target) return false;
        if (pos == total) return entries == target;
        const int i = pos / S, j = pos % S;
        if (cells[static_cast<size_t>(pos)] != kEmpty) return go(pos + 1);
        for (int v = 0; v < T; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if ((row[static_cast<size_t>(i)] | col[static_cast<size_t>(j)]) & bit) continue;
            row[static_cast<size_t>(i)] |= bit;
            col[static_cast<size_t>(j)] |= bit;
            ++entries;
            bool ok = go(pos + 1);
            row[static_cast<size_t>(i)] &= ~bit;
            col[static_cast<size_t>(j)] &= ~bit;
            --entries;
            if (ok) return true;
        }
        return go(pos + 1);
    }
};

} // namespace

bool brute_saturate(const PartialLatinRectangle& p, int R, int S, int T)
{
    if (p.rows() > R || p.cols() > S || p.symbols() > T || T > 64)
        throw PreconditionViolated("brute_saturate: rectangle does not fit the target");
    SatFill f{R, S, T, std::min({std::int64_t{R} * S, std::int64_t{R} * T, std::int64_t{S} * T}),
              std::vector<int>(static_cast<size_t>(R * S), kEmpty),
              std::vector<std::uint64_t>(static_cast<size_t>(R), 0),
              std::vector<std::uint64_t>(static_cast<size_t>(S), 0)};
    for (auto e : p.entries()) {
        f.cells[static_cast<size_t>(e.row * S + e.col)] = e.sym;
        f.row[static_cast<size_t>(e.row)] |= std::uint64_t{1} << e.sym;
        f.col[static_cast<size_t>(e.col)] |= std::uint64_t{1} << e.sym;
        ++f.entries;
    }
    return f.go(0);
}

// ----------------------------------------------------------------------------

EnumerationStream::EnumerationStream(int n, bool reduced)
  : _n(n), _reduced(reduced), _cells(static_cast<size_t>(n * n), kEmpty),
    _row_used(static_cast<size_t>(n), 0), _col_used(static_cast<size_t>(n), 0)
{
    if (n < 1 || n > 31) throw PreconditionViolated("EnumerationStream: order must be in 1..31");
}

bool EnumerationStream::fixed(int pos) const
{
    return _reduced && (pos < _n || pos % _n == 0);
}

std::optional<LatinSquare> EnumerationStream::next()
{
    if (_done) return std::nullopt;
    const int total = _n * _n;
    if (!_started) {
        _started = true;
        _pos = 0;
    } else {
        _pos = total - 1;
    }

    while (_pos >= 0 && _pos < total) {
        const int i = _pos / _n, j = _pos % _n;
        auto& cell = _cells[static_cast<size_t>(_pos)];
        const int prev = cell;
        if (prev != kEmpty) {
            _row_used[static_cast<size_t>(i)] &= ~(1u << prev);
            _col_used[static_cast<size_t>(j)] &= ~(1u << prev);
            cell = kEmpty;
        }
        const std::uint32_t used = _row_used[static_cast<size_t>(i)] | _col_used[static_cast<size_t>(j)];
        int chosen = kEmpty;
        if (fixed(_pos)) {
            int want = i == 0 ? j : i;
            if (prev == kEmpty && !(used & (1u << want))) chosen = want;
        } else {
            for (int v = prev + 1; v < _n; ++v)
                if (!(used & (1u << v))) {
                    chosen = v;
                    break;
                }
        }
        if (chosen == kEmpty) {
            --_pos;
            continue;
        }
        cell = chosen;
        _row_used[static_cast<size_t>(i)] |= 1u << chosen;
        _col_used[static_cast<size_t>(j)] |= 1u << chosen;
        ++_pos;
    }

    if (_pos < 0) {
        _done = true;
        return std::nullopt;
    }
    Grid<int> g(_n, _n, kEmpty);
    for (int p = 0; p < total; ++p) g(p / _n, p % _n) = _cells[static_cast<size_t>(p)];
    ++_yielded;
    return LatinSquare(std::move(g));
}

std::uint64_t count_latin_squares(int n, bool reduced)
{
    EnumerationStream stream(n, reduced);
    while (stream.next()) {
    }
    return stream.yielded();
}

// ----------------------------------------------------------------------------

LatinSquare laminate(const FrequencySquare& f)
{
    const int n = f.order();
    Grid<int> out(n, n, kEmpty);
    int offset = 0;
    for (int c = 0; c < f.lambda().size(); ++c) {
        std::vector<Cell> cells;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (f.at(i, j) == c) cells.push_back({i, j});
        auto fill = gap_fill(GapInstance(CellSet(n, n, std::move(cells)), f.lambda()[c]), offset);
        for (const auto& [cell, label] : fill) out(cell.row, cell.col) = label;
        offset += f.lambda()[c];
    }
    return LatinSquare(std::move(out));
}

FrequencySquare collapse(const LatinSquare& l, const Partition& lambda)
{
    std::vector<int> cls;
    for (int c = 0; c < lambda.size(); ++c)
        for (int q = 0; q < lambda[c]; ++q) cls.push_back(c);
    if (static_cast<int>(cls.size()) != l.order())
        throw PartitionMismatch("collapse: lambda must sum to the order");
    Grid<int> out(l.order(), l.order(), kEmpty);
    for (int i = 0; i < l.order(); ++i)
        for (int j = 0; j < l.order(); ++j) out(i, j) = cls[static_cast<size_t>(l.at(i, j))];
    return FrequencySquare(lambda, std::move(out));
}

} // namespace latinext::oracle
