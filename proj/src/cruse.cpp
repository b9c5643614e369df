#include "latinext/cruse.hpp"

#include <algorithm>
#include <bit>
#include <variant>

#include "latinext/engines.hpp"
#include "latinext/gapfill.hpp"
#include "latinext/shuffle.hpp"

namespace latinext {

void require_fits(const PartialLatinRectangle& p, int n)
{
    if (p.rows() > n || p.cols() > n || p.symbols() > n)
        throw PreconditionViolated("rectangle of type (" + std::to_string(p.rows()) + "," +
                                   std::to_string(p.cols()) + "," + std::to_string(p.symbols()) +
                                   ") does not fit order " + std::to_string(n));
}

namespace {

ConditionResult min_line(std::string id, const std::vector<int>& counts, std::int64_t bound)
{
    auto it = std::min_element(counts.begin(), counts.end());
    return {std::move(id), BoundKind::AtLeast, *it, bound, static_cast<int>(it - counts.begin())};
}

} // namespace

ConditionReport check_conditions(const PartialLatinRectangle& p, int n)
{
    require_fits(p, n);
    const std::int64_t r = p.rows(), s = p.cols(), t = p.symbols();
    ConditionReport report;
    report.add(min_line("A1", p.row_counts(), s + t - n));
    report.add(min_line("A2", p.col_counts(), r + t - n));
    report.add(min_line("A3", p.symbol_counts(), r + s - n));
    report.add({"A4", BoundKind::AtMost, p.entry_count(), entry_bound(r, s, t, n)});
    return report;
}

// ============================================================================
// Extension search
// ============================================================================

namespace {

class ExtensionSearch
{
public:
    ExtensionSearch(const Grid<int>& start, int symbols, const ExtensionBounds& bounds,
                    const ExtensionHooks& hooks)
      : _grid(start), _t(symbols), _bounds(bounds), _hooks(hooks),
        _row_mask(static_cast<size_t>(start.rows()), 0), _col_mask(static_cast<size_t>(start.cols()), 0),
        _row_cnt(static_cast<size_t>(start.rows()), 0), _col_cnt(static_cast<size_t>(start.cols()), 0),
        _sym_cnt(static_cast<size_t>(symbols), 0),
        _rem_row(static_cast<size_t>(start.rows()), 0), _rem_col(static_cast<size_t>(start.cols()), 0)
    {
        if (symbols > 64) throw PreconditionViolated("extension search supports at most 64 symbols");
        for (int i = 0; i < _grid.rows(); ++i)
            for (int j = 0; j < _grid.cols(); ++j) {
                int v = _grid(i, j);
                if (v == kEmpty) {
                    _blank.push_back({i, j});
                    ++_rem_row[static_cast<size_t>(i)];
                    ++_rem_col[static_cast<size_t>(j)];
                } else {
                    place(i, j, v);
                }
            }
    }

    std::optional<Grid<int>> run()
    {
        if (dfs(0)) return _grid;
        return std::nullopt;
    }

private:
    void place(int i, int j, int v)
    {
        _grid(i, j) = v;
        _row_mask[static_cast<size_t>(i)] |= std::uint64_t{1} << v;
        _col_mask[static_cast<size_t>(j)] |= std::uint64_t{1} << v;
        ++_row_cnt[static_cast<size_t>(i)];
        ++_col_cnt[static_cast<size_t>(j)];
        ++_sym_cnt[static_cast<size_t>(v)];
        ++_entries;
    }

    void unplace(int i, int j, int v)
    {
        _grid(i, j) = kEmpty;
        _row_mask[static_cast<size_t>(i)] &= ~(std::uint64_t{1} << v);
        _col_mask[static_cast<size_t>(j)] &= ~(std::uint64_t{1} << v);
        --_row_cnt[static_cast<size_t>(i)];
        --_col_cnt[static_cast<size_t>(j)];
        --_sym_cnt[static_cast<size_t>(v)];
        --_entries;
    }

    /// True when no completion of the current state can meet the bounds.
    bool hopeless(size_t idx) const
    {
        if (_entries > _bounds.max_entries) return true;
        const std::int64_t budget = _bounds.max_entries - _entries;

        std::int64_t need_rows = 0;
        for (size_t i = 0; i < _row_cnt.size(); ++i) {
            std::int64_t d = _bounds.row_min - _row_cnt[i];
            if (d <= 0) continue;
            if (d > _rem_row[i] || d > _t - _row_cnt[i]) return true;
            need_rows += d;
        }
        std::int64_t need_cols = 0;
        for (size_t j = 0; j < _col_cnt.size(); ++j) {
            std::int64_t d = _bounds.col_min - _col_cnt[j];
            if (d <= 0) continue;
            if (d > _rem_col[j] || d > _t - _col_cnt[j]) return true;
            need_cols += d;
        }
        if (need_rows > budget || need_cols > budget) return true;

        if (_bounds.sym_min > 0) {
            std::int64_t need_syms = 0;
            const auto left = static_cast<std::int64_t>(_blank.size() - idx);
            for (int v = 0; v < _t; ++v) {
                std::int64_t d = _bounds.sym_min - _sym_cnt[static_cast<size_t>(v)];
                if (d <= 0) continue;
                need_syms += d;
                if (d > left) return true;
                // distinct rows and columns still able to take v
                std::uint64_t rows_ok = 0, cols_ok = 0;
                const std::uint64_t bit = std::uint64_t{1} << v;
                for (size_t c = idx; c < _blank.size(); ++c) {
                    auto [i, j] = _blank[c];
                    if ((_row_mask[static_cast<size_t>(i)] & bit) || (_col_mask[static_cast<size_t>(j)] & bit)) continue;
                    if (i < 64) rows_ok |= std::uint64_t{1} << i;
                    if (j < 64) cols_ok |= std::uint64_t{1} << j;
                }
                if (_grid.rows() <= 64 && _grid.cols() <= 64 &&
                    d > std::min(std::popcount(rows_ok), std::popcount(cols_ok)))
                    return true;
            }
            if (need_syms > budget || need_syms > left) return true;
        }
        return _hooks.prune && _hooks.prune(_grid);
    }

    bool leaf_ok() const
    {
        if (_entries > _bounds.max_entries) return false;
        for (int c : _row_cnt)
            if (c < _bounds.row_min) return false;
        for (int c : _col_cnt)
            if (c < _bounds.col_min) return false;
        for (int c : _sym_cnt)
            if (c < _bounds.sym_min) return false;
        return !_hooks.accept || _hooks.accept(_grid);
    }

    bool dfs(size_t idx)
    {
        if (hopeless(idx)) return false;
        if (idx == _blank.size()) return leaf_ok();

        auto [i, j] = _blank[idx];
        --_rem_row[static_cast<size_t>(i)];
        --_rem_col[static_cast<size_t>(j)];
        bool found = dfs(idx + 1);
        const std::uint64_t used = _row_mask[static_cast<size_t>(i)] | _col_mask[static_cast<size_t>(j)];
        for (int v = 0; v < _t && !found; ++v) {
            if (used & (std::uint64_t{1} << v)) continue;
            place(i, j, v);
            found = dfs(idx + 1);
            if (!found) unplace(i, j, v);
        }
        ++_rem_row[static_cast<size_t>(i)];
        ++_rem_col[static_cast<size_t>(j)];
        return found;
    }

    Grid<int> _grid;
    int _t;
    ExtensionBounds _bounds;
    const ExtensionHooks& _hooks;
    std::vector<Cell> _blank;
    std::vector<std::uint64_t> _row_mask, _col_mask;
    std::vector<int> _row_cnt, _col_cnt, _sym_cnt;
    std::vector<int> _rem_row, _rem_col;
    std::int64_t _entries = 0;
};

} // namespace

std::optional<Grid<int>> search_latin_extension(const Grid<int>& start, int symbols,
                                                const ExtensionBounds& bounds,
                                                const ExtensionHooks& hooks)
{
    return ExtensionSearch(start, symbols, bounds, hooks).run();
}

// ============================================================================
// Completion pipeline
// ============================================================================

std::optional<PartialLatinRectangle> find_witness(const PartialLatinRectangle& r, int n)
{
    require_fits(r, n);
    const std::int64_t rr = r.rows(), s = r.cols(), t = r.symbols();
    ExtensionBounds bounds{s + t - n, rr + t - n, rr + s - n, entry_bound(rr, s, t, n)};
    auto grid = search_latin_extension(r.cells(), r.symbols(), bounds);
    if (!grid) return std::nullopt;
    return PartialLatinRectangle(r.symbols(), std::move(*grid));
}

Grid<int> extend_to_latin_rows(const PartialLatinRectangle& witness, int n)
{
    if (!check_conditions(witness, n).all_satisfied())
        throw PreconditionViolated("extend_to_latin_rows: input does not satisfy A1-A4");
    const int r = witness.rows(), s = witness.cols(), t = witness.symbols();

    Grid<int> band(r, n, kEmpty);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) band(i, j) = witness.at(i, j);

    // Region right of the witness: each row's absent original symbols.
    if (n > s) {
        Grid<int> region(r, n - s, kEmpty);
        for (int i = 0; i < r; ++i) {
            std::vector<char> present(static_cast<size_t>(t), 0);
            for (int j = 0; j < s; ++j)
                if (witness.filled(i, j)) present[static_cast<size_t>(witness.at(i, j))] = 1;
            int col = 0;
            for (int v = 0; v < t; ++v)
                if (!present[static_cast<size_t>(v)]) region(i, col++) = v;
        }
        auto shuffled = shuffle(ShuffleInstance(std::move(region), std::max(0, r + t - n)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n - s; ++j) band(i, s + j) = shuffled(i, j);
    }

    // Remaining gaps take the new symbols t..n-1.
    auto fill = gap_fill(GapInstance(empty_cells(band), n - t), t);
    for (const auto& [cell, sym] : fill) band(cell.row, cell.col) = sym;

    if (!is_latin_rectangle(band, n))
        throw std::logic_error("extend_to_latin_rows produced an invalid latin rectangle");
    return band;
}

LatinSquare complete_rectangle(const Grid<int>& rect)
{
    const int n = rect.cols();
    if (!is_latin_rectangle(rect, n))
        throw PreconditionViolated("complete_rectangle: input is not a latin rectangle");

    Grid<int> square(n, n, kEmpty);
    std::vector<std::vector<char>> in_col(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    for (int i = 0; i < rect.rows(); ++i)
        for (int j = 0; j < n; ++j) {
            square(i, j) = rect(i, j);
            in_col[static_cast<size_t>(j)][static_cast<size_t>(rect(i, j))] = 1;
        }

    for (int i = rect.rows(); i < n; ++i) {
        SetFamily family(n);
        for (int j = 0; j < n; ++j) {
            std::vector<int> missing;
            for (int v = 0; v < n; ++v)
                if (!in_col[static_cast<size_t>(j)][static_cast<size_t>(v)]) missing.push_back(v);
            family.add_set(std::move(missing));
        }
        auto result = sdr(family);
        if (!std::holds_alternative<std::vector<int>>(result))
            throw std::logic_error("complete_rectangle: column deficits have no SDR");
        const auto& reps = std::get<std::vector<int>>(result);
        for (int j = 0; j < n; ++j) {
            square(i, j) = reps[static_cast<size_t>(j)];
            in_col[static_cast<size_t>(j)][static_cast<size_t>(reps[static_cast<size_t>(j)])] = 1;
        }
    }
    return LatinSquare(std::move(square));
}

std::optional<LatinSquare> complete(const PartialLatinRectangle& r, int n)
{
    auto witness = find_witness(r, n);
    if (!witness) return std::nullopt;
    return complete_rectangle(extend_to_latin_rows(*witness, n));
}

std::vector<int> embeddable_orders(const PartialLatinRectangle& p, int n_max)
{
    std::vector<int> out;
    for (int n = std::max({p.rows(), p.cols(), p.symbols()}); n <= n_max; ++n)
        if (complete(p, n)) out.push_back(n);
    return out;
}

std::optional<PartialLatinRectangle> corollary_check(const PartialLatinRectangle& p, int k)
{
    if (k < 0) throw PreconditionViolated("corollary_check: k must be nonnegative");
    if (p.rows() != p.cols() || p.cols() != p.symbols())
        throw PreconditionViolated("corollary_check: expected a partial latin square of order n");
    return find_witness(p, p.rows() + k);
}

} // namespace latinext
