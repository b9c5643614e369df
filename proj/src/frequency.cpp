#include "latinext/frequency.hpp"

#include <algorithm>
#include <variant>

#include "latinext/engines.hpp"
#include "latinext/gapfill.hpp"
#include "latinext/io.hpp"
#include "latinext/shuffle.hpp"

namespace latinext {

Partition::Partition(std::vector<int> parts) : _parts(std::move(parts))
{
    if (_parts.empty()) throw PartitionMismatch("a partition needs at least one part");
    for (int p : _parts) {
        if (p < 0) throw PartitionMismatch("partition parts must be nonnegative");
        _total += p;
    }
}

// ============================================================================
// Rectangles and squares
// ============================================================================

namespace {

void check_class_lines(const Grid<int>& cells, const std::vector<int>& cap, int k, bool exact)
{
    const auto kk = static_cast<size_t>(k);
    for (int i = 0; i < cells.rows(); ++i) {
        std::vector<int> cnt(kk, 0);
        for (int j = 0; j < cells.cols(); ++j) {
            int v = cells(i, j);
            if (v == kEmpty) continue;
            if (v < 0 || v >= k) throw SymbolOutOfRange(v + 1);
            if (++cnt[static_cast<size_t>(v)] > cap[static_cast<size_t>(v)])
                throw ValidationError("row " + std::to_string(i + 1) + " holds class " +
                                      std::to_string(v + 1) + " too often");
        }
        if (exact && cnt != cap)
            throw ValidationError("row " + std::to_string(i + 1) + " has the wrong class counts");
    }
    for (int j = 0; j < cells.cols(); ++j) {
        std::vector<int> cnt(kk, 0);
        for (int i = 0; i < cells.rows(); ++i) {
            int v = cells(i, j);
            if (v != kEmpty && ++cnt[static_cast<size_t>(v)] > cap[static_cast<size_t>(v)])
                throw ValidationError("column " + std::to_string(j + 1) + " holds class " +
                                      std::to_string(v + 1) + " too often");
        }
        if (exact && cnt != cap)
            throw ValidationError("column " + std::to_string(j + 1) + " has the wrong class counts");
    }
}

} // namespace

FrequencyRectangle::FrequencyRectangle(Partition mu, Grid<int> cells)
  : _mu(std::move(mu)), _cells(std::move(cells))
{
    check_class_lines(_cells, _mu.parts(), _mu.size(), false);
}

int FrequencyRectangle::entry_count() const
{
    return static_cast<int>(std::count_if(_cells.data().begin(), _cells.data().end(),
                                          [](int v) { return v != kEmpty; }));
}

std::vector<int> FrequencyRectangle::class_counts() const
{
    std::vector<int> out(static_cast<size_t>(classes()), 0);
    for (int v : _cells.data())
        if (v != kEmpty) ++out[static_cast<size_t>(v)];
    return out;
}

bool FrequencyRectangle::is_extended_by(const Grid<int>& other) const
{
    if (other.rows() < rows() || other.cols() < cols()) return false;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (at(i, j) != kEmpty && other(i, j) != at(i, j)) return false;
    return true;
}

FrequencySquare::FrequencySquare(Partition lambda, Grid<int> cells)
  : _lambda(std::move(lambda)), _cells(std::move(cells))
{
    if (_cells.rows() != _cells.cols() || _cells.rows() != _lambda.total())
        throw ShapeError("an F-square of type lambda must be sum(lambda) x sum(lambda)");
    for (int v : _cells.data())
        if (v == kEmpty) throw ValidationError("an F-square has no empty cells");
    check_class_lines(_cells, _lambda.parts(), _lambda.size(), true);
}

// ============================================================================
// Conditions
// ============================================================================

namespace {

/// `r` with mu padded by zero parts up to the length of lambda.
FrequencyRectangle aligned(const FrequencyRectangle& r, const Partition& lambda)
{
    if (r.classes() >= lambda.size()) return r;
    auto mu = r.mu().parts();
    mu.resize(static_cast<size_t>(lambda.size()), 0);
    return FrequencyRectangle(Partition(std::move(mu)), r.cells());
}

} // namespace

void require_compatible(const FrequencyRectangle& r, const Partition& lambda, int n)
{
    if (lambda.total() != n)
        throw PartitionMismatch("lambda sums to " + std::to_string(lambda.total()) + ", not n = " +
                                std::to_string(n));
    if (r.classes() > lambda.size())
        throw PartitionMismatch("mu has more classes than lambda");
    for (int i = 0; i < r.classes(); ++i)
        if (r.mu()[i] > lambda[i])
            throw PartitionMismatch("mu_" + std::to_string(i + 1) + " exceeds lambda_" +
                                    std::to_string(i + 1));
    if (r.rows() > n || r.cols() > n)
        throw PreconditionViolated("rectangle does not fit order " + std::to_string(n));
}

ConditionReport check_freq_conditions(const FrequencyRectangle& rect, const Partition& lambda, int n)
{
    require_compatible(rect, lambda, n);
    const auto r0 = aligned(rect, lambda);
    const std::int64_t r = r0.rows(), s = r0.cols(), t = r0.t();
    ConditionReport report;

    auto worst = [](std::string id, const std::vector<int>& counts, std::int64_t bound) {
        auto it = std::min_element(counts.begin(), counts.end());
        return ConditionResult{std::move(id), BoundKind::AtLeast, *it, bound,
                               static_cast<int>(it - counts.begin())};
    };
    std::vector<int> rows(static_cast<size_t>(r), 0), cols(static_cast<size_t>(s), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
            if (r0.at(i, j) != kEmpty) {
                ++rows[static_cast<size_t>(i)];
                ++cols[static_cast<size_t>(j)];
            }
    report.add(worst("B1", rows, s + t - n));
    report.add(worst("B2", cols, r + t - n));

    // B3 has one bound per class; report the class with the smallest margin.
    auto counts = r0.class_counts();
    ConditionResult b3{"B3", BoundKind::AtLeast, 0, 0, -1};
    for (int c = 0; c < r0.classes(); ++c) {
        ConditionResult cur{"B3", BoundKind::AtLeast, counts[static_cast<size_t>(c)],
                            r0.mu()[c] * (r + s - n), c};
        if (b3.index < 0 || cur.margin() < b3.margin()) b3 = cur;
    }
    report.add(b3);
    report.add({"B4", BoundKind::AtMost, r0.entry_count(), entry_bound(r, s, t, n)});
    return report;
}

// ============================================================================
// Witness search
// ============================================================================

namespace {

class FreqSearch
{
public:
    FreqSearch(const FrequencyRectangle& rect, int n)
      : _grid(rect.cells()), _mu(rect.mu().parts()), _k(rect.classes()),
        _row_cls(static_cast<size_t>(rect.rows() * rect.classes()), 0),
        _col_cls(static_cast<size_t>(rect.cols() * rect.classes()), 0),
        _row_cnt(static_cast<size_t>(rect.rows()), 0), _col_cnt(static_cast<size_t>(rect.cols()), 0),
        _cls_cnt(static_cast<size_t>(rect.classes()), 0),
        _rem_row(static_cast<size_t>(rect.rows()), 0), _rem_col(static_cast<size_t>(rect.cols()), 0)
    {
        const std::int64_t r = rect.rows(), s = rect.cols(), t = rect.t();
        _row_min = s + t - n;
        _col_min = r + t - n;
        _cls_unit = r + s - n;
        _max_entries = entry_bound(r, s, t, n);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < s; ++j) {
                if (_grid(i, j) == kEmpty) {
                    _blank.push_back({i, j});
                    ++_rem_row[static_cast<size_t>(i)];
                    ++_rem_col[static_cast<size_t>(j)];
                } else {
                    adjust(i, j, _grid(i, j), 1);
                }
            }
    }

    std::optional<Grid<int>> run()
    {
        if (dfs(0)) return _grid;
        return std::nullopt;
    }

private:
    int& rc(int i, int c) { return _row_cls[static_cast<size_t>(i * _k + c)]; }
    int& cc(int j, int c) { return _col_cls[static_cast<size_t>(j * _k + c)]; }
    int rc(int i, int c) const { return _row_cls[static_cast<size_t>(i * _k + c)]; }
    int cc(int j, int c) const { return _col_cls[static_cast<size_t>(j * _k + c)]; }
    int mu(int c) const { return _mu[static_cast<size_t>(c)]; }

    void adjust(int i, int j, int c, int d)
    {
        _grid(i, j) = d > 0 ? c : kEmpty;
        rc(i, c) += d;
        cc(j, c) += d;
        _row_cnt[static_cast<size_t>(i)] += d;
        _col_cnt[static_cast<size_t>(j)] += d;
        _cls_cnt[static_cast<size_t>(c)] += d;
        _entries += d;
    }

    bool hopeless(size_t idx) const
    {
        if (_entries > _max_entries) return true;
        const std::int64_t budget = _max_entries - _entries;

        std::int64_t need = 0;
        for (size_t i = 0; i < _row_cnt.size(); ++i) {
            std::int64_t d = _row_min - _row_cnt[i];
            if (d <= 0) continue;
            if (d > _rem_row[i]) return true;
            need += d;
        }
        if (need > budget) return true;
        need = 0;
        for (size_t j = 0; j < _col_cnt.size(); ++j) {
            std::int64_t d = _col_min - _col_cnt[j];
            if (d <= 0) continue;
            if (d > _rem_col[j]) return true;
            need += d;
        }
        if (need > budget) return true;

        if (_cls_unit > 0) {
            need = 0;
            for (int c = 0; c < _k; ++c) {
                std::int64_t d = mu(c) * _cls_unit - _cls_cnt[static_cast<size_t>(c)];
                if (d <= 0) continue;
                need += d;
                // room per row for class c among the remaining cells
                std::vector<int> room(_row_cnt.size(), 0);
                for (size_t q = idx; q < _blank.size(); ++q) {
                    auto [i, j] = _blank[q];
                    if (rc(i, c) < mu(c) && cc(j, c) < mu(c)) ++room[static_cast<size_t>(i)];
                }
                std::int64_t cap = 0;
                for (size_t i = 0; i < room.size(); ++i)
                    cap += std::min(room[i], mu(c) - rc(static_cast<int>(i), c));
                if (d > cap) return true;
            }
            if (need > budget || need > static_cast<std::int64_t>(_blank.size() - idx)) return true;
        }
        return false;
    }

    bool leaf_ok() const
    {
        if (_entries > _max_entries) return false;
        for (int v : _row_cnt)
            if (v < _row_min) return false;
        for (int v : _col_cnt)
            if (v < _col_min) return false;
        for (int c = 0; c < _k; ++c)
            if (_cls_cnt[static_cast<size_t>(c)] < mu(c) * _cls_unit) return false;
        return true;
    }

    bool dfs(size_t idx)
    {
        if (hopeless(idx)) return false;
        if (idx == _blank.size()) return leaf_ok();
        auto [i, j] = _blank[idx];
        --_rem_row[static_cast<size_t>(i)];
        --_rem_col[static_cast<size_t>(j)];
        bool found = dfs(idx + 1);
        for (int c = 0; c < _k && !found; ++c) {
            if (rc(i, c) >= mu(c) || cc(j, c) >= mu(c)) continue;
            adjust(i, j, c, 1);
            found = dfs(idx + 1);
            if (!found) adjust(i, j, c, -1);
        }
        ++_rem_row[static_cast<size_t>(i)];
        ++_rem_col[static_cast<size_t>(j)];
        return found;
    }

    Grid<int> _grid;
    std::vector<int> _mu;
    int _k;
    std::vector<int> _row_cls, _col_cls;
    std::vector<int> _row_cnt, _col_cnt, _cls_cnt;
    std::vector<int> _rem_row, _rem_col;
    std::vector<Cell> _blank;
    std::int64_t _row_min = 0, _col_min = 0, _cls_unit = 0, _max_entries = 0;
    std::int64_t _entries = 0;
};

} // namespace

std::optional<FrequencyRectangle> find_freq_witness(const FrequencyRectangle& rect,
                                                    const Partition& lambda, int n)
{
    require_compatible(rect, lambda, n);
    auto r0 = aligned(rect, lambda);
    auto grid = FreqSearch(r0, n).run();
    if (!grid) return std::nullopt;
    return FrequencyRectangle(r0.mu(), std::move(*grid));
}

// ============================================================================
// Split labels
// ============================================================================

int encode_label(const Partition& mu, SplitLabel label)
{
    if (label.cls < 0 || label.cls >= mu.size() || label.copy < 0 || label.copy >= mu[label.cls])
        throw PreconditionViolated("split label out of range");
    int code = label.copy;
    for (int c = 0; c < label.cls; ++c) code += mu[c];
    return code;
}

SplitLabel decode_label(const Partition& mu, int code)
{
    if (code < 0) throw PreconditionViolated("split label out of range");
    for (int c = 0; c < mu.size(); ++c) {
        if (code < mu[c]) return {c, code};
        code -= mu[c];
    }
    throw PreconditionViolated("split label out of range");
}

Grid<int> split_classes(const Grid<int>& classes, const Partition& mu)
{
    Grid<int> out(classes.rows(), classes.cols(), kEmpty);
    std::vector<int> seen(static_cast<size_t>(mu.size()), 0);
    for (int i = 0; i < classes.rows(); ++i)
        for (int j = 0; j < classes.cols(); ++j) {
            int c = classes(i, j);
            if (c == kEmpty) continue;
            if (c < 0 || c >= mu.size() || mu[c] == 0)
                throw PreconditionViolated("class " + std::to_string(c + 1) + " has no copies");
            int copy = seen[static_cast<size_t>(c)]++ % mu[c];
            out(i, j) = encode_label(mu, {c, copy});
        }
    return out;
}

Grid<int> merge_labels(const Grid<int>& labels, const Partition& mu)
{
    Grid<int> out(labels.rows(), labels.cols(), kEmpty);
    for (int i = 0; i < labels.rows(); ++i)
        for (int j = 0; j < labels.cols(); ++j)
            if (labels(i, j) != kEmpty) out(i, j) = decode_label(mu, labels(i, j)).cls;
    return out;
}

// ============================================================================
// Completion
// ============================================================================

FrequencySquare complete_freq_band(const Grid<int>& band, const Partition& lambda)
{
    const int n = lambda.total(), k = lambda.size();
    if (band.cols() != n || band.rows() > n)
        throw PreconditionViolated("complete_freq_band: band must be r x sum(lambda)");

    Grid<int> square(n, n, kEmpty);
    Grid<int> col_cls(n, k, 0);
    for (int i = 0; i < band.rows(); ++i) {
        std::vector<int> row(static_cast<size_t>(k), 0);
        for (int j = 0; j < n; ++j) {
            int c = band(i, j);
            if (c < 0 || c >= k) throw PreconditionViolated("complete_freq_band: band rows must be full");
            ++row[static_cast<size_t>(c)];
            if (++col_cls(j, c) > lambda[c])
                throw PreconditionViolated("complete_freq_band: a column holds a class too often");
            square(i, j) = c;
        }
        if (row != lambda.parts())
            throw PreconditionViolated("complete_freq_band: a band row is not of type lambda");
    }

    // One row at a time: columns send one unit to a class with remaining
    // deficit, class c absorbs exactly lambda[c] units.
    const int source = 0, sink = 1, col0 = 2, cls0 = 2 + n;
    for (int i = band.rows(); i < n; ++i) {
        BoundedFlowNetwork net(2 + n + k, source, sink);
        std::vector<std::pair<int, Cell>> choice;  // arc index, (column, class)
        for (int j = 0; j < n; ++j) {
            net.add_arc(source, col0 + j, 1, 1);
            for (int c = 0; c < k; ++c)
                if (col_cls(j, c) < lambda[c])
                    choice.push_back({net.add_arc(col0 + j, cls0 + c, 0, 1), {j, c}});
        }
        for (int c = 0; c < k; ++c) net.add_arc(cls0 + c, sink, lambda[c], lambda[c]);
        auto result = feasible_flow(net);
        if (!std::holds_alternative<Flow>(result))
            throw std::logic_error("complete_freq_band: no admissible next row");
        const auto& flow = std::get<Flow>(result);
        for (auto [arc, jc] : choice)
            if (flow.arc_flow[static_cast<size_t>(arc)]) {
                square(i, jc.row) = jc.col;
                ++col_cls(jc.row, jc.col);
            }
    }
    return FrequencySquare(lambda, std::move(square));
}

std::optional<FrequencySquare> complete_frequency(const FrequencyRectangle& rect,
                                                  const Partition& lambda, int n)
{
    auto witness = find_freq_witness(rect, lambda, n);
    if (!witness) return std::nullopt;

    const auto& mu = witness->mu();
    const int r = witness->rows(), s = witness->cols(), t = witness->t(), k = mu.size();
    auto labels = split_classes(witness->cells(), mu);

    Grid<int> band(r, n, kEmpty);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) band(i, j) = witness->at(i, j);

    if (n > s) {
        Grid<int> region(r, n - s, kEmpty);
        for (int i = 0; i < r; ++i) {
            std::vector<char> present(static_cast<size_t>(t), 0);
            for (int j = 0; j < s; ++j)
                if (labels(i, j) != kEmpty) present[static_cast<size_t>(labels(i, j))] = 1;
            int col = 0;
            for (int v = 0; v < t; ++v)
                if (!present[static_cast<size_t>(v)]) region(i, col++) = v;
        }
        auto shuffled = merge_labels(shuffle(ShuffleInstance(std::move(region), std::max(0, r + t - n))), mu);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n - s; ++j) band(i, s + j) = shuffled(i, j);
    }

    // Gap labels 0..n-t-1 go to classes in blocks of lambda[c] - mu[c].
    std::vector<int> gap_class;
    for (int c = 0; c < k; ++c)
        for (int q = mu[c]; q < lambda[c]; ++q) gap_class.push_back(c);
    auto fill = gap_fill(GapInstance(empty_cells(band), n - t), 0);
    for (const auto& [cell, z] : fill) band(cell.row, cell.col) = gap_class[static_cast<size_t>(z)];

    return complete_freq_band(band, lambda);
}

std::optional<FrequencySquare> complete_frequency_relaxed(const FrequencyRectangle& rect,
                                                          const Partition& lambda, int n)
{
    if (auto f = complete_frequency(rect, lambda, n)) return f;
    require_compatible(rect, lambda, n);
    if (aligned(rect, lambda).mu() == lambda) return std::nullopt;
    return complete_frequency(FrequencyRectangle(lambda, rect.cells()), lambda, n);
}

// ============================================================================
// Text and JSON
// ============================================================================

FrequencyInput parse_frequency(std::string_view text)
{
    auto lines = tokenize(text);
    if (lines.size() < 3) throw SyntaxError(0, "", "expected header, mu and lambda lines");
    const auto& header = lines[0];
    if (header.tokens.size() != 3)
        throw SyntaxError(header.line, "", "header must contain exactly three integers 'r s k'");
    const int r = parse_int_token(header.tokens[0], header.line);
    const int s = parse_int_token(header.tokens[1], header.line);
    const int k = parse_int_token(header.tokens[2], header.line);
    if (r < 1 || s < 1 || k < 1) throw SyntaxError(header.line, "", "r, s and k must be positive");

    auto read_parts = [&](const TokenLine& tl, const char* what) {
        if (static_cast<int>(tl.tokens.size()) != k)
            throw SyntaxError(tl.line, "", std::string(what) + " must have " + std::to_string(k) + " parts");
        std::vector<int> parts;
        for (const auto& tok : tl.tokens) parts.push_back(parse_int_token(tok, tl.line));
        return Partition(std::move(parts));
    };
    Partition mu = read_parts(lines[1], "mu");
    Partition lambda = read_parts(lines[2], "lambda");

    if (static_cast<int>(lines.size()) - 3 != r) {
        if (static_cast<int>(lines.size()) - 3 < r)
            throw SyntaxError(lines.back().line, "", "expected " + std::to_string(r) + " grid rows");
        const auto& extra = lines[static_cast<size_t>(r) + 3];
        throw SyntaxError(extra.line, extra.tokens.front(), "unexpected content after the grid");
    }
    Grid<int> cells(r, s, kEmpty);
    for (int i = 0; i < r; ++i) {
        const auto& tl = lines[static_cast<size_t>(i) + 3];
        if (static_cast<int>(tl.tokens.size()) != s)
            throw SyntaxError(tl.line, "", "expected " + std::to_string(s) + " cells, found " +
                                               std::to_string(tl.tokens.size()));
        for (int j = 0; j < s; ++j) {
            const auto& tok = tl.tokens[static_cast<size_t>(j)];
            if (tok == ".") continue;
            int v = parse_int_token(tok, tl.line);
            if (v < 1 || v > k) throw SyntaxError(tl.line, tok, "class outside 1.." + std::to_string(k));
            cells(i, j) = v - 1;
        }
    }
    return {FrequencyRectangle(std::move(mu), std::move(cells)), std::move(lambda)};
}

namespace {

std::string join(const std::vector<int>& v)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out + '\n';
}

nlohmann::json grid_json(const Grid<int>& g)
{
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < g.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < g.cols(); ++j)
            row.push_back(g(i, j) == kEmpty ? nlohmann::json(nullptr) : nlohmann::json(g(i, j) + 1));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

std::string serialize(const FrequencyRectangle& r, const Partition& lambda)
{
    return std::to_string(r.rows()) + ' ' + std::to_string(r.cols()) + ' ' +
           std::to_string(r.classes()) + '\n' + join(r.mu().parts()) + join(lambda.parts()) +
           format_grid(r.cells());
}

std::string serialize(const FrequencySquare& f)
{
    return std::to_string(f.order()) + ' ' + std::to_string(f.order()) + ' ' +
           std::to_string(f.lambda().size()) + '\n' + join(f.lambda().parts()) +
           join(f.lambda().parts()) + format_grid(f.cells());
}

nlohmann::json to_json(const FrequencyRectangle& r)
{
    return {{"rows", r.rows()}, {"cols", r.cols()}, {"mu", r.mu().parts()}, {"grid", grid_json(r.cells())}};
}

nlohmann::json to_json(const FrequencySquare& f)
{
    return {{"order", f.order()}, {"lambda", f.lambda().parts()}, {"grid", grid_json(f.cells())}};
}

} // namespace latinext
