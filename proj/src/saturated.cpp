#include "latinext/saturated.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <variant>

#include "latinext/cruse.hpp"
#include "latinext/engines.hpp"
#include "latinext/gapfill.hpp"
#include "latinext/shuffle.hpp"

namespace latinext {

namespace {

std::string type_string(int a, int b, int c)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

/// Total f,g-representatives required by C3d.
std::int64_t required_total(int R, int s, int t, const SaturationTarget& target)
{
    return std::int64_t{target.S - s} * (R + t - target.T);
}

} // namespace

void require_target(const PartialLatinRectangle& p, const SaturationTarget& target)
{
    if (p.rows() > target.R || p.cols() > target.S || p.symbols() > target.T)
        throw PreconditionViolated("type " + type_string(p.rows(), p.cols(), p.symbols()) +
                                   " does not fit target " + type_string(target.R, target.S, target.T));
    if (target.R > target.T || target.S > target.T)
        throw PreconditionViolated("target " + type_string(target.R, target.S, target.T) +
                                   " needs R, S <= T");
}

std::vector<std::vector<int>> row_deficit_sets(const PartialLatinRectangle& p)
{
    std::vector<std::vector<int>> out;
    for (int i = 0; i < p.rows(); ++i) {
        std::vector<char> present(static_cast<size_t>(p.symbols()), 0);
        for (int j = 0; j < p.cols(); ++j)
            if (p.filled(i, j)) present[static_cast<size_t>(p.at(i, j))] = 1;
        auto& a = out.emplace_back();
        for (int v = 0; v < p.symbols(); ++v)
            if (!present[static_cast<size_t>(v)]) a.push_back(v);
    }
    return out;
}

FGAssignment FGAssignment::from_chosen(int symbols, std::vector<std::vector<int>> chosen)
{
    FGAssignment fg;
    fg.f.assign(static_cast<size_t>(symbols), 0);
    for (auto& set : chosen) {
        std::sort(set.begin(), set.end());
        fg.g.push_back(static_cast<int>(set.size()));
        for (int v : set) ++fg.f.at(static_cast<size_t>(v));
    }
    fg.chosen = std::move(chosen);
    return fg;
}

ConditionReport check_sat_conditions(const PartialLatinRectangle& p, const SaturationTarget& target,
                                     const FGAssignment& fg)
{
    if (p.rows() != target.R)
        throw ShapeError("witness must have R = " + std::to_string(target.R) + " rows");
    if (static_cast<int>(fg.g.size()) != p.rows() || static_cast<int>(fg.f.size()) != p.symbols())
        throw ShapeError("f,g assignment does not match the witness");

    const int R = target.R, S = target.S, T = target.T, s = p.cols(), t = p.symbols();
    auto deficits = row_deficit_sets(p);
    ConditionReport report;

    auto worst_min = [](std::string id, const std::vector<std::int64_t>& attained,
                        const std::vector<std::int64_t>& bound) {
        ConditionResult out{std::move(id), BoundKind::AtLeast, 0, 0, -1};
        for (size_t i = 0; i < attained.size(); ++i) {
            ConditionResult cur{out.id, BoundKind::AtLeast, attained[i], bound[i], static_cast<int>(i)};
            if (out.index < 0 || cur.margin() < out.margin()) out = cur;
        }
        return out;
    };
    auto worst_max = [](std::string id, const std::vector<int>& attained, std::int64_t bound) {
        if (attained.empty()) return ConditionResult{std::move(id), BoundKind::AtMost, 0, bound, -1};
        auto it = std::max_element(attained.begin(), attained.end());
        return ConditionResult{std::move(id), BoundKind::AtMost, *it, bound,
                               static_cast<int>(it - attained.begin())};
    };

    auto rows = p.row_counts();
    auto cols = p.col_counts();
    report.add(worst_min("C1", {rows.begin(), rows.end()},
                         std::vector<std::int64_t>(rows.size(), s + t - T)));
    report.add(worst_min("C2", {cols.begin(), cols.end()},
                         std::vector<std::int64_t>(cols.size(), R + t - T)));
    report.add(worst_max("C3a", fg.f, S - s));
    report.add(worst_max("C3b", fg.g, S - s));

    std::vector<std::int64_t> g(fg.g.begin(), fg.g.end()), lower;
    for (const auto& a : deficits) lower.push_back(S - T + static_cast<std::int64_t>(a.size()));
    report.add(worst_min("C3c", g, lower));

    std::int64_t total = 0;
    for (int v : fg.g) total += v;
    report.add({"C3d", BoundKind::AtLeast, total, required_total(R, s, t, target)});
    return report;
}

std::optional<FGAssignment> find_fg(const PartialLatinRectangle& p, const SaturationTarget& target)
{
    const int R = p.rows(), s = p.cols(), t = p.symbols(), S = target.S, T = target.T;
    const int width = S - s;
    auto deficits = row_deficit_sets(p);

    const int source = 0, sink = 1, agg = 2, row0 = 3, sym0 = 3 + R;
    BoundedFlowNetwork net(3 + R + t, source, sink);
    net.add_arc(source, agg, std::max<std::int64_t>(0, required_total(R, s, t, target)), kUnbounded);

    std::vector<std::pair<int, std::pair<int, int>>> choice;  // arc, (row, symbol)
    for (int j = 0; j < R; ++j) {
        const int size = static_cast<int>(deficits[static_cast<size_t>(j)].size());
        const int lo = std::max(0, S - T + size), hi = std::min(width, size);
        if (lo > hi) return std::nullopt;
        net.add_arc(agg, row0 + j, lo, hi);
        for (int v : deficits[static_cast<size_t>(j)])
            choice.push_back({net.add_arc(row0 + j, sym0 + v, 0, 1), {j, v}});
    }
    for (int v = 0; v < t; ++v) net.add_arc(sym0 + v, sink, 0, width);

    auto result = feasible_flow(net);
    if (!std::holds_alternative<Flow>(result)) return std::nullopt;
    const auto& flow = std::get<Flow>(result);
    std::vector<std::vector<int>> chosen(static_cast<size_t>(R));
    for (const auto& [arc, jv] : choice)
        if (flow.arc_flow[static_cast<size_t>(arc)]) chosen[static_cast<size_t>(jv.first)].push_back(jv.second);
    return FGAssignment::from_chosen(t, std::move(chosen));
}

std::optional<PartialLatinRectangle> find_sat_witness(const PartialLatinRectangle& p,
                                                      const SaturationTarget& target)
{
    require_target(p, target);
    const int R = target.R, S = target.S, T = target.T, s = p.cols(), t = p.symbols();

    Grid<int> start(R, s, kEmpty);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < s; ++j) start(i, j) = p.at(i, j);

    ExtensionBounds bounds;
    bounds.row_min = s + t - T;
    bounds.col_min = R + t - T;

    const std::int64_t need = required_total(R, s, t, target);
    const int width = S - s;
    ExtensionHooks hooks;
    hooks.accept = [&](const Grid<int>& g) {
        return find_fg(PartialLatinRectangle(t, g), target).has_value();
    };
    if (need > 0) {
        // Entries only shrink the deficit sets, so these caps only fall.
        hooks.prune = [=](const Grid<int>& g) {
            std::vector<int> missing_in(static_cast<size_t>(t), R);
            std::int64_t by_row = 0;
            for (int i = 0; i < R; ++i) {
                int filled = 0;
                for (int j = 0; j < s; ++j)
                    if (g(i, j) != kEmpty) {
                        ++filled;
                        --missing_in[static_cast<size_t>(g(i, j))];
                    }
                by_row += std::min(width, t - filled);
            }
            if (by_row < need) return true;
            std::int64_t by_sym = 0;
            for (int m : missing_in) by_sym += std::min(width, m);
            return by_sym < need;
        };
    }

    auto grid = search_latin_extension(start, t, bounds, hooks);
    if (!grid) return std::nullopt;
    return PartialLatinRectangle(t, std::move(*grid));
}

std::optional<PartialLatinRectangle> saturate(const PartialLatinRectangle& p,
                                              const SaturationTarget& target)
{
    auto witness = find_sat_witness(p, target);
    if (!witness) return std::nullopt;
    auto fg = find_fg(*witness, target);
    if (!fg) throw std::logic_error("saturate: accepted witness lost its f,g-representatives");

    const int R = target.R, S = target.S, T = target.T, s = p.cols(), t = p.symbols();
    Grid<int> band(R, S, kEmpty);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < s; ++j) band(i, j) = witness->at(i, j);

    if (S > s) {
        Grid<int> region(R, S - s, kEmpty);
        for (int i = 0; i < R; ++i) {
            const auto& set = fg->chosen[static_cast<size_t>(i)];
            for (size_t q = 0; q < set.size(); ++q) region(i, static_cast<int>(q)) = set[q];
        }
        auto shuffled = shuffle(ShuffleInstance(std::move(region), std::max(0, R + t - T)));
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < S - s; ++j) band(i, s + j) = shuffled(i, j);
    }

    auto fill = gap_fill(GapInstance(empty_cells(band), T - t), t);
    for (const auto& [cell, sym] : fill) band(cell.row, cell.col) = sym;

    PartialLatinRectangle out(T, std::move(band));
    if (!is_saturated(out) || !p.is_extended_by(out))
        throw std::logic_error("saturate produced an unsaturated rectangle");
    return out;
}

std::optional<PartialLatinRectangle> saturate_any(const PartialLatinRectangle& p,
                                                  const SaturationTarget& target)
{
    if (p.rows() > target.R || p.cols() > target.S || p.symbols() > target.T)
        throw PreconditionViolated("type " + type_string(p.rows(), p.cols(), p.symbols()) +
                                   " does not fit target " + type_string(target.R, target.S, target.T));
    RolePermutation sigma = RolePermutation::identity();
    if (target.R > target.T && target.R >= target.S)
        sigma = RolePermutation::swap_rows_syms();
    else if (target.S > target.T && target.S > target.R)
        sigma = RolePermutation::swap_cols_syms();

    auto dims = sigma.apply(target.triple());
    auto out = saturate(conjugate(p, sigma), {dims[0], dims[1], dims[2]});
    if (!out) return std::nullopt;
    return conjugate(*out, sigma.inverse());
}

std::vector<SaturationTarget> saturable_types(const PartialLatinRectangle& p,
                                              const SaturationTarget& caps, int jobs)
{
    std::vector<SaturationTarget> tasks;
    for (int R = p.rows(); R <= caps.R; ++R)
        for (int S = p.cols(); S <= caps.S; ++S)
            for (int T = p.symbols(); T <= caps.T; ++T) tasks.push_back({R, S, T});

    std::vector<char> ok(tasks.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < tasks.size(); i = next++)
            ok[i] = saturate_any(p, tasks[i]).has_value();
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(1, jobs); ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<SaturationTarget> out;
    for (size_t i = 0; i < tasks.size(); ++i)
        if (ok[i]) out.push_back(tasks[i]);
    return out;
}

PartialLatinRectangle monotone_shrink(const PartialLatinRectangle& z, const SaturationTarget& target)
{
    if (!is_saturated(z)) throw PreconditionViolated("monotone_shrink: input is not saturated");
    if (!(z.rows() <= z.cols() && z.cols() <= z.symbols()))
        throw PreconditionViolated("monotone_shrink: input needs r <= s <= t");
    if (target.R < 1 || target.S < 1 || target.R > z.rows() || target.S > z.cols() ||
        target.T < z.symbols())
        throw PreconditionViolated("monotone_shrink: target needs R <= r, S <= s, T >= t");

    Grid<int> cells(target.R, target.S, kEmpty);
    for (int i = 0; i < target.R; ++i)
        for (int j = 0; j < target.S; ++j) cells(i, j) = z.at(i, j);
    return PartialLatinRectangle(target.T, std::move(cells));
}

} // namespace latinext
