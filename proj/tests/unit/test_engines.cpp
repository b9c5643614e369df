#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "latinext/engines.hpp"

using namespace latinext;

namespace {

// Largest matching by trying every subset of edges.
int brute_matching(const Bigraph& g)
{
    std::vector<std::pair<int, int>> edges;
    for (int l = 0; l < g.left_count(); ++l)
        for (int r : g.neighbors(l)) edges.emplace_back(l, r);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        unsigned lu = 0, ru = 0;
        int size = 0;
        bool ok = true;
        for (size_t e = 0; e < edges.size() && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            const unsigned lb = 1u << edges[e].first, rb = 1u << edges[e].second;
            ok = !(lu & lb) && !(ru & rb);
            lu |= lb, ru |= rb, ++size;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

bool hall_holds(const SetFamily& f)
{
    const auto n = f.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned uni = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                for (int x : f[i]) uni |= 1u << x;
        if (__builtin_popcount(uni) < __builtin_popcount(mask)) return false;
    }
    return true;
}

SetFamily random_family(std::mt19937_64& rng, int universe, int count)
{
    SetFamily f(universe);
    std::bernoulli_distribution keep(0.35);
    for (int i = 0; i < count; ++i) {
        std::vector<int> s;
        for (int x = 0; x < universe; ++x)
            if (keep(rng)) s.push_back(x);
        f.add_set(s);
    }
    return f;
}

} // namespace

TEST_CASE("maximum matching and Konig cover agree with exhaustive search")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int L = std::uniform_int_distribution<int>(0, 5)(rng);
        const int R = std::uniform_int_distribution<int>(0, 5)(rng);
        Bigraph g(L, R);
        for (int l = 0; l < L; ++l)
            for (int r = 0; r < R; ++r)
                if (std::bernoulli_distribution(0.3)(rng) && g.edge_count() < 14) g.add_edge(l, r);
        auto m = max_matching(g);
        CHECK(m.size == brute_matching(g));
        for (auto [l, r] : m.edges()) CHECK(g.has_edge(l, r));
        auto cover = min_vertex_cover(g, m);
        CHECK(static_cast<int>(cover.size()) == m.size);
        for (int l = 0; l < L; ++l)
            for (int r : g.neighbors(l)) {
                bool covered = std::find(cover.left.begin(), cover.left.end(), l) != cover.left.end() ||
                               std::find(cover.right.begin(), cover.right.end(), r) != cover.right.end();
                CHECK(covered);
            }
    }
}

TEST_CASE("bigraph rejects bad edges")
{
    Bigraph g(2, 2);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 1), PreconditionViolated);
    CHECK_THROWS_AS(g.add_edge(2, 0), PreconditionViolated);
}

TEST_CASE("SDR exists exactly when Hall's condition holds")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const int u = std::uniform_int_distribution<int>(1, 6)(rng);
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        auto f = random_family(rng, u, n);
        auto res = sdr(f);
        CHECK(std::holds_alternative<std::vector<int>>(res) == hall_holds(f));
        if (auto* reps = std::get_if<std::vector<int>>(&res)) {
            std::set<int> seen(reps->begin(), reps->end());
            CHECK(seen.size() == reps->size());
            for (size_t i = 0; i < reps->size(); ++i)
                CHECK(std::count(f[i].begin(), f[i].end(), (*reps)[i]) == 1);
        } else {
            const auto& v = std::get<HallViolation>(res);
            std::set<int> uni;
            for (int i : v.sets) uni.insert(f[static_cast<size_t>(i)].begin(), f[static_cast<size_t>(i)].end());
            CHECK(std::vector<int>(uni.begin(), uni.end()) == v.neighborhood);
            CHECK(v.neighborhood.size() < v.sets.size());
        }
    }
}

TEST_CASE("SDR containing necessary elements")
{
    // Compared against exhaustive search over SDRs.
    std::mt19937_64 rng(13);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int u = std::uniform_int_distribution<int>(1, 5)(rng);
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        auto f = random_family(rng, u, n);
        if (!hall_holds(f)) {
            CHECK_THROWS_AS(sdr_with_necessary(f, std::vector<int>{}), PreconditionViolated);
            continue;
        }
        std::vector<int> need;
        for (int x = 0; x < u; ++x)
            if (std::bernoulli_distribution(0.3)(rng)) need.push_back(x);
        bool exists = false;
        std::vector<int> pick(static_cast<size_t>(n));
        std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned used) {
            if (exists) return;
            if (i == static_cast<size_t>(n)) {
                exists = std::all_of(need.begin(), need.end(), [&](int x) { return used >> x & 1; });
                return;
            }
            for (int x : f[i])
                if (!(used >> x & 1)) rec(i + 1, used | 1u << x);
        };
        rec(0, 0);
        if (exists) {
            auto reps = sdr_with_necessary(f, need);
            for (int x : need) CHECK(std::count(reps.begin(), reps.end(), x) == 1);
            std::set<int> seen(reps.begin(), reps.end());
            CHECK(seen.size() == reps.size());
            ++checked;
        } else {
            CHECK_THROWS_AS(sdr_with_necessary(f, need), AugmentationFailed);
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("Konig decomposition into k partial permutation matrices")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = std::uniform_int_distribution<int>(1, 6)(rng);
        const int s = std::uniform_int_distribution<int>(1, 6)(rng);
        const int k = std::uniform_int_distribution<int>(1, 4)(rng);
        Grid<int> m(r, s, 0);
        std::vector<int> rs(static_cast<size_t>(r), 0), cs(static_cast<size_t>(s), 0);
        for (int step = 0; step < 40; ++step) {
            const int i = std::uniform_int_distribution<int>(0, r - 1)(rng);
            const int j = std::uniform_int_distribution<int>(0, s - 1)(rng);
            if (rs[static_cast<size_t>(i)] < k && cs[static_cast<size_t>(j)] < k) {
                ++m(i, j), ++rs[static_cast<size_t>(i)], ++cs[static_cast<size_t>(j)];
            }
        }
        auto parts = konig_decompose(m, k);
        REQUIRE(static_cast<int>(parts.size()) == k);
        Grid<int> sum(r, s, 0);
        for (const auto& p : parts) {
            for (int i = 0; i < r; ++i) {
                int row = 0;
                for (int j = 0; j < s; ++j) row += p(i, j), sum(i, j) += p(i, j);
                CHECK(row <= 1);
            }
            for (int j = 0; j < s; ++j) {
                int col = 0;
                for (int i = 0; i < r; ++i) col += p(i, j);
                CHECK(col <= 1);
            }
        }
        CHECK(sum == m);
    }
    Grid<int> heavy(1, 2, 2);
    CHECK_THROWS_AS(konig_decompose(heavy, 3), BoundExceeded);
}

TEST_CASE("bounded flows agree with exhaustive search")
{
    std::mt19937_64 rng(15);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int nodes = std::uniform_int_distribution<int>(2, 4)(rng);
        BoundedFlowNetwork net(nodes, 0, nodes - 1);
        const int arcs = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int a = 0; a < arcs; ++a) {
            const int from = std::uniform_int_distribution<int>(0, nodes - 1)(rng);
            int to = std::uniform_int_distribution<int>(0, nodes - 2)(rng);
            if (to >= from) ++to;
            const int lo = std::uniform_int_distribution<int>(0, 2)(rng);
            const int hi = lo + std::uniform_int_distribution<int>(0, 2)(rng);
            net.add_arc(from, to, lo, hi);
        }
        // Exhaustive: every integral assignment within the bounds.
        const auto& as = net.arcs();
        std::vector<std::int64_t> flow(as.size());
        bool exists = false;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (exists) return;
            if (i == as.size()) {
                std::vector<std::int64_t> bal(static_cast<size_t>(nodes), 0);
                for (size_t a = 0; a < as.size(); ++a) {
                    bal[static_cast<size_t>(as[a].from)] -= flow[a];
                    bal[static_cast<size_t>(as[a].to)] += flow[a];
                }
                exists = bal[0] <= 0;  // value out of the source is nonnegative
                for (int v = 1; v + 1 < nodes; ++v) exists = exists && bal[static_cast<size_t>(v)] == 0;
                return;
            }
            for (auto f = as[i].lower; f <= as[i].upper; ++f) {
                flow[i] = f;
                rec(i + 1);
            }
        };
        rec(0);
        auto res = feasible_flow(net);
        CHECK(std::holds_alternative<Flow>(res) == exists);
        if (auto* f = std::get_if<Flow>(&res)) {
            CHECK(check_flow(net, *f));
            ++feasible;
        } else {
            CHECK(std::get<Infeasible>(res).excess > 0);
            ++infeasible;
        }
    }
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
    BoundedFlowNetwork net(2, 0, 1);
    CHECK_THROWS_AS(net.add_arc(0, 1, 3, 2), PreconditionViolated);
}
