// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
//  1. two_good_coloring == exact_split(k=2) == odd-cycle predicate, on an
//     exhaustive catalog of connected multigraphs with <= 7 edge-instances
//     plus 200 seeded random multigraphs with <= 30 edge-instances.
//  2. exact_split refutes (K_3, 2), (K_5, 4), (D_3, 3); regularity checked.
//  3. 100 seeded multigraphs with d(x) >= n + mu(G) on X split for n=1,2,3.
//  4. K_3 is 3-good; the edge-doubled K_3 is not 4-good.
//  5. 500 seeded k-fold interval covers: sweep and divide-and-conquer both
//     feasible and verified; small ones agree with the oracle.
//  6. 100 seeded interval covers: thinning covers [z, n) with the
//     layer-exclusion bound.
//  7. adversary_walk wins every 2-partition for (b,d) in {(1,1),(1,2),(2,2)}.
//  8. indicator covers m in {4,5}, t=2 admit no two disjoint subcovers.
//  9. rectangle realizations for b,d <= 3: exact incidence isomorphism and
//     matching fold profiles.
// 10. every instance from criteria 1-8 with <= 10 set-instances: exact_split
//     agrees with a no-pruning exhaustive reference enumerator.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "covers/generators.hpp"
#include "covers/geometry.hpp"
#include "covers/graphs.hpp"
#include "covers/intervals.hpp"
#include "covers/oracle.hpp"
#include "reference.hpp"

using namespace covers;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kBigBudget = std::uint64_t{1} << 42;

int failures_total = 0;

struct Criterion {
    explicit Criterion(int id, std::string what) : id_(id), what_(std::move(what)) {
        start_ = Clock::now();
    }
    void fail(const std::string& why) {
        if (fail_count_ == 0) first_reason_ = why;
        ++fail_count_;
    }
    void note(const std::string& extra) { notes_ = extra; }
    bool finish(double time_limit_s) {
        double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
        bool ok = (fail_count_ == 0) && (time_limit_s <= 0 || elapsed < time_limit_s);
        std::printf("criterion %2d: %s  [%s, %.2fs%s]%s%s\n", id_, ok ? "PASS" : "FAIL",
                    what_.c_str(), elapsed, notes_.empty() ? "" : (", " + notes_).c_str(),
                    fail_count_ ? (" first failure: " + first_reason_).c_str() : "",
                    (time_limit_s > 0 && elapsed >= time_limit_s) ? " (over time budget)" : "");
        if (!ok) ++failures_total;
        return ok;
    }

private:
    int id_;
    std::string what_;
    std::string notes_;
    std::string first_reason_;
    int fail_count_ = 0;
    Clock::time_point start_;
};

// Criterion 10 accumulates over every instance the other criteria touch.
struct OracleConsistency {
    long long checked = 0;
    long long mismatches = 0;

    void check(const CoverInstance& inst, int k, const std::vector<PointId>& over) {
        if (expand_multiplicity(inst).size() > 10) return;
        auto res = oracle::exact_split(inst, k, over, kBigBudget);
        bool expected = reference::exhaustive_feasible(inst, k, over);
        ++checked;
        if ((res.status == SplitStatus::Feasible) != expected) ++mismatches;
    }
    void check(const CoverInstance& inst, int k) { check(inst, k, inst.points); }
};

OracleConsistency consistency;

// ---------------------------------------------------------------------------
// Exhaustive catalog of connected multigraphs with <= max_instances edge
// instances, spanning vertex sets of every feasible size.  Enumerates edge
// multisets in lexicographic order with a connectivity budget prune.
// ---------------------------------------------------------------------------

struct CatalogWalker {
    int nv = 0;
    int max_instances = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> mult;
    std::vector<std::uint16_t> adj;  // vertex -> neighbour bitmask
    std::function<void(const std::vector<std::pair<int, int>>&, const std::vector<int>&)> emit;

    int components_and_isolated() const {
        // count connected pieces over all nv vertices (isolated count alone)
        std::uint16_t seen = 0;
        int comps = 0;
        for (int v = 0; v < nv; ++v) {
            if (seen & (1u << v)) continue;
            ++comps;
            std::uint16_t frontier = 1u << v;
            while (frontier) {
                seen |= frontier;
                std::uint16_t next = 0;
                for (int u = 0; u < nv; ++u)
                    if (frontier & (1u << u)) next |= adj[static_cast<std::size_t>(u)];
                frontier = next & ~seen;
            }
        }
        return comps;
    }

    void rec(std::size_t pair_idx, int used) {
        const int remaining = max_instances - used;
        // every vertex must end non-isolated and the graph connected:
        // joining c components needs c-1 further edges
        if (components_and_isolated() - 1 > remaining) return;
        if (pair_idx == pairs.size()) {
            if (used >= 1 && components_and_isolated() == 1) emit(pairs, mult);
            return;
        }
        // zero copies of this pair
        rec(pair_idx + 1, used);
        auto [a, b] = pairs[pair_idx];
        int added = 0;
        for (int m = 1; m <= remaining; ++m) {
            ++mult[pair_idx];
            ++added;
            if (m == 1) {
                adj[static_cast<std::size_t>(a)] |= (1u << b);
                adj[static_cast<std::size_t>(b)] |= (1u << a);
            }
            rec(pair_idx + 1, used + m);
        }
        mult[pair_idx] -= added;
        if (added > 0 && mult[pair_idx] == 0) {
            adj[static_cast<std::size_t>(a)] &= static_cast<std::uint16_t>(~(1u << b));
            adj[static_cast<std::size_t>(b)] &= static_cast<std::uint16_t>(~(1u << a));
        }
    }

    void walk(int vertices, int max_inst) {
        nv = vertices;
        max_instances = max_inst;
        pairs.clear();
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) pairs.emplace_back(i, j);
        mult.assign(pairs.size(), 0);
        adj.assign(static_cast<std::size_t>(nv), 0);
        rec(0, 0);
    }
};

graphs::Graph graph_from_multiset(int nv, const std::vector<std::pair<int, int>>& pairs,
                                  const std::vector<int>& mult) {
    static std::vector<PointId> vertex_names;
    while (static_cast<int>(vertex_names.size()) < nv)
        vertex_names.push_back("v" + std::to_string(vertex_names.size()));
    graphs::Graph g;
    g.vertices.assign(vertex_names.begin(), vertex_names.begin() + nv);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mult[i] > 0)
            g.edges.push_back(graphs::GraphEdge{
                pairs[i].first, pairs[i].second, static_cast<std::uint32_t>(mult[i]),
                "e" + std::to_string(pairs[i].first) + "_" + std::to_string(pairs[i].second)});
    return g;
}

// ---------------------------------------------------------------------------

void criterion_1_and_partly_10() {
    Criterion c(1, "odd-cycle law on the exhaustive catalog plus 200 random multigraphs");
    long long catalog = 0;

    auto check_graph = [&](const graphs::Graph& g) {
        auto res = graphs::two_good_coloring(g);
        bool algorithmic = (res.status == SplitStatus::Feasible);
        bool predicate = reference::no_component_is_odd_cycle(g);
        auto inst = graphs::graph_to_instance(g);
        auto oracle_res = oracle::exact_split(inst, 2, kBigBudget);
        bool exact = (oracle_res.status == SplitStatus::Feasible);
        if (algorithmic != predicate || algorithmic != exact) {
            c.fail("verdict mismatch on a graph with " + std::to_string(g.edge_instance_count()) +
                   " instances");
            return;
        }
        if (algorithmic && !verify_coloring(inst, res.coloring, 2).ok)
            c.fail("two_good_coloring returned an unverified coloring");
        consistency.check(inst, 2);
    };

    CatalogWalker walker;
    for (int nv = 2; nv <= 8; ++nv) {
        walker.emit = [&](const std::vector<std::pair<int, int>>& pairs,
                          const std::vector<int>& mult) {
            ++catalog;
            check_graph(graph_from_multiset(nv, pairs, mult));
        };
        walker.walk(nv, 7);
    }

    for (std::uint64_t seed = 0; seed < 200; ++seed)
        check_graph(gen::random_multigraph(seed, 10, 30, 4));

    c.note(std::to_string(catalog) + " catalog graphs");
    c.finish(30.0);
}

void criterion_2() {
    Criterion c(2, "the regular counterexample graphs are refuted");
    struct Case {
        graphs::Graph g;
        int k;
    };
    std::vector<Case> cases{{graphs::gen_complete(3), 2},
                            {graphs::gen_complete(5), 4},
                            {graphs::gen_dumbbell_dn(3), 3}};
    for (auto& [g, k] : cases) {
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (g.degree(static_cast<int>(v)) != k)
                c.fail("graph for k=" + std::to_string(k) + " is not " + std::to_string(k) +
                       "-regular");
        auto inst = graphs::graph_to_instance(g);
        auto t0 = Clock::now();
        auto res = oracle::exact_split(inst, k, kBigBudget);
        double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        if (res.status != SplitStatus::Infeasible)
            c.fail("expected infeasible at k=" + std::to_string(k));
        if (dt >= 60.0) c.fail("single refutation exceeded 60s");
        consistency.check(inst, k);
    }
    c.finish(0);
}

void criterion_3() {
    Criterion c(3, "Gupta-type degree surplus always splits (100 seeded graphs)");
    int done = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        gen::Rng rng(seed * 101 + 3);
        const int n = 1 + static_cast<int>(seed % 3);
        auto g = gen::random_multigraph(seed + 1000, 12, 15, 3, 6);
        std::vector<int> x_set;
        std::vector<PointId> x_ids;
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (rng.range(0, 1) == 0) x_set.push_back(static_cast<int>(v));
        if (x_set.empty()) x_set.push_back(0);
        g = gen::raise_degrees_for_gupta(g, x_set, n, 3);
        for (int v : x_set) x_ids.push_back(g.vertices[static_cast<std::size_t>(v)]);
        if (!graphs::check_gupta_precondition(g, x_ids, n)) {
            c.fail("generator failed to establish the degree surplus");
            continue;
        }
        auto inst = graphs::graph_to_instance(g);
        auto res = oracle::exact_split(inst, n, x_ids, kBigBudget);
        if (res.status != SplitStatus::Feasible) {
            c.fail("seed " + std::to_string(seed) + " not feasible at n=" + std::to_string(n));
            continue;
        }
        if (!verify_coloring(inst, res.coloring, n, x_ids).ok)
            c.fail("seed " + std::to_string(seed) + " returned an unverified coloring");
        consistency.check(inst, n, x_ids);
        ++done;
    }
    if (done != 100 && failures_total == 0) c.fail("expected 100 successful runs");
    c.finish(120.0);
}

void criterion_4() {
    Criterion c(4, "multiplicity remark: K_3 is 3-good, doubled K_3 is not 4-good");
    auto k3 = graphs::graph_to_instance(graphs::gen_complete(3));
    auto res3 = oracle::exact_split(k3, 3, kBigBudget);
    if (res3.status != SplitStatus::Feasible || !verify_coloring(k3, res3.coloring, 3).ok)
        c.fail("K_3 should admit a 3-good coloring");
    consistency.check(k3, 3);

    auto doubled = k3;
    for (auto& s : doubled.sets) s.mult = 2;
    auto res4 = oracle::exact_split(doubled, 4, kBigBudget);
    if (res4.status != SplitStatus::Infeasible)
        c.fail("doubled K_3 should have no 4-good coloring");
    consistency.check(doubled, 4);
    c.finish(5.0);
}

void criterion_5() {
    Criterion c(5, "500 seeded k-fold interval covers split both ways");
    int oracle_checked = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto lc = gen::random_interval_cover(seed * 7 + 5, 15, 5);
        std::vector<int> fold(static_cast<std::size_t>(lc.n()), 0);
        for (const auto& s : lc.sets)
            for (int p = s.lo; p <= s.hi; ++p)
                fold[static_cast<std::size_t>(p)] += static_cast<int>(s.mult);
        int k = fold.empty() ? 1 : *std::min_element(fold.begin(), fold.end());
        k = std::min(k, 5);
        auto inst = intervals::interval_to_instance(lc);

        auto sweep = intervals::sweep_split(lc, k);
        auto dnc = intervals::divide_and_conquer_split(lc, k);
        if (sweep.status != SplitStatus::Feasible || dnc.status != SplitStatus::Feasible) {
            c.fail("seed " + std::to_string(seed) + " did not split at k=" + std::to_string(k));
            continue;
        }
        if (!verify_coloring(inst, sweep.coloring, k).ok ||
            !verify_coloring(inst, dnc.coloring, k).ok) {
            c.fail("seed " + std::to_string(seed) + " produced an unverified coloring");
            continue;
        }
        std::size_t instances = expand_multiplicity(inst).size();
        if (instances <= 12) {
            auto res = oracle::exact_split(inst, k, kBigBudget);
            if (res.status != SplitStatus::Feasible)
                c.fail("oracle disagrees on seed " + std::to_string(seed));
            ++oracle_checked;
        }
        consistency.check(inst, k);
    }
    c.note(std::to_string(oracle_checked) + " oracle cross-checks");
    c.finish(60.0);
}

void criterion_6() {
    Criterion c(6, "thinning sparsity on 100 seeded interval covers");
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto lc = gen::random_interval_cover(seed * 13 + 1, 14, 3);
        gen::Rng rng(seed);
        const int z = rng.range(0, lc.n() - 1);
        auto sel = intervals::thin_locally_finite(lc, z);

        std::vector<int> layer_of(static_cast<std::size_t>(lc.n()), -1);
        for (std::size_t m = 0; m < sel.layers.size(); ++m)
            for (int q : sel.layers[m]) layer_of[static_cast<std::size_t>(q)] = static_cast<int>(m);

        std::vector<int> fold(static_cast<std::size_t>(lc.n()), 0);
        for (const auto& si : sel.subcover())
            for (const auto& s : lc.sets)
                if (s.id == si.set_id)
                    for (int p = s.lo; p <= s.hi; ++p) ++fold[static_cast<std::size_t>(p)];
        for (int p = z; p < lc.n(); ++p)
            if (fold[static_cast<std::size_t>(p)] < 1) {
                c.fail("seed " + std::to_string(seed) + ": selection misses position " +
                       std::to_string(p));
                break;
            }
        for (const auto& [layer, si] : sel.selected)
            for (const auto& s : lc.sets) {
                if (s.id != si.set_id) continue;
                for (int p = std::max(s.lo, z); p <= s.hi; ++p)
                    if (layer >= layer_of[static_cast<std::size_t>(p)] + 2)
                        c.fail("seed " + std::to_string(seed) + ": layer exclusion violated");
            }
        consistency.check(intervals::interval_to_instance(lc), 2);
    }
    c.finish(0);
}

void criterion_7() {
    Criterion c(7, "tree-cover adversary wins every 2-partition");
    for (auto [b, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
        auto tc = geometry::gen_tree_cover({b, d});
        const std::size_t n = tc.sets.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<int> part(n);
            for (std::size_t i = 0; i < n; ++i) part[i] = static_cast<int>((mask >> i) & 1);
            auto w = geometry::adversary_walk(tc, part);
            if (!reference::witness_is_valid(tc, part, w.part, w.missed_node)) {
                c.fail("invalid witness at b=" + std::to_string(b) + " d=" + std::to_string(d) +
                       " mask=" + std::to_string(mask));
                break;
            }
        }
        if (n <= 10) consistency.check(tc, 2);
    }
    c.finish(10.0);
}

void criterion_8() {
    Criterion c(8, "indicator covers admit no two disjoint subcovers");
    for (int m : {4, 5}) {
        auto ind = geometry::gen_indicator_cover(m, 2);
        auto cert = oracle::enumerate_partitions_check(ind);
        if (!cert.is_two_split_free())
            c.fail("m=" + std::to_string(m) + " unexpectedly split");
        if (cert.total_partitions != (std::uint64_t{1} << m))
            c.fail("partition sweep not exhaustive");
        consistency.check(ind, 2);
    }
    c.finish(5.0);
}

void criterion_9() {
    Criterion c(9, "rectangle realization: exact incidence and fold profile");
    for (int b = 1; b <= 3; ++b)
        for (int d = 1; d <= 3; ++d) {
            auto tc = geometry::gen_tree_cover({b, d});
            auto scene = geometry::realize_rectangles({b, d});
            if (!geometry::check_incidence_isomorphism(scene, tc)) {
                c.fail("incidence failed at b=" + std::to_string(b) + " d=" + std::to_string(d));
                continue;
            }
            // fold profile of the realized cover, computed in the plane
            auto fold = coverage_profile(tc);
            for (const auto& id : scene.node_order) {
                geometry::RatPoint pt = scene.f1_points.count(id) ? scene.f1_points.at(id)
                                                                  : scene.f2_points.at(id);
                int realized_fold = 0;
                for (const auto& [set_id, rect] : scene.rects)
                    if (rect.contains(pt)) ++realized_fold;
                int depth =
                    (id == "e") ? 0 : 1 + static_cast<int>(std::count(id.begin(), id.end(), '.'));
                int expected = (depth < d) ? b + 1 : d;
                if (realized_fold != fold.at(id) || realized_fold != expected) {
                    c.fail("fold mismatch at node " + id + " for b=" + std::to_string(b) +
                           " d=" + std::to_string(d));
                    break;
                }
            }
        }
    c.finish(10.0);
}

void criterion_10() {
    Criterion c(10, "oracle agrees with the no-pruning reference enumerator");
    c.note(std::to_string(consistency.checked) + " instances replayed");
    if (consistency.checked < 1000) c.fail("too few small instances were collected");
    if (consistency.mismatches != 0)
        c.fail(std::to_string(consistency.mismatches) + " mismatches");
    c.finish(0);
}

} // namespace

int main() {
    criterion_1_and_partly_10();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures_total == 0) {
        std::printf("acceptance: all criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures_total);
    return 1;
}
