#ifndef COVERS_GENERATORS_HPP
#define COVERS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "covers/core.hpp"
#include "covers/graphs.hpp"
#include "covers/intervals.hpp"

namespace covers {
namespace gen {

// Seeded, reproducible instance generators.  All draws go through the
// fixed-algorithm mt19937_64 with explicit modulo reduction, so identical
// seeds give identical instances on every platform.

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    int range(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(engine_() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

/// Random multigraph: `vertices` in [min_vertices, max_vertices], up to
/// max_edge_instances instances, pair multiplicities capped by max_mult.
/// Isolated vertices and disconnected shapes are allowed.
inline graphs::Graph random_multigraph(std::uint64_t seed, int max_vertices,
                                       int max_edge_instances, int max_mult,
                                       int min_vertices = 2) {
    if (min_vertices < 2 || max_vertices < min_vertices || max_edge_instances < 1 || max_mult < 1)
        throw DomainError("random_multigraph: bad bounds");
    Rng rng(seed);
    graphs::Graph g;
    const int n = rng.range(min_vertices, max_vertices);
    for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));

    const int target = rng.range(1, max_edge_instances);
    std::map<std::pair<int, int>, int> mult;
    int total = 0;
    int guard = 20 * target + 50;
    while (total < target && guard-- > 0) {
        int u = rng.range(0, n - 1);
        int v = rng.range(0, n - 1);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        auto& m = mult[{key.first, key.second}];
        if (m >= max_mult) continue;
        ++m;
        ++total;
    }
    for (const auto& [pair, m] : mult)
        g.edges.push_back(graphs::GraphEdge{
            pair.first, pair.second, static_cast<std::uint32_t>(m),
            "e" + std::to_string(pair.first) + "_" + std::to_string(pair.second)});
    return g;
}

/// Raises degrees until every x in X satisfies d(x) >= n + mu(G), adding
/// edges out of deficient vertices while keeping pair multiplicities at or
/// below mult_cap.  Deterministic.
inline graphs::Graph raise_degrees_for_gupta(graphs::Graph g, const std::vector<int>& x_set,
                                             int n, int mult_cap) {
    std::map<std::pair<int, int>, int> mult;
    for (const auto& e : g.edges) {
        auto key = std::minmax(e.u, e.v);
        mult[{key.first, key.second}] += static_cast<int>(e.mult);
    }
    const int nv = static_cast<int>(g.vertices.size());
    auto degree = [&](int v) {
        int d = 0;
        for (const auto& e : g.edges)
            if (e.u == v || e.v == v) d += static_cast<int>(e.mult);
        return d;
    };
    int extra = 0;
    while (true) {
        int mu = 1;
        for (const auto& [pair, m] : mult) {
            (void)pair;
            mu = std::max(mu, m);
        }
        int deficient = -1;
        for (int x : x_set)
            if (degree(x) < n + mu) { deficient = x; break; }
        if (deficient < 0) break;
        // attach to the partner of smallest current pair multiplicity
        int best = -1, best_mult = mult_cap + 1;
        for (int v = 0; v < nv; ++v) {
            if (v == deficient) continue;
            auto key = std::minmax(deficient, v);
            int m = mult.count({key.first, key.second}) ? mult.at({key.first, key.second}) : 0;
            if (m < best_mult) { best_mult = m; best = v; }
        }
        if (best < 0 || best_mult >= mult_cap)
            throw DomainError("raise_degrees_for_gupta: cannot raise degree within the cap");
        auto key = std::minmax(deficient, best);
        ++mult[{key.first, key.second}];
        g.edges.push_back(graphs::GraphEdge{key.first, key.second, 1,
                                            "g" + std::to_string(extra++)});
    }
    return g;
}

/// Random k-fold interval cover on positions 0..n-1 (point ids "0".."n-1").
/// Adds intervals until every position reaches fold k; every third addition
/// targets the current minimum to force convergence.
inline intervals::LinearCover random_interval_cover(std::uint64_t seed, int max_n, int max_k) {
    if (max_n < 1 || max_k < 1) throw DomainError("random_interval_cover: bad bounds");
    Rng rng(seed);
    intervals::LinearCover lc;
    const int n = rng.range(1, max_n);
    const int k = rng.range(1, max_k);
    for (int i = 0; i < n; ++i) lc.order.push_back(std::to_string(i));

    std::vector<int> fold(static_cast<std::size_t>(n), 0);
    int step = 0;
    while (true) {
        int lowest = 0;
        for (int p = 0; p < n; ++p)
            if (fold[static_cast<std::size_t>(p)] < fold[static_cast<std::size_t>(lowest)])
                lowest = p;
        if (fold[static_cast<std::size_t>(lowest)] >= k) break;

        int lo, hi;
        if (step % 3 == 2) {
            lo = rng.range(std::max(0, lowest - 3), lowest);
            hi = rng.range(lowest, std::min(n - 1, lowest + 3));
        } else {
            int a = rng.range(0, n - 1), b = rng.range(0, n - 1);
            lo = std::min(a, b);
            hi = std::max(a, b);
        }
        std::uint32_t mult = (rng.range(0, 3) == 0) ? 2u : 1u;
        lc.sets.push_back(intervals::IntervalEntry{"I" + std::to_string(step), lo, hi, mult});
        for (int p = lo; p <= hi; ++p) fold[static_cast<std::size_t>(p)] += static_cast<int>(mult);
        ++step;
    }
    return lc;
}

/// Random instance with arbitrary member sets; occasionally useful shapes
/// for round-trip and component property tests.
inline CoverInstance random_generic_instance(std::uint64_t seed, int max_points, int max_sets,
                                             int max_mult) {
    Rng rng(seed);
    CoverInstance inst;
    const int np = rng.range(1, max_points);
    for (int i = 0; i < np; ++i) inst.points.push_back("p" + std::to_string(i));
    const int ns = rng.range(0, max_sets);
    for (int s = 0; s < ns; ++s) {
        CoverSet cs;
        cs.id = "S" + std::to_string(s);
        cs.mult = static_cast<std::uint32_t>(rng.range(1, max_mult));
        for (int i = 0; i < np; ++i)
            if (rng.range(0, 2) == 0) cs.members.push_back(inst.points[static_cast<std::size_t>(i)]);
        inst.sets.push_back(std::move(cs));
    }
    return inst;
}

} // namespace gen
} // namespace covers

#endif // COVERS_GENERATORS_HPP
