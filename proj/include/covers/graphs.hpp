#ifndef COVERS_GRAPHS_HPP
#define COVERS_GRAPHS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covers/core.hpp"

namespace covers {
namespace graphs {

// ---------------------------------------------------------------------------
// Multigraph view of a cover whose sets are 2-element.
// ---------------------------------------------------------------------------

struct GraphEdge {
    int u = 0;
    int v = 0;
    std::uint32_t mult = 1;
    std::string set_id;
};

struct Graph {
    std::vector<PointId> vertices;
    std::vector<GraphEdge> edges;

    /// d_G(v): incident edge-instances counted with multiplicity.
    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges)
            if (e.u == v || e.v == v) d += static_cast<int>(e.mult);
        return d;
    }

    /// mu(G): maximum total multiplicity over a vertex pair.  Distinct edge
    /// entries with the same endpoints count together.
    std::uint32_t max_multiplicity() const {
        std::map<std::pair<int, int>, std::uint32_t> per_pair;
        std::uint32_t mu = 0;
        for (const auto& e : edges) {
            auto key = std::minmax(e.u, e.v);
            mu = std::max(mu, per_pair[{key.first, key.second}] += e.mult);
        }
        return mu;
    }

    int max_degree() const {
        int d = 0;
        for (std::size_t v = 0; v < vertices.size(); ++v)
            d = std::max(d, degree(static_cast<int>(v)));
        return d;
    }

    std::size_t edge_instance_count() const {
        std::size_t n = 0;
        for (const auto& e : edges) n += e.mult;
        return n;
    }

    int vertex_index(const PointId& id) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == id) return static_cast<int>(i);
        return -1;
    }
};

struct EdgeInstanceRef {
    int edge = 0;
    std::uint32_t copy = 0;
    auto operator<=>(const EdgeInstanceRef&) const = default;
};

inline SetInstance to_set_instance(const Graph& g, EdgeInstanceRef r) {
    return SetInstance{g.edges[static_cast<std::size_t>(r.edge)].set_id, r.copy};
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

inline Graph to_graph(const CoverInstance& inst) {
    Graph g;
    g.vertices = inst.points;
    std::map<PointId, int> index;
    for (std::size_t i = 0; i < inst.points.size(); ++i)
        index[inst.points[i]] = static_cast<int>(i);
    for (const auto& s : inst.sets) {
        if (s.members.size() != 2)
            throw ShapeError("set \"" + s.id + "\" has " + std::to_string(s.members.size()) +
                             " members; a graph view needs exactly 2");
        g.edges.push_back(GraphEdge{index.at(s.members[0]), index.at(s.members[1]), s.mult, s.id});
    }
    return g;
}

inline CoverInstance graph_to_instance(const Graph& g) {
    CoverInstance inst;
    inst.kind = CoverKind::Graph;
    inst.points = g.vertices;
    for (const auto& e : g.edges)
        inst.sets.push_back(CoverSet{
            e.set_id,
            {g.vertices[static_cast<std::size_t>(e.u)], g.vertices[static_cast<std::size_t>(e.v)]},
            e.mult});
    return inst;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Complete simple graph K_n.
inline Graph gen_complete(int n) {
    if (n < 2) throw DomainError("gen_complete: n must be at least 2");
    Graph g;
    for (int i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.edges.push_back(
                GraphEdge{i, j, 1, "e" + std::to_string(i) + "_" + std::to_string(j)});
    return g;
}

namespace detail {

// K_{m} on the given vertex indices minus the edges {0, m-1} and
// {2k, 2k+1} for k < (m-1)/2 (indices relative to the copy).  m is odd.
inline void append_k_minus(Graph& g, const std::vector<int>& verts, const std::string& prefix) {
    const int m = static_cast<int>(verts.size());
    auto deleted = [m](int i, int j) {
        if (i == 0 && j == m - 1) return true;
        return (i % 2 == 0) && (j == i + 1) && (i / 2 < (m - 1) / 2);
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (deleted(i, j)) continue;
            g.edges.push_back(GraphEdge{verts[static_cast<std::size_t>(i)],
                                        verts[static_cast<std::size_t>(j)], 1,
                                        prefix + std::to_string(i) + "_" + std::to_string(j)});
        }
}

} // namespace detail

/// D_n: two copies of K^-_{n+2} plus a bridge between their first vertices.
/// n-regular for odd n >= 3.
inline Graph gen_dumbbell_dn(int n) {
    if (n < 3 || n % 2 == 0)
        throw DomainError("gen_dumbbell_dn: n must be an odd integer >= 3");
    Graph g;
    const int m = n + 2;
    std::vector<int> left, right;
    for (int i = 0; i < m; ++i) {
        left.push_back(static_cast<int>(g.vertices.size()));
        g.vertices.push_back("a" + std::to_string(i));
    }
    for (int i = 0; i < m; ++i) {
        right.push_back(static_cast<int>(g.vertices.size()));
        g.vertices.push_back("b" + std::to_string(i));
    }
    detail::append_k_minus(g, left, "a");
    detail::append_k_minus(g, right, "b");
    g.edges.push_back(GraphEdge{left[0], right[0], 1, "bridge"});
    return g;
}

/// True iff every x in X has d_G(x) >= n + mu(G).
inline bool check_gupta_precondition(const Graph& g, const std::vector<PointId>& x_set, int n) {
    if (n < 1) throw DomainError("check_gupta_precondition: n must be positive");
    const int threshold = n + static_cast<int>(g.max_multiplicity());
    for (const auto& x : x_set) {
        int v = g.vertex_index(x);
        if (v < 0) throw ContractError("check_gupta_precondition: unknown vertex \"" + x + "\"");
        if (g.degree(v) < threshold) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Components
// ---------------------------------------------------------------------------

inline std::vector<Graph> split_components(const Graph& g) {
    std::vector<int> parent(g.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    };
    for (const auto& e : g.edges) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);

    std::map<int, int> root_to_comp;
    std::vector<Graph> comps;
    std::vector<int> new_index(g.vertices.size(), -1);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto [it, fresh] = root_to_comp.try_emplace(r, static_cast<int>(comps.size()));
        if (fresh) comps.push_back(Graph{});
        Graph& c = comps[static_cast<std::size_t>(it->second)];
        new_index[i] = static_cast<int>(c.vertices.size());
        c.vertices.push_back(g.vertices[i]);
    }
    for (const auto& e : g.edges) {
        Graph& c = comps[static_cast<std::size_t>(root_to_comp.at(find(e.u)))];
        c.edges.push_back(GraphEdge{new_index[static_cast<std::size_t>(e.u)],
                                    new_index[static_cast<std::size_t>(e.v)], e.mult, e.set_id});
    }
    return comps;
}

// ---------------------------------------------------------------------------
// Seeds (the base configurations that start a 2-good coloring)
// ---------------------------------------------------------------------------

struct Seed {
    enum class Kind { Degree1Vertex, EvenCycle, Dumbbell };
    Kind kind = Kind::Degree1Vertex;

    int vertex = -1;  // Degree1Vertex

    // EvenCycle: closed walk with distinct edge-instances.  cycle_vertices
    // has one more entry than cycle_edges and starts/ends at the same vertex.
    std::vector<int> cycle_vertices;
    std::vector<EdgeInstanceRef> cycle_edges;

    // Dumbbell: cycle_* is the first odd cycle anchored at the junction,
    // path_* connects the junctions (possibly empty), cycle2_* the second.
    std::vector<int> cycle2_vertices;
    std::vector<EdgeInstanceRef> cycle2_edges;
    std::vector<int> path_vertices;
    std::vector<EdgeInstanceRef> path_edges;
};

namespace detail {

struct Arc {
    int to = 0;
    int inst = 0;
};

// Instance-level adjacency.  Instance t corresponds to (edge, copy).
struct InstGraph {
    std::vector<std::pair<int, int>> ends;      // instance -> (u, v)
    std::vector<EdgeInstanceRef> ref;           // instance -> edge/copy
    std::vector<std::vector<Arc>> at;           // vertex -> arcs

    static InstGraph build(const Graph& g) {
        InstGraph ig;
        ig.at.assign(g.vertices.size(), {});
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            for (std::uint32_t c = 0; c < g.edges[e].mult; ++c) {
                int t = static_cast<int>(ig.ends.size());
                ig.ends.emplace_back(g.edges[e].u, g.edges[e].v);
                ig.ref.push_back(EdgeInstanceRef{static_cast<int>(e), c});
                ig.at[static_cast<std::size_t>(g.edges[e].u)].push_back(Arc{g.edges[e].v, t});
                ig.at[static_cast<std::size_t>(g.edges[e].v)].push_back(Arc{g.edges[e].u, t});
            }
        }
        return ig;
    }

    int other(int t, int v) const {
        auto [a, b] = ends[static_cast<std::size_t>(t)];
        return a == v ? b : a;
    }
};

struct Walk {
    std::vector<int> vertices;  // one more than insts
    std::vector<int> insts;
};

// Tarjan block decomposition; valid once no two instances share a vertex pair.
struct Block {
    std::vector<int> insts;
    std::vector<int> vertices;
};

inline std::vector<Block> biconnected_blocks(const InstGraph& ig, std::size_t n_vertices) {
    std::vector<int> disc(n_vertices, -1), low(n_vertices, 0);
    std::vector<Block> blocks;
    std::vector<int> edge_stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent_inst) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        for (const Arc& a : ig.at[static_cast<std::size_t>(u)]) {
            if (a.inst == parent_inst) continue;
            if (disc[static_cast<std::size_t>(a.to)] < 0) {
                edge_stack.push_back(a.inst);
                dfs(a.to, a.inst);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(a.to)]);
                if (low[static_cast<std::size_t>(a.to)] >= disc[static_cast<std::size_t>(u)]) {
                    Block b;
                    std::vector<bool> seen_inst;
                    while (true) {
                        int t = edge_stack.back();
                        edge_stack.pop_back();
                        b.insts.push_back(t);
                        if (t == a.inst) break;
                    }
                    std::sort(b.insts.begin(), b.insts.end());
                    std::vector<int> vs;
                    for (int t : b.insts) {
                        vs.push_back(ig.ends[static_cast<std::size_t>(t)].first);
                        vs.push_back(ig.ends[static_cast<std::size_t>(t)].second);
                    }
                    std::sort(vs.begin(), vs.end());
                    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                    b.vertices = std::move(vs);
                    blocks.push_back(std::move(b));
                }
            } else if (disc[static_cast<std::size_t>(a.to)] < disc[static_cast<std::size_t>(u)]) {
                edge_stack.push_back(a.inst);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(a.to)]);
            }
        }
    };
    for (std::size_t v = 0; v < n_vertices; ++v)
        if (disc[v] < 0 && !ig.at[v].empty()) dfs(static_cast<int>(v), -1);

    std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
        return x.vertices < y.vertices;
    });
    return blocks;
}

// Any simple cycle inside the instance subset (which is 2-edge-connected or
// at least contains one); returned as a closed walk.
inline Walk find_cycle_in(const InstGraph& ig, const std::vector<int>& insts,
                          std::size_t n_vertices) {
    std::vector<bool> allowed(ig.ends.size(), false);
    for (int t : insts) allowed[static_cast<std::size_t>(t)] = true;
    std::vector<int> parent_inst(n_vertices, -1), parent_vertex(n_vertices, -1);
    std::vector<int> state(n_vertices, 0);  // 0 unseen, 1 on stack, 2 done
    Walk cycle;

    std::function<bool(int)> dfs = [&](int u) {
        state[static_cast<std::size_t>(u)] = 1;
        for (const Arc& a : ig.at[static_cast<std::size_t>(u)]) {
            if (!allowed[static_cast<std::size_t>(a.inst)]) continue;
            if (a.inst == parent_inst[static_cast<std::size_t>(u)]) continue;
            if (state[static_cast<std::size_t>(a.to)] == 1) {
                // back edge: unwind u .. a.to
                std::vector<int> vs{u};
                std::vector<int> es{a.inst};
                int w = u;
                while (w != a.to) {
                    es.push_back(parent_inst[static_cast<std::size_t>(w)]);
                    w = parent_vertex[static_cast<std::size_t>(w)];
                    vs.push_back(w);
                }
                // vs: u, ..., a.to ; walk a.to -> ... -> u -> a.to
                std::reverse(vs.begin(), vs.end());
                std::reverse(es.begin(), es.end());
                cycle.vertices = vs;
                cycle.vertices.push_back(vs.front());
                // es currently lists insts from a.to->...->u then closing inst last
                // after reversal: parent chain a.to..u is es[0..m-2], closing es[m-1]
                cycle.insts = es;
                return true;
            }
            if (state[static_cast<std::size_t>(a.to)] == 0) {
                parent_inst[static_cast<std::size_t>(a.to)] = a.inst;
                parent_vertex[static_cast<std::size_t>(a.to)] = u;
                if (dfs(a.to)) return true;
            }
        }
        state[static_cast<std::size_t>(u)] = 2;
        return false;
    };

    for (int t : insts) {
        int start = ig.ends[static_cast<std::size_t>(t)].first;
        if (state[static_cast<std::size_t>(start)] == 0 && dfs(start)) return cycle;
    }
    throw ContractError("find_cycle_in: no cycle in the given edge set");
}

inline Walk rotate_cycle(const Walk& cycle, int start_vertex) {
    const std::size_t m = cycle.insts.size();
    std::size_t off = 0;
    while (off < m && cycle.vertices[off] != start_vertex) ++off;
    if (off >= m) throw ContractError("rotate_cycle: vertex not on cycle");
    Walk out;
    for (std::size_t i = 0; i <= m; ++i)
        out.vertices.push_back(cycle.vertices[(off + i) % m]);
    for (std::size_t i = 0; i < m; ++i) out.insts.push_back(cycle.insts[(off + i) % m]);
    return out;
}

// Splices an odd cycle and an ear (a-...-b, edge-disjoint, endpoints on the
// cycle) into the even simple cycle that parity forces to exist.
inline Walk even_cycle_from_ear(const Walk& cycle, const Walk& ear) {
    const std::size_t m = cycle.insts.size();
    const int a = ear.vertices.front();
    const int b = ear.vertices.back();
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (cycle.vertices[i] == a) ia = i;
        if (cycle.vertices[i] == b) ib = i;
    }
    // arc from a forward to b
    Walk arc1, arc2;
    for (std::size_t i = ia; i % m != ib % m; ++i) {
        arc1.vertices.push_back(cycle.vertices[i % m]);
        arc1.insts.push_back(cycle.insts[i % m]);
    }
    arc1.vertices.push_back(b);
    for (std::size_t i = ib; i % m != ia % m; ++i) {
        arc2.vertices.push_back(cycle.vertices[i % m]);
        arc2.insts.push_back(cycle.insts[i % m]);
    }
    arc2.vertices.push_back(a);

    // choose the arc of parity opposite to the ear, so arc + ear is even
    const Walk& arc = ((arc1.insts.size() + ear.insts.size()) % 2 == 0) ? arc1 : arc2;
    Walk out;
    bool from_a = (arc.vertices.front() == a);
    // walk the arc, then the ear back to the arc's start
    out.vertices = arc.vertices;
    out.insts = arc.insts;
    if (from_a) {
        // arc: a -> b; ear traversed b -> a
        for (std::size_t i = ear.insts.size(); i-- > 0;) {
            out.insts.push_back(ear.insts[i]);
            out.vertices.push_back(ear.vertices[i]);
        }
    } else {
        // arc: b -> a; ear traversed a -> b
        for (std::size_t i = 0; i < ear.insts.size(); ++i) {
            out.insts.push_back(ear.insts[i]);
            out.vertices.push_back(ear.vertices[i + 1]);
        }
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// find_seed
// ---------------------------------------------------------------------------

/// For a connected component with at least one edge: returns a seed
/// configuration, or nullopt when the component is exactly a simple odd
/// cycle (the one shape with no 2-good coloring).
///
/// Priority: a degree-1 vertex, then an even cycle (a parallel instance
/// pair counts), then a dumbbell of two edge-disjoint odd cycles joined by
/// a path of length >= 0.
inline std::optional<Seed> find_seed(const Graph& component) {
    using namespace detail;
    if (component.edges.empty())
        throw ContractError("find_seed: component has no edges");

    const InstGraph ig = InstGraph::build(component);
    const std::size_t nv = component.vertices.size();

    // Case: pendant vertex.
    for (std::size_t v = 0; v < nv; ++v) {
        if (component.degree(static_cast<int>(v)) == 1) {
            Seed s;
            s.kind = Seed::Kind::Degree1Vertex;
            s.vertex = static_cast<int>(v);
            return s;
        }
    }

    auto make_even_cycle = [&](const Walk& w) {
        Seed s;
        s.kind = Seed::Kind::EvenCycle;
        s.cycle_vertices = w.vertices;
        for (int t : w.insts) s.cycle_edges.push_back(ig.ref[static_cast<std::size_t>(t)]);
        return s;
    };

    // Case: parallel pair, the 2-cycle.
    {
        std::map<std::pair<int, int>, int> first_inst;
        for (std::size_t t = 0; t < ig.ends.size(); ++t) {
            auto key = std::minmax(ig.ends[t].first, ig.ends[t].second);
            auto [it, fresh] = first_inst.try_emplace({key.first, key.second},
                                                      static_cast<int>(t));
            if (!fresh) {
                Walk w;
                w.vertices = {ig.ends[t].first, ig.ends[t].second, ig.ends[t].first};
                w.insts = {it->second, static_cast<int>(t)};
                return make_even_cycle(w);
            }
        }
    }

    // Case: even cycle located by breadth-first parity.  A non-tree edge
    // joining opposite parities closes an even fundamental cycle.
    {
        std::vector<int> depth(nv, -1), par_vertex(nv, -1), par_inst(nv, -1);
        std::vector<int> queue{0};
        depth[0] = 0;
        std::vector<bool> tree_inst(ig.ends.size(), false);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (const Arc& a : ig.at[static_cast<std::size_t>(u)]) {
                if (depth[static_cast<std::size_t>(a.to)] < 0) {
                    depth[static_cast<std::size_t>(a.to)] = depth[static_cast<std::size_t>(u)] + 1;
                    par_vertex[static_cast<std::size_t>(a.to)] = u;
                    par_inst[static_cast<std::size_t>(a.to)] = a.inst;
                    tree_inst[static_cast<std::size_t>(a.inst)] = true;
                    queue.push_back(a.to);
                }
            }
        }
        for (std::size_t t = 0; t < ig.ends.size(); ++t) {
            if (tree_inst[t]) continue;
            auto [u, w] = ig.ends[t];
            if (((depth[static_cast<std::size_t>(u)] ^ depth[static_cast<std::size_t>(w)]) & 1) == 0)
                continue;
            // climb to the common ancestor
            std::vector<int> uv{u}, wv{w};
            std::vector<int> ue, we;
            int x = u, y = w;
            while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) {
                ue.push_back(par_inst[static_cast<std::size_t>(x)]);
                x = par_vertex[static_cast<std::size_t>(x)];
                uv.push_back(x);
            }
            while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) {
                we.push_back(par_inst[static_cast<std::size_t>(y)]);
                y = par_vertex[static_cast<std::size_t>(y)];
                wv.push_back(y);
            }
            while (x != y) {
                ue.push_back(par_inst[static_cast<std::size_t>(x)]);
                x = par_vertex[static_cast<std::size_t>(x)];
                uv.push_back(x);
                we.push_back(par_inst[static_cast<std::size_t>(y)]);
                y = par_vertex[static_cast<std::size_t>(y)];
                wv.push_back(y);
            }
            // walk: u -> ... -> lca -> ... -> w -> u
            Walk cyc;
            cyc.vertices = uv;
            cyc.insts = ue;
            for (std::size_t i = wv.size() - 1; i-- > 0;) {
                cyc.insts.push_back(we[i]);
                cyc.vertices.push_back(wv[i]);
            }
            cyc.insts.push_back(static_cast<int>(t));
            cyc.vertices.push_back(u);
            return make_even_cycle(cyc);
        }
    }

    // No parallel pairs and no opposite-parity non-tree edge.  Decompose
    // into blocks: any block that is not a single edge and not a cycle
    // still contains an even simple cycle, recovered through an ear.
    auto blocks = biconnected_blocks(ig, nv);
    std::vector<const Block*> cycle_blocks;
    for (const auto& b : blocks) {
        if (b.insts.size() < 2) continue;
        if (b.insts.size() == b.vertices.size()) {
            Walk c = find_cycle_in(ig, b.insts, nv);
            if (c.insts.size() % 2 == 0) return make_even_cycle(c);
            cycle_blocks.push_back(&b);
            continue;
        }
        // Non-cycle block: locate a cycle and an ear.
        Walk c = find_cycle_in(ig, b.insts, nv);
        if (c.insts.size() % 2 == 0) return make_even_cycle(c);
        std::vector<bool> on_cycle(nv, false), cycle_inst(ig.ends.size(), false);
        for (std::size_t i = 0; i < c.insts.size(); ++i) {
            on_cycle[static_cast<std::size_t>(c.vertices[i])] = true;
            cycle_inst[static_cast<std::size_t>(c.insts[i])] = true;
        }
        std::vector<bool> in_block(ig.ends.size(), false);
        for (int t : b.insts) in_block[static_cast<std::size_t>(t)] = true;

        Walk ear;
        // chord first
        for (int t : b.insts) {
            if (cycle_inst[static_cast<std::size_t>(t)]) continue;
            auto [p, q] = ig.ends[static_cast<std::size_t>(t)];
            if (on_cycle[static_cast<std::size_t>(p)] && on_cycle[static_cast<std::size_t>(q)]) {
                ear.vertices = {p, q};
                ear.insts = {t};
                break;
            }
        }
        if (ear.insts.empty()) {
            // ear through an off-cycle vertex: follow BFS from x in block - {a}
            int a = -1, x = -1, first_inst = -1;
            for (int t : b.insts) {
                if (cycle_inst[static_cast<std::size_t>(t)]) continue;
                auto [p, q] = ig.ends[static_cast<std::size_t>(t)];
                if (on_cycle[static_cast<std::size_t>(p)] && !on_cycle[static_cast<std::size_t>(q)]) {
                    a = p; x = q; first_inst = t;
                    break;
                }
                if (on_cycle[static_cast<std::size_t>(q)] && !on_cycle[static_cast<std::size_t>(p)]) {
                    a = q; x = p; first_inst = t;
                    break;
                }
            }
            if (first_inst < 0)
                throw ContractError("find_seed: malformed block (no ear start)");
            std::vector<int> pv(nv, -1), pe(nv, -1);
            std::vector<bool> visited(nv, false);
            visited[static_cast<std::size_t>(a)] = visited[static_cast<std::size_t>(x)] = true;
            std::vector<int> queue{x};
            int hit = -1;
            for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                int u = queue[qi];
                for (const Arc& arc : ig.at[static_cast<std::size_t>(u)]) {
                    if (!in_block[static_cast<std::size_t>(arc.inst)]) continue;
                    if (arc.inst == first_inst) continue;
                    if (visited[static_cast<std::size_t>(arc.to)]) continue;
                    visited[static_cast<std::size_t>(arc.to)] = true;
                    pv[static_cast<std::size_t>(arc.to)] = u;
                    pe[static_cast<std::size_t>(arc.to)] = arc.inst;
                    if (on_cycle[static_cast<std::size_t>(arc.to)]) {
                        hit = arc.to;
                        break;
                    }
                    queue.push_back(arc.to);
                }
            }
            if (hit < 0) throw ContractError("find_seed: malformed block (ear does not close)");
            std::vector<int> rv{hit};
            std::vector<int> re;
            int w = hit;
            while (w != x) {
                re.push_back(pe[static_cast<std::size_t>(w)]);
                w = pv[static_cast<std::size_t>(w)];
                rv.push_back(w);
            }
            re.push_back(first_inst);
            rv.push_back(a);
            std::reverse(rv.begin(), rv.end());
            std::reverse(re.begin(), re.end());
            ear.vertices = rv;  // a ... hit
            ear.insts = re;
        }
        return make_even_cycle(even_cycle_from_ear(c, ear));
    }

    // Everything is bridges and odd cycles now.
    if (!cycle_blocks.empty() && cycle_blocks.size() == blocks.size() &&
        cycle_blocks[0]->insts.size() == ig.ends.size())
        return std::nullopt;  // the component is one odd cycle

    if (cycle_blocks.size() < 2)
        throw ContractError("find_seed: expected two odd cycle blocks");

    const Block* b1 = cycle_blocks[0];
    const Block* b2 = cycle_blocks[1];
    std::vector<bool> excluded(ig.ends.size(), false);
    for (int t : b1->insts) excluded[static_cast<std::size_t>(t)] = true;
    for (int t : b2->insts) excluded[static_cast<std::size_t>(t)] = true;
    std::vector<bool> target(nv, false);
    for (int v : b2->vertices) target[static_cast<std::size_t>(v)] = true;

    // shortest connection from b1's vertices to b2's, avoiding both cycles
    std::vector<int> pv(nv, -1), pe(nv, -1);
    std::vector<bool> visited(nv, false);
    std::vector<int> queue;
    int hit = -1;
    for (int v : b1->vertices) {
        visited[static_cast<std::size_t>(v)] = true;
        queue.push_back(v);
        if (target[static_cast<std::size_t>(v)] && hit < 0) hit = v;
    }
    for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
        int u = queue[qi];
        for (const Arc& a : ig.at[static_cast<std::size_t>(u)]) {
            if (excluded[static_cast<std::size_t>(a.inst)]) continue;
            if (visited[static_cast<std::size_t>(a.to)]) continue;
            visited[static_cast<std::size_t>(a.to)] = true;
            pv[static_cast<std::size_t>(a.to)] = u;
            pe[static_cast<std::size_t>(a.to)] = a.inst;
            if (target[static_cast<std::size_t>(a.to)]) {
                hit = a.to;
                break;
            }
            queue.push_back(a.to);
        }
    }
    if (hit < 0) throw ContractError("find_seed: dumbbell cycles are not connected");

    std::vector<int> path_v{hit};
    std::vector<int> path_e;
    int w = hit;
    while (pv[static_cast<std::size_t>(w)] >= 0) {
        path_e.push_back(pe[static_cast<std::size_t>(w)]);
        w = pv[static_cast<std::size_t>(w)];
        path_v.push_back(w);
    }
    std::reverse(path_v.begin(), path_v.end());
    std::reverse(path_e.begin(), path_e.end());
    const int w1 = path_v.front();
    const int w2 = path_v.back();

    Walk c1 = rotate_cycle(find_cycle_in(ig, b1->insts, nv), w1);
    Walk c2 = rotate_cycle(find_cycle_in(ig, b2->insts, nv), w2);

    Seed s;
    s.kind = Seed::Kind::Dumbbell;
    s.cycle_vertices = c1.vertices;
    for (int t : c1.insts) s.cycle_edges.push_back(ig.ref[static_cast<std::size_t>(t)]);
    s.cycle2_vertices = c2.vertices;
    for (int t : c2.insts) s.cycle2_edges.push_back(ig.ref[static_cast<std::size_t>(t)]);
    s.path_vertices = path_v;
    for (int t : path_e) s.path_edges.push_back(ig.ref[static_cast<std::size_t>(t)]);
    return s;
}

/// The alternating coloring of a seed: empty for a pendant vertex; 0,1,0,...
/// along the walk for cycles and dumbbells (first cycle, then path, then
/// second cycle, anchored at the junction).
inline Coloring seed_coloring(const Graph& g, const Seed& s) {
    Coloring c;
    int next = 0;
    auto paint = [&](const std::vector<EdgeInstanceRef>& walk) {
        for (const auto& r : walk) {
            c.assign(to_set_instance(g, r), next % 2);
            ++next;
        }
    };
    switch (s.kind) {
    case Seed::Kind::Degree1Vertex:
        break;
    case Seed::Kind::EvenCycle:
        paint(s.cycle_edges);
        break;
    case Seed::Kind::Dumbbell:
        paint(s.cycle_edges);
        paint(s.path_edges);
        paint(s.cycle2_edges);
        break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// two_good_coloring
// ---------------------------------------------------------------------------

/// Total 2-coloring of the edge-instances such that every vertex of degree
/// >= 2 sees both colors, or Infeasible with an odd-cycle component as the
/// witness.  Seeds each component, then repeatedly extends maximal
/// alternating paths anchored in the colored region.
inline SplitResult two_good_coloring(const Graph& g) {
    using namespace detail;
    SplitResult res;
    res.status = SplitStatus::Feasible;

    for (const Graph& comp : split_components(g)) {
        if (comp.edges.empty()) continue;
        auto seed = find_seed(comp);
        if (!seed) {
            res.status = SplitStatus::Infeasible;
            res.coloring = Coloring{};
            res.witness = InfeasibleWitness{"odd cycle component", comp.vertices};
            return res;
        }

        const InstGraph ig = InstGraph::build(comp);
        std::vector<int> color(ig.ends.size(), -1);
        std::vector<bool> region(comp.vertices.size(), false);

        // install the seed
        {
            Coloring sc = seed_coloring(comp, *seed);
            for (std::size_t t = 0; t < ig.ends.size(); ++t) {
                auto col = sc.color_of(to_set_instance(comp, ig.ref[t]));
                if (col) {
                    color[t] = *col;
                    region[static_cast<std::size_t>(ig.ends[t].first)] = true;
                    region[static_cast<std::size_t>(ig.ends[t].second)] = true;
                }
            }
            if (seed->kind == Seed::Kind::Degree1Vertex)
                region[static_cast<std::size_t>(seed->vertex)] = true;
        }

        // alternating-path extension until every instance is colored
        while (true) {
            int start_inst = -1, start_vertex = -1;
            for (std::size_t t = 0; t < ig.ends.size() && start_inst < 0; ++t) {
                if (color[t] >= 0) continue;
                auto [a, b] = ig.ends[t];
                if (region[static_cast<std::size_t>(a)])
                    start_inst = static_cast<int>(t), start_vertex = a;
                else if (region[static_cast<std::size_t>(b)])
                    start_inst = static_cast<int>(t), start_vertex = b;
            }
            if (start_inst < 0) break;

            std::vector<int> pv{start_vertex, ig.other(start_inst, start_vertex)};
            std::vector<int> pe{start_inst};
            std::vector<bool> on_path_inst(ig.ends.size(), false);
            on_path_inst[static_cast<std::size_t>(start_inst)] = true;

            while (true) {
                int z = pv.back();
                if (region[static_cast<std::size_t>(z)]) break;
                bool repeated = false;
                for (std::size_t i = 0; i + 1 < pv.size(); ++i)
                    if (pv[i] == z) { repeated = true; break; }
                if (repeated) break;
                int next_inst = -1;
                for (const Arc& a : ig.at[static_cast<std::size_t>(z)]) {
                    if (color[static_cast<std::size_t>(a.inst)] >= 0) continue;
                    if (on_path_inst[static_cast<std::size_t>(a.inst)]) continue;
                    if (next_inst < 0 || a.inst < next_inst) next_inst = a.inst;
                }
                if (next_inst < 0) break;  // pendant dead end
                on_path_inst[static_cast<std::size_t>(next_inst)] = true;
                pe.push_back(next_inst);
                pv.push_back(ig.other(next_inst, z));
            }

            for (std::size_t i = 0; i < pe.size(); ++i)
                color[static_cast<std::size_t>(pe[i])] = static_cast<int>(i % 2);
            for (int v : pv) region[static_cast<std::size_t>(v)] = true;
        }

        for (std::size_t t = 0; t < ig.ends.size(); ++t)
            res.coloring.assign(to_set_instance(comp, ig.ref[t]), color[t]);
    }
    return res;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

inline std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph cover {\n";
    for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
    for (const auto& e : g.edges)
        for (std::uint32_t c = 0; c < e.mult; ++c)
            os << "  \"" << g.vertices[static_cast<std::size_t>(e.u)] << "\" -- \""
               << g.vertices[static_cast<std::size_t>(e.v)] << "\" [label=\"" << e.set_id
               << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace graphs
} // namespace covers

#endif // COVERS_GRAPHS_HPP
