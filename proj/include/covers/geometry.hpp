#ifndef COVERS_GEOMETRY_HPP
#define COVERS_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "covers/core.hpp"

namespace covers {
namespace geometry {

using Rat = boost::rational<long long>;

struct RatPoint {
    Rat x, y;
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

/// Closed axis-parallel rectangle.
struct RatRect {
    Rat x_min, x_max, y_min, y_max;

    bool contains(const RatPoint& p) const {
        return x_min <= p.x && p.x <= x_max && y_min <= p.y && p.y <= y_max;
    }
};

// ---------------------------------------------------------------------------
// Truncated tree cover: points are the sequences over {0..b} of length <= d;
// the set attached to a child sigma^n holds sigma itself plus every depth-d
// sequence extending sigma^n.  Internal nodes end up (b+1)-fold, depth-d
// nodes d-fold.
// ---------------------------------------------------------------------------

struct TreeCoverParams {
    int b = 1;  // child labels run 0..b
    int d = 1;  // truncation depth
};

namespace detail {

using Node = std::vector<int>;

inline std::string node_id(const Node& n) {
    if (n.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(n[i]);
    }
    return s;
}

inline std::string set_id_for(const Node& child) { return "C" + node_id(child); }

/// All sequences of length <= d in breadth-first order.
inline std::vector<Node> enumerate_nodes(const TreeCoverParams& p) {
    std::vector<Node> nodes{{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= p.d; ++len) {
        std::size_t level_end = nodes.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (int c = 0; c <= p.b; ++c) {
                Node child = nodes[i];
                child.push_back(c);
                nodes.push_back(std::move(child));
            }
        level_begin = level_end;
    }
    return nodes;
}

inline void check_params(const TreeCoverParams& p) {
    if (p.b < 1 || p.d < 1)
        throw DomainError("tree cover: b and d must be at least 1");
    // desk-scale guard, also keeps rational denominators within range
    double count = 0, pw = 1;
    for (int l = 0; l <= p.d; ++l) {
        count += pw;
        pw *= p.b + 1;
    }
    if (count > 2e6) throw DomainError("tree cover: too many nodes for desk scale");
    double denom = 1;
    for (int l = 0; l < p.d; ++l) denom *= 2 * p.b + 1;
    if (denom >= 2147483648.0)
        throw DomainError("tree cover: subdivision too deep for exact arithmetic");
}

} // namespace detail

inline CoverInstance gen_tree_cover(const TreeCoverParams& p) {
    detail::check_params(p);
    CoverInstance inst;
    inst.kind = CoverKind::Tree;

    auto nodes = detail::enumerate_nodes(p);
    for (const auto& n : nodes) inst.points.push_back(detail::node_id(n));

    for (const auto& sigma : nodes) {
        if (static_cast<int>(sigma.size()) >= p.d) continue;
        for (int c = 0; c <= p.b; ++c) {
            detail::Node child = sigma;
            child.push_back(c);
            CoverSet s;
            s.id = detail::set_id_for(child);
            s.members.push_back(detail::node_id(sigma));
            // depth-d extensions of child, in breadth-first-compatible order
            std::vector<detail::Node> frontier{child};
            while (static_cast<int>(frontier.front().size()) < p.d) {
                std::vector<detail::Node> next;
                for (const auto& f : frontier)
                    for (int cc = 0; cc <= p.b; ++cc) {
                        detail::Node g = f;
                        g.push_back(cc);
                        next.push_back(std::move(g));
                    }
                frontier = std::move(next);
            }
            for (const auto& leaf : frontier) s.members.push_back(detail::node_id(leaf));
            inst.sets.push_back(std::move(s));
        }
    }
    return inst;
}

/// Recovers (b, d) from a tree cover instance and checks it is exactly what
/// gen_tree_cover produces.
inline TreeCoverParams tree_params_of(const CoverInstance& inst) {
    int d = 0, b = 0;
    for (const auto& pid : inst.points) {
        if (pid == "e") continue;
        int len = 1, label = 0;
        bool any = false;
        for (char ch : pid) {
            if (ch == '.') {
                ++len;
                label = 0;
                continue;
            }
            if (ch < '0' || ch > '9')
                throw ContractError("not a tree cover instance: bad point id \"" + pid + "\"");
            label = label * 10 + (ch - '0');
            any = true;
            b = std::max(b, label);
        }
        if (!any) throw ContractError("not a tree cover instance: bad point id \"" + pid + "\"");
        d = std::max(d, len);
    }
    TreeCoverParams p{std::max(b, 1), std::max(d, 1)};
    CoverInstance expect = gen_tree_cover(p);
    if (expect.points != inst.points || expect.sets.size() != inst.sets.size())
        throw ContractError("not a tree cover instance");
    for (std::size_t i = 0; i < inst.sets.size(); ++i)
        if (expect.sets[i].id != inst.sets[i].id ||
            expect.sets[i].members != inst.sets[i].members ||
            expect.sets[i].mult != inst.sets[i].mult)
            throw ContractError("not a tree cover instance");
    return p;
}

// ---------------------------------------------------------------------------
// adversary_walk: for any 2-labeling of the sets, one part misses a point.
// Either part 0 already misses a node, or the greedy branch choice builds a
// depth-d node all of whose covering sets lie in part 0.
// ---------------------------------------------------------------------------

struct FailureWitness {
    int part = 0;               // the part that misses a point
    PointId missed_node;
    std::vector<int> path;      // the greedy sequence built so far
};

inline FailureWitness adversary_walk(const CoverInstance& tc, const std::vector<int>& partition) {
    TreeCoverParams p = tree_params_of(tc);
    if (partition.size() != tc.sets.size())
        throw ContractError("adversary_walk: partition size does not match the set count");
    for (int v : partition)
        if (v != 0 && v != 1)
            throw ContractError("adversary_walk: partition labels must be 0 or 1");

    std::map<std::string, int> set_index;
    for (std::size_t i = 0; i < tc.sets.size(); ++i) set_index[tc.sets[i].id] = static_cast<int>(i);
    auto label_of_child = [&](const detail::Node& child) {
        return partition[static_cast<std::size_t>(set_index.at(detail::set_id_for(child)))];
    };

    // A node is covered by part 0 iff one of its covering sets has label 0.
    auto nodes = detail::enumerate_nodes(p);
    for (const auto& n : nodes) {
        bool covered = false;
        if (static_cast<int>(n.size()) < p.d) {
            for (int c = 0; c <= p.b && !covered; ++c) {
                detail::Node child = n;
                child.push_back(c);
                covered = (label_of_child(child) == 0);
            }
        } else {
            for (std::size_t k = 1; k <= n.size() && !covered; ++k) {
                detail::Node prefix(n.begin(), n.begin() + static_cast<long>(k));
                covered = (label_of_child(prefix) == 0);
            }
        }
        if (!covered)
            return FailureWitness{0, detail::node_id(n), {}};
    }

    // Part 0 covers everything; walk down always staying in part 0.
    detail::Node s;
    for (int step = 0; step < p.d; ++step) {
        int chosen = -1;
        for (int c = 0; c <= p.b; ++c) {
            detail::Node child = s;
            child.push_back(c);
            if (label_of_child(child) == 0) {
                chosen = c;
                break;
            }
        }
        if (chosen < 0)
            throw ContractError("adversary_walk: internal node uncovered after the cover check");
        s.push_back(chosen);
    }
    return FailureWitness{1, detail::node_id(s), s};
}

// ---------------------------------------------------------------------------
// Indicator cover: points are the 0/1 vectors of length m with at least t
// ones, sets H_i collect the vectors with a 1 in coordinate i.
// ---------------------------------------------------------------------------

inline CoverInstance gen_indicator_cover(int m, int t) {
    if (m < 2) throw DomainError("gen_indicator_cover: m must be at least 2");
    if (t < 1 || t > (m + 1) / 2)
        throw DomainError("gen_indicator_cover: t must satisfy 1 <= t <= ceil(m/2)");
    if (m > 20) throw DomainError("gen_indicator_cover: m too large for desk scale");

    CoverInstance inst;
    inst.kind = CoverKind::Indicator;
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t v = 1; v < (1u << m); ++v) {
        if (__builtin_popcount(v) < t) continue;
        chosen.push_back(v);
        std::string id;
        for (int i = 0; i < m; ++i) id += ((v >> i) & 1) ? '1' : '0';
        inst.points.push_back(id);
    }
    for (int i = 0; i < m; ++i) {
        CoverSet s;
        s.id = "H" + std::to_string(i);
        for (std::size_t j = 0; j < chosen.size(); ++j)
            if ((chosen[j] >> i) & 1) s.members.push_back(inst.points[j]);
        inst.sets.push_back(std::move(s));
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Exact-rational realization by closed axis-parallel rectangles.
//
// The root interval [0,1] is subdivided into 2b+1 equal parts per level;
// child n takes part 2n, so siblings are separated by gaps while child 0
// shares its parent's minimum and child b the maximum.  Internal nodes map
// to distinct points of the open segment (-1,1)..(0,2); a depth-d node maps
// to (z, z) with z the minimum of its interval.  The rectangle of a child
// set spans from the parent's segment point (upper left) down to
// (max I_child, min I_child).
// ---------------------------------------------------------------------------

struct RectScene {
    TreeCoverParams params;
    std::vector<std::string> node_order;                      // BFS order
    std::map<std::string, std::pair<Rat, Rat>> intervals;     // I_sigma per node
    std::map<std::string, RatPoint> f1_points;                // internal nodes
    std::map<std::string, RatPoint> f2_points;                // depth-d nodes
    std::map<std::string, RatRect> rects;                     // per set id
};

inline RectScene realize_rectangles(const TreeCoverParams& p) {
    detail::check_params(p);
    RectScene scene;
    scene.params = p;

    auto nodes = detail::enumerate_nodes(p);
    for (const auto& n : nodes) scene.node_order.push_back(detail::node_id(n));

    // intervals, top down
    scene.intervals[detail::node_id(detail::Node{})] = {Rat(0), Rat(1)};
    for (const auto& sigma : nodes) {
        if (static_cast<int>(sigma.size()) >= p.d) continue;
        auto [u, v] = scene.intervals.at(detail::node_id(sigma));
        Rat w = (v - u) / Rat(2 * p.b + 1);
        for (int c = 0; c <= p.b; ++c) {
            detail::Node child = sigma;
            child.push_back(c);
            Rat lo = u + Rat(2 * c) * w;
            scene.intervals[detail::node_id(child)] = {lo, lo + w};
        }
    }

    // segment points for internal nodes, by breadth-first rank
    long long internal_count = 0;
    for (const auto& n : nodes)
        if (static_cast<int>(n.size()) < p.d) ++internal_count;
    long long rank = 0;
    for (const auto& n : nodes) {
        const std::string id = detail::node_id(n);
        if (static_cast<int>(n.size()) < p.d) {
            ++rank;
            Rat x = Rat(-1) + Rat(rank, internal_count + 1);
            scene.f1_points[id] = RatPoint{x, x + Rat(2)};
        } else {
            Rat z = scene.intervals.at(id).first;
            scene.f2_points[id] = RatPoint{z, z};
        }
    }

    // rectangles
    for (const auto& sigma : nodes) {
        if (static_cast<int>(sigma.size()) >= p.d) continue;
        const RatPoint& phi = scene.f1_points.at(detail::node_id(sigma));
        for (int c = 0; c <= p.b; ++c) {
            detail::Node child = sigma;
            child.push_back(c);
            auto [lo, hi] = scene.intervals.at(detail::node_id(child));
            scene.rects[detail::set_id_for(child)] = RatRect{phi.x, hi, lo, phi.y};
        }
    }
    return scene;
}

/// True iff, for every cover set, the realized points inside its closed
/// rectangle are exactly the images of the set's members.  All comparisons
/// are exact.
inline bool check_incidence_isomorphism(const RectScene& scene, const CoverInstance& tc) {
    TreeCoverParams p = tree_params_of(tc);
    if (p.b != scene.params.b || p.d != scene.params.d)
        throw ContractError("check_incidence_isomorphism: scene and instance parameters differ");

    auto point_of = [&](const std::string& node) -> const RatPoint& {
        auto it = scene.f1_points.find(node);
        if (it != scene.f1_points.end()) return it->second;
        return scene.f2_points.at(node);
    };

    for (const auto& s : tc.sets) {
        const RatRect& rect = scene.rects.at(s.id);
        std::set<std::string> members(s.members.begin(), s.members.end());
        for (const auto& node : scene.node_order) {
            const bool inside = rect.contains(point_of(node));
            if (inside != (members.count(node) > 0)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// SVG export
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace detail

/// Deterministic rendering: the rectangle family, the segment and diagonal
/// points, and the nested interval strip below the x axis.
inline std::string export_svg(const RectScene& scene) {
    const double scale = 320.0;
    const double xmin = -1.1, xmax = 1.1;
    const double strip_base = -0.15, strip_step = 0.1;
    const double ymin = strip_base - strip_step * (scene.params.d + 1), ymax = 2.1;
    auto X = [&](double wx) { return (wx - xmin) * scale; };
    auto Y = [&](double wy) { return (ymax - wy) * scale; };
    auto d = [](const Rat& r) {
        return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(X(xmax))
       << "\" height=\"" << detail::fmt(Y(ymin)) << "\" viewBox=\"0 0 " << detail::fmt(X(xmax))
       << " " << detail::fmt(Y(ymin)) << "\">\n";

    for (const auto& [set_id, r] : scene.rects) {
        os << "  <rect x=\"" << detail::fmt(X(d(r.x_min))) << "\" y=\"" << detail::fmt(Y(d(r.y_max)))
           << "\" width=\"" << detail::fmt((d(r.x_max) - d(r.x_min)) * scale) << "\" height=\""
           << detail::fmt((d(r.y_max) - d(r.y_min)) * scale)
           << "\" fill=\"#4878a8\" fill-opacity=\"0.06\" stroke=\"#4878a8\" stroke-width=\"1\">"
           << "<title>" << set_id << "</title></rect>\n";
    }

    // interval strip, one row per depth
    std::map<std::string, int> depth_of;
    for (const auto& id : scene.node_order)
        depth_of[id] = (id == "e") ? 0
                                   : 1 + static_cast<int>(std::count(id.begin(), id.end(), '.'));
    for (const auto& id : scene.node_order) {
        const auto& [lo, hi] = scene.intervals.at(id);
        double y = strip_base - strip_step * depth_of[id];
        os << "  <line x1=\"" << detail::fmt(X(d(lo))) << "\" y1=\"" << detail::fmt(Y(y))
           << "\" x2=\"" << detail::fmt(X(d(hi))) << "\" y2=\"" << detail::fmt(Y(y))
           << "\" stroke=\"#777777\" stroke-width=\"2\"><title>I " << id << "</title></line>\n";
    }

    for (const auto& [id, pt] : scene.f1_points)
        os << "  <circle cx=\"" << detail::fmt(X(d(pt.x))) << "\" cy=\"" << detail::fmt(Y(d(pt.y)))
           << "\" r=\"2.5\" fill=\"#222222\"><title>" << id << "</title></circle>\n";
    for (const auto& [id, pt] : scene.f2_points)
        os << "  <circle cx=\"" << detail::fmt(X(d(pt.x))) << "\" cy=\"" << detail::fmt(Y(d(pt.y)))
           << "\" r=\"2.5\" fill=\"#b03030\"><title>" << id << "</title></circle>\n";

    os << "</svg>\n";
    return os.str();
}

} // namespace geometry
} // namespace covers

#endif // COVERS_GEOMETRY_HPP
