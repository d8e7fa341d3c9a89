#ifndef COVERS_INTERVALS_HPP
#define COVERS_INTERVALS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "covers/core.hpp"

namespace covers {
namespace intervals {

// ---------------------------------------------------------------------------
// Covers of a finite linear order by convex sets (intervals of positions).
// ---------------------------------------------------------------------------

struct IntervalEntry {
    std::string id;
    int lo = 0;
    int hi = 0;
    std::uint32_t mult = 1;

    bool contains(int p) const { return lo <= p && p <= hi; }
};

struct LinearCover {
    std::vector<PointId> order;  // position -> point id
    std::vector<IntervalEntry> sets;

    int n() const { return static_cast<int>(order.size()); }
};

/// Interprets an instance along the given total order.  Every nonempty set
/// must occupy a contiguous block of positions; empty sets are dropped
/// (they cover nothing and have no interval form).
inline LinearCover to_interval_cover(const CoverInstance& inst,
                                     const std::vector<PointId>& order) {
    std::map<PointId, int> pos;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!pos.emplace(order[i], static_cast<int>(i)).second)
            throw ContractError("to_interval_cover: duplicate point \"" + order[i] +
                                "\" in order");
    }
    if (pos.size() != inst.points.size())
        throw ContractError("to_interval_cover: order must be a permutation of the points");
    for (const auto& p : inst.points)
        if (!pos.count(p))
            throw ContractError("to_interval_cover: order is missing point \"" + p + "\"");

    LinearCover lc;
    lc.order = order;
    for (const auto& s : inst.sets) {
        if (s.members.empty()) continue;
        std::vector<int> ps;
        for (const auto& m : s.members) ps.push_back(pos.at(m));
        std::sort(ps.begin(), ps.end());
        for (std::size_t i = 1; i < ps.size(); ++i)
            if (ps[i] != ps[i - 1] + 1)
                throw ShapeError("set \"" + s.id + "\" is not convex in the given order: gap at position " +
                                 std::to_string(ps[i - 1] + 1));
        lc.sets.push_back(IntervalEntry{s.id, ps.front(), ps.back(), s.mult});
    }
    return lc;
}

inline CoverInstance interval_to_instance(const LinearCover& lc) {
    CoverInstance inst;
    inst.kind = CoverKind::Interval;
    inst.points = lc.order;
    for (const auto& s : lc.sets) {
        CoverSet cs;
        cs.id = s.id;
        cs.mult = s.mult;
        for (int p = s.lo; p <= s.hi; ++p)
            cs.members.push_back(lc.order[static_cast<std::size_t>(p)]);
        inst.sets.push_back(std::move(cs));
    }
    return inst;
}

namespace detail {

struct Inst {
    int set = 0;          // index into lc.sets
    std::uint32_t copy = 0;
};

inline std::vector<Inst> expand(const LinearCover& lc) {
    std::vector<Inst> out;
    for (std::size_t s = 0; s < lc.sets.size(); ++s)
        for (std::uint32_t c = 0; c < lc.sets[s].mult; ++c)
            out.push_back(Inst{static_cast<int>(s), c});
    return out;
}

inline SetInstance to_set_instance(const LinearCover& lc, Inst i) {
    return SetInstance{lc.sets[static_cast<std::size_t>(i.set)].id, i.copy};
}

inline std::vector<int> fold_profile(const LinearCover& lc) {
    std::vector<int> fold(static_cast<std::size_t>(lc.n()), 0);
    for (const auto& s : lc.sets)
        for (int p = s.lo; p <= s.hi; ++p) fold[static_cast<std::size_t>(p)] += static_cast<int>(s.mult);
    return fold;
}

// First constrained position in [lo, hi] missing one of 0..k-1, or -1.
inline int first_violation(const LinearCover& lc, const Coloring& c, int k, int lo, int hi) {
    std::vector<int> fold = fold_profile(lc);
    for (int p = lo; p <= hi; ++p) {
        if (fold[static_cast<std::size_t>(p)] < k) continue;
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        for (const auto& [si, color] : c.assignments) {
            if (color >= k) continue;
            // locate the set by id
            for (const auto& s : lc.sets) {
                if (s.id == si.set_id && s.contains(p)) {
                    seen[static_cast<std::size_t>(color)] = true;
                    break;
                }
            }
        }
        for (int i = 0; i < k; ++i)
            if (!seen[static_cast<std::size_t>(i)]) return p;
    }
    return -1;
}

} // namespace detail

// ---------------------------------------------------------------------------
// sweep_split: one left-to-right pass.  Each color keeps a responsible
// instance; at a position of fold >= k, every color whose responsible does
// not reach it is handed a fresh unassigned instance through that position,
// the one stretching farthest right (ties by id, then copy).
// ---------------------------------------------------------------------------

inline SplitResult sweep_split(const LinearCover& lc, int k) {
    if (k < 1) throw DomainError("sweep_split: k must be positive");
    auto instances = detail::expand(lc);
    auto fold = detail::fold_profile(lc);

    std::vector<int> value(instances.size(), -1);
    std::vector<int> responsible(static_cast<std::size_t>(k), -1);

    SplitResult res;
    for (int p = 0; p < lc.n(); ++p) {
        if (fold[static_cast<std::size_t>(p)] < k) continue;
        for (int color = 0; color < k; ++color) {
            int r = responsible[static_cast<std::size_t>(color)];
            if (r >= 0 && lc.sets[static_cast<std::size_t>(instances[static_cast<std::size_t>(r)].set)].contains(p))
                continue;
            int best = -1;
            for (std::size_t t = 0; t < instances.size(); ++t) {
                if (value[t] >= 0) continue;
                const auto& s = lc.sets[static_cast<std::size_t>(instances[t].set)];
                if (!s.contains(p)) continue;
                if (best < 0) {
                    best = static_cast<int>(t);
                    continue;
                }
                const auto& bs = lc.sets[static_cast<std::size_t>(instances[static_cast<std::size_t>(best)].set)];
                if (s.hi > bs.hi || (s.hi == bs.hi && s.id < bs.id))
                    best = static_cast<int>(t);
            }
            if (best < 0) {
                res.status = SplitStatus::Infeasible;
                res.witness = InfeasibleWitness{
                    "position short of instances",
                    {lc.order[static_cast<std::size_t>(p)]}};
                return res;
            }
            value[static_cast<std::size_t>(best)] = color;
            responsible[static_cast<std::size_t>(color)] = best;
        }
    }

    res.status = SplitStatus::Feasible;
    for (std::size_t t = 0; t < instances.size(); ++t)
        if (value[t] >= 0) res.coloring.assign(detail::to_set_instance(lc, instances[t]), value[t]);
    return res;
}

// ---------------------------------------------------------------------------
// merge_at_point: combines a coloring that is k-good left of y with one
// that is k-good right of y into one k-good over the union.
//
// Assignments to sets disjoint from the relevant half are dropped, so an
// instance assigned on both sides necessarily crosses y.  Per color the
// crossing instances are thinned to one representative (minimal lo on the
// left, maximal hi on the right); representatives shared by both sides
// induce the color bijection f, which is completed in ascending order.
// ---------------------------------------------------------------------------

namespace detail {

inline Coloring merge_range(const LinearCover& lc, const Coloring& c_left,
                            const Coloring& c_right, int lo, int hi, int y, int k,
                            bool check_preconditions) {
    auto set_of = [&](const SetInstance& si) -> const IntervalEntry& {
        for (const auto& s : lc.sets)
            if (s.id == si.set_id) return s;
        throw ContractError("merge_at_point: coloring references unknown set \"" + si.set_id +
                            "\"");
    };

    if (y < lo || y > hi)
        throw ContractError("merge_at_point: split position outside the range");
    if (check_preconditions) {
        int v = first_violation(lc, c_left, k, lo, y);
        if (v >= 0)
            throw ContractError("merge_at_point: left coloring is not " + std::to_string(k) +
                                "-good at position " + std::to_string(v));
        v = first_violation(lc, c_right, k, y, hi);
        if (v >= 0)
            throw ContractError("merge_at_point: right coloring is not " + std::to_string(k) +
                                "-good at position " + std::to_string(v));
    }

    // Keep only assignments whose set meets the relevant half.
    std::map<SetInstance, Color> left, right;
    for (const auto& [si, c] : c_left.assignments)
        if (set_of(si).lo <= y && set_of(si).hi >= lo) left[si] = c;
    for (const auto& [si, c] : c_right.assignments)
        if (set_of(si).hi >= y && set_of(si).lo <= hi) right[si] = c;

    auto crosses = [&](const SetInstance& si) { return set_of(si).contains(y); };

    // Thin crossing instances to one representative per color.
    std::vector<std::optional<SetInstance>> left_rep(static_cast<std::size_t>(k));
    std::vector<std::optional<SetInstance>> right_rep(static_cast<std::size_t>(k));
    for (const auto& [si, c] : left) {
        if (c >= k || !crosses(si)) continue;
        auto& rep = left_rep[static_cast<std::size_t>(c)];
        if (!rep || set_of(si).lo < set_of(*rep).lo) rep = si;
    }
    for (const auto& [si, c] : right) {
        if (c >= k || !crosses(si)) continue;
        auto& rep = right_rep[static_cast<std::size_t>(c)];
        if (!rep || set_of(si).hi > set_of(*rep).hi) rep = si;
    }
    for (auto it = left.begin(); it != left.end();) {
        if (it->second < k && crosses(it->first) &&
            !(left_rep[static_cast<std::size_t>(it->second)] &&
              *left_rep[static_cast<std::size_t>(it->second)] == it->first))
            it = left.erase(it);
        else
            ++it;
    }
    for (auto it = right.begin(); it != right.end();) {
        if (it->second < k && crosses(it->first) &&
            !(right_rep[static_cast<std::size_t>(it->second)] &&
              *right_rep[static_cast<std::size_t>(it->second)] == it->first))
            it = right.erase(it);
        else
            ++it;
    }

    // f: left color -> right color, seeded by shared representatives.
    std::vector<int> f(static_cast<std::size_t>(k), -1);
    std::vector<bool> right_used(static_cast<std::size_t>(k), false);
    for (int i = 0; i < k; ++i) {
        if (!left_rep[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < k; ++j) {
            if (right_rep[static_cast<std::size_t>(j)] &&
                *right_rep[static_cast<std::size_t>(j)] == *left_rep[static_cast<std::size_t>(i)]) {
                f[static_cast<std::size_t>(i)] = j;
                right_used[static_cast<std::size_t>(j)] = true;
                break;
            }
        }
    }
    for (int i = 0; i < k; ++i) {
        if (f[static_cast<std::size_t>(i)] >= 0) continue;
        for (int j = 0; j < k; ++j) {
            if (!right_used[static_cast<std::size_t>(j)]) {
                f[static_cast<std::size_t>(i)] = j;
                right_used[static_cast<std::size_t>(j)] = true;
                break;
            }
        }
    }
    std::vector<int> f_inv(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) f_inv[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] = i;

    // Left assignments keep their color; right-only assignments are renamed.
    Coloring merged;
    for (const auto& [si, c] : left) merged.assignments[si] = c;
    for (const auto& [si, c] : right) {
        if (merged.assignments.count(si)) continue;
        merged.assignments[si] = (c < k) ? f_inv[static_cast<std::size_t>(c)] : c;
    }
    return merged;
}

} // namespace detail

inline Coloring merge_at_point(const LinearCover& lc, const Coloring& c_left,
                               const Coloring& c_right, int y, int k) {
    if (k < 1) throw DomainError("merge_at_point: k must be positive");
    if (lc.n() == 0) throw ContractError("merge_at_point: empty order");
    return detail::merge_range(lc, c_left, c_right, 0, lc.n() - 1, y, k, true);
}

// ---------------------------------------------------------------------------
// divide_and_conquer_split: decomposes into co-membership classes, splits
// each class at its median position, and recombines with merge_at_point.
// Base cases handle ranges of one and two positions directly.
// ---------------------------------------------------------------------------

namespace detail {

// Greedy direct assignment at one position on top of an existing coloring.
inline void base_assign(const LinearCover& lc, const std::vector<Inst>& instances,
                        const std::vector<int>& fold, Coloring& c, int p, int k) {
    if (fold[static_cast<std::size_t>(p)] < k) return;
    std::vector<bool> color_present(static_cast<std::size_t>(k), false);
    for (const auto& [si, col] : c.assignments) {
        if (col >= k) continue;
        for (const auto& s : lc.sets)
            if (s.id == si.set_id && s.contains(p)) {
                color_present[static_cast<std::size_t>(col)] = true;
                break;
            }
    }
    for (int color = 0; color < k; ++color) {
        if (color_present[static_cast<std::size_t>(color)]) continue;
        int best = -1;
        for (std::size_t t = 0; t < instances.size(); ++t) {
            const auto& s = lc.sets[static_cast<std::size_t>(instances[t].set)];
            if (!s.contains(p)) continue;
            if (c.assignments.count(to_set_instance(lc, instances[t]))) continue;
            if (best < 0) {
                best = static_cast<int>(t);
                continue;
            }
            const auto& bs = lc.sets[static_cast<std::size_t>(instances[static_cast<std::size_t>(best)].set)];
            if (s.hi > bs.hi || (s.hi == bs.hi && s.id < bs.id)) best = static_cast<int>(t);
        }
        if (best < 0)
            throw ContractError("divide_and_conquer_split: position " + std::to_string(p) +
                                " lacks instances for all colors");
        c.assign(to_set_instance(lc, instances[static_cast<std::size_t>(best)]), color);
    }
}

inline Coloring dnc_range(const LinearCover& lc, const std::vector<Inst>& instances,
                          const std::vector<int>& fold, int lo, int hi, int k) {
    if (lo == hi) {
        Coloring c;
        base_assign(lc, instances, fold, c, lo, k);
        return c;
    }
    if (hi == lo + 1) {
        Coloring c;
        base_assign(lc, instances, fold, c, lo, k);
        base_assign(lc, instances, fold, c, hi, k);
        return c;
    }
    const int y = lo + (hi - lo) / 2;
    Coloring cl = dnc_range(lc, instances, fold, lo, y, k);
    Coloring cr = dnc_range(lc, instances, fold, y, hi, k);
    return merge_range(lc, cl, cr, lo, hi, y, k, true);
}

} // namespace detail

inline SplitResult divide_and_conquer_split(const LinearCover& lc, int k) {
    if (k < 1) throw DomainError("divide_and_conquer_split: k must be positive");
    auto instances = detail::expand(lc);
    auto fold = detail::fold_profile(lc);

    // Maximal runs of covered positions glued by sets spanning consecutive
    // positions: exactly the classes of the co-membership relation.
    std::vector<bool> linked(static_cast<std::size_t>(std::max(0, lc.n() - 1)), false);
    for (const auto& s : lc.sets)
        for (int p = s.lo; p < s.hi; ++p) linked[static_cast<std::size_t>(p)] = true;

    SplitResult res;
    res.status = SplitStatus::Feasible;
    int p = 0;
    while (p < lc.n()) {
        if (fold[static_cast<std::size_t>(p)] == 0) {
            ++p;
            continue;
        }
        int q = p;
        while (q + 1 < lc.n() && linked[static_cast<std::size_t>(q)]) ++q;
        Coloring part = detail::dnc_range(lc, instances, fold, p, q, k);
        for (const auto& [si, c] : part.assignments) res.coloring.assignments[si] = c;
        p = q + 1;
    }
    return res;
}

// ---------------------------------------------------------------------------
// thin_locally_finite: breadth layering from z with at most two selected
// sets per layer.  The result covers [z, n-1] while a position of layer m
// belongs to no selected set of layer m+2 or later.
// ---------------------------------------------------------------------------

struct ThinningSelection {
    std::vector<std::vector<int>> layers;               // positions, per layer
    std::vector<std::pair<int, SetInstance>> selected;  // (layer, instance)

    std::vector<SetInstance> subcover() const {
        std::vector<SetInstance> out;
        for (const auto& [layer, si] : selected) {
            (void)layer;
            if (std::find(out.begin(), out.end(), si) == out.end()) out.push_back(si);
        }
        return out;
    }
};

inline ThinningSelection thin_locally_finite(const LinearCover& lc, int z) {
    if (z < 0 || z >= lc.n())
        throw ContractError("thin_locally_finite: z outside the order");
    auto fold = detail::fold_profile(lc);
    for (int p = z; p < lc.n(); ++p)
        if (fold[static_cast<std::size_t>(p)] == 0)
            throw ContractError("thin_locally_finite: position " + std::to_string(p) +
                                " of [z, n) is uncovered");

    auto instances = detail::expand(lc);
    auto interval_of = [&](std::size_t t) -> const IntervalEntry& {
        return lc.sets[static_cast<std::size_t>(instances[t].set)];
    };
    // deterministic choice: maximal hi, then set order, then copy
    auto pick = [&](auto&& eligible) -> int {
        int best = -1;
        for (std::size_t t = 0; t < instances.size(); ++t) {
            if (!eligible(t)) continue;
            if (best < 0 || interval_of(t).hi > interval_of(static_cast<std::size_t>(best)).hi)
                best = static_cast<int>(t);
        }
        return best;
    };

    ThinningSelection sel;
    // Layers are consecutive position blocks; eras restart where no set
    // reaches (separate co-membership classes right of z).
    struct LayerInfo { int first, last, era_first_layer; };
    std::vector<LayerInfo> info;
    int next_pos = z;
    while (next_pos < lc.n()) {
        // start of an era
        int era_first = static_cast<int>(info.size());
        info.push_back(LayerInfo{next_pos, next_pos, era_first});
        sel.layers.push_back({next_pos});
        int frontier = next_pos;
        while (true) {
            // extent reachable in one set from the current layer
            int reach = frontier;
            for (std::size_t t = 0; t < instances.size(); ++t) {
                const auto& s = interval_of(t);
                if (s.lo <= frontier && s.hi > frontier &&
                    s.hi >= info.back().first)  // meets the layer
                    reach = std::max(reach, s.hi);
            }
            if (reach == frontier) break;
            info.push_back(LayerInfo{frontier + 1, std::min(reach, lc.n() - 1), era_first});
            std::vector<int> layer_positions;
            for (int q = frontier + 1; q <= std::min(reach, lc.n() - 1); ++q)
                layer_positions.push_back(q);
            sel.layers.push_back(layer_positions);
            frontier = std::min(reach, lc.n() - 1);
            if (frontier == lc.n() - 1) break;
        }
        next_pos = frontier + 1;
    }

    // Selection per layer.
    for (std::size_t m = 0; m < info.size(); ++m) {
        const auto& L = info[m];
        bool era_start = (static_cast<int>(m) == L.era_first_layer);
        bool era_last = (m + 1 >= info.size() || info[m + 1].era_first_layer != L.era_first_layer);
        if (era_start) {
            int t = pick([&](std::size_t i) { return interval_of(i).contains(L.first); });
            sel.selected.emplace_back(static_cast<int>(m),
                                      detail::to_set_instance(lc, instances[static_cast<std::size_t>(t)]));
            continue;
        }
        const auto& prev = info[m - 1];
        if (era_last) {
            // single set: contains the maximum of this layer and meets the previous
            int t = pick([&](std::size_t i) {
                return interval_of(i).contains(L.last) && interval_of(i).lo <= prev.last;
            });
            sel.selected.emplace_back(static_cast<int>(m),
                                      detail::to_set_instance(lc, instances[static_cast<std::size_t>(t)]));
            continue;
        }
        // two sets: one through the first position of the next layer,
        // plus a predecessor through that set's entry point
        const int y = info[m + 1].first;
        int t1 = pick([&](std::size_t i) {
            return interval_of(i).contains(y) && interval_of(i).lo <= L.last;
        });
        if (t1 < 0)
            throw ContractError("thin_locally_finite: layering is inconsistent");
        const int y_prime = std::max(interval_of(static_cast<std::size_t>(t1)).lo, L.first);
        int t2 = pick([&](std::size_t i) {
            return interval_of(i).contains(y_prime) && interval_of(i).lo <= prev.last;
        });
        if (t2 < 0)
            throw ContractError("thin_locally_finite: layering is inconsistent");
        sel.selected.emplace_back(static_cast<int>(m),
                                  detail::to_set_instance(lc, instances[static_cast<std::size_t>(t1)]));
        if (t2 != t1)
            sel.selected.emplace_back(static_cast<int>(m),
                                      detail::to_set_instance(lc, instances[static_cast<std::size_t>(t2)]));
    }
    return sel;
}

// ---------------------------------------------------------------------------
// layered_peel: strips inclusion-minimal subcovers of the covered universe
// until the remaining instances no longer cover it.  A diagnostic; no
// k-goodness is claimed.
// ---------------------------------------------------------------------------

struct Layering {
    std::vector<std::vector<SetInstance>> layers;
    std::vector<SetInstance> residual;
};

inline Layering layered_peel(const CoverInstance& inst) {
    Layering out;
    std::vector<PointId> universe;
    for (const auto& [p, f] : coverage_profile(inst))
        if (f > 0) universe.push_back(p);

    auto members_of = [&](const SetInstance& si) -> const std::vector<PointId>& {
        return inst.find_set(si.set_id)->members;
    };

    std::vector<SetInstance> remaining = expand_multiplicity(inst);
    if (universe.empty()) {
        out.residual = remaining;
        return out;
    }

    auto covers_universe = [&](const std::vector<SetInstance>& family) {
        std::map<PointId, int> count;
        for (const auto& si : family)
            for (const auto& m : members_of(si)) ++count[m];
        for (const auto& p : universe)
            if (count[p] == 0) return false;
        return true;
    };

    while (covers_universe(remaining)) {
        std::vector<SetInstance> layer = remaining;
        std::map<PointId, int> count;
        for (const auto& si : layer)
            for (const auto& m : members_of(si)) ++count[m];
        // greedy removal in reverse id order
        std::vector<std::size_t> order(layer.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return layer[b] < layer[a];
        });
        std::vector<bool> kept(layer.size(), true);
        for (std::size_t idx : order) {
            bool removable = true;
            for (const auto& m : members_of(layer[idx]))
                if (count[m] < 2) { removable = false; break; }
            if (removable) {
                kept[idx] = false;
                for (const auto& m : members_of(layer[idx])) --count[m];
            }
        }
        std::vector<SetInstance> minimal, rest;
        for (std::size_t i = 0; i < layer.size(); ++i)
            (kept[i] ? minimal : rest).push_back(layer[i]);
        out.layers.push_back(std::move(minimal));
        remaining = std::move(rest);
    }
    out.residual = std::move(remaining);
    return out;
}

} // namespace intervals
} // namespace covers

#endif // COVERS_INTERVALS_HPP
