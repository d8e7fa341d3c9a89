#ifndef COVERS_CORE_HPP
#define COVERS_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace covers {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input document (syntax level).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally well-formed input that violates an instance invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Input has the wrong shape for a specialised view (non-2-element set for a
/// graph, non-contiguous set for an interval cover, ...).
struct ShapeError : Error {
    using Error::Error;
};

/// A caller broke a documented precondition.
struct ContractError : Error {
    using Error::Error;
};

/// Parameter outside the supported domain.
struct DomainError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Data model
// ---------------------------------------------------------------------------

using PointId = std::string;
using Color = int;

enum class CoverKind { Generic, Graph, Interval, Tree, Indicator };

inline const char* to_string(CoverKind k) {
    switch (k) {
    case CoverKind::Graph: return "graph";
    case CoverKind::Interval: return "interval";
    case CoverKind::Tree: return "tree";
    case CoverKind::Indicator: return "indicator";
    default: return "generic";
    }
}

inline CoverKind parse_cover_kind(const std::string& s) {
    if (s == "generic") return CoverKind::Generic;
    if (s == "graph") return CoverKind::Graph;
    if (s == "interval") return CoverKind::Interval;
    if (s == "tree") return CoverKind::Tree;
    if (s == "indicator") return CoverKind::Indicator;
    throw ValidationError("unknown instance kind \"" + s + "\"");
}

/// One covering set H together with its multiplicity m(H).  Empty member
/// lists are legal; an empty set belongs to no point's instance list.
struct CoverSet {
    std::string id;
    std::vector<PointId> members;
    std::uint32_t mult = 1;
};

constexpr std::uint32_t kMaxMultiplicity = 1u << 16;

/// A finite point universe plus a family of sets with multiplicities.
/// `kind` is advisory; every operation accepts any kind.
struct CoverInstance {
    CoverKind kind = CoverKind::Generic;
    std::vector<PointId> points;
    std::vector<CoverSet> sets;

    const CoverSet* find_set(const std::string& id) const {
        for (const auto& s : sets)
            if (s.id == id) return &s;
        return nullptr;
    }
};

/// One copy <H, alpha> of a covering set.
struct SetInstance {
    std::string set_id;
    std::uint32_t copy = 0;

    auto operator<=>(const SetInstance&) const = default;
};

/// Partial map from set-instances to colors.  Unassigned is distinct from
/// every color; colors are non-negative.
struct Coloring {
    std::map<SetInstance, Color> assignments;

    void assign(const SetInstance& si, Color c) { assignments[si] = c; }
    void assign(const std::string& set_id, std::uint32_t copy, Color c) {
        assignments[SetInstance{set_id, copy}] = c;
    }
    std::optional<Color> color_of(const SetInstance& si) const {
        auto it = assignments.find(si);
        if (it == assignments.end()) return std::nullopt;
        return it->second;
    }
    bool empty() const { return assignments.empty(); }
    std::size_t size() const { return assignments.size(); }
};

struct Violation {
    PointId point;
    int fold = 0;
    std::vector<Color> missing;
};

struct VerifyReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Shared result type for every splitting routine.
enum class SplitStatus { Feasible, Infeasible, BudgetExceeded };

struct InfeasibleWitness {
    std::string note;
    std::vector<PointId> points;
};

struct SplitResult {
    SplitStatus status = SplitStatus::Infeasible;
    Coloring coloring;                          // meaningful when Feasible
    std::optional<InfeasibleWitness> witness;   // meaningful when Infeasible
    std::uint64_t nodes = 0;                    // search effort, if any
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Checks every instance invariant: unique point/set identifiers, members a
/// duplicate-free subset of the universe, multiplicities in [1, 2^16].
inline void validate_instance(const CoverInstance& inst) {
    std::set<PointId> universe;
    for (const auto& p : inst.points) {
        if (!universe.insert(p).second)
            throw ValidationError("duplicate point id \"" + p + "\"");
    }
    std::set<std::string> set_ids;
    for (const auto& s : inst.sets) {
        if (!set_ids.insert(s.id).second)
            throw ValidationError("duplicate set id \"" + s.id + "\"");
        if (s.mult < 1 || s.mult > kMaxMultiplicity)
            throw ValidationError("set \"" + s.id + "\": multiplicity " +
                                  std::to_string(s.mult) + " outside [1, 65536]");
        std::set<PointId> seen;
        for (const auto& m : s.members) {
            if (!universe.count(m))
                throw ValidationError("set \"" + s.id + "\": member \"" + m +
                                      "\" is not a point of the instance");
            if (!seen.insert(m).second)
                throw ValidationError("set \"" + s.id + "\": duplicate member \"" + m + "\"");
        }
    }
}

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

/// Every pair (set, alpha) with alpha < mult, in set order then alpha order.
inline std::vector<SetInstance> expand_multiplicity(const CoverInstance& inst) {
    std::vector<SetInstance> out;
    std::size_t total = 0;
    for (const auto& s : inst.sets) total += s.mult;
    out.reserve(total);
    for (const auto& s : inst.sets)
        for (std::uint32_t a = 0; a < s.mult; ++a)
            out.push_back(SetInstance{s.id, a});
    return out;
}

/// fold(x) = sum of mult over the sets containing x, for every point of the
/// universe (0 for uncovered points).
inline std::map<PointId, int> coverage_profile(const CoverInstance& inst) {
    std::map<PointId, int> fold;
    for (const auto& p : inst.points) fold[p] = 0;
    for (const auto& s : inst.sets)
        for (const auto& m : s.members) fold[m] += static_cast<int>(s.mult);
    return fold;
}

namespace detail {

// point -> indices of sets containing it (set order).
inline std::map<PointId, std::vector<std::size_t>> sets_by_point(const CoverInstance& inst) {
    std::map<PointId, std::vector<std::size_t>> idx;
    for (std::size_t i = 0; i < inst.sets.size(); ++i)
        for (const auto& m : inst.sets[i].members) idx[m].push_back(i);
    return idx;
}

} // namespace detail

/// A coloring is k-good over Y when every x in Y with fold(x) >= k sees all
/// of the colors 0..k-1 among the instances containing x.  Points below the
/// fold threshold impose no constraint.  Colors >= k are legal and ignored.
inline VerifyReport verify_coloring(const CoverInstance& inst, const Coloring& c, int k,
                                    const std::vector<PointId>& over) {
    if (k < 1) throw DomainError("verify_coloring: k must be positive");
    // Domain check: every assignment must reference a real set-instance.
    for (const auto& [si, color] : c.assignments) {
        const CoverSet* s = inst.find_set(si.set_id);
        if (!s)
            throw ValidationError("coloring references unknown set \"" + si.set_id + "\"");
        if (si.copy >= s->mult)
            throw ValidationError("coloring references copy " + std::to_string(si.copy) +
                                  " of set \"" + si.set_id + "\" (mult " +
                                  std::to_string(s->mult) + ")");
        if (color < 0)
            throw ValidationError("coloring assigns a negative color to set \"" +
                                  si.set_id + "\"");
    }

    auto fold = coverage_profile(inst);
    auto by_point = detail::sets_by_point(inst);

    VerifyReport report;
    for (const auto& x : over) {
        auto fit = fold.find(x);
        if (fit == fold.end())
            throw ValidationError("verify_coloring: unknown point \"" + x + "\"");
        if (fit->second < k) continue;

        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        auto bit = by_point.find(x);
        if (bit != by_point.end()) {
            for (std::size_t si_idx : bit->second) {
                const CoverSet& s = inst.sets[si_idx];
                for (std::uint32_t a = 0; a < s.mult; ++a) {
                    auto col = c.color_of(SetInstance{s.id, a});
                    if (col && *col < k) seen[static_cast<std::size_t>(*col)] = true;
                }
            }
        }
        std::vector<Color> missing;
        for (int i = 0; i < k; ++i)
            if (!seen[static_cast<std::size_t>(i)]) missing.push_back(i);
        if (!missing.empty()) {
            report.ok = false;
            report.violations.push_back(Violation{x, fit->second, std::move(missing)});
        }
    }
    return report;
}

inline VerifyReport verify_coloring(const CoverInstance& inst, const Coloring& c, int k) {
    return verify_coloring(inst, c, k, inst.points);
}

/// Convenience mode: k-goodness for every threshold at once, i.e. each
/// point x must see all of the colors 0..fold(x)-1.
inline VerifyReport verify_coloring_maximal(const CoverInstance& inst, const Coloring& c,
                                            const std::vector<PointId>& over) {
    auto fold = coverage_profile(inst);
    VerifyReport report;
    for (const auto& x : over) {
        auto it = fold.find(x);
        if (it == fold.end())
            throw ValidationError("verify_coloring_maximal: unknown point \"" + x + "\"");
        if (it->second == 0) continue;
        auto sub = verify_coloring(inst, c, it->second, {x});
        if (!sub.ok) {
            report.ok = false;
            report.violations.push_back(sub.violations.front());
        }
    }
    return report;
}

inline VerifyReport verify_coloring_maximal(const CoverInstance& inst, const Coloring& c) {
    return verify_coloring_maximal(inst, c, inst.points);
}

/// Splits the instance along the equivalence relation generated by set
/// co-membership.  Every nonempty set lands in exactly one class; uncovered
/// points become singleton classes with no sets; empty sets are dropped.
inline std::vector<CoverInstance> decompose_components(const CoverInstance& inst) {
    std::map<PointId, std::size_t> pos;
    for (std::size_t i = 0; i < inst.points.size(); ++i) pos[inst.points[i]] = i;

    std::vector<std::size_t> parent(inst.points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    for (const auto& s : inst.sets)
        for (std::size_t i = 1; i < s.members.size(); ++i)
            unite(pos.at(s.members[0]), pos.at(s.members[i]));

    // Components ordered by first point occurrence.
    std::map<std::size_t, std::size_t> root_to_comp;
    std::vector<CoverInstance> comps;
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        std::size_t r = find(i);
        auto [it, fresh] = root_to_comp.try_emplace(r, comps.size());
        if (fresh) {
            comps.push_back(CoverInstance{inst.kind, {}, {}});
        }
        comps[it->second].points.push_back(inst.points[i]);
    }
    for (const auto& s : inst.sets) {
        if (s.members.empty()) continue;
        comps[root_to_comp.at(find(pos.at(s.members[0])))].sets.push_back(s);
    }
    return comps;
}

/// Restriction of a cover to a point subset: members intersected with Y,
/// empty intersections dropped, identities and multiplicities preserved.
inline CoverInstance restrict_to(const CoverInstance& inst, const std::vector<PointId>& y) {
    std::set<PointId> universe(inst.points.begin(), inst.points.end());
    std::set<PointId> keep;
    for (const auto& p : y) {
        if (!universe.count(p))
            throw ContractError("restrict: point \"" + p + "\" is not in the instance");
        keep.insert(p);
    }
    CoverInstance out;
    out.kind = inst.kind;
    for (const auto& p : inst.points)
        if (keep.count(p)) out.points.push_back(p);
    for (const auto& s : inst.sets) {
        CoverSet rs;
        rs.id = s.id;
        rs.mult = s.mult;
        for (const auto& m : s.members)
            if (keep.count(m)) rs.members.push_back(m);
        if (!rs.members.empty()) out.sets.push_back(std::move(rs));
    }
    return out;
}

} // namespace covers

#endif // COVERS_CORE_HPP
