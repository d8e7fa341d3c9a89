#ifndef COVERS_ORACLE_HPP
#define COVERS_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "covers/core.hpp"

namespace covers {
namespace oracle {

// ---------------------------------------------------------------------------
// exact_split: complete backtracking search for a k-good coloring over Y.
//
// Variables are set-instances ordered by descending member count, ties by
// (id, copy).  Values are colors 0..k-1 in ascending order, then "spare"
// (left unassigned, modelling partial colorings).  Unit propagation: a
// constrained point whose unassigned instances are exhausted down to its
// last missing color forces that assignment; a point that can no longer
// reach all of 0..k-1 prunes the branch.  Everything is deterministic and
// sequential, so verdicts and node counts are reproducible.
// ---------------------------------------------------------------------------

namespace detail {

constexpr int kUnset = -2;
constexpr int kSpare = -1;

struct SearchState {
    int k = 0;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    // instance data, index-compressed
    std::vector<SetInstance> instances;            // ordered as declared
    std::vector<std::vector<int>> points_of;       // instance -> constrained point indices
    std::vector<std::vector<int>> instances_of;    // constrained point -> instance indices
    std::vector<int> order;                        // variable order (instance indices)

    // mutable search state
    std::vector<int> value;                        // per instance: kUnset/kSpare/color
    std::vector<std::vector<int>> color_count;     // point -> per-color assigned count
    std::vector<int> unassigned_count;             // point -> # UNSET instances
    std::vector<int> missing_count;                // point -> # colors with count 0
    long long total_missing = 0;

    struct TrailEntry { int instance; };
    std::vector<TrailEntry> trail;

    // Updates every counter even on contradiction so undo_to stays exact.
    bool assign(int inst, int val) {
        value[inst] = val;
        trail.push_back({inst});
        bool ok = true;
        for (int p : points_of[inst]) {
            --unassigned_count[p];
            if (val >= 0) {
                if (color_count[p][val]++ == 0) {
                    --missing_count[p];
                    --total_missing;
                }
            }
            if (missing_count[p] > unassigned_count[p]) ok = false;
        }
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            int inst = trail.back().instance;
            trail.pop_back();
            int val = value[inst];
            value[inst] = kUnset;
            for (int p : points_of[inst]) {
                ++unassigned_count[p];
                if (val >= 0) {
                    if (--color_count[p][val] == 0) {
                        ++missing_count[p];
                        ++total_missing;
                    }
                }
            }
        }
    }

    // Forces single-candidate single-missing-color points reachable from the
    // instances just assigned.  Returns false on contradiction.
    bool propagate(std::size_t from_mark) {
        for (std::size_t i = from_mark; i < trail.size(); ++i) {
            for (int p : points_of[trail[i].instance]) {
                if (missing_count[p] == 1 && unassigned_count[p] == 1) {
                    int forced_inst = -1;
                    for (int q : instances_of[p])
                        if (value[q] == kUnset) { forced_inst = q; break; }
                    int forced_color = -1;
                    for (int c = 0; c < k; ++c)
                        if (color_count[p][c] == 0) { forced_color = c; break; }
                    if (forced_inst >= 0 && forced_color >= 0) {
                        if (!assign(forced_inst, forced_color)) return false;
                    }
                }
            }
        }
        return true;
    }

    bool dfs(std::size_t next_var) {
        if (total_missing == 0) return true;  // partial assignment already k-good
        while (next_var < order.size() && value[order[next_var]] != kUnset) ++next_var;
        if (next_var >= order.size()) return false;  // exhausted, some point still missing

        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }

        int inst = order[next_var];
        for (int val = 0; val <= k; ++val) {
            int v = (val == k) ? kSpare : val;
            std::size_t mark = trail.size();
            if (assign(inst, v) && propagate(mark)) {
                if (dfs(next_var + 1)) return true;
                if (budget_hit) return false;
            }
            undo_to(mark);
        }
        return false;
    }
};

} // namespace detail

inline SplitResult exact_split(const CoverInstance& inst, int k,
                               const std::vector<PointId>& over,
                               std::uint64_t budget = 10'000'000) {
    if (k < 1) throw DomainError("exact_split: k must be positive");
    if (budget < 1) throw DomainError("exact_split: budget must be positive");

    detail::SearchState st;
    st.k = k;
    st.budget = budget;

    auto fold = coverage_profile(inst);

    // Constrained points: x in Y with fold(x) >= k.
    std::vector<PointId> constrained;
    {
        std::set<PointId> seen;
        for (const auto& x : over) {
            auto it = fold.find(x);
            if (it == fold.end())
                throw ContractError("exact_split: unknown point \"" + x + "\"");
            if (it->second >= k && seen.insert(x).second) constrained.push_back(x);
        }
    }

    st.instances = expand_multiplicity(inst);
    std::map<PointId, int> point_index;
    for (std::size_t i = 0; i < constrained.size(); ++i)
        point_index[constrained[i]] = static_cast<int>(i);

    st.points_of.assign(st.instances.size(), {});
    st.instances_of.assign(constrained.size(), {});
    {
        std::map<std::string, std::vector<int>> copies_of_set;
        for (std::size_t i = 0; i < st.instances.size(); ++i)
            copies_of_set[st.instances[i].set_id].push_back(static_cast<int>(i));
        for (const auto& s : inst.sets) {
            const auto& copies = copies_of_set[s.id];
            for (const auto& m : s.members) {
                auto it = point_index.find(m);
                if (it == point_index.end()) continue;
                for (int ci : copies) {
                    st.points_of[ci].push_back(it->second);
                    st.instances_of[it->second].push_back(ci);
                }
            }
        }
    }

    // Variable order: descending member count, then id, then copy.
    st.order.resize(st.instances.size());
    std::iota(st.order.begin(), st.order.end(), 0);
    std::map<std::string, std::size_t> member_count;
    for (const auto& s : inst.sets) member_count[s.id] = s.members.size();
    std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        std::size_t ca = member_count[st.instances[a].set_id];
        std::size_t cb = member_count[st.instances[b].set_id];
        if (ca != cb) return ca > cb;
        if (st.instances[a].set_id != st.instances[b].set_id)
            return st.instances[a].set_id < st.instances[b].set_id;
        return st.instances[a].copy < st.instances[b].copy;
    });

    st.value.assign(st.instances.size(), detail::kUnset);
    st.color_count.assign(constrained.size(), std::vector<int>(k, 0));
    st.unassigned_count.assign(constrained.size(), 0);
    st.missing_count.assign(constrained.size(), k);
    for (std::size_t p = 0; p < constrained.size(); ++p)
        st.unassigned_count[p] = static_cast<int>(st.instances_of[p].size());
    st.total_missing = static_cast<long long>(constrained.size()) * k;

    SplitResult res;
    bool found = st.dfs(0);
    res.nodes = st.nodes;
    if (st.budget_hit) {
        res.status = SplitStatus::BudgetExceeded;
        return res;
    }
    if (found) {
        res.status = SplitStatus::Feasible;
        for (std::size_t i = 0; i < st.instances.size(); ++i)
            if (st.value[i] >= 0)
                res.coloring.assign(st.instances[i], st.value[i]);
    } else {
        res.status = SplitStatus::Infeasible;
        res.witness = InfeasibleWitness{"search space exhausted", constrained};
    }
    return res;
}

inline SplitResult exact_split(const CoverInstance& inst, int k,
                               std::uint64_t budget = 10'000'000) {
    return exact_split(inst, k, inst.points, budget);
}

// ---------------------------------------------------------------------------
// enumerate_partitions_check: exhaustive certification that no 2-labeling of
// the set-instances yields two disjoint subcovers of the covered points.
// ---------------------------------------------------------------------------

struct PartitionFailure {
    std::uint64_t partition = 0;  // bitmask; bit i set <=> instance i in part 1
    PointId missed;
    int part = 0;                 // which part misses the point
};

struct IndecomposabilityCertificate {
    std::uint64_t total_partitions = 0;
    std::uint64_t failure_count = 0;
    bool exhaustive = false;
    std::vector<PartitionFailure> failures;  // populated only in audit mode

    bool is_two_split_free() const {
        return exhaustive && failure_count == total_partitions;
    }
};

constexpr std::size_t kPartitionDefaultLimit = 16;
constexpr std::size_t kPartitionHardCap = 24;

inline IndecomposabilityCertificate
enumerate_partitions_check(const CoverInstance& inst,
                           std::size_t limit = kPartitionDefaultLimit, bool audit = false) {
    if (limit > kPartitionHardCap)
        throw DomainError("enumerate_partitions_check: limit exceeds the hard cap of 24");
    auto instances = expand_multiplicity(inst);
    const std::size_t n = instances.size();
    if (n > limit)
        throw DomainError("enumerate_partitions_check: " + std::to_string(n) +
                          " set-instances exceed the limit of " + std::to_string(limit) +
                          "; use exact_split with k=2 instead");

    // Covered points with their instance masks, in point order.
    std::vector<PointId> covered;
    std::vector<std::uint64_t> masks;
    {
        std::map<std::string, std::uint64_t> set_mask;
        for (std::size_t i = 0; i < n; ++i)
            set_mask[instances[i].set_id] |= (std::uint64_t{1} << i);
        std::map<PointId, std::uint64_t> point_mask;
        for (const auto& s : inst.sets)
            for (const auto& m : s.members) point_mask[m] |= set_mask[s.id];
        for (const auto& p : inst.points) {
            auto it = point_mask.find(p);
            if (it != point_mask.end() && it->second != 0) {
                covered.push_back(p);
                masks.push_back(it->second);
            }
        }
    }

    IndecomposabilityCertificate cert;
    cert.total_partitions = std::uint64_t{1} << n;
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << n) - 1);
    for (std::uint64_t mask = 0; mask < cert.total_partitions; ++mask) {
        bool failed = false;
        for (std::size_t j = 0; j < covered.size(); ++j) {
            // part 0 = instances outside mask; part 1 = instances in mask
            if ((masks[j] & ~mask & full) == 0) {
                ++cert.failure_count;
                if (audit) cert.failures.push_back({mask, covered[j], 0});
                failed = true;
                break;
            }
            if ((masks[j] & mask) == 0) {
                ++cert.failure_count;
                if (audit) cert.failures.push_back({mask, covered[j], 1});
                failed = true;
                break;
            }
        }
        (void)failed;
    }
    cert.exhaustive = true;
    return cert;
}

} // namespace oracle
} // namespace covers

#endif // COVERS_ORACLE_HPP
