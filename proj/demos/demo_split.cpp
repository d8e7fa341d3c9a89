// Small tour: build a few covers, split them, verify the results.

#include <iostream>

#include "covers/geometry.hpp"
#include "covers/graphs.hpp"
#include "covers/intervals.hpp"
#include "covers/oracle.hpp"

int main() {
    using namespace covers;

    // An even cycle splits into two perfect subcovers; an odd one cannot.
    for (int n : {4, 5}) {
        graphs::Graph cycle;
        for (int i = 0; i < n; ++i) cycle.vertices.push_back("v" + std::to_string(i));
        for (int i = 0; i < n; ++i)
            cycle.edges.push_back(
                graphs::GraphEdge{i, (i + 1) % n, 1, "e" + std::to_string(i)});
        auto res = graphs::two_good_coloring(cycle);
        std::cout << "C_" << n << ": "
                  << (res.status == SplitStatus::Feasible ? "2-good coloring found"
                                                          : "no 2-good coloring")
                  << "\n";
    }

    // A 3-fold interval cover always splits into 3 subcovers.
    intervals::LinearCover lc;
    for (int i = 0; i < 6; ++i) lc.order.push_back(std::to_string(i));
    lc.sets = {{"A", 0, 3, 1}, {"B", 2, 5, 1}, {"C", 0, 5, 2}, {"D", 0, 2, 1}, {"E", 3, 5, 1}};
    auto res = intervals::sweep_split(lc, 3);
    auto report = verify_coloring(intervals::interval_to_instance(lc), res.coloring, 3);
    std::cout << "interval cover: sweep "
              << (res.status == SplitStatus::Feasible && report.ok ? "feasible and verified"
                                                                   : "failed")
              << "\n";

    // The tree cover admits no partition into two subcovers.
    auto tree = geometry::gen_tree_cover({2, 2});
    auto cert = oracle::enumerate_partitions_check(tree);
    std::cout << "tree cover (b=2, d=2): " << cert.failure_count << "/" << cert.total_partitions
              << " partitions fail to split it\n";
    return 0;
}
