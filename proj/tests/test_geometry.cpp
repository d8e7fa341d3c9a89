#include <catch2/catch_amalgamated.hpp>

#include "covers/geometry.hpp"
#include "covers/oracle.hpp"
#include "reference.hpp"

using namespace covers;
using namespace covers::geometry;

TEST_CASE("gen_tree_cover") {
    SECTION("b=1 d=1 expands by hand") {
        auto tc = gen_tree_cover({1, 1});
        REQUIRE(tc.points == std::vector<PointId>{"e", "0", "1"});
        REQUIRE(tc.sets.size() == 2);
        REQUIRE(tc.sets[0].id == "C0");
        REQUIRE(tc.sets[0].members == std::vector<PointId>{"e", "0"});
        REQUIRE(tc.sets[1].members == std::vector<PointId>{"e", "1"});
        auto fold = coverage_profile(tc);
        REQUIRE(fold.at("e") == 2);
        REQUIRE(fold.at("0") == 1);
    }
    SECTION("b=2 d=2 counts") {
        auto tc = gen_tree_cover({2, 2});
        REQUIRE(tc.points.size() == 1 + 3 + 9);
        REQUIRE(tc.sets.size() == 12);
        auto fold = coverage_profile(tc);
        int internal = 0, leaves = 0;
        for (const auto& p : tc.points) {
            std::size_t depth = (p == "e") ? 0 : 1 + std::count(p.begin(), p.end(), '.');
            if (depth < 2) {
                REQUIRE(fold.at(p) == 3);  // b+1
                ++internal;
            } else {
                REQUIRE(fold.at(p) == 2);  // d
                ++leaves;
            }
        }
        REQUIRE(internal == 4);
        REQUIRE(leaves == 9);
    }
    SECTION("min fold is min(b+1, d)") {
        auto fold23 = coverage_profile(gen_tree_cover({2, 3}));
        int mn = 1 << 20;
        for (const auto& [p, f] : fold23) mn = std::min(mn, f);
        REQUIRE(mn == 3);
    }
    SECTION("parameter validation") {
        REQUIRE_THROWS_AS(gen_tree_cover({0, 1}), DomainError);
        REQUIRE_THROWS_AS(gen_tree_cover({1, 0}), DomainError);
    }
    SECTION("tree_params_of round-trips and rejects tampering") {
        auto tc = gen_tree_cover({2, 2});
        auto p = tree_params_of(tc);
        REQUIRE(p.b == 2);
        REQUIRE(p.d == 2);
        tc.sets[0].members.pop_back();
        REQUIRE_THROWS_AS(tree_params_of(tc), ContractError);
    }
}

TEST_CASE("adversary_walk") {
    SECTION("all sets in part 0: part 1 misses the leftmost leaf") {
        auto tc = gen_tree_cover({1, 1});
        auto w = adversary_walk(tc, {0, 0});
        REQUIRE(w.part == 1);
        REQUIRE(w.missed_node == "0");
        REQUIRE(w.path == std::vector<int>{0});
    }
    SECTION("part 0 without the root's sets misses the root") {
        auto tc = gen_tree_cover({1, 2});  // sets: C0, C1, C0.0, C0.1, C1.0, C1.1
        std::vector<int> part(tc.sets.size(), 0);
        for (std::size_t i = 0; i < tc.sets.size(); ++i)
            if (tc.sets[i].id == "C0" || tc.sets[i].id == "C1") part[i] = 1;
        auto w = adversary_walk(tc, part);
        REQUIRE(w.part == 0);
        REQUIRE(w.missed_node == "e");
    }
    SECTION("every partition of small trees yields a membership-valid witness") {
        for (auto [b, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
            auto tc = gen_tree_cover({b, d});
            const std::size_t n = tc.sets.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<int> part(n);
                for (std::size_t i = 0; i < n; ++i) part[i] = static_cast<int>((mask >> i) & 1);
                auto w = adversary_walk(tc, part);
                INFO("b " << b << " d " << d << " mask " << mask);
                REQUIRE(reference::witness_is_valid(tc, part, w.part, w.missed_node));
            }
        }
    }
    SECTION("malformed partitions are contract errors") {
        auto tc = gen_tree_cover({1, 1});
        REQUIRE_THROWS_AS(adversary_walk(tc, {0}), ContractError);
        REQUIRE_THROWS_AS(adversary_walk(tc, {0, 2}), ContractError);
    }
}

TEST_CASE("gen_indicator_cover") {
    SECTION("m=4 t=2 has 11 points, 4 sets, min fold 2") {
        auto ind = gen_indicator_cover(4, 2);
        REQUIRE(ind.points.size() == 11);  // C(4,2)+C(4,3)+C(4,4)
        REQUIRE(ind.sets.size() == 4);
        int mn = 100;
        for (const auto& [p, f] : coverage_profile(ind)) mn = std::min(mn, f);
        REQUIRE(mn == 2);
    }
    SECTION("m=2 t=1 is the three-point cover") {
        auto ind = gen_indicator_cover(2, 1);
        REQUIRE(ind.points.size() == 3);
        REQUIRE(ind.sets.size() == 2);
    }
    SECTION("t beyond ceil(m/2) is out of domain") {
        REQUIRE_THROWS_AS(gen_indicator_cover(4, 3), DomainError);
        REQUIRE_NOTHROW(gen_indicator_cover(5, 3));
    }
    SECTION("fold equals the number of ones") {
        auto ind = gen_indicator_cover(4, 2);
        auto fold = coverage_profile(ind);
        for (const auto& p : ind.points) {
            int ones = 0;
            for (char c : p) ones += (c == '1');
            REQUIRE(fold.at(p) == ones);
        }
    }
    SECTION("m in {3,4,5}, t=2: no 2-partition splits any of them into two covers") {
        for (int m : {3, 4, 5}) {
            auto cert = oracle::enumerate_partitions_check(gen_indicator_cover(m, 2));
            INFO("m " << m);
            REQUIRE(cert.is_two_split_free());
        }
    }
}

TEST_CASE("realize_rectangles") {
    SECTION("b=1 d=1 frozen coordinates") {
        auto scene = realize_rectangles({1, 1});
        REQUIRE(scene.intervals.at("0") == std::make_pair(Rat(0), Rat(1, 3)));
        REQUIRE(scene.intervals.at("1") == std::make_pair(Rat(2, 3), Rat(1)));
        const auto& r0 = scene.rects.at("C0");
        REQUIRE(r0.x_max == Rat(1, 3));
        REQUIRE(r0.y_min == Rat(0));
        REQUIRE(scene.f1_points.at("e").y == scene.f1_points.at("e").x + Rat(2));
        REQUIRE(scene.f2_points.at("0") == RatPoint{Rat(0), Rat(0)});
        REQUIRE(scene.f2_points.at("1") == RatPoint{Rat(2, 3), Rat(2, 3)});
    }
    SECTION("b=2 d=2 counts match the abstract cover") {
        auto scene = realize_rectangles({2, 2});
        REQUIRE(scene.f1_points.size() == 4);
        REQUIRE(scene.f2_points.size() == 9);
        REQUIRE(scene.rects.size() == 12);
    }
    SECTION("interval laws hold exactly for all small parameters") {
        for (int b = 1; b <= 3; ++b)
            for (int d = 1; d <= 3; ++d) {
                auto scene = realize_rectangles({b, d});
                for (const auto& id : scene.node_order) {
                    int depth = (id == "e") ? 0
                                            : 1 + static_cast<int>(std::count(id.begin(), id.end(), '.'));
                    if (depth >= d) continue;
                    const auto& parent = scene.intervals.at(id);
                    Rat bound(1, 1 << depth);  // 2^-|sigma|
                    for (int c = 0; c <= b; ++c) {
                        std::string child = (id == "e") ? std::to_string(c) : id + "." + std::to_string(c);
                        const auto& ic = scene.intervals.at(child);
                        REQUIRE(ic.second - ic.first < bound);             // (I1) length
                        if (c == 0) REQUIRE(ic.first == parent.first);      // (I2) left end
                        if (c == b) REQUIRE(ic.second == parent.second);    // (I2) right end
                        if (c < b) {
                            std::string next =
                                (id == "e") ? std::to_string(c + 1) : id + "." + std::to_string(c + 1);
                            REQUIRE(ic.second < scene.intervals.at(next).first);  // (I1) order
                        }
                    }
                }
            }
    }
    SECTION("incidence isomorphism holds for b,d <= 3 and breaks under perturbation") {
        for (int b = 1; b <= 3; ++b)
            for (int d = 1; d <= 3; ++d) {
                auto scene = realize_rectangles({b, d});
                auto tc = gen_tree_cover({b, d});
                INFO("b " << b << " d " << d);
                REQUIRE(check_incidence_isomorphism(scene, tc));
            }
        auto scene = realize_rectangles({1, 1});
        auto tc = gen_tree_cover({1, 1});
        // lift the rectangle's floor above the diagonal point it must contain
        scene.rects.at("C0").y_min += Rat(1, 1000);
        REQUIRE_FALSE(check_incidence_isomorphism(scene, tc));
    }
    SECTION("mismatched parameters are contract errors") {
        auto scene = realize_rectangles({1, 1});
        auto tc = gen_tree_cover({1, 2});
        REQUIRE_THROWS_AS(check_incidence_isomorphism(scene, tc), ContractError);
    }
}

TEST_CASE("export_svg") {
    SECTION("b=1 d=1: two rectangles, three dots") {
        auto svg = export_svg(realize_rectangles({1, 1}));
        std::size_t rects = 0, dots = 0, pos = 0;
        while ((pos = svg.find("<rect", pos)) != std::string::npos) ++rects, ++pos;
        pos = 0;
        while ((pos = svg.find("<circle", pos)) != std::string::npos) ++dots, ++pos;
        REQUIRE(rects == 2);
        REQUIRE(dots == 3);
    }
    SECTION("byte-identical across calls") {
        auto a = export_svg(realize_rectangles({2, 2}));
        auto b = export_svg(realize_rectangles({2, 2}));
        REQUIRE(a == b);
    }
    SECTION("b=2 d=2 renders all 12 rectangles") {
        auto svg = export_svg(realize_rectangles({2, 2}));
        std::size_t rects = 0, pos = 0;
        while ((pos = svg.find("<rect", pos)) != std::string::npos) ++rects, ++pos;
        REQUIRE(rects == 12);
    }
}
