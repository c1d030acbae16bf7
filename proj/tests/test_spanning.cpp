#include "doctest.h"

#include <chrono>
#include <cstdio>

#include "fixtures.hpp"
#include "roadcolor/generator.hpp"
#include "roadcolor/spanning.hpp"

using namespace roadcolor;
namespace fx = roadcolor::fixtures;

namespace {

void check_param_invariants(const SpanningMap& s, const SpanningParams& p) {
    std::size_t on_cycles = 0;
    for (Vertex v = 0; v < s.size(); ++v) {
        if (p.level[v] == 0) {
            ++on_cycles;
            CHECK(p.cycle_id[v] != kNoCycle);
            CHECK(p.tree_root[v] == v);
            CHECK(s.successor(p.cycle_predecessor[v]) == v);
        } else {
            CHECK(p.level[v] == 1 + p.level[s.successor(v)]);
            CHECK(p.cycle_id[v] == kNoCycle);
            CHECK(p.tree_root[v] == p.tree_root[s.successor(v)]);
        }
    }
    CHECK(on_cycles == p.cycle_vertex_count);
    std::size_t cycle_total = 0;
    for (auto len : p.cycle_length) cycle_total += len;
    CHECK(cycle_total == p.cycle_vertex_count);
}

}  // namespace

TEST_CASE("from_color reads one color class") {
    CHECK(SpanningMap::from_color(fx::slot_colored(fx::two_cycles()), 0).successors() ==
          std::vector<Vertex>{1, 0, 3, 0});
    CHECK(SpanningMap::from_color(fx::slot_colored(fx::two_two_cycles()), 0).successors() ==
          std::vector<Vertex>{1, 0, 3, 2});
    CHECK(SpanningMap::from_color(fx::slot_colored(fx::loop_bunch()), 0).successors() ==
          std::vector<Vertex>{0, 0});
}

TEST_CASE("find_parameters on the figure chain") {
    SpanningMap s = SpanningMap::from_successors(fx::figure_chain());
    SpanningParams p = find_parameters(s);
    CHECK(p.level == std::vector<std::uint32_t>{0, 0, 0, 0, 3, 2, 1});
    CHECK(p.cycle_vertex_count == 4);
    CHECK(p.max_level == 3);
    for (Vertex v = 4; v < 7; ++v) CHECK(p.tree_root[v] == 0);
    REQUIRE(p.maximal_trees.size() == 1);
    CHECK(p.maximal_trees.front() == MaximalTree{0, 4});
    check_param_invariants(s, p);
}

TEST_CASE("find_parameters on pure cycles") {
    SpanningParams two = find_parameters(SpanningMap::from_successors({1, 0}));
    CHECK(two.max_level == 0);
    CHECK(two.cycle_vertex_count == 2);
    CHECK(two.maximal_trees.empty());

    SpanningParams swaps = find_parameters(SpanningMap::from_successors({1, 0, 3, 2}));
    CHECK(swaps.max_level == 0);
    CHECK(swaps.cycle_vertex_count == 4);
    CHECK(swaps.cycle_length.size() == 2);
}

TEST_CASE("find_parameters invariants on random functional graphs") {
    Rng rng(4);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 1 + rng.below(40);
        std::vector<Vertex> succ(n);
        for (auto& t : succ) t = static_cast<Vertex>(rng.below(n));
        SpanningMap s = SpanningMap::from_successors(succ);
        SpanningParams p = find_parameters(s);
        check_param_invariants(s, p);
        for (MaximalTree t : p.maximal_trees) {
            CHECK(p.level[t.deepest] == p.max_level);
            CHECK(p.tree_root[t.deepest] == t.root);
        }
        if (p.has_unique_maximal_tree()) {
            StablePair pair = maximal_tree_to_stable_pair(s, p);
            Vertex r = p.maximal_trees.front().root;
            CHECK(pair.first != pair.second);
            CHECK(s.successor(pair.first) == r);
            CHECK(s.successor(pair.second) == r);
            CHECK(p.level[pair.first] >= 1);
            CHECK(p.level[pair.second] == 0);
        }
    }
}

TEST_CASE("maximal_tree_to_stable_pair") {
    SpanningMap chain = SpanningMap::from_successors(fx::figure_chain());
    CHECK(maximal_tree_to_stable_pair(chain, find_parameters(chain)) == StablePair{6, 3});

    SpanningMap small = SpanningMap::from_successors({2, 2, 0});
    CHECK(maximal_tree_to_stable_pair(small, find_parameters(small)) == StablePair{1, 0});

    SpanningMap swaps = SpanningMap::from_successors({1, 0, 3, 2});
    CHECK_THROWS_AS(maximal_tree_to_stable_pair(swaps, find_parameters(swaps)), NotUniqueMaximalTree);
}

TEST_CASE("flip replaces one chosen edge") {
    Digraph g = fx::two_two_cycles();
    SpanningMap s = SpanningMap::from_color(fx::slot_colored(g), 0);
    SpanningMap flipped = flip(s, {0, 1}, g);
    CHECK(flipped.successors() == std::vector<Vertex>{2, 0, 3, 2});
    CHECK(s.successors() == std::vector<Vertex>{1, 0, 3, 2});
    CHECK(flip(flipped, {0, 0}, g) == s);

    // Figure chain with an extra 6 -> 5 edge in slot 1.
    Digraph chain = Digraph::from_rows({{1, 1}, {2, 2}, {3, 3}, {0, 0}, {5, 5}, {6, 6}, {0, 5}});
    SpanningMap base(chain, std::vector<Slot>(7, 0));
    SpanningParams after = find_parameters(flip(base, {6, 1}, chain));
    CHECK(after.cycle_vertex_count == 6);
}

TEST_CASE("color_spanning moves color 0 onto the map") {
    Digraph g = fx::two_cycles();
    SpanningMap s(g, {1, 0, 1, 1});
    Coloring c = color_spanning(Coloring::identity(4, 2), s);
    CHECK(SpanningMap::from_color(ColoredAutomaton(g, c), 0) == s);
}

TEST_CASE("find_parameters scales linearly (smoke)") {
    Rng rng(1);
    double previous = 0;
    for (std::size_t n = 1000; n <= 1000000; n *= 10) {
        std::vector<Vertex> succ(n);
        for (auto& t : succ) t = static_cast<Vertex>(rng.below(n));
        SpanningMap s = SpanningMap::from_successors(std::move(succ));
        auto start = std::chrono::steady_clock::now();
        SpanningParams p = find_parameters(s);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        CHECK(p.level.size() == n);
        MESSAGE("find_parameters n=" << n << " " << ms << " ms"
                                     << (previous > 0 ? " ratio " + std::to_string(ms / previous) : ""));
        previous = ms;
    }
}
