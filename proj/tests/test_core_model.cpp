#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "roadcolor/generator.hpp"
#include "roadcolor/io.hpp"

using namespace roadcolor;
namespace fx = roadcolor::fixtures;

TEST_CASE("parse_graph reads the text format") {
    CHECK(parse_graph("2 2\n0 1\n0 0\n") == fx::loop_bunch());

    Digraph single = parse_graph("1 1\n0\n");
    CHECK(single.size() == 1);
    CHECK(single.degree() == 1);
    CHECK(single.target(0, 0) == 0);

    CHECK(parse_graph("# labels: a b\n2 2\n# row a\n0 1\n0 0\n") == fx::loop_bunch());
}

TEST_CASE("parse_graph rejects malformed input with a line number") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("2 2\n0 1\n0\n") == 3);
    CHECK(line_of("2\n0 1\n0 0\n") == 1);
    CHECK(line_of("2 2\n0 1\n0 5\n") == 3);
    CHECK(line_of("2 2\n0 1\n") == 3);
    CHECK(line_of("2 2\n0 1\n0 0\n1 1\n") == 4);
    CHECK(line_of("2 2\n0  1\n0 0\n") == 2);
    CHECK(line_of("2 2\n0 1 \n0 0\n") == 2);
    CHECK(line_of("2 x\n") == 1);
    CHECK(line_of("0 2\n") == 1);
    CHECK(line_of("") == 1);
}

TEST_CASE("serialize_graph emits canonical text") {
    CHECK(serialize_graph(fx::loop_bunch()) == "2 2\n0 1\n0 0\n");

    Coloring swapped(2, 2, {1, 0, 0, 1});
    CHECK(serialize_graph(fx::loop_bunch(), swapped) == "2 2\n1 0\n0 0\n");

    CHECK(parse_graph(serialize_graph(fx::two_cycles())) == fx::two_cycles());
}

TEST_CASE("serialize/parse round trip on random graphs") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + rng.below(12);
        std::size_t d = 1 + rng.below(4);
        Digraph g = random_digraph(n, d, rng);
        std::string text = serialize_graph(g);
        REQUIRE(parse_graph(text) == g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("colored serialization reads back as the same automaton") {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + rng.below(8);
        std::size_t d = 1 + rng.below(4);
        Digraph g = random_digraph(n, d, rng);
        std::vector<Color> colors;
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Color> row(d);
            std::iota(row.begin(), row.end(), Color{0});
            for (std::size_t k = d; k-- > 1;) std::swap(row[k], row[rng.below(k + 1)]);
            colors.insert(colors.end(), row.begin(), row.end());
        }
        ColoredAutomaton a(g, Coloring(n, d, colors));
        Digraph back = parse_graph(serialize_graph(g, a.coloring()));
        CHECK(back == a.transition_graph());
    }
}

TEST_CASE("coloring must be a per-vertex bijection") {
    CHECK_THROWS_AS(Coloring(2, 2, {0, 0, 0, 1}), Error);
    CHECK_THROWS_AS(Coloring(1, 2, {0, 2}), Error);
    Coloring c = Coloring::identity(2, 3);
    c.swap_slots(1, 0, 2);
    CHECK(c.color(1, 0) == 2);
    CHECK(c.slot(1, 2) == 0);
    CHECK(c.slot(1, 0) == 2);
}

TEST_CASE("digraph validation") {
    CHECK_THROWS_AS(Digraph(2, 2, {0, 1, 0}), Error);
    CHECK_THROWS_AS(Digraph(2, 1, {0, 2}), Error);
    CHECK_THROWS_AS(Digraph(0, 1, {}), Error);
    CHECK(fx::even_pair().is_bunch(0));
    CHECK_FALSE(fx::loop_bunch().is_bunch(0));
}

TEST_CASE("apply_word") {
    auto a = fx::slot_colored(fx::bunch_merge());
    std::vector<Vertex> all = all_vertices(a);
    CHECK(apply_word(a, all, {1, 0, 1, 0}) == std::vector<Vertex>{2});
    CHECK(apply_word(a, all, {}) == all);

    auto even = fx::slot_colored(fx::even_pair());
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        Word w(rng.below(10));
        for (auto& c : w) c = static_cast<Color>(rng.below(2));
        CHECK(apply_word(even, std::vector<Vertex>{0, 1}, w).size() == 2);
    }
    CHECK_THROWS_AS(apply_word(a, all, {2}), Error);
}

TEST_CASE("apply_word never grows a set") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + rng.below(10);
        std::size_t d = 1 + rng.below(3);
        auto a = fx::slot_colored(random_digraph(n, d, rng));
        std::vector<Vertex> start;
        for (Vertex v = 0; v < n; ++v) {
            if (rng.below(2)) start.push_back(v);
        }
        Word w(rng.below(6));
        for (auto& c : w) c = static_cast<Color>(rng.below(d));
        CHECK(apply_word(a, start, w).size() <= start.size());
        if (!w.empty() && start.size() == 1) {
            CHECK(apply_word(a, start, {w.front()}).size() == 1);
        }
    }
}

TEST_CASE("dot export") {
    std::string dot = to_dot(fx::loop_bunch());
    CHECK(dot ==
          "digraph G {\n"
          "  0 -> 0 [label=0];\n"
          "  0 -> 1 [label=1];\n"
          "  1 -> 0 [label=0];\n"
          "  1 -> 0 [label=1];\n"
          "}\n");
    CHECK(to_dot(fx::loop_bunch()) == dot);
}

TEST_CASE("format_word") {
    CHECK(format_word({0, 1, 1}, 2) == "011");
    CHECK(format_word({}, 2).empty());
    CHECK(format_word({10, 3}, 12) == "10 3");
}
