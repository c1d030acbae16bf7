#ifndef ROADCOLOR_TESTS_FIXTURES_HPP
#define ROADCOLOR_TESTS_FIXTURES_HPP

#include "roadcolor/digraph.hpp"

namespace roadcolor::fixtures {

inline Digraph loop_bunch() { return Digraph::from_rows({{0, 1}, {0, 0}}); }
inline Digraph even_pair() { return Digraph::from_rows({{1, 1}, {0, 0}}); }
inline Digraph two_sinks() { return Digraph::from_rows({{1}, {1}, {2}}); }
inline Digraph bunch_merge() { return Digraph::from_rows({{2, 2}, {2, 2}, {3, 0}, {0, 1}}); }
inline Digraph two_cycles() { return Digraph::from_rows({{1, 2}, {0, 2}, {3, 0}, {0, 1}}); }
inline Digraph chord_triangle() { return Digraph::from_rows({{1, 2}, {2, 2}, {0, 0}}); }
inline Digraph cerny4() { return Digraph::from_rows({{1, 0}, {2, 1}, {3, 2}, {0, 0}}); }
inline Digraph two_two_cycles() { return Digraph::from_rows({{1, 2}, {0, 2}, {3, 3}, {2, 1}}); }

/// Successor function shaped like a 4-cycle with a 3-level tail into vertex 0.
inline std::vector<Vertex> figure_chain() { return {1, 2, 3, 0, 5, 6, 0}; }

inline ColoredAutomaton slot_colored(const Digraph& g) {
    return ColoredAutomaton(g, Coloring::identity(g.size(), g.degree()));
}

}  // namespace roadcolor::fixtures

#endif  // ROADCOLOR_TESTS_FIXTURES_HPP
