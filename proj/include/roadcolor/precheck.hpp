#ifndef ROADCOLOR_PRECHECK_HPP
#define ROADCOLOR_PRECHECK_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "roadcolor/digraph.hpp"
#include "roadcolor/spanning.hpp"

namespace roadcolor {

struct SccDecomposition {
    std::vector<std::uint32_t> component_of;
    /// Each component's vertices in ascending order; components numbered by smallest member.
    std::vector<std::vector<Vertex>> components;
    /// Ids of components with no edge leaving them, ascending.
    std::vector<std::uint32_t> sinks;
};

SccDecomposition scc_decompose(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

struct SinkCheck {
    /// Vertices of the unique sink component (empty unless unique).
    std::vector<Vertex> vertices;
    std::size_t sink_count = 0;

    bool unique() const { return sink_count == 1; }
};

/// A graph can only synchronize when it has exactly one sink component.
SinkCheck check_sink_scc(const Digraph& g);

struct GcdReport {
    /// DFS depth of every vertex, 1 at the start vertex.
    std::vector<std::uint64_t> levels;
    /// Nonzero |level(q) - 1 - level(r)| over every non-tree edge r -> q.
    std::set<std::uint64_t> differences;
    std::uint64_t gcd = 0;
};

/// Gcd of all cycle lengths of a strongly connected graph, via one depth-first
/// search from vertex 0 with slots taken in ascending order.
GcdReport gcd_of_cycles(const Digraph& g);

/// Smallest (vertex, slot) whose edge is a self-loop.
std::optional<EdgeRef> find_loop(const Digraph& g);

struct BunchPair {
    StablePair pair;
    Vertex sink;
};

/// Two distinct vertices whose whole out-edge sets are bunches into the same vertex.
/// Such origins agree on every letter under every coloring.
std::optional<BunchPair> find_two_incoming_bunches(const Digraph& g);

}  // namespace roadcolor

#endif  // ROADCOLOR_PRECHECK_HPP
