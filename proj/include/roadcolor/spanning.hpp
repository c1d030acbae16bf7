#ifndef ROADCOLOR_SPANNING_HPP
#define ROADCOLOR_SPANNING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "roadcolor/digraph.hpp"

namespace roadcolor {

/// Two distinct states. The recoloring engine only emits pairs it expects to be stable.
struct StablePair {
    Vertex first = 0;
    Vertex second = 0;

    friend bool operator==(const StablePair&, const StablePair&) = default;
};

class NotUniqueMaximalTree : public Error {
public:
    NotUniqueMaximalTree() : Error("spanning subgraph does not have a unique maximal tree") {}
};

/// One chosen out-edge per vertex of a digraph: a functional graph.
class SpanningMap {
public:
    SpanningMap() = default;
    SpanningMap(const Digraph& g, std::vector<Slot> chosen_slot);

    /// Edges of color c under the coloring of `a`.
    static SpanningMap from_color(const ColoredAutomaton& a, Color c);

    /// A bare successor function with no backing digraph (slots are all zero).
    static SpanningMap from_successors(std::vector<Vertex> successor);

    std::size_t size() const { return successor_.size(); }
    Vertex successor(Vertex v) const { return successor_[v]; }
    Slot chosen_slot(Vertex v) const { return chosen_slot_[v]; }
    const std::vector<Vertex>& successors() const { return successor_; }
    const std::vector<Slot>& chosen_slots() const { return chosen_slot_; }

    friend bool operator==(const SpanningMap&, const SpanningMap&) = default;

private:
    std::vector<Slot> chosen_slot_;
    std::vector<Vertex> successor_;
};

struct MaximalTree {
    Vertex root;
    /// Smallest vertex of the tree at the maximal level.
    Vertex deepest;

    friend bool operator==(const MaximalTree&, const MaximalTree&) = default;
};

inline constexpr std::uint32_t kNoCycle = static_cast<std::uint32_t>(-1);
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Cycles, trees and levels of a spanning map.
struct SpanningParams {
    std::vector<std::uint32_t> level;
    /// Cycle id for cycle vertices, kNoCycle for tree vertices.
    std::vector<std::uint32_t> cycle_id;
    /// Root of the tree holding v; cycle vertices are their own root.
    std::vector<Vertex> tree_root;
    /// Predecessor on its cycle for cycle vertices, kNoVertex otherwise.
    std::vector<Vertex> cycle_predecessor;
    std::vector<std::uint32_t> cycle_length;
    std::size_t cycle_vertex_count = 0;
    std::uint32_t max_level = 0;
    /// Trees holding a vertex of level max_level, by ascending root. Empty when max_level is 0.
    std::vector<MaximalTree> maximal_trees;

    bool on_cycle(Vertex v) const { return level[v] == 0; }
    bool has_unique_maximal_tree() const { return max_level > 0 && maximal_trees.size() == 1; }
};

/// Linear-time decomposition of a functional graph.
SpanningParams find_parameters(const SpanningMap& s);

/// The pair (b, c) where b is the last tree vertex on the path from the deepest vertex of
/// the unique maximal tree to its root r, and c is the predecessor of r on its cycle.
StablePair maximal_tree_to_stable_pair(const SpanningMap& s, const SpanningParams& p);

/// Copy of `s` with e.source redirected along slot e.slot of `g`.
SpanningMap flip(const SpanningMap& s, EdgeRef e, const Digraph& g);

/// Recolors each vertex of `base` by a single swap so that color `c` lands on the chosen slot.
Coloring color_spanning(const Coloring& base, const SpanningMap& s, Color c = 0);

}  // namespace roadcolor

#endif  // ROADCOLOR_SPANNING_HPP
