#ifndef ROADCOLOR_DIGRAPH_HPP
#define ROADCOLOR_DIGRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace roadcolor {

using Vertex = std::uint32_t;
using Slot = std::uint32_t;
using Color = std::uint32_t;

/// A word over the color alphabet. May be empty.
using Word = std::vector<Color>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Identifies one edge by its source and out-slot, so parallel edges stay distinct.
struct EdgeRef {
    Vertex source = 0;
    Slot slot = 0;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Directed multigraph where every vertex has exactly `degree()` ordered out-slots.
/// Loops and parallel edges are allowed.
class Digraph {
public:
    Digraph() = default;

    /// `targets` is row-major: targets[v * d + s] is the end of edge (v, s).
    Digraph(std::size_t n, std::size_t d, std::vector<Vertex> targets);

    static Digraph from_rows(const std::vector<std::vector<Vertex>>& rows);

    std::size_t size() const { return n_; }
    std::size_t degree() const { return d_; }

    Vertex target(Vertex v, Slot s) const { return targets_[v * d_ + s]; }
    Vertex target(EdgeRef e) const { return target(e.source, e.slot); }
    std::span<const Vertex> row(Vertex v) const {
        return {targets_.data() + v * d_, d_};
    }
    const std::vector<Vertex>& targets() const { return targets_; }

    /// True when all out-edges of v end in the same vertex.
    bool is_bunch(Vertex v) const;

    /// Subgraph induced by `vertices`, which must be closed under out-edges.
    /// Vertex i of the result is vertices[i].
    Digraph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<Vertex> targets_;
};

/// Per-vertex bijection between out-slots and colors 0..d-1.
class Coloring {
public:
    Coloring() = default;

    /// colors[v * d + s] is the color of edge (v, s). Throws if a row is not a permutation.
    Coloring(std::size_t n, std::size_t d, std::vector<Color> colors);

    /// Slot s carries color s at every vertex.
    static Coloring identity(std::size_t n, std::size_t d);

    std::size_t size() const { return n_; }
    std::size_t degree() const { return d_; }

    Color color(Vertex v, Slot s) const { return color_of_slot_[v * d_ + s]; }
    Slot slot(Vertex v, Color c) const { return slot_of_color_[v * d_ + c]; }
    std::span<const Color> row(Vertex v) const {
        return {color_of_slot_.data() + v * d_, d_};
    }

    /// Exchanges the colors carried by slots a and b at vertex v.
    void swap_slots(Vertex v, Slot a, Slot b);

    friend bool operator==(const Coloring& x, const Coloring& y) {
        return x.n_ == y.n_ && x.d_ == y.d_ && x.color_of_slot_ == y.color_of_slot_;
    }

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<Color> color_of_slot_;
    std::vector<Slot> slot_of_color_;
};

/// A digraph together with a coloring: a complete deterministic automaton.
class ColoredAutomaton {
public:
    ColoredAutomaton(Digraph graph, Coloring coloring);

    const Digraph& graph() const { return graph_; }
    const Coloring& coloring() const { return coloring_; }
    std::size_t size() const { return graph_.size(); }
    std::size_t alphabet_size() const { return graph_.degree(); }

    Vertex next(Vertex v, Color c) const { return delta_[v * graph_.degree() + c]; }

    /// The automaton on the same states whose slot c is the color-c transition.
    Digraph transition_graph() const;

private:
    Digraph graph_;
    Coloring coloring_;
    std::vector<Vertex> delta_;
};

/// Image of `start` under `w`, as a sorted set without duplicates.
std::vector<Vertex> apply_word(const ColoredAutomaton& a, std::span<const Vertex> start,
                               const Word& w);

/// Every vertex of `a`, in ascending order.
std::vector<Vertex> all_vertices(const ColoredAutomaton& a);

/// Renders a word as a compact digit string when d <= 10, else space separated.
std::string format_word(const Word& w, std::size_t alphabet_size);

}  // namespace roadcolor

#endif  // ROADCOLOR_DIGRAPH_HPP
