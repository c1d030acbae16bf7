#ifndef ROADCOLOR_SRC_PREDECESSORS_HPP
#define ROADCOLOR_SRC_PREDECESSORS_HPP

#include <span>
#include <vector>

#include "roadcolor/digraph.hpp"

namespace roadcolor::detail {

/// In-edges of every vertex, ordered by (source, slot).
class Predecessors {
public:
    explicit Predecessors(const Digraph& g) : offset_(g.size() + 1, 0), edges_(g.size() * g.degree()) {
        for (Vertex t : g.targets()) ++offset_[t + 1];
        for (std::size_t i = 1; i < offset_.size(); ++i) offset_[i] += offset_[i - 1];
        std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
        for (Vertex v = 0; v < g.size(); ++v) {
            for (Slot s = 0; s < g.degree(); ++s) {
                edges_[fill[g.target(v, s)]++] = {v, s};
            }
        }
    }

    std::span<const EdgeRef> of(Vertex v) const {
        return {edges_.data() + offset_[v], offset_[v + 1] - offset_[v]};
    }

private:
    std::vector<std::size_t> offset_;
    std::vector<EdgeRef> edges_;
};

inline constexpr Slot kUnassigned = static_cast<Slot>(-1);

/// Multi-source reverse breadth-first search: every vertex with chosen[v] == kUnassigned that
/// can reach a source gets the slot of its first discovered out-edge toward the sources.
/// Returns the discovery order, sources first.
inline std::vector<Vertex> attach_in_forest(const Predecessors& pred, std::span<const Vertex> sources,
                                            std::vector<Slot>& chosen,
                                            std::vector<char>& attached) {
    std::vector<Vertex> queue(sources.begin(), sources.end());
    for (Vertex v : sources) attached[v] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (EdgeRef e : pred.of(queue[head])) {
            if (attached[e.source]) continue;
            attached[e.source] = 1;
            chosen[e.source] = e.slot;
            queue.push_back(e.source);
        }
    }
    return queue;
}

}  // namespace roadcolor::detail

#endif  // ROADCOLOR_SRC_PREDECESSORS_HPP
