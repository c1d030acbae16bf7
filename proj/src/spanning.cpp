#include "roadcolor/spanning.hpp"

#include <algorithm>

namespace roadcolor {

SpanningMap::SpanningMap(const Digraph& g, std::vector<Slot> chosen_slot)
    : chosen_slot_(std::move(chosen_slot)), successor_(g.size()) {
    if (chosen_slot_.size() != g.size()) {
        throw Error("spanning map must choose one edge per vertex");
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        if (chosen_slot_[v] >= g.degree()) {
            throw Error("spanning map slot out of range at vertex " + std::to_string(v));
        }
        successor_[v] = g.target(v, chosen_slot_[v]);
    }
}

SpanningMap SpanningMap::from_color(const ColoredAutomaton& a, Color c) {
    std::vector<Slot> slots(a.size());
    for (Vertex v = 0; v < a.size(); ++v) slots[v] = a.coloring().slot(v, c);
    return SpanningMap(a.graph(), std::move(slots));
}

SpanningMap SpanningMap::from_successors(std::vector<Vertex> successor) {
    SpanningMap s;
    for (Vertex t : successor) {
        if (t >= successor.size()) throw Error("successor out of range");
    }
    s.chosen_slot_.assign(successor.size(), 0);
    s.successor_ = std::move(successor);
    return s;
}

SpanningParams find_parameters(const SpanningMap& s) {
    const std::size_t n = s.size();
    SpanningParams p;
    p.level.assign(n, 0);
    p.cycle_id.assign(n, kNoCycle);
    p.tree_root.assign(n, kNoVertex);
    p.cycle_predecessor.assign(n, kNoVertex);

    enum : char { kWhite, kGrey, kBlack };
    std::vector<char> state(n, kWhite);
    std::vector<Vertex> path;

    for (Vertex start = 0; start < n; ++start) {
        if (state[start] != kWhite) continue;
        path.clear();
        Vertex v = start;
        while (state[v] == kWhite) {
            state[v] = kGrey;
            path.push_back(v);
            v = s.successor(v);
        }
        std::size_t tail_end = path.size();
        if (state[v] == kGrey) {
            // The walk closed a new cycle starting at v.
            auto id = static_cast<std::uint32_t>(p.cycle_length.size());
            auto first = std::find(path.begin(), path.end(), v);
            tail_end = static_cast<std::size_t>(first - path.begin());
            for (auto it = first; it != path.end(); ++it) {
                p.cycle_id[*it] = id;
                p.tree_root[*it] = *it;
                p.cycle_predecessor[s.successor(*it)] = *it;
                state[*it] = kBlack;
            }
            p.cycle_length.push_back(static_cast<std::uint32_t>(path.end() - first));
            p.cycle_vertex_count += path.end() - first;
        }
        for (std::size_t i = tail_end; i-- > 0;) {
            Vertex u = path[i];
            Vertex next = s.successor(u);
            p.level[u] = p.level[next] + 1;
            p.tree_root[u] = p.tree_root[next];
            state[u] = kBlack;
        }
    }

    p.max_level = n == 0 ? 0 : *std::max_element(p.level.begin(), p.level.end());
    if (p.max_level > 0) {
        std::vector<Vertex> deepest(n, kNoVertex);
        for (Vertex v = 0; v < n; ++v) {
            if (p.level[v] == p.max_level && deepest[p.tree_root[v]] == kNoVertex) {
                deepest[p.tree_root[v]] = v;
            }
        }
        for (Vertex r = 0; r < n; ++r) {
            if (deepest[r] != kNoVertex) p.maximal_trees.push_back({r, deepest[r]});
        }
    }
    return p;
}

StablePair maximal_tree_to_stable_pair(const SpanningMap& s, const SpanningParams& p) {
    if (!p.has_unique_maximal_tree()) {
        throw NotUniqueMaximalTree();
    }
    const MaximalTree& tree = p.maximal_trees.front();
    Vertex b = tree.deepest;
    for (std::uint32_t i = 1; i < p.max_level; ++i) b = s.successor(b);
    return {b, p.cycle_predecessor[tree.root]};
}

SpanningMap flip(const SpanningMap& s, EdgeRef e, const Digraph& g) {
    std::vector<Slot> slots = s.chosen_slots();
    slots[e.source] = e.slot;
    return SpanningMap(g, std::move(slots));
}

Coloring color_spanning(const Coloring& base, const SpanningMap& s, Color c) {
    Coloring out = base;
    for (Vertex v = 0; v < s.size(); ++v) {
        Slot current = out.slot(v, c);
        if (current != s.chosen_slot(v)) out.swap_slots(v, current, s.chosen_slot(v));
    }
    return out;
}

}  // namespace roadcolor
