#include "roadcolor/recolor.hpp"

#include <algorithm>
#include <tuple>

#include "predecessors.hpp"

namespace roadcolor {

namespace {

struct Cycle {
    std::vector<Vertex> vertices;
    std::vector<Slot> slots;  // slots[i] leads from vertices[i] to vertices[i + 1]
};

// First cycle closed by a back edge of a depth-first search from vertex 0.
std::optional<Cycle> first_back_edge_cycle(const Digraph& g) {
    enum : char { kWhite, kGrey, kBlack };
    std::vector<char> state(g.size(), kWhite);
    struct Frame {
        Vertex v;
        Slot next_slot;
    };
    std::vector<Frame> stack{{0, 0}};
    state[0] = kGrey;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_slot == g.degree()) {
            state[f.v] = kBlack;
            stack.pop_back();
            continue;
        }
        const Slot slot = f.next_slot++;
        const Vertex w = g.target(f.v, slot);
        if (state[w] == kWhite) {
            state[w] = kGrey;
            stack.push_back({w, 0});
        } else if (state[w] == kGrey) {
            auto it = std::find_if(stack.begin(), stack.end(),
                                   [w](const Frame& fr) { return fr.v == w; });
            Cycle c;
            for (; it != stack.end(); ++it) {
                c.vertices.push_back(it->v);
                // Frames below the top descended through next_slot - 1.
                c.slots.push_back(it + 1 == stack.end() ? slot : it->next_slot - 1);
            }
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<TwoCycles> two_cycles_with_intersection(const Digraph& g) {
    const std::size_t n = g.size();
    if (n < 2) return std::nullopt;
    auto found = first_back_edge_cycle(g);
    if (!found) return std::nullopt;
    const Cycle& first = *found;

    std::vector<char> in_first(n, 0);
    for (Vertex v : first.vertices) in_first[v] = 1;

    // Multi-source search from the candidates, outside the first cycle.
    std::vector<Vertex> origin(n, kNoVertex);
    std::vector<EdgeRef> parent(n);
    std::vector<Vertex> queue;
    for (Vertex q : first.vertices) {
        if (!g.is_bunch(q)) queue.push_back(q);
    }
    std::optional<Cycle> second;
    for (std::size_t head = 0; head < queue.size() && !second; ++head) {
        const Vertex r = queue[head];
        const Vertex from = in_first[r] ? r : origin[r];
        for (Slot s = 0; s < g.degree(); ++s) {
            const Vertex x = g.target(r, s);
            if (!in_first[r] && x == from) {
                Cycle c;
                c.vertices.push_back(r);
                c.slots.push_back(s);
                for (Vertex u = r; u != from;) {
                    EdgeRef e = parent[u];
                    c.vertices.push_back(e.source);
                    c.slots.push_back(e.slot);
                    u = e.source;
                }
                std::reverse(c.vertices.begin(), c.vertices.end());
                std::reverse(c.slots.begin(), c.slots.end());
                second = std::move(c);
                break;
            }
            if (in_first[x] || origin[x] != kNoVertex) continue;
            origin[x] = from;
            parent[x] = {r, s};
            queue.push_back(x);
        }
    }
    if (!second) return std::nullopt;

    const Vertex q = second->vertices.front();
    const auto q_pos = static_cast<std::size_t>(
        std::find(first.vertices.begin(), first.vertices.end(), q) - first.vertices.begin());

    // Both cycles carry their own edges; q keeps both for now.
    std::vector<Slot> chosen(n, detail::kUnassigned);
    std::vector<char> attached(n, 0);
    // Distance along its own cycle from a cycle vertex to q, and which cycle it sits on.
    std::vector<std::uint32_t> dist_to_q(n, 0);
    std::vector<char> on_second(n, 0);
    const std::size_t len_first = first.vertices.size();
    for (std::size_t i = 0; i < len_first; ++i) {
        Vertex v = first.vertices[i];
        chosen[v] = first.slots[i];
        dist_to_q[v] = static_cast<std::uint32_t>((q_pos + len_first - i) % len_first);
    }
    const std::size_t len_second = second->vertices.size();
    for (std::size_t i = 1; i < len_second; ++i) {
        Vertex v = second->vertices[i];
        chosen[v] = second->slots[i];
        dist_to_q[v] = static_cast<std::uint32_t>(len_second - i);
        on_second[v] = 1;
    }

    std::vector<Vertex> cycle_vertices(first.vertices);
    cycle_vertices.insert(cycle_vertices.end(), second->vertices.begin() + 1, second->vertices.end());
    std::sort(cycle_vertices.begin(), cycle_vertices.end());
    std::vector<Vertex> order =
        detail::attach_in_forest(detail::Predecessors(g), cycle_vertices, chosen, attached);
    if (order.size() != n) throw NotStronglyConnected();

    // Levels and roots of the forest hanging off the two cycles.
    std::vector<std::uint32_t> level(n, 0);
    std::vector<Vertex> root(n);
    for (Vertex v : cycle_vertices) root[v] = v;
    std::uint32_t max_level = 0;
    for (std::size_t i = cycle_vertices.size(); i < order.size(); ++i) {
        Vertex v = order[i];
        Vertex up = g.target(v, chosen[v]);
        level[v] = level[up] + 1;
        root[v] = root[up];
        max_level = std::max(max_level, level[v]);
    }

    // Drop the edge at q of the cycle carrying the maximal tree farthest from q.
    // Ties go to the first cycle.
    bool drop_second = false;
    if (max_level > 0) {
        std::tuple<std::uint32_t, bool> best{0, true};
        for (std::size_t i = cycle_vertices.size(); i < order.size(); ++i) {
            Vertex v = order[i];
            if (level[v] != max_level) continue;
            Vertex r = root[v];
            std::tuple<std::uint32_t, bool> key{dist_to_q[r], !on_second[r]};
            best = std::max(best, key);
        }
        drop_second = !std::get<1>(best);
    }
    const Slot first_slot_at_q = first.slots[q_pos];
    const Slot second_slot_at_q = second->slots.front();
    chosen[q] = drop_second ? first_slot_at_q : second_slot_at_q;
    const EdgeRef removed{q, drop_second ? second_slot_at_q : first_slot_at_q};

    SpanningMap map(g, std::move(chosen));
    SpanningParams params = find_parameters(map);
    if (!params.has_unique_maximal_tree()) {
        throw InvariantViolation("two-cycles spanning map lacks a unique maximal tree");
    }
    StablePair pair = maximal_tree_to_stable_pair(map, params);
    Coloring coloring = complete_coloring(g, map, removed);
    return TwoCycles{std::move(coloring), pair,          std::move(map),
                     first.vertices,      second->vertices, q, removed};
}

}  // namespace roadcolor
