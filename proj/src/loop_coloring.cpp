#include "roadcolor/precheck.hpp"
#include "roadcolor/recolor.hpp"

#include "predecessors.hpp"

namespace roadcolor {

Coloring complete_coloring(const Digraph& g, const SpanningMap& s, std::optional<EdgeRef> second) {
    const std::size_t d = g.degree();
    std::vector<Color> colors(g.size() * d);
    for (Vertex v = 0; v < g.size(); ++v) {
        const bool pinned = second && second->source == v;
        Color next = pinned ? 2 : 1;
        for (Slot slot = 0; slot < d; ++slot) {
            Color& c = colors[v * d + slot];
            if (slot == s.chosen_slot(v)) {
                c = 0;
            } else if (pinned && slot == second->slot) {
                c = 1;
            } else {
                c = next++;
            }
        }
    }
    return Coloring(g.size(), d, std::move(colors));
}

Coloring loop_coloring(const Digraph& g, EdgeRef loop) {
    if (g.target(loop) != loop.source) throw NotALoop();
    if (!is_strongly_connected(g)) throw NotStronglyConnected();

    std::vector<Slot> chosen(g.size(), detail::kUnassigned);
    std::vector<char> attached(g.size(), 0);
    chosen[loop.source] = loop.slot;
    const Vertex root[] = {loop.source};
    detail::attach_in_forest(detail::Predecessors(g), root, chosen, attached);
    return complete_coloring(g, SpanningMap(g, std::move(chosen)));
}

}  // namespace roadcolor
