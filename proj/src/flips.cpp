#include "roadcolor/recolor.hpp"

namespace roadcolor {

namespace {

// Applies `flips` to `s` and reports progress relative to `before`, if any.
std::optional<FlipsOutcome> try_flips(const Digraph& g, const SpanningMap& s,
                                      const SpanningParams& before,
                                      std::initializer_list<EdgeRef> flips) {
    std::vector<Slot> slots = s.chosen_slots();
    for (EdgeRef e : flips) slots[e.source] = e.slot;
    SpanningMap next(g, std::move(slots));
    SpanningParams after = find_parameters(next);
    if (after.cycle_vertex_count > before.cycle_vertex_count) {
        return Grows{std::move(next)};
    }
    if (after.has_unique_maximal_tree()) {
        StablePair pair = maximal_tree_to_stable_pair(next, after);
        return PairFound{std::move(next), pair};
    }
    return std::nullopt;
}

}  // namespace

FlipsOutcome flips_round(const Digraph& g, const SpanningMap& s) {
    const SpanningParams params = find_parameters(s);
    if (params.has_unique_maximal_tree()) {
        return PairFound{s, maximal_tree_to_stable_pair(s, params)};
    }

    if (params.max_level == 0) {
        // Only cycles: redirecting any vertex off its cycle edge leaves one nontrivial tree.
        for (Vertex a = 0; a < g.size(); ++a) {
            for (Slot slot = 0; slot < g.degree(); ++slot) {
                if (g.target(a, slot) == s.successor(a)) continue;
                SpanningMap next = flip(s, {a, slot}, g);
                SpanningParams after = find_parameters(next);
                if (!after.has_unique_maximal_tree()) {
                    throw InvariantViolation("flip of a cycle-only map left no unique maximal tree");
                }
                StablePair pair = maximal_tree_to_stable_pair(next, after);
                return PairFound{std::move(next), pair};
            }
        }
        throw ExhaustedFlips();
    }

    const MaximalTree& tree = params.maximal_trees.front();
    const Vertex r = tree.root;
    const Vertex p = tree.deepest;
    Vertex b = p;
    for (std::uint32_t i = 1; i < params.max_level; ++i) b = s.successor(b);
    const Vertex c = params.cycle_predecessor[r];

    // (1) Edges a -> p replacing a's current edge.
    std::vector<EdgeRef> into_p;
    for (Vertex a = 0; a < g.size(); ++a) {
        if (a == p) continue;
        for (Slot slot = 0; slot < g.degree(); ++slot) {
            if (g.target(a, slot) == p && slot != s.chosen_slot(a)) into_p.push_back({a, slot});
        }
    }
    for (EdgeRef e : into_p) {
        if (auto out = try_flips(g, s, params, {e})) return *out;
    }

    // (2) Redirect b away from r, or (3) when b is a bunch into r, redirect c instead.
    // Each alone, then together with one flip from (1).
    const Vertex mover = g.is_bunch(b) ? c : b;
    for (Slot slot = 0; slot < g.degree(); ++slot) {
        if (g.target(mover, slot) == r) continue;
        const EdgeRef e{mover, slot};
        if (auto out = try_flips(g, s, params, {e})) return *out;
        for (EdgeRef a : into_p) {
            if (a.source == mover) continue;
            if (auto out = try_flips(g, s, params, {e, a})) return *out;
        }
    }
    throw ExhaustedFlips();
}

}  // namespace roadcolor
