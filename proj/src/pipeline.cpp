#include "roadcolor/precheck.hpp"
#include "roadcolor/recolor.hpp"
#include "roadcolor/synchro.hpp"

namespace roadcolor {

namespace {

void check_quotient(const QuotientStep& step) {
    const Digraph& q = step.quotient;
    if (q.degree() != step.pre.alphabet_size()) {
        throw InvariantViolation("quotient changed the outdegree");
    }
    if (q.size() >= step.pre.size()) {
        throw InvariantViolation("quotient did not shrink the automaton");
    }
    if (!is_strongly_connected(q)) {
        throw InvariantViolation("quotient is not strongly connected");
    }
    if (gcd_of_cycles(q).gcd != 1) {
        throw InvariantViolation("quotient has cycle-length gcd above 1");
    }
}

// Pair and coloring for one reduction level of an automaton with no loops.
struct LevelChoice {
    Coloring coloring;
    StablePair pair;
    PairSource source;
};

LevelChoice choose_pair(const Digraph& g, const PipelineOptions& options) {
    const PipelineObserver* obs = options.observer;
    if (auto bunches = find_two_incoming_bunches(g)) {
        return {Coloring::identity(g.size(), g.degree()), bunches->pair,
                PairSource::TwoIncomingBunches};
    }
    if (options.use_two_cycles) {
        if (auto tc = two_cycles_with_intersection(g)) {
            return {std::move(tc->coloring), tc->pair, PairSource::TwoCycles};
        }
    }
    const Coloring base = Coloring::identity(g.size(), g.degree());
    SpanningMap map = SpanningMap::from_color(ColoredAutomaton(g, base), 0);
    for (std::size_t grows = 0;; ++grows) {
        FlipsOutcome out = flips_round(g, map);
        if (obs && obs->on_flips) obs->on_flips(g, map, out);
        if (auto* found = std::get_if<PairFound>(&out)) {
            return {color_spanning(base, found->map), found->pair, PairSource::Flips};
        }
        if (grows >= g.size()) throw ExhaustedFlips();
        map = std::get<Grows>(std::move(out)).map;
    }
}

}  // namespace

ColoringResult synchronizing_coloring(const Digraph& g, const PipelineOptions& options) {
    const PipelineObserver* obs = options.observer;
    SinkCheck sink = check_sink_scc(g);
    if (!sink.unique()) {
        return Infeasible{Infeasible::Reason::MultipleSinks, sink.sink_count};
    }
    const bool whole = sink.vertices.size() == g.size();
    const Digraph sink_graph = whole ? g : g.induced(sink.vertices);

    ReductionTrace trace;
    Digraph current = sink_graph;
    if (!find_loop(current)) {
        const std::uint64_t gcd = gcd_of_cycles(current).gcd;
        if (gcd != 1) return Infeasible{Infeasible::Reason::GcdNotOne, gcd};
    }

    while (current.size() > 1) {
        if (auto loop = find_loop(current)) {
            trace.terminal.emplace(current, loop_coloring(current, *loop));
            trace.terminal_by_loop = true;
            break;
        }
        LevelChoice choice = choose_pair(current, options);
        ColoredAutomaton a(current, std::move(choice.coloring));
        if (obs && obs->on_pair) obs->on_pair(a, choice.pair, choice.source);
        QuotientStep step = stable_pair_congruence(a, choice.pair, options.paranoid);
        if (options.paranoid) check_quotient(step);
        if (obs && obs->on_quotient) obs->on_quotient(step);
        current = step.quotient;
        trace.steps.push_back(std::move(step));
    }
    if (!trace.terminal) {
        trace.terminal.emplace(current, Coloring::identity(current.size(), current.degree()));
    }

    Coloring coloring = trace.terminal->coloring();
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        Coloring lifted = lift_coloring(*it, coloring);
        if (options.paranoid &&
            is_synchronizing(ColoredAutomaton(it->quotient, coloring)).synchronizing &&
            !is_synchronizing(ColoredAutomaton(it->pre.graph(), lifted)).synchronizing) {
            throw InvariantViolation("lifted coloring is not synchronizing");
        }
        if (obs && obs->on_lift) obs->on_lift(*it, coloring, lifted);
        coloring = std::move(lifted);
    }

    // Outside the sink the initial slot = color coloring stays.
    Coloring full = coloring;
    if (!whole) {
        const std::size_t d = g.degree();
        std::vector<Color> colors(g.size() * d);
        for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<Color>(i % d);
        for (std::size_t i = 0; i < sink.vertices.size(); ++i) {
            auto row = coloring.row(static_cast<Vertex>(i));
            std::copy(row.begin(), row.end(), colors.begin() + sink.vertices[i] * d);
        }
        full = Coloring(g.size(), d, std::move(colors));
    }

    SyncReport report = is_synchronizing(ColoredAutomaton(g, full));
    if (!report.synchronizing) {
        throw InvariantViolation("constructed coloring failed verification");
    }
    return SyncColoring{std::move(full), std::move(*report.word), std::move(sink.vertices),
                        std::move(trace)};
}

}  // namespace roadcolor
