#ifndef ROADCOLOR_RECOLOR_HPP
#define ROADCOLOR_RECOLOR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "roadcolor/digraph.hpp"
#include "roadcolor/spanning.hpp"

namespace roadcolor {

class NotALoop : public Error {
public:
    NotALoop() : Error("edge is not a self-loop") {}
};

class NotStronglyConnected : public Error {
public:
    NotStronglyConnected() : Error("graph is not strongly connected") {}
};

class UnstablePair : public Error {
public:
    UnstablePair(StablePair p)
        : Error("pair (" + std::to_string(p.first) + ", " + std::to_string(p.second) +
                ") is not stable"),
          pair(p) {}
    StablePair pair;
};

/// No flip candidate made progress. Unreachable on valid input.
class ExhaustedFlips : public Error {
public:
    ExhaustedFlips() : Error("no flip increased the cycles or produced a unique maximal tree") {}
};

/// A paranoid-mode assertion failed; always a defect.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Quotients by the congruence generated by one stable pair.

struct QuotientStep {
    /// The automaton that was quotiented, with the coloring in force at that moment.
    ColoredAutomaton pre;
    StablePair generator;
    /// Class id of every pre-quotient state; classes numbered by smallest member.
    std::vector<std::uint32_t> partition;
    /// Slot c of class K leads to the class of the color-c successor of any member.
    Digraph quotient;
    /// Smallest member of each class.
    std::vector<Vertex> representative;
};

/// Smallest congruence of `a` containing `pair`, computed by union-find with a work queue.
/// With `paranoid`, the pair is first checked against the exact stability oracle.
QuotientStep stable_pair_congruence(const ColoredAutomaton& a, StablePair pair,
                                    bool paranoid = false);

/// Pulls a coloring of step.quotient back to the pre-quotient graph. Every vertex applies its
/// class's old-to-new color permutation to its own colors.
Coloring lift_coloring(const QuotientStep& step, const Coloring& quotient_coloring);

// ---------------------------------------------------------------------------
// Colorings built from spanning structure.

/// Color 0 on the loop and on a reverse-BFS in-tree toward the loop's vertex, so that
/// 0^(n-1) resets the automaton.
Coloring loop_coloring(const Digraph& g, EdgeRef loop);

/// Color 0 on the chosen slots; the remaining slots of each vertex take the remaining colors
/// in slot order, except that `second` (if any) pins one extra edge to color 1.
Coloring complete_coloring(const Digraph& g, const SpanningMap& s,
                           std::optional<EdgeRef> second = std::nullopt);

struct TwoCycles {
    Coloring coloring;
    StablePair pair;
    SpanningMap map;
    /// Vertices of both cycles in cycle order; first_cycle starts at its DFS entry vertex,
    /// second_cycle starts at the intersection.
    std::vector<Vertex> first_cycle;
    std::vector<Vertex> second_cycle;
    Vertex intersection;
    /// The cycle edge at the intersection that was left out of the spanning map.
    EdgeRef removed;
};

/// Looks for two cycles meeting in exactly one vertex q and builds a spanning map with a unique
/// maximal tree from them. Requires a strongly connected graph with no loops and no vertex
/// with two incoming bunches.
std::optional<TwoCycles> two_cycles_with_intersection(const Digraph& g);

struct Grows {
    SpanningMap map;
};

struct PairFound {
    SpanningMap map;
    StablePair pair;
};

using FlipsOutcome = std::variant<Grows, PairFound>;

/// One round of spanning-map flips. Either strictly increases the number of cycle vertices or
/// reaches a map with a unique maximal tree and returns its stable pair.
/// Requires no loops and no vertex with two incoming bunches.
FlipsOutcome flips_round(const Digraph& g, const SpanningMap& s);

// ---------------------------------------------------------------------------
// Whole pipeline.

enum class PairSource { TwoIncomingBunches, TwoCycles, Flips };

/// Hooks fired while the reduction runs; all optional.
struct PipelineObserver {
    /// A stable pair is about to generate a quotient of `a`.
    std::function<void(const ColoredAutomaton& a, StablePair pair, PairSource source)> on_pair;
    std::function<void(const QuotientStep& step)> on_quotient;
    std::function<void(const Digraph& g, const SpanningMap& before, const FlipsOutcome& out)>
        on_flips;
    /// `lifted` was obtained from `quotient_coloring` through `step`.
    std::function<void(const QuotientStep& step, const Coloring& quotient_coloring,
                       const Coloring& lifted)>
        on_lift;
};

struct PipelineOptions {
    /// Checks pair stability, quotient invariants and every lift with the exact oracles.
    bool paranoid = false;
    /// Disabling forces the flips path whenever no two incoming bunches exist.
    bool use_two_cycles = true;
    const PipelineObserver* observer = nullptr;
};

struct ReductionTrace {
    std::vector<QuotientStep> steps;
    /// The last automaton: a single state, or one colored by loop_coloring.
    std::optional<ColoredAutomaton> terminal;
    bool terminal_by_loop = false;
};

struct SyncColoring {
    Coloring coloring;
    Word word;
    /// Vertices of the sink component the reduction ran on.
    std::vector<Vertex> sink;
    ReductionTrace trace;
};

struct Infeasible {
    enum class Reason { MultipleSinks, GcdNotOne };
    Reason reason;
    /// Number of sink components, or the cycle-length gcd.
    std::uint64_t value;
};

using ColoringResult = std::variant<SyncColoring, Infeasible>;

/// Synchronizing coloring of g, or the reason none exists. The returned coloring has been
/// checked by the verifier, which also supplies the word.
ColoringResult synchronizing_coloring(const Digraph& g, const PipelineOptions& options = {});

}  // namespace roadcolor

#endif  // ROADCOLOR_RECOLOR_HPP
