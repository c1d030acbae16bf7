#ifndef ROADCOLOR_SYNCHRO_HPP
#define ROADCOLOR_SYNCHRO_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "roadcolor/digraph.hpp"
#include "roadcolor/spanning.hpp"

namespace roadcolor {

class NotSynchronizing : public Error {
public:
    NotSynchronizing() : Error("automaton is not synchronizing") {}
};

class TooLarge : public Error {
public:
    using Error::Error;
};

/// Unordered pairs {p, q}, p != q, plus one virtual node for "already merged".
/// Pair {p, q} with p < q has index q * (q - 1) / 2 + p; the merged node comes last.
class PairGraph {
public:
    explicit PairGraph(const ColoredAutomaton& a) : a_(&a) {}

    std::size_t node_count() const { return pair_count() + 1; }
    std::size_t pair_count() const { return a_->size() * (a_->size() - 1) / 2; }
    std::size_t merged() const { return pair_count(); }

    static std::size_t index(Vertex p, Vertex q) {
        if (p > q) std::swap(p, q);
        return static_cast<std::size_t>(q) * (q - 1) / 2 + p;
    }
    static std::pair<Vertex, Vertex> pair_at(std::size_t index);

    /// Image of node `node` under letter c.
    std::size_t next(std::size_t node, Color c) const;

private:
    const ColoredAutomaton* a_;
};

/// Shortest merging letter for every pair, found by one backward search from the merged node.
/// Pairs that can never merge are deadlocks.
class MergeTable {
public:
    explicit MergeTable(const ColoredAutomaton& a);

    bool is_deadlock(Vertex p, Vertex q) const { return dist_[PairGraph::index(p, q)] == kUnreached; }
    /// Length of the shortest word merging p and q; requires !is_deadlock(p, q).
    std::uint32_t distance(Vertex p, Vertex q) const { return dist_[PairGraph::index(p, q)]; }
    /// Shortest word merging p != q. Throws NotSynchronizing for a deadlock.
    Word merging_word(Vertex p, Vertex q) const;

    std::vector<std::pair<Vertex, Vertex>> deadlocks() const;
    bool any_deadlock() const { return deadlock_count_ > 0; }

    /// No deadlock is reachable from {p, q} in the pair graph.
    bool is_stable(Vertex p, Vertex q) const;

private:
    static constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);

    const ColoredAutomaton* a_;
    std::vector<std::uint32_t> dist_;
    std::vector<Color> letter_;
    std::size_t deadlock_count_ = 0;
};

std::vector<std::pair<Vertex, Vertex>> deadlock_pairs(const ColoredAutomaton& a);

struct SyncReport {
    bool synchronizing = false;
    std::optional<Word> word;
    std::optional<std::pair<Vertex, Vertex>> witness_deadlock;
};

SyncReport is_synchronizing(const ColoredAutomaton& a);

bool is_stable_pair(const ColoredAutomaton& a, StablePair pair);

/// Reset word built by repeatedly merging the two smallest states of the current image
/// with a shortest pair-merging word. Length at most n^3.
Word greedy_reset_word(const ColoredAutomaton& a);

/// Minimum-length nonempty reset word by subset search. Only for n <= 12.
Word shortest_reset_word(const ColoredAutomaton& a);

/// Tries every coloring; for tiny graphs only ((d!)^n <= 10^6).
bool brute_force_colorable(const Digraph& g);

}  // namespace roadcolor

#endif  // ROADCOLOR_SYNCHRO_HPP
