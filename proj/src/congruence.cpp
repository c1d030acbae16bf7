#include "roadcolor/recolor.hpp"
#include "roadcolor/synchro.hpp"

#include <deque>
#include <numeric>

namespace roadcolor {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), Vertex{0});
    }

    Vertex find(Vertex x) {
        Vertex root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            Vertex up = parent_[x];
            parent_[x] = root;
            x = up;
        }
        return root;
    }

    // Returns false if already joined.
    bool unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<Vertex> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace

QuotientStep stable_pair_congruence(const ColoredAutomaton& a, StablePair pair, bool paranoid) {
    if (pair.first == pair.second) {
        throw Error("congruence generator must be two distinct states");
    }
    if (paranoid && !is_stable_pair(a, pair)) {
        throw UnstablePair(pair);
    }
    const std::size_t n = a.size();
    const std::size_t d = a.alphabet_size();

    DisjointSets sets(n);
    std::deque<std::pair<Vertex, Vertex>> work{{pair.first, pair.second}};
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        if (!sets.unite(x, y)) continue;
        for (Color c = 0; c < d; ++c) work.emplace_back(a.next(x, c), a.next(y, c));
    }

    constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> class_of_root(n, kNone);
    std::vector<std::uint32_t> partition(n);
    std::vector<Vertex> representative;
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t& id = class_of_root[sets.find(v)];
        if (id == kNone) {
            id = static_cast<std::uint32_t>(representative.size());
            representative.push_back(v);
        }
        partition[v] = id;
    }

    std::vector<Vertex> targets(representative.size() * d);
    for (std::size_t k = 0; k < representative.size(); ++k) {
        for (Color c = 0; c < d; ++c) {
            targets[k * d + c] = partition[a.next(representative[k], c)];
        }
    }
    Digraph quotient(representative.size(), d, std::move(targets));
    return QuotientStep{a, pair, std::move(partition), std::move(quotient), std::move(representative)};
}

Coloring lift_coloring(const QuotientStep& step, const Coloring& quotient_coloring) {
    const Coloring& pre = step.pre.coloring();
    if (quotient_coloring.size() != step.quotient.size() ||
        quotient_coloring.degree() != pre.degree()) {
        throw Error("quotient coloring does not match the quotient graph");
    }
    const std::size_t n = pre.size();
    const std::size_t d = pre.degree();
    std::vector<Color> colors(n * d);
    for (Vertex v = 0; v < n; ++v) {
        for (Slot s = 0; s < d; ++s) {
            colors[v * d + s] = quotient_coloring.color(step.partition[v], pre.color(v, s));
        }
    }
    return Coloring(n, d, std::move(colors));
}

}  // namespace roadcolor
