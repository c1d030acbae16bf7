#include "roadcolor/synchro.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace roadcolor {

std::pair<Vertex, Vertex> PairGraph::pair_at(std::size_t index) {
    auto q = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
    while (q * (q - 1) / 2 > index) --q;
    while ((q + 1) * q / 2 <= index) ++q;
    return {static_cast<Vertex>(index - q * (q - 1) / 2), static_cast<Vertex>(q)};
}

std::size_t PairGraph::next(std::size_t node, Color c) const {
    if (node == merged()) return node;
    auto [p, q] = pair_at(node);
    Vertex pc = a_->next(p, c);
    Vertex qc = a_->next(q, c);
    return pc == qc ? merged() : index(pc, qc);
}

MergeTable::MergeTable(const ColoredAutomaton& a) : a_(&a) {
    const std::size_t n = a.size();
    const std::size_t d = a.alphabet_size();
    const std::size_t pairs = n * (n - 1) / 2;
    dist_.assign(pairs, kUnreached);
    letter_.assign(pairs, 0);

    // Preimages under each letter, in CSR form: pre[c][offset[c][y] .. offset[c][y + 1]).
    std::vector<std::vector<std::uint32_t>> offset(d, std::vector<std::uint32_t>(n + 1, 0));
    std::vector<std::vector<Vertex>> pre(d, std::vector<Vertex>(n));
    for (Color c = 0; c < d; ++c) {
        auto& off = offset[c];
        for (Vertex v = 0; v < n; ++v) ++off[a.next(v, c) + 1];
        std::partial_sum(off.begin(), off.end(), off.begin());
        std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
        for (Vertex v = 0; v < n; ++v) pre[c][fill[a.next(v, c)]++] = v;
    }
    auto preimages = [&](Color c, Vertex y) {
        return std::span<const Vertex>(pre[c].data() + offset[c][y],
                                       offset[c][y + 1] - offset[c][y]);
    };

    std::vector<std::size_t> queue;
    queue.reserve(pairs);
    for (Color c = 0; c < d; ++c) {
        for (Vertex y = 0; y < n; ++y) {
            auto ys = preimages(c, y);
            for (std::size_t i = 0; i < ys.size(); ++i) {
                for (std::size_t j = i + 1; j < ys.size(); ++j) {
                    std::size_t idx = PairGraph::index(ys[i], ys[j]);
                    if (dist_[idx] == kUnreached) {
                        dist_[idx] = 1;
                        letter_[idx] = c;
                        queue.push_back(idx);
                    }
                }
            }
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t node = queue[head];
        auto [p, q] = PairGraph::pair_at(node);
        const std::uint32_t next_dist = dist_[node] + 1;
        for (Color c = 0; c < d; ++c) {
            for (Vertex x : preimages(c, p)) {
                for (Vertex y : preimages(c, q)) {
                    if (x == y) continue;
                    std::size_t idx = PairGraph::index(x, y);
                    if (dist_[idx] == kUnreached) {
                        dist_[idx] = next_dist;
                        letter_[idx] = c;
                        queue.push_back(idx);
                    }
                }
            }
        }
    }
    deadlock_count_ = pairs - queue.size();
}

Word MergeTable::merging_word(Vertex p, Vertex q) const {
    Word w;
    while (p != q) {
        std::size_t idx = PairGraph::index(p, q);
        if (dist_[idx] == kUnreached) throw NotSynchronizing();
        Color c = letter_[idx];
        w.push_back(c);
        p = a_->next(p, c);
        q = a_->next(q, c);
    }
    return w;
}

std::vector<std::pair<Vertex, Vertex>> MergeTable::deadlocks() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(deadlock_count_);
    const std::size_t n = a_->size();
    for (Vertex p = 0; p < n; ++p) {
        for (Vertex q = p + 1; q < n; ++q) {
            if (is_deadlock(p, q)) out.emplace_back(p, q);
        }
    }
    return out;
}

bool MergeTable::is_stable(Vertex p, Vertex q) const {
    if (p == q) return true;
    if (deadlock_count_ == 0) return true;
    PairGraph graph(*a_);
    std::vector<char> seen(graph.pair_count(), 0);
    std::vector<std::size_t> queue{PairGraph::index(p, q)};
    seen[queue.front()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t node = queue[head];
        if (dist_[node] == kUnreached) return false;
        for (Color c = 0; c < a_->alphabet_size(); ++c) {
            std::size_t next = graph.next(node, c);
            if (next != graph.merged() && !seen[next]) {
                seen[next] = 1;
                queue.push_back(next);
            }
        }
    }
    return true;
}

std::vector<std::pair<Vertex, Vertex>> deadlock_pairs(const ColoredAutomaton& a) {
    return MergeTable(a).deadlocks();
}

SyncReport is_synchronizing(const ColoredAutomaton& a) {
    SyncReport report;
    MergeTable table(a);
    if (table.any_deadlock()) {
        // deadlocks() is ordered, so the first one is the smallest pair.
        const std::size_t n = a.size();
        for (Vertex p = 0; p < n && !report.witness_deadlock; ++p) {
            for (Vertex q = p + 1; q < n; ++q) {
                if (table.is_deadlock(p, q)) {
                    report.witness_deadlock = std::make_pair(p, q);
                    break;
                }
            }
        }
        return report;
    }
    report.synchronizing = true;
    Word w;
    std::vector<Vertex> current = all_vertices(a);
    while (current.size() > 1) {
        Word step = table.merging_word(current[0], current[1]);
        current = apply_word(a, current, step);
        w.insert(w.end(), step.begin(), step.end());
    }
    report.word = std::move(w);
    return report;
}

bool is_stable_pair(const ColoredAutomaton& a, StablePair pair) {
    if (pair.first == pair.second) {
        throw Error("stable pair needs two distinct states");
    }
    return MergeTable(a).is_stable(pair.first, pair.second);
}

Word greedy_reset_word(const ColoredAutomaton& a) {
    SyncReport report = is_synchronizing(a);
    if (!report.synchronizing) throw NotSynchronizing();
    return *report.word;
}

Word shortest_reset_word(const ColoredAutomaton& a) {
    const std::size_t n = a.size();
    const std::size_t d = a.alphabet_size();
    if (n > 12) {
        throw TooLarge("shortest reset word search is limited to 12 states");
    }
    const std::uint32_t full = (1u << n) - 1;
    constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> parent(std::size_t{1} << n, kNone);
    std::vector<Color> via(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> queue{full};
    parent[full] = full;
    auto image = [&](std::uint32_t mask, Color c) {
        std::uint32_t out = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (mask >> v & 1u) out |= 1u << a.next(v, c);
        }
        return out;
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t mask = queue[head];
        for (Color c = 0; c < d; ++c) {
            std::uint32_t next = image(mask, c);
            if (std::popcount(next) == 1) {
                Word w{c};
                for (std::uint32_t m = mask; m != full; m = parent[m]) w.push_back(via[m]);
                std::reverse(w.begin(), w.end());
                return w;
            }
            if (parent[next] == kNone) {
                parent[next] = mask;
                via[next] = c;
                queue.push_back(next);
            }
        }
    }
    throw NotSynchronizing();
}

bool brute_force_colorable(const Digraph& g) {
    const std::size_t n = g.size();
    const std::size_t d = g.degree();
    std::vector<std::vector<Color>> perms;
    std::vector<Color> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    double total = std::pow(static_cast<double>(perms.size()), static_cast<double>(n));
    if (total > 1e6) {
        throw TooLarge("too many colorings to enumerate");
    }
    std::vector<std::size_t> choice(n, 0);
    std::vector<Color> colors(n * d);
    while (true) {
        for (Vertex v = 0; v < n; ++v) {
            std::copy(perms[choice[v]].begin(), perms[choice[v]].end(), colors.begin() + v * d);
        }
        ColoredAutomaton a(g, Coloring(n, d, colors));
        if (n == 1 || !MergeTable(a).any_deadlock()) return true;
        std::size_t i = 0;
        while (i < n && ++choice[i] == perms.size()) choice[i++] = 0;
        if (i == n) return false;
    }
}

}  // namespace roadcolor
