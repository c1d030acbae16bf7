#include "roadcolor/generator.hpp"

#include <limits>

#include "roadcolor/precheck.hpp"

namespace roadcolor {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

// splitmix64 finalizer
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Digraph random_digraph(std::size_t n, std::size_t d, Rng& rng) {
    std::vector<Vertex> targets(n * d);
    for (Vertex& t : targets) t = static_cast<Vertex>(rng.below(n));
    return Digraph(n, d, std::move(targets));
}

Digraph generate_agw(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n == 0 || d == 0) throw Error("generator needs n >= 1 and d >= 1");
    if (n == 1) return Digraph(1, d, std::vector<Vertex>(d, 0));
    if (d == 1) throw Error("no strongly connected graph with outdegree 1 and gcd 1 has n > 1");

    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        for (std::size_t i = n - 1; i > 0; --i) {
            std::swap(order[i], order[rng.below(i + 1)]);
        }
        std::vector<Vertex> targets(n * d);
        for (std::size_t i = 0; i < n; ++i) {
            targets[order[i] * d] = order[(i + 1) % n];
        }
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t s = 1; s < d; ++s) {
                targets[v * d + s] = static_cast<Vertex>(rng.below(n));
            }
        }
        // Chord: a slot-1 edge that skips ahead on the backbone.
        const std::size_t from = rng.below(n);
        const std::size_t hop = 2 + rng.below(n - 1);
        targets[order[from] * d + 1] = order[(from + hop) % n];

        Digraph g(n, d, std::move(targets));
        if (gcd_of_cycles(g).gcd == 1) return g;
    }
    throw Error("generator retry budget exhausted");
}

}  // namespace roadcolor
