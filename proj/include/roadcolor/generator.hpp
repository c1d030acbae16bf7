#ifndef ROADCOLOR_GENERATOR_HPP
#define ROADCOLOR_GENERATOR_HPP

#include <cstdint>
#include <random>

#include "roadcolor/digraph.hpp"

namespace roadcolor {

/// mt19937_64 with portable bounded draws (the standard distributions differ across
/// library implementations, which would break byte-exact reproducibility).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Every slot a uniform random target. Not necessarily strongly connected.
Digraph random_digraph(std::size_t n, std::size_t d, Rng& rng);

/// Strongly connected graph with cycle-length gcd 1, deterministic in (n, d, seed).
/// Slot 0 is a random Hamiltonian cycle, one random vertex gets a chord in slot 1, and the
/// other slots are uniform. Throws for d == 1 and n > 1, where no such graph exists.
Digraph generate_agw(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace roadcolor

#endif  // ROADCOLOR_GENERATOR_HPP
