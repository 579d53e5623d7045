#pragma once

// Seeded random instances. All randomness comes from Rng so that a corpus is
// reproducible from (parameters, seed) alone.

#include <cstdint>
#include <random>

#include "hardgame/instances.hpp"
#include "hardgame/raysim.hpp"

namespace hardgame {

/// 64-bit LCG, x' = 6364136223846793005 x + 1442695040888963407 (mod 2^64),
/// state initialised to the seed. Draws use the high 32 bits.
class Rng {
public:
    using Engine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0>;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint32_t next() { return std::uint32_t(engine_() >> 32); }
    /// Uniform-ish in [0, bound) by modulo; bound > 0.
    std::uint32_t below(std::uint32_t bound) { return next() % bound; }
    bool coin() { return below(2) == 1; }

    template <class Vec>
    void shuffle(Vec& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(std::uint32_t(i))]);
    }

private:
    Engine engine_;
};

/// Simple connected 3-regular graph on n vertices, edges sorted with u < v.
/// Throws Error(InfeasibleParameters) for odd n, n < 4, or when the bounded
/// retry loop runs dry.
UGraph gen_cubic_graph(std::uint32_t n, std::uint64_t seed);

/// Simple digraph on 2 nHalf vertices, half (in 1, out 2) and half
/// (in 2, out 1). Throws Error(InfeasibleParameters) for nHalf < 2.
DGraph gen_degree_valid_digraph(std::uint32_t n_half, std::uint64_t seed);

/// Prefix over variables 1..numVars in order with random quantifiers, and
/// numClauses random 3-literal clauses.
QuantifiedFormula gen_qbf(std::uint32_t num_vars, std::uint32_t num_clauses, std::uint64_t seed);

/// Inputs x1..; gates g1.. reading earlier wires; the output is the last gate.
MonotoneCircuit gen_circuit(std::uint32_t num_inputs, std::uint32_t num_gates, std::uint64_t seed);

struct RayGenParams {
    std::uint32_t width = 8;
    std::uint32_t height = 8;
    std::uint32_t max_mirrors = 5;
    std::uint32_t max_polarizators = 4;
    std::uint32_t max_items = 2;
};

/// Opaque border, one beam, one exit, and random counts of every other element
/// up to the bounds.
ray::RayLevel gen_ray_level(const RayGenParams& params, std::uint64_t seed);

}  // namespace hardgame
