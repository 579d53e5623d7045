#pragma once

// Seeded instance corpora shared by the acceptance binary and the unit tests.

#include <string>
#include <utility>
#include <vector>

#include "hardgame/generators.hpp"
#include "hardgame/instances.hpp"
#include "hardgame/raysim.hpp"

namespace hardgame::corpus {

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

inline Named<UGraph> cubic_graphs() {
    Named<UGraph> out = {{"K4", complete_graph_k4()}, {"Q3", cube_graph_q3()}, {"Petersen", petersen_graph()}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto n = std::uint32_t(4 + 2 * (seed % 4));
        out.emplace_back("cubic" + std::to_string(n) + "-s" + std::to_string(seed), gen_cubic_graph(n, seed));
    }
    return out;
}

inline Named<DGraph> degree_valid_digraphs() {
    Named<DGraph> out;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto half = std::uint32_t(2 + seed % 3);
        out.emplace_back("dvd" + std::to_string(2 * half) + "-s" + std::to_string(seed),
                         gen_degree_valid_digraph(half, seed));
    }
    return out;
}

inline Named<MonotoneCircuit> circuits() {
    Named<MonotoneCircuit> out;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inputs = std::uint32_t(2 + seed % 4);
        const auto gates = std::uint32_t(1 + seed % 15);
        out.emplace_back("circuit-s" + std::to_string(seed), gen_circuit(inputs, gates, seed));
    }
    return out;
}

inline QuantifiedFormula formula(std::vector<std::pair<Quantifier, std::uint32_t>> prefix,
                                 std::vector<std::vector<int>> clauses) {
    QuantifiedFormula f;
    f.num_vars = std::uint32_t(prefix.size());
    f.prefix = std::move(prefix);
    for (const auto& c : clauses) {
        Clause clause;
        for (std::size_t s = 0; s < 3; ++s) clause[s] = {std::uint32_t(c[s] < 0 ? -c[s] : c[s]), c[s] < 0};
        f.clauses.push_back(clause);
    }
    return f;
}

inline Named<QuantifiedFormula> fixed_formulas() {
    using enum Quantifier;
    return {
        {"exists-x", formula({{Exists, 1}}, {{1, 1, 1}})},
        {"forall-x", formula({{Forall, 1}}, {{1, 1, 1}})},
        {"forall-x-taut", formula({{Forall, 1}}, {{1, -1, 1}})},
        {"forall-x-exists-y", formula({{Forall, 1}, {Exists, 2}}, {{1, 2, 2}, {-1, -2, -2}})},
    };
}

inline Named<QuantifiedFormula> formulas() {
    Named<QuantifiedFormula> out;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto vars = std::uint32_t(1 + seed % 3);
        const auto clauses = std::uint32_t(1 + (seed / 3) % 3);
        out.emplace_back("qbf-s" + std::to_string(seed), gen_qbf(vars, clauses, seed));
    }
    for (auto& f : fixed_formulas()) out.push_back(std::move(f));
    return out;
}

/// True formulas whose prefix is q universals.
inline Named<QuantifiedFormula> universal_tautologies() {
    using enum Quantifier;
    return {
        {"q1", formula({{Forall, 1}}, {{1, -1, 1}})},
        {"q2", formula({{Forall, 1}, {Forall, 2}}, {{1, -1, 2}})},
        {"q2-two-clauses", formula({{Forall, 1}, {Forall, 2}}, {{1, -1, 2}, {2, -2, -1}})},
    };
}

inline Named<ray::RayLevel> ray_levels() {
    Named<ray::RayLevel> out;
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        out.emplace_back("ray-s" + std::to_string(seed), gen_ray_level({}, seed));
    return out;
}

struct ConnectivityInstance {
    DGraph graph;
    std::uint32_t s = 0;
    std::uint32_t t = 0;
};

inline Named<ConnectivityInstance> connectivity_instances() {
    Named<ConnectivityInstance> out;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = gen_degree_valid_digraph(2, seed);
        const auto s = std::uint32_t(seed % 4);
        auto t = std::uint32_t((seed / 4) % 4);
        if (s == t) t = (t + 1) % 4;
        out.emplace_back("conn-s" + std::to_string(seed), ConnectivityInstance{g, s, t});
    }
    return out;
}

}  // namespace hardgame::corpus
