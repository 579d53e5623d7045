#pragma once

// Brute-force ground truth for the source problems. Depends only on the
// instance types; nothing here may include the arena, solver or reducer.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hardgame/instances.hpp"

namespace hardgame::oracle {

inline constexpr std::uint32_t kDefaultHamBound = 12;
inline constexpr std::uint32_t kDefaultQbfBound = 20;

/// Vertex order of a Hamiltonian cycle; the closing edge back to cycle[0] is implied.
struct HamCycle {
    std::vector<std::uint32_t> cycle;
};

/// Existential strategy as a tree over the prefix: one node per quantifier on
/// every path, with two children below a universal and one below an existential.
struct QbfStrategy {
    struct Node {
        std::uint32_t var = 0;
        Quantifier quantifier = Quantifier::Exists;
        bool value = false;                 // the choice, for existential nodes
        std::int32_t child[2] = {-1, -1};  // existential: child[0]; universal: by value
    };

    std::vector<Node> nodes;  // nodes[0] is the root when the prefix is non-empty

    /// Value chosen for the existential at prefix position `depth`, given
    /// values[0..depth) for the earlier prefix variables (outermost first).
    bool choice(const std::vector<bool>& values, std::size_t depth) const;
};

struct CircuitValues {
    std::map<std::string, bool> values;
};

struct Path {
    std::vector<std::uint32_t> vertices;
};

using Witness = std::variant<std::monostate, HamCycle, QbfStrategy, CircuitValues, Path>;

struct Answer {
    bool decision = false;
    Witness witness;
};

Answer ham_cycle(const UGraph& g, std::uint32_t bound = kDefaultHamBound);
Answer ham_cycle(const DGraph& g, std::uint32_t bound = kDefaultHamBound);
Answer eval_qbf(const QuantifiedFormula& f, std::uint32_t bound = kDefaultQbfBound);
Answer eval_circuit(const MonotoneCircuit& c);
Answer connectivity(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                    std::uint32_t s, std::uint32_t t, bool directed);

bool verify(const UGraph& g, const HamCycle& w);
bool verify(const DGraph& g, const HamCycle& w);
bool verify(const QuantifiedFormula& f, const QbfStrategy& w);
bool verify(const MonotoneCircuit& c, const CircuitValues& w);
bool verify(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges, std::uint32_t s,
            std::uint32_t t, bool directed, const Path& w);

/// Truth value of the matrix under a full assignment indexed by variable (1-based).
bool satisfies(const QuantifiedFormula& f, const std::vector<bool>& assignment);

}  // namespace hardgame::oracle
