#pragma once

// Compilers from source problems to levels, and the constructive direction of
// each correctness argument: a winning certificate built from a source-problem
// solution without any search.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hardgame/arena.hpp"
#include "hardgame/gadgets.hpp"
#include "hardgame/instances.hpp"
#include "hardgame/oracle.hpp"
#include "hardgame/solver.hpp"

namespace hardgame {

struct Role {
    enum class Space : std::uint8_t { Vertex, Edge, Door };
    Space space = Space::Vertex;
    std::uint32_t id = 0;

    friend bool operator==(const Role&, const Role&) = default;
};

using Instance = std::variant<UGraph, DGraph, QuantifiedFormula, MonotoneCircuit>;

struct LevelBundle {
    std::string kind;  // reduction selector, e.g. "1b-a" or "2c"
    Level level;
    Instance source;
    std::map<std::string, Role> roles;
    std::map<std::string, std::vector<Move>> routes;
    std::optional<EdgeId> marked_edge;
    bool uses_one_way = false;
    std::optional<bool> planar;  // advisory, graph sources only
};

enum class Variant : std::uint8_t { A, B, C };

/// Hamiltonian cycle through single-use edges; u dangles from v.
LevelBundle reduce_meta1(const UGraph& g, VertexId v, bool require_exit);
/// Toll-road variants on the same skeleton.
LevelBundle reduce_meta1b(const UGraph& g, VertexId v, Variant variant);
/// Directed Hamiltonian cycle with one-way doored arcs and keys.
LevelBundle reduce_meta1c(const DGraph& g, Variant variant);
/// Monotone circuit value; `mode` is Plate or Button1.
LevelBundle reduce_circuit_value(const MonotoneCircuit& c, Actuator mode);
/// Directed Hamiltonian cycle with two-plate single-use arcs and an exit
/// behind one closed door per location.
LevelBundle reduce_meta2b(const DGraph& g);
/// Hamiltonian cycle with 2-button single-use edges.
LevelBundle reduce_meta3b(const UGraph& g, VertexId v);
/// Quantified 3-CNF; `mode` is Plate or Button3.
LevelBundle reduce_tqbf(const QuantifiedFormula& f, Actuator mode);

/// Start vertex used for directed reductions: the lowest id with in-degree 2
/// and out-degree 1. Throws Error(NoValidStartVertex).
VertexId directed_start(const DGraph& g);

/// Throws Error(SolutionMismatch) when the solution does not fit the bundle's
/// source instance or does not certify a yes-answer.
Certificate canonical_witness(const LevelBundle& bundle, const oracle::Answer& solution);

}  // namespace hardgame
