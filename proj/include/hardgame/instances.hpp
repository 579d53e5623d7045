#pragma once

// Source problems for the reductions: graphs, quantified 3-CNF formulas and
// monotone circuits. Vertices are 0-based here; the text formats are 1-based.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardgame {

enum class ErrorCode : std::uint8_t {
    DegreeViolation,
    NoValidStartVertex,
    MalformedCircuit,
    CyclicCircuit,
    MalformedFormula,
    TooLarge,
    InfeasibleParameters,
    SolutionMismatch,
    BadParams,
    BadOrigin,
    SyntaxError,
};

std::string_view to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct UGraph {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    friend bool operator==(const UGraph&, const UGraph&) = default;
};

struct DGraph {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;

    friend bool operator==(const DGraph&, const DGraph&) = default;
};

std::vector<std::uint32_t> degrees(const UGraph& g);
bool is_cubic(const UGraph& g);
bool is_simple(const UGraph& g);
bool is_connected(const UGraph& g);

std::vector<std::uint32_t> in_degrees(const DGraph& g);
std::vector<std::uint32_t> out_degrees(const DGraph& g);
/// Every vertex has (in 1, out 2) or (in 2, out 1).
bool is_degree_valid(const DGraph& g);

/// Boyer-Myrvold on the underlying simple graph. Advisory only.
bool is_planar(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

UGraph complete_graph_k4();
UGraph cube_graph_q3();
UGraph petersen_graph();

enum class Quantifier : std::uint8_t { Exists, Forall };

struct Literal {
    std::uint32_t var = 0;  // 1-based, as in QDIMACS
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct QuantifiedFormula {
    std::uint32_t num_vars = 0;
    std::vector<std::pair<Quantifier, std::uint32_t>> prefix;  // outermost first
    std::vector<Clause> clauses;

    friend bool operator==(const QuantifiedFormula&, const QuantifiedFormula&) = default;
};

/// Throws Error(MalformedFormula) unless prefix variables are distinct, in
/// range, and cover every literal.
void validate_formula(const QuantifiedFormula& f);

enum class GateKind : std::uint8_t { And, Or };

struct CircuitInput {
    std::string name;
    bool value = false;

    friend bool operator==(const CircuitInput&, const CircuitInput&) = default;
};

struct CircuitGate {
    std::string name;
    GateKind kind = GateKind::And;
    std::string a, b;

    friend bool operator==(const CircuitGate&, const CircuitGate&) = default;
};

struct MonotoneCircuit {
    std::vector<CircuitInput> inputs;
    std::vector<CircuitGate> gates;
    std::string output;

    friend bool operator==(const MonotoneCircuit&, const MonotoneCircuit&) = default;
};

/// Gate indices in an order where every gate follows the gates it reads.
/// Throws Error(CyclicCircuit) on a cycle and Error(MalformedCircuit) on
/// duplicate or undefined names.
std::vector<std::size_t> topological_gate_order(const MonotoneCircuit& c);

}  // namespace hardgame
