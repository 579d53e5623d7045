#pragma once

// Text formats for every artifact. Parsers are strict and report the first
// problem with its 1-based line and column; serializers produce the canonical
// form, which parses back to an equal value.

#include <cstddef>
#include <string>
#include <string_view>

#include "hardgame/arena.hpp"
#include "hardgame/instances.hpp"
#include "hardgame/oracle.hpp"
#include "hardgame/raysim.hpp"
#include "hardgame/solver.hpp"

namespace hardgame {

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& expectation);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// "p edge n m" then m lines "e u v" (1-based).
UGraph parse_ugraph(std::string_view text);
std::string serialize(const UGraph& g);

// "p edge n m" then m lines "a u v" (1-based).
DGraph parse_dgraph(std::string_view text);
std::string serialize(const DGraph& g);

// QDIMACS subset: "p cnf n m", quantifier lines "e ... 0" / "a ... 0",
// then m clause lines of exactly three literals ending in 0.
QuantifiedFormula parse_qbf(std::string_view text);
std::string serialize(const QuantifiedFormula& f);

// "in <name> <0|1>", "gate <name> AND|OR <a> <b>", "out <name>".
MonotoneCircuit parse_circuit(std::string_view text);
std::string serialize(const MonotoneCircuit& c);

// "ray W H", H rows of W cells, then "rbase <letter> <0..7>" per rotating
// polarizator, lettered in row-major order.
ray::RayLevel parse_ray_level(std::string_view text);
std::string serialize(const ray::RayLevel& level);

// JSON document; see the README for the field list.
Level parse_level(std::string_view text);
std::string serialize(const Level& level);

// One move per line: "t <edge>" or "p <vertex> <button>"; '#' starts a comment line.
Certificate parse_certificate(std::string_view text);
std::string serialize(const Certificate& cert);

/// "yes"/"no" plus witness lines; vertex numbers are 1-based.
std::string format_answer(const oracle::Answer& answer);

}  // namespace hardgame
