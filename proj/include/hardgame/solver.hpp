#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardgame/arena.hpp"

namespace hardgame {

inline constexpr std::size_t kDefaultStateBudget = 10'000'000;

struct Certificate {
    std::vector<Move> moves;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CheckResult {
    enum class Status : std::uint8_t { Won, IllegalMove, NotWon };

    Status status = Status::NotWon;
    std::size_t step = 0;                 // index of the failing move, or moves.size() for NotWon
    std::optional<IllegalReason> reason;  // set for IllegalMove

    bool won() const { return status == Status::Won; }
};

CheckResult check_certificate(const Level& level, const Certificate& cert);

struct Verdict {
    enum class Outcome : std::uint8_t { Solvable, Unsolvable, BudgetExceeded };

    Outcome outcome = Outcome::Unsolvable;
    Certificate witness;  // minimum length, only for Solvable
    std::size_t states_explored = 0;

    bool solvable() const { return outcome == Outcome::Solvable; }
};

std::string_view to_string(Verdict::Outcome o);

/// Breadth-first search over the full game state. Exact whenever it does not
/// exceed `state_budget` distinct states.
Verdict solve_exhaustive(const Level& level, std::size_t state_budget = kDefaultStateBudget);

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MonotoneResult {
    bool solvable = false;
    std::size_t rounds = 0;
    std::size_t steps = 0;  // edge relaxations plus door actions fired, over all rounds
};

/// Polynomial fixpoint for levels whose doors can only ever open. Requires no
/// Close actions, items, tolls, single-use or one-way edges.
MonotoneResult solve_monotone(const Level& level);

struct SolutionStats {
    std::size_t length = 0;
    std::size_t marked_traversals = 0;
};

/// Length of a minimum witness and how often it crosses `level.marked_edge`.
std::optional<SolutionStats> shortest_solution_stats(const Level& level,
                                                     std::size_t state_budget = kDefaultStateBudget);

std::size_t count_traversals(const Certificate& cert, EdgeId edge);

}  // namespace hardgame
