#pragma once

// Abstract avatar game played on a graph: doors, keys, tokens, pressure
// plates, k-buttons, one-way / single-use / toll edges.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hardgame {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using DoorId = std::uint32_t;

enum class DoorOp : std::uint8_t { Open, Close };

/// Sets a door open or closed. Idempotent, never a toggle.
struct DoorAction {
    DoorId door = 0;
    DoorOp op = DoorOp::Open;

    friend bool operator==(const DoorAction&, const DoorAction&) = default;
};

inline DoorAction open_door(DoorId d) { return {d, DoorOp::Open}; }
inline DoorAction close_door(DoorId d) { return {d, DoorOp::Close}; }

/// A k-button is the list of its k actions.
using Button = std::vector<DoorAction>;

struct VertexSpec {
    VertexId id = 0;
    bool must_visit = false;
    bool exit = false;
    std::uint32_t tokens = 0;
    std::uint32_t keys = 0;
    std::vector<DoorAction> plates;  // fired on every arrival, in order
    std::vector<Button> buttons;     // pressed only by choice

    friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

struct EdgeSpec {
    EdgeId id = 0;
    VertexId from = 0;
    VertexId to = 0;
    bool one_way = false;  // from -> to only
    bool single_use = false;
    std::uint32_t toll = 0;  // 0 or 1
    std::optional<DoorId> door;

    friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct DoorSpec {
    DoorId id = 0;
    bool initially_open = false;

    friend bool operator==(const DoorSpec&, const DoorSpec&) = default;
};

enum class Capacity : std::uint8_t { One, Unbounded };

/// A level. Ids are dense: vertices[i].id == i, and likewise for edges and doors.
struct Level {
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;
    std::vector<DoorSpec> doors;
    VertexId start = 0;
    bool require_exit = false;
    Capacity token_capacity = Capacity::Unbounded;
    Capacity key_capacity = Capacity::Unbounded;
    std::uint32_t initial_tokens = 0;
    std::uint32_t initial_keys = 0;
    // Edge whose traversals are counted by shortest_solution_stats.
    std::optional<EdgeId> marked_edge;

    friend bool operator==(const Level&, const Level&) = default;
};

struct GameState {
    VertexId position = 0;
    std::uint32_t tokens_held = 0;
    std::uint32_t keys_held = 0;
    std::vector<bool> open_doors;      // by door id
    std::vector<bool> consumed_edges;  // by edge id
    std::vector<bool> visited;         // must-visit vertices touched, by vertex id
    std::vector<std::uint32_t> tokens_left;  // items still lying at each vertex
    std::vector<std::uint32_t> keys_left;

    friend bool operator==(const GameState&, const GameState&) = default;
};

/// Vertices from which at least one item has been taken.
std::vector<VertexId> collected_vertices(const Level& level, const GameState& state);

struct Move {
    enum class Kind : std::uint8_t { Traverse, Press };

    Kind kind = Kind::Traverse;
    std::uint32_t target = 0;  // edge id for Traverse, vertex id for Press
    std::uint32_t button = 0;

    static Move traverse(EdgeId e) { return {Kind::Traverse, e, 0}; }
    static Move press(VertexId v, std::uint32_t index) { return {Kind::Press, v, index}; }

    friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

enum class IllegalReason : std::uint8_t {
    NotIncident,
    Consumed,
    WrongWay,
    NoToken,
    DoorClosedNoKey,
    NoSuchButton,
};

std::string_view to_string(IllegalReason r);

struct IllegalMove {
    IllegalReason reason;

    friend bool operator==(const IllegalMove&, const IllegalMove&) = default;
};

using MoveResult = std::variant<GameState, IllegalMove>;

enum class ViolationCode : std::uint8_t {
    IdNotDense,
    StartOutOfRange,
    EndpointOutOfRange,
    UnknownDoor,
    DoorSharedByEdges,
    MultipleExits,
    MissingExit,
    TollOutOfRange,
    InitialExceedsCapacity,
    MarkedEdgeOutOfRange,
};

std::string_view to_string(ViolationCode c);

struct Violation {
    ViolationCode code;
    std::string field;
    std::string detail;
};

class InvalidLevel : public std::runtime_error {
public:
    explicit InvalidLevel(std::vector<Violation> v);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

std::vector<Violation> validate_level(const Level& level);

GameState initial_state(const Level& level);
MoveResult apply_move(const Level& level, const GameState& state, const Move& move);
std::vector<Move> legal_moves(const Level& level, const GameState& state);
bool is_won(const Level& level, const GameState& state);

/// Precomputed incidence lists and win data for a validated level. The
/// in-place transition below is what the solvers use on hot paths.
class LevelIndex {
public:
    explicit LevelIndex(const Level& level);

    const Level& level() const { return *level_; }
    std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }
    std::optional<VertexId> exit() const { return exit_; }
    std::size_t must_visit_count() const { return must_visit_count_; }

    GameState initial_state() const;

    /// Applies the move to `state`. On failure `state` is left untouched.
    std::optional<IllegalReason> apply(GameState& state, const Move& move) const;
    void legal_moves(const GameState& state, std::vector<Move>& out) const;
    bool is_won(const GameState& state) const;

private:
    std::optional<IllegalReason> check_traverse(const GameState& s, EdgeId e) const;
    void arrive(GameState& s, VertexId v) const;

    const Level* level_;
    std::vector<std::vector<EdgeId>> incident_;
    std::optional<VertexId> exit_;
    std::size_t must_visit_count_ = 0;
};

}  // namespace hardgame
