#pragma once

// Level construction primitives and the gadget library the reductions splice
// together. Every gadget function appends to a LevelBuilder and reports the
// ids it created through a Ports map, so tests can probe gadgets in isolation.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardgame/arena.hpp"

namespace hardgame {

struct EdgeOptions {
    bool one_way = false;
    bool single_use = false;
    std::uint32_t toll = 0;
    std::optional<DoorId> door;
};

/// Allocates dense ids in call order, so identical call sequences give
/// byte-identical levels.
class LevelBuilder {
public:
    VertexId add_vertex(bool must_visit = false);
    DoorId add_door(bool initially_open);
    EdgeId add_edge(VertexId from, VertexId to, EdgeOptions options = {});
    void add_plate(VertexId v, DoorAction action);
    /// Returns the button's index at v.
    std::uint32_t add_button(VertexId v, Button button);

    VertexSpec& vertex(VertexId v) { return level_.vertices.at(v); }
    Level& level() { return level_; }
    const Level& level() const { return level_; }
    Level take() { return std::move(level_); }

private:
    Level level_;
};

enum class Actuator : std::uint8_t { Plate, Button1, Button3 };

/// Named ids created by a gadget, plus named move sequences that cross it.
struct Ports {
    std::map<std::string, VertexId> vertices;
    std::map<std::string, EdgeId> edges;
    std::map<std::string, DoorId> doors;
    std::map<std::string, std::vector<Move>> routes;
};

namespace gadgets {

/// A passage from `from` to `to` whose interior applies `actions` to every
/// avatar that crosses it. With Plate it is one vertex carrying the actions as
/// plates; with Button3 it is a chain of plate simulators, one per action.
/// The entry edge carries `entry` options; the exit edge is one-way.
/// Route "cross" walks it.
Ports site(LevelBuilder& b, VertexId from, VertexId to, EdgeOptions entry, const std::vector<DoorAction>& actions,
           Actuator mode);

/// OR gate: two parallel doored edges from hub to a chamber whose actuators
/// apply `outputs`. Routes "via_a" / "via_b" enter through that input, fire
/// every actuator and return to the hub.
Ports or_gate(LevelBuilder& b, VertexId hub, DoorId in_a, DoorId in_b, const std::vector<DoorAction>& outputs,
              Actuator mode);

/// AND gate: hub -[in_a]- mid -[in_b]- chamber. Route "fire".
Ports and_gate(LevelBuilder& b, VertexId hub, DoorId in_a, DoorId in_b, const std::vector<DoorAction>& outputs,
               Actuator mode);

/// Directed single-use path: a -[DA open]- g1(-DA) -[DB open]- g2(-DB) - b.
Ports single_use_plates(LevelBuilder& b, VertexId a, VertexId to);

/// Bidirectional single-use path with 2-buttons:
/// a -[a open]- m1 -[b closed]- m2 -[c open]- b, m1:{+b,-a}, m2:{+b,-c}.
Ports single_use_buttons(LevelBuilder& b, VertexId a, VertexId to);

/// Three parallel one-way edges from `in` to `out`, guarded by `doors`.
Ports clause(LevelBuilder& b, VertexId in, VertexId out, const std::vector<DoorId>& doors);

/// Existential quantifier between junctions. Top: enter -> (T or F) -> leave;
/// the taken branch closes the other's guard. Bottom: down_in -> down_out
/// re-opens both guards. Routes "T", "F", "down".
Ports existential(LevelBuilder& b, VertexId enter, VertexId leave, VertexId down_in, VertexId down_out,
                  const std::vector<DoorAction>& set_true, const std::vector<DoorAction>& set_false, Actuator mode);

/// Universal quantifier. Top: enter -[a]-> P1 (x true, -d) -> leave. Bottom:
/// down_in -> P2 (x false, +d, -a) -> leave is the re-evaluation exit, and
/// down_in -[d]-> Y (+a) -> down_out passes once both values were tried.
/// Routes "T", "retry", "down".
Ports universal(LevelBuilder& b, VertexId enter, VertexId leave, VertexId down_in, VertexId down_out,
                const std::vector<DoorAction>& set_true, const std::vector<DoorAction>& set_false, Actuator mode);

/// Button for `action` made from a plate on a dead-end spur off `hub`.
Ports button_by_plate(LevelBuilder& b, VertexId hub, DoorAction action);

/// One-directional plate simulator L-g1-[A]-g2-[B]-g3-[C]-R with
/// g1:{+A,-C,act}, g2:{+B,-A,act}, g3:{+C,-B}; A, B and C start closed.
Ports plate_simulator(LevelBuilder& b, VertexId left, VertexId right, DoorAction act);

}  // namespace gadgets

enum class GadgetKind : std::uint8_t {
    Or,
    And,
    SingleUsePlates,
    SingleUseButtons,
    Clause,
    Existential,
    Universal,
    ButtonByPlate,
    PlateSimulator,
};

struct GadgetParams {
    std::vector<bool> inputs_open;  // Or/And: 2 entries; Clause: 3 entries
    std::vector<DoorAction> actions;
    std::vector<DoorAction> false_actions;  // quantifiers only
    Actuator actuator = Actuator::Plate;
};

struct Fragment {
    Level level;
    Ports ports;
};

/// Builds one gadget on fresh port vertices. Doors named in `actions` are
/// created on demand as closed ancilla doors so the fragment validates.
/// Throws Error(BadParams) when params do not fit the kind.
Fragment build_gadget(GadgetKind kind, const GadgetParams& params);

}  // namespace hardgame
