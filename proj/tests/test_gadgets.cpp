#include <doctest.h>

#include "hardgame/gadgets.hpp"
#include "hardgame/instances.hpp"
#include "hardgame/solver.hpp"

using namespace hardgame;

namespace {

// Plays gadget fragments from their ports while carrying door states across
// runs. Fragments hold no items or single-use edges, so position and doors
// are the whole state.
struct Probe {
    Level level;
    std::vector<bool> doors;

    explicit Probe(Level l) : level(std::move(l)) {
        for (const auto& d : level.doors) doors.push_back(d.initially_open);
    }

    Level from(VertexId start) const {
        auto l = level;
        l.start = start;
        for (std::size_t d = 0; d < doors.size(); ++d) l.doors[d].initially_open = doors[d];
        return l;
    }

    // Plays `moves` from `start`; false if any move is refused.
    bool play(VertexId start, const std::vector<Move>& moves) {
        const auto l = from(start);
        auto s = initial_state(l);
        for (const auto& m : moves) {
            auto next = apply_move(l, s, m);
            if (!std::holds_alternative<GameState>(next)) return false;
            s = std::get<GameState>(std::move(next));
        }
        doors = s.open_doors;
        return true;
    }

    bool reaches(VertexId start, VertexId target) const {
        auto l = from(start);
        for (auto& v : l.vertices) v.must_visit = v.id == target;
        return solve_exhaustive(l).solvable();
    }
};

// Adds a vertex behind a new edge from `at` guarded by `door`.
VertexId probe_room(Level& level, VertexId at, DoorId door) {
    const auto z = VertexId(level.vertices.size());
    level.vertices.push_back({.id = z});
    level.edges.push_back({EdgeId(level.edges.size()), at, z, false, false, 0, door});
    return z;
}

Fragment gate(GadgetKind kind, bool a, bool b, Actuator mode) {
    return build_gadget(kind, {.inputs_open = {a, b}, .actions = {open_door(0)}, .actuator = mode});
}

bool bad_params(GadgetKind kind, const GadgetParams& params) {
    try {
        build_gadget(kind, params);
    } catch (const Error& e) {
        return e.code() == ErrorCode::BadParams;
    }
    return false;
}

}  // namespace

TEST_SUITE("gadgets") {
    TEST_CASE("level builder allocates dense ids") {
        LevelBuilder b;
        CHECK(b.add_vertex() == 0);
        CHECK(b.add_vertex(true) == 1);
        CHECK(b.add_door(true) == 0);
        CHECK(b.add_edge(0, 1, {.door = 0}) == 0);
        CHECK(b.add_button(1, {open_door(0)}) == 0);
        CHECK(b.add_button(1, {close_door(0)}) == 1);
        b.add_plate(0, close_door(0));
        const auto level = b.take();
        CHECK(validate_level(level).empty());
        CHECK(level.vertices[1].must_visit);
        CHECK(level.vertices[0].plates.size() == 1);
    }

    TEST_CASE("plate simulator") {
        SUBCASE("crossing applies the action and leaves C open") {
            const auto f = build_gadget(GadgetKind::PlateSimulator, {.actions = {open_door(0)}});
            Probe p(f.level);
            REQUIRE(p.play(f.ports.vertices.at("L"), f.ports.routes.at("cross")));
            CHECK(p.doors[0]);
            CHECK_FALSE(p.doors[f.ports.doors.at("A")]);
            CHECK_FALSE(p.doors[f.ports.doors.at("B")]);
            CHECK(p.doors[f.ports.doors.at("C")]);
        }
        SUBCASE("no way past without the action") {
            // act closes x; a room behind x off R must then be unreachable.
            auto f = build_gadget(GadgetKind::PlateSimulator, {.actions = {close_door(0)}});
            f.level.doors[0].initially_open = true;
            const auto z = probe_room(f.level, f.ports.vertices.at("R"), 0);
            Probe p(f.level);
            CHECK(p.reaches(f.ports.vertices.at("L"), f.ports.vertices.at("R")));
            CHECK_FALSE(p.reaches(f.ports.vertices.at("L"), z));
        }
        SUBCASE("aborting after g1 still applied the action") {
            auto f = build_gadget(GadgetKind::PlateSimulator, {.actions = {close_door(0)}});
            f.level.doors[0].initially_open = true;
            const auto& cross = f.ports.routes.at("cross");
            Probe p(f.level);
            REQUIRE(p.play(f.ports.vertices.at("L"), {cross[0], cross[1], cross[0]}));
            CHECK_FALSE(p.doors[0]);
            CHECK(p.play(f.ports.vertices.at("L"), cross));
        }
        SUBCASE("entering from R gets nowhere") {
            const auto f = build_gadget(GadgetKind::PlateSimulator, {.actions = {open_door(0)}});
            Probe p(f.level);
            CHECK_FALSE(p.reaches(f.ports.vertices.at("R"), f.ports.vertices.at("g2")));
            CHECK_FALSE(p.reaches(f.ports.vertices.at("R"), f.ports.vertices.at("L")));
        }
    }

    TEST_CASE("gate truth tables") {
        for (auto mode : {Actuator::Plate, Actuator::Button1})
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    CAPTURE(a);
                    CAPTURE(b);
                    for (auto kind : {GadgetKind::Or, GadgetKind::And}) {
                        auto f = gate(kind, a, b, mode);
                        const auto hub = f.ports.vertices.at("hub");
                        const auto z = probe_room(f.level, hub, 0);
                        const bool want = kind == GadgetKind::Or ? a || b : a && b;
                        CHECK(Probe(f.level).reaches(hub, z) == want);
                    }
                }
    }

    TEST_CASE("gate routes fire the outputs and return") {
        const auto f = gate(GadgetKind::Or, false, true, Actuator::Button1);
        Probe p(f.level);
        CHECK_FALSE(p.play(f.ports.vertices.at("hub"), f.ports.routes.at("via_a")));
        REQUIRE(p.play(f.ports.vertices.at("hub"), f.ports.routes.at("via_b")));
        CHECK(p.doors[0]);
        const auto g = gate(GadgetKind::And, true, true, Actuator::Plate);
        Probe q(g.level);
        REQUIRE(q.play(g.ports.vertices.at("hub"), g.ports.routes.at("fire")));
        CHECK(q.doors[0]);
    }

    TEST_CASE("clause") {
        for (int mask = 0; mask < 8; ++mask) {
            CAPTURE(mask);
            const auto f =
                build_gadget(GadgetKind::Clause, {.inputs_open = {bool(mask & 1), bool(mask & 2), bool(mask & 4)}});
            const Probe p(f.level);
            const auto in = f.ports.vertices.at("in"), out = f.ports.vertices.at("out");
            CHECK(p.reaches(in, out) == (mask != 0));
            CHECK_FALSE(p.reaches(out, in));
        }
    }

    TEST_CASE("existential") {
        for (auto mode : {Actuator::Plate, Actuator::Button3}) {
            CAPTURE(int(mode));
            const auto f = build_gadget(GadgetKind::Existential,
                                        {.actions = {open_door(0)}, .false_actions = {open_door(1)}, .actuator = mode});
            const auto& v = f.ports.vertices;
            Probe p(f.level);
            REQUIRE(p.play(v.at("enter"), f.ports.routes.at("T")));
            CHECK(p.doors[0]);
            CHECK_FALSE(p.doors[1]);
            // The other branch is shut until the bottom path re-opens it.
            CHECK_FALSE(p.reaches(v.at("enter"), v.at("F")));
            CHECK_FALSE(p.play(v.at("enter"), f.ports.routes.at("F")));
            REQUIRE(p.play(v.at("down_in"), f.ports.routes.at("down")));
            CHECK(p.doors[f.ports.doors.at("gT")]);
            CHECK(p.doors[f.ports.doors.at("gF")]);
            REQUIRE(p.play(v.at("enter"), f.ports.routes.at("F")));
            CHECK(p.doors[1]);
            CHECK_FALSE(p.reaches(v.at("enter"), v.at("T")));
            CHECK_FALSE(p.reaches(v.at("leave"), v.at("enter")));
        }
    }

    TEST_CASE("universal") {
        for (auto mode : {Actuator::Plate, Actuator::Button3}) {
            CAPTURE(int(mode));
            const auto f = build_gadget(GadgetKind::Universal,
                                        {.actions = {open_door(0)}, .false_actions = {open_door(1)}, .actuator = mode});
            const auto& v = f.ports.vertices;
            const auto& r = f.ports.routes;
            Probe p(f.level);
            // Down is closed until both values were tried.
            REQUIRE(p.play(v.at("enter"), r.at("T")));
            CHECK(p.doors[0]);
            CHECK_FALSE(p.reaches(v.at("down_in"), v.at("Y")));
            CHECK_FALSE(p.reaches(v.at("down_in"), v.at("down_out")));
            REQUIRE(p.play(v.at("down_in"), r.at("retry")));
            CHECK(p.doors[1]);
            // The top entry stays shut until the gadget is left downwards.
            CHECK_FALSE(p.reaches(v.at("enter"), v.at("P1")));
            REQUIRE(p.play(v.at("down_in"), r.at("down")));
            CHECK(p.doors[f.ports.doors.at("a")]);
            CHECK(p.play(v.at("enter"), r.at("T")));
        }
    }

    TEST_CASE("single-use path with plates") {
        const auto f = build_gadget(GadgetKind::SingleUsePlates, {});
        const auto a = f.ports.vertices.at("a"), b = f.ports.vertices.at("b");
        SUBCASE("forward once") {
            Probe p(f.level);
            REQUIRE(p.play(a, f.ports.routes.at("forward")));
            CHECK_FALSE(p.doors[f.ports.doors.at("DA")]);
            CHECK_FALSE(p.doors[f.ports.doors.at("DB")]);
            CHECK_FALSE(p.reaches(b, a));
            CHECK_FALSE(p.reaches(a, b));
        }
        SUBCASE("entered from b it only closes DB and the avatar can retreat") {
            Probe p(f.level);
            REQUIRE(p.play(b, {Move::traverse(f.ports.edges.at("g2_b"))}));
            CHECK_FALSE(p.doors[f.ports.doors.at("DB")]);
            CHECK(p.doors[f.ports.doors.at("DA")]);
            CHECK(p.play(f.ports.vertices.at("g2"), {Move::traverse(f.ports.edges.at("g2_b"))}));
            CHECK_FALSE(p.reaches(b, a));
        }
    }

    TEST_CASE("single-use path with buttons") {
        const auto f = build_gadget(GadgetKind::SingleUseButtons, {});
        const auto a = f.ports.vertices.at("a"), b = f.ports.vertices.at("b");
        SUBCASE("forward then back fails") {
            Probe p(f.level);
            REQUIRE(p.play(a, f.ports.routes.at("forward")));
            CHECK_FALSE(p.reaches(b, a));
            CHECK_FALSE(p.reaches(a, b));
        }
        SUBCASE("backward then forward fails") {
            Probe p(f.level);
            REQUIRE(p.play(b, f.ports.routes.at("backward")));
            CHECK_FALSE(p.reaches(a, b));
            CHECK_FALSE(p.reaches(b, a));
        }
    }

    TEST_CASE("button built from a plate") {
        const auto f = build_gadget(GadgetKind::ButtonByPlate, {.actions = {open_door(2)}});
        CHECK(f.level.doors.size() == 3);
        Probe p(f.level);
        REQUIRE(p.play(f.ports.vertices.at("hub"), f.ports.routes.at("press")));
        CHECK(p.doors[2]);
        CHECK_FALSE(p.doors[0]);
    }

    TEST_CASE("site chains plate simulators per action") {
        LevelBuilder b;
        const auto from = b.add_vertex(), to = b.add_vertex();
        const auto x = b.add_door(false), y = b.add_door(true);
        const auto ports = gadgets::site(b, from, to, {}, {open_door(x), close_door(y)}, Actuator::Button3);
        for (const auto& v : b.level().vertices) CHECK(v.plates.empty());
        Probe p(b.take());
        REQUIRE(p.play(from, ports.routes.at("cross")));
        CHECK(p.doors[x]);
        CHECK_FALSE(p.doors[y]);
        CHECK_FALSE(p.reaches(to, from));
    }

    TEST_CASE("parameter errors") {
        CHECK(bad_params(GadgetKind::Or, {.inputs_open = {true}}));
        CHECK(bad_params(GadgetKind::And, {.inputs_open = {true, true}, .actuator = Actuator::Button3}));
        CHECK(bad_params(GadgetKind::Clause, {.inputs_open = {true, true}}));
        CHECK(bad_params(GadgetKind::Universal, {.actuator = Actuator::Button1}));
        CHECK(bad_params(GadgetKind::ButtonByPlate, {}));
        CHECK(bad_params(GadgetKind::PlateSimulator, {.actions = {open_door(0), open_door(1)}}));
    }

    TEST_CASE("fragments validate") {
        const GadgetParams two{.inputs_open = {true, false}, .actions = {open_door(0)}};
        for (auto kind : {GadgetKind::Or, GadgetKind::And, GadgetKind::SingleUsePlates, GadgetKind::SingleUseButtons,
                          GadgetKind::Existential, GadgetKind::Universal, GadgetKind::ButtonByPlate,
                          GadgetKind::PlateSimulator})
            CHECK(validate_level(build_gadget(kind, two).level).empty());
        CHECK(validate_level(build_gadget(GadgetKind::Clause, {.inputs_open = {1, 0, 1}}).level).empty());
    }
}
