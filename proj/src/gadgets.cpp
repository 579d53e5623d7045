#include "hardgame/gadgets.hpp"

#include <algorithm>

#include "hardgame/instances.hpp"

namespace hardgame {

VertexId LevelBuilder::add_vertex(bool must_visit) {
    const auto id = static_cast<VertexId>(level_.vertices.size());
    VertexSpec v;
    v.id = id;
    v.must_visit = must_visit;
    level_.vertices.push_back(std::move(v));
    return id;
}

DoorId LevelBuilder::add_door(bool initially_open) {
    const auto id = static_cast<DoorId>(level_.doors.size());
    level_.doors.push_back({id, initially_open});
    return id;
}

EdgeId LevelBuilder::add_edge(VertexId from, VertexId to, EdgeOptions o) {
    const auto id = static_cast<EdgeId>(level_.edges.size());
    level_.edges.push_back({id, from, to, o.one_way, o.single_use, o.toll, o.door});
    return id;
}

void LevelBuilder::add_plate(VertexId v, DoorAction action) { level_.vertices.at(v).plates.push_back(action); }

std::uint32_t LevelBuilder::add_button(VertexId v, Button button) {
    auto& buttons = level_.vertices.at(v).buttons;
    buttons.push_back(std::move(button));
    return static_cast<std::uint32_t>(buttons.size() - 1);
}

namespace gadgets {

namespace {

Move t(EdgeId e) { return Move::traverse(e); }

void append(std::vector<Move>& to, const std::vector<Move>& more) { to.insert(to.end(), more.begin(), more.end()); }

// Actuators in a gate chamber; returns the moves that fire all of them once
// the avatar stands in the chamber.
std::vector<Move> chamber_actuators(LevelBuilder& b, VertexId chamber, const std::vector<DoorAction>& outputs,
                                    Actuator mode) {
    std::vector<Move> fire;
    for (const auto& a : outputs) {
        if (mode == Actuator::Plate) {
            b.add_plate(chamber, a);
        } else if (mode == Actuator::Button1) {
            fire.push_back(Move::press(chamber, b.add_button(chamber, {a})));
        } else {
            throw Error(ErrorCode::BadParams, "gate chambers take plates or 1-buttons");
        }
    }
    return fire;
}

}  // namespace

Ports site(LevelBuilder& b, VertexId from, VertexId to, EdgeOptions entry, const std::vector<DoorAction>& actions,
           Actuator mode) {
    Ports p;
    auto& route = p.routes["cross"];
    const VertexId first = b.add_vertex();
    p.vertices["first"] = first;
    p.edges["entry"] = b.add_edge(from, first, entry);
    route.push_back(t(p.edges["entry"]));

    VertexId last = first;
    if (mode == Actuator::Plate) {
        for (const auto& a : actions) b.add_plate(first, a);
    } else if (mode == Actuator::Button3) {
        for (std::size_t i = 0; i < actions.size(); ++i) {
            const VertexId right = b.add_vertex();
            auto sim = plate_simulator(b, last, right, actions[i]);
            append(route, sim.routes["cross"]);
            for (const auto& [name, id] : sim.doors) p.doors["sim" + std::to_string(i) + "." + name] = id;
            last = right;
        }
    } else {
        throw Error(ErrorCode::BadParams, "a site needs plates or plate simulators");
    }
    p.vertices["last"] = last;
    p.edges["leave"] = b.add_edge(last, to, {.one_way = true});
    route.push_back(t(p.edges["leave"]));
    return p;
}

Ports or_gate(LevelBuilder& b, VertexId hub, DoorId in_a, DoorId in_b, const std::vector<DoorAction>& outputs,
              Actuator mode) {
    Ports p;
    const VertexId chamber = b.add_vertex();
    p.vertices["chamber"] = chamber;
    p.edges["a"] = b.add_edge(hub, chamber, {.door = in_a});
    p.edges["b"] = b.add_edge(hub, chamber, {.door = in_b});
    const auto fire = chamber_actuators(b, chamber, outputs, mode);
    for (const char* side : {"a", "b"}) {
        auto& r = p.routes[std::string("via_") + side];
        r.push_back(t(p.edges[side]));
        append(r, fire);
        r.push_back(t(p.edges[side]));
    }
    return p;
}

Ports and_gate(LevelBuilder& b, VertexId hub, DoorId in_a, DoorId in_b, const std::vector<DoorAction>& outputs,
               Actuator mode) {
    Ports p;
    const VertexId mid = b.add_vertex();
    const VertexId chamber = b.add_vertex();
    p.vertices["mid"] = mid;
    p.vertices["chamber"] = chamber;
    p.edges["a"] = b.add_edge(hub, mid, {.door = in_a});
    p.edges["b"] = b.add_edge(mid, chamber, {.door = in_b});
    const auto fire = chamber_actuators(b, chamber, outputs, mode);
    auto& r = p.routes["fire"];
    r = {t(p.edges["a"]), t(p.edges["b"])};
    append(r, fire);
    append(r, {t(p.edges["b"]), t(p.edges["a"])});
    return p;
}

Ports single_use_plates(LevelBuilder& b, VertexId a, VertexId to) {
    Ports p;
    const DoorId da = b.add_door(true);
    const DoorId db = b.add_door(true);
    const VertexId g1 = b.add_vertex();
    const VertexId g2 = b.add_vertex();
    b.add_plate(g1, close_door(da));
    b.add_plate(g2, close_door(db));
    p.doors = {{"DA", da}, {"DB", db}};
    p.vertices = {{"g1", g1}, {"g2", g2}};
    p.edges["a_g1"] = b.add_edge(a, g1, {.door = da});
    p.edges["g1_g2"] = b.add_edge(g1, g2, {.door = db});
    p.edges["g2_b"] = b.add_edge(g2, to);
    p.routes["forward"] = {t(p.edges["a_g1"]), t(p.edges["g1_g2"]), t(p.edges["g2_b"])};
    return p;
}

Ports single_use_buttons(LevelBuilder& b, VertexId a, VertexId to) {
    Ports p;
    const DoorId da = b.add_door(true);
    const DoorId db = b.add_door(false);
    const DoorId dc = b.add_door(true);
    const VertexId m1 = b.add_vertex();
    const VertexId m2 = b.add_vertex();
    const auto k1 = b.add_button(m1, {open_door(db), close_door(da)});
    const auto k2 = b.add_button(m2, {open_door(db), close_door(dc)});
    p.doors = {{"a", da}, {"b", db}, {"c", dc}};
    p.vertices = {{"m1", m1}, {"m2", m2}};
    p.edges["a_m1"] = b.add_edge(a, m1, {.door = da});
    p.edges["m1_m2"] = b.add_edge(m1, m2, {.door = db});
    p.edges["m2_b"] = b.add_edge(m2, to, {.door = dc});
    p.routes["forward"] = {t(p.edges["a_m1"]), Move::press(m1, k1), t(p.edges["m1_m2"]), t(p.edges["m2_b"])};
    p.routes["backward"] = {t(p.edges["m2_b"]), Move::press(m2, k2), t(p.edges["m1_m2"]), t(p.edges["a_m1"])};
    return p;
}

Ports clause(LevelBuilder& b, VertexId in, VertexId out, const std::vector<DoorId>& doors) {
    if (doors.size() != 3) throw Error(ErrorCode::BadParams, "a clause has exactly three literal doors");
    Ports p;
    for (std::size_t s = 0; s < 3; ++s) {
        const auto name = "lit" + std::to_string(s);
        p.edges[name] = b.add_edge(in, out, {.one_way = true, .door = doors[s]});
        p.routes[name] = {t(p.edges[name])};
    }
    return p;
}

Ports existential(LevelBuilder& b, VertexId enter, VertexId leave, VertexId down_in, VertexId down_out,
                  const std::vector<DoorAction>& set_true, const std::vector<DoorAction>& set_false, Actuator mode) {
    Ports p;
    const DoorId gt = b.add_door(true);
    const DoorId gf = b.add_door(true);
    p.doors = {{"gT", gt}, {"gF", gf}};

    auto with = [](std::vector<DoorAction> v, DoorAction extra) {
        v.push_back(extra);
        return v;
    };
    auto branch_t = site(b, enter, leave, {.one_way = true, .door = gt}, with(set_true, close_door(gf)), mode);
    auto branch_f = site(b, enter, leave, {.one_way = true, .door = gf}, with(set_false, close_door(gt)), mode);
    auto down = site(b, down_in, down_out, {.one_way = true}, {open_door(gt), open_door(gf)}, mode);
    p.vertices = {{"T", branch_t.vertices["first"]}, {"F", branch_f.vertices["first"]}, {"Y", down.vertices["first"]}};
    p.routes = {{"T", branch_t.routes["cross"]}, {"F", branch_f.routes["cross"]}, {"down", down.routes["cross"]}};
    return p;
}

Ports universal(LevelBuilder& b, VertexId enter, VertexId leave, VertexId down_in, VertexId down_out,
                const std::vector<DoorAction>& set_true, const std::vector<DoorAction>& set_false, Actuator mode) {
    Ports p;
    const DoorId d = b.add_door(true);
    const DoorId a = b.add_door(true);
    p.doors = {{"d", d}, {"a", a}};

    auto first_pass = set_true;
    first_pass.push_back(close_door(d));
    std::vector<DoorAction> second_pass{open_door(d), close_door(a)};
    second_pass.insert(second_pass.end(), set_false.begin(), set_false.end());

    auto p1 = site(b, enter, leave, {.one_way = true, .door = a}, first_pass, mode);
    auto p2 = site(b, down_in, leave, {.one_way = true}, second_pass, mode);
    auto down = site(b, down_in, down_out, {.one_way = true, .door = d}, {open_door(a)}, mode);
    p.vertices = {{"P1", p1.vertices["first"]}, {"P2", p2.vertices["first"]}, {"Y", down.vertices["first"]}};
    p.edges = {{"retry", p2.edges["entry"]}, {"down", down.edges["entry"]}};
    p.routes = {{"T", p1.routes["cross"]}, {"retry", p2.routes["cross"]}, {"down", down.routes["cross"]}};
    return p;
}

Ports button_by_plate(LevelBuilder& b, VertexId hub, DoorAction action) {
    Ports p;
    const VertexId spur = b.add_vertex();
    b.add_plate(spur, action);
    p.vertices["spur"] = spur;
    p.edges["spur"] = b.add_edge(hub, spur);
    p.routes["press"] = {t(p.edges["spur"]), t(p.edges["spur"])};
    return p;
}

Ports plate_simulator(LevelBuilder& b, VertexId left, VertexId right, DoorAction act) {
    Ports p;
    const DoorId da = b.add_door(false);
    const DoorId db = b.add_door(false);
    const DoorId dc = b.add_door(false);
    const VertexId g1 = b.add_vertex();
    const VertexId g2 = b.add_vertex();
    const VertexId g3 = b.add_vertex();
    const auto k1 = b.add_button(g1, {open_door(da), close_door(dc), act});
    const auto k2 = b.add_button(g2, {open_door(db), close_door(da), act});
    const auto k3 = b.add_button(g3, {open_door(dc), close_door(db)});
    p.doors = {{"A", da}, {"B", db}, {"C", dc}};
    p.vertices = {{"g1", g1}, {"g2", g2}, {"g3", g3}};
    p.edges["L_g1"] = b.add_edge(left, g1);
    p.edges["g1_g2"] = b.add_edge(g1, g2, {.door = da});
    p.edges["g2_g3"] = b.add_edge(g2, g3, {.door = db});
    p.edges["g3_R"] = b.add_edge(g3, right, {.door = dc});
    p.routes["cross"] = {t(p.edges["L_g1"]),  Move::press(g1, k1), t(p.edges["g1_g2"]), Move::press(g2, k2),
                         t(p.edges["g2_g3"]), Move::press(g3, k3), t(p.edges["g3_R"])};
    return p;
}

}  // namespace gadgets

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::BadParams, what);
}

void ensure_doors(LevelBuilder& b, const GadgetParams& params) {
    DoorId need = 0;
    for (const auto* list : {&params.actions, &params.false_actions})
        for (const auto& a : *list) need = std::max(need, a.door + 1);
    while (b.level().doors.size() < need) b.add_door(false);
}

}  // namespace

Fragment build_gadget(GadgetKind kind, const GadgetParams& params) {
    LevelBuilder b;
    ensure_doors(b, params);
    Fragment f;
    auto port = [&](const char* name) {
        const auto v = b.add_vertex();
        f.ports.vertices[name] = v;
        return v;
    };
    auto merge = [&](Ports p) {
        f.ports.vertices.merge(p.vertices);
        f.ports.edges = std::move(p.edges);
        f.ports.doors = std::move(p.doors);
        f.ports.routes = std::move(p.routes);
    };

    switch (kind) {
        case GadgetKind::Or:
        case GadgetKind::And: {
            require(params.inputs_open.size() == 2, "a gate takes two input door states");
            require(params.actuator != Actuator::Button3, "gates take plates or 1-buttons");
            const auto hub = port("hub");
            const auto in_a = b.add_door(params.inputs_open[0]);
            const auto in_b = b.add_door(params.inputs_open[1]);
            auto p = kind == GadgetKind::Or ? gadgets::or_gate(b, hub, in_a, in_b, params.actions, params.actuator)
                                            : gadgets::and_gate(b, hub, in_a, in_b, params.actions, params.actuator);
            p.doors["in_a"] = in_a;
            p.doors["in_b"] = in_b;
            merge(std::move(p));
            break;
        }
        case GadgetKind::SingleUsePlates: {
            const auto a = port("a");
            const auto to = port("b");
            merge(gadgets::single_use_plates(b, a, to));
            break;
        }
        case GadgetKind::SingleUseButtons: {
            const auto a = port("a");
            const auto to = port("b");
            merge(gadgets::single_use_buttons(b, a, to));
            break;
        }
        case GadgetKind::Clause: {
            require(params.inputs_open.size() == 3, "a clause takes three literal door states");
            const auto in = port("in");
            const auto out = port("out");
            std::vector<DoorId> doors;
            for (bool open : params.inputs_open) doors.push_back(b.add_door(open));
            auto p = gadgets::clause(b, in, out, doors);
            for (std::size_t s = 0; s < 3; ++s) p.doors["lit" + std::to_string(s)] = doors[s];
            merge(std::move(p));
            break;
        }
        case GadgetKind::Existential:
        case GadgetKind::Universal: {
            require(params.actuator != Actuator::Button1, "quantifier gadgets take plates or plate simulators");
            const auto enter = port("enter");
            const auto leave = port("leave");
            const auto down_in = port("down_in");
            const auto down_out = port("down_out");
            merge(kind == GadgetKind::Existential
                      ? gadgets::existential(b, enter, leave, down_in, down_out, params.actions, params.false_actions,
                                             params.actuator)
                      : gadgets::universal(b, enter, leave, down_in, down_out, params.actions, params.false_actions,
                                           params.actuator));
            break;
        }
        case GadgetKind::ButtonByPlate: {
            require(params.actions.size() == 1, "a simulated button carries one action");
            const auto hub = port("hub");
            merge(gadgets::button_by_plate(b, hub, params.actions[0]));
            break;
        }
        case GadgetKind::PlateSimulator: {
            require(params.actions.size() == 1, "a plate simulator carries one action");
            const auto left = port("L");
            const auto right = port("R");
            merge(gadgets::plate_simulator(b, left, right, params.actions[0]));
            break;
        }
    }
    f.level = b.take();
    return f;
}

}  // namespace hardgame
