#include "hardgame/reducer.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hardgame {

namespace {

Move t(EdgeId e) { return Move::traverse(e); }

std::string vname(std::uint32_t i) { return "v" + std::to_string(i); }
std::string ename(std::size_t j) { return "e" + std::to_string(j); }

void append(std::vector<Move>& to, const std::vector<Move>& more) { to.insert(to.end(), more.begin(), more.end()); }

void require_cubic(const UGraph& g) {
    if (!is_cubic(g)) throw Error(ErrorCode::DegreeViolation, "graph is not 3-regular");
}

void require_degree_valid(const DGraph& g) {
    if (!is_degree_valid(g))
        throw Error(ErrorCode::DegreeViolation, "every vertex needs (in 1, out 2) or (in 2, out 1)");
}

void require_vertex(const UGraph& g, VertexId v) {
    if (v >= g.n) throw Error(ErrorCode::BadParams, "distinguished vertex " + std::to_string(v) + " out of range");
}

// Original vertices keep their ids 0..n-1 in every graph reduction.
void add_graph_vertices(LevelBundle& out, LevelBuilder& b, std::uint32_t n, bool must_visit) {
    for (std::uint32_t i = 0; i < n; ++i) out.roles[vname(i)] = {Role::Space::Vertex, b.add_vertex(must_visit)};
}

// Chain of `length` edges from `from` to a fresh end vertex; returns the end.
VertexId add_chain(LevelBundle& out, LevelBuilder& b, VertexId from, std::uint32_t length,
                   const std::function<EdgeOptions(std::uint32_t)>& options) {
    auto& route = out.routes["finish"];
    VertexId at = from;
    for (std::uint32_t k = 0; k < length; ++k) {
        const VertexId next = b.add_vertex();
        const EdgeId e = b.add_edge(at, next, options(k));
        out.roles["chain" + std::to_string(k)] = {Role::Space::Edge, e};
        route.push_back(t(e));
        at = next;
    }
    return at;
}

void mark_exit(LevelBundle& out, LevelBuilder& b, VertexId u) {
    b.vertex(u).exit = true;
    b.level().require_exit = true;
    out.roles["u"] = {Role::Space::Vertex, u};
}

void finish(LevelBundle& out, LevelBuilder& b) {
    out.level = b.take();
    out.level.marked_edge = out.marked_edge;
    out.uses_one_way =
        std::any_of(out.level.edges.begin(), out.level.edges.end(), [](const EdgeSpec& e) { return e.one_way; });
}

// The skeleton shared by the undirected reductions: original edges plus
// (v,u), each with the same options.
LevelBundle undirected_skeleton(const UGraph& g, VertexId v, const char* kind, bool must_visit, EdgeOptions o,
                                LevelBuilder& b) {
    require_cubic(g);
    require_vertex(g, v);
    LevelBundle out;
    out.kind = kind;
    out.source = g;
    out.planar = is_planar(g.n, g.edges);
    add_graph_vertices(out, b, g.n, must_visit);
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const auto e = b.add_edge(g.edges[j].first, g.edges[j].second, o);
        out.roles[ename(j)] = {Role::Space::Edge, e};
        out.routes[ename(j) + ".fwd"] = {t(e)};
        out.routes[ename(j) + ".bwd"] = {t(e)};
    }
    b.level().start = v;
    return out;
}

}  // namespace

VertexId directed_start(const DGraph& g) {
    const auto in = in_degrees(g), out = out_degrees(g);
    for (VertexId v = 0; v < g.n; ++v)
        if (in[v] == 2 && out[v] == 1) return v;
    throw Error(ErrorCode::NoValidStartVertex, "no vertex with in-degree 2 and out-degree 1");
}

LevelBundle reduce_meta1(const UGraph& g, VertexId v, bool require_exit) {
    LevelBuilder b;
    auto out = undirected_skeleton(g, v, "1", true, {.single_use = true}, b);
    const VertexId u = b.add_vertex(true);
    out.roles["u"] = {Role::Space::Vertex, u};
    const EdgeId vu = b.add_edge(v, u, {.single_use = true});
    out.roles["vu"] = {Role::Space::Edge, vu};
    out.routes["finish"] = {t(vu)};
    if (require_exit) mark_exit(out, b, u);
    finish(out, b);
    return out;
}

LevelBundle reduce_meta1b(const UGraph& g, VertexId v, Variant variant) {
    static const char* kinds[] = {"1b-a", "1b-b", "1b-c"};
    LevelBuilder b;
    const bool must_visit = variant != Variant::C;
    auto out = undirected_skeleton(g, v, kinds[static_cast<int>(variant)], must_visit, {.toll = 1}, b);
    auto& level = b.level();
    switch (variant) {
        case Variant::A:
            for (VertexId w = 0; w < g.n; ++w) b.vertex(w).tokens = w == v ? 2 : 1;
            level.token_capacity = Capacity::One;
            break;
        case Variant::B: level.initial_tokens = g.n + 1; break;
        case Variant::C:
            for (VertexId w = 0; w < g.n; ++w) b.vertex(w).tokens = 2;
            break;
    }
    if (variant == Variant::C) {
        const VertexId u = add_chain(out, b, v, g.n, [](std::uint32_t) { return EdgeOptions{.toll = 1}; });
        mark_exit(out, b, u);
    } else {
        const VertexId u = b.add_vertex(true);
        out.roles["u"] = {Role::Space::Vertex, u};
        const EdgeId vu = b.add_edge(v, u, {.toll = 1});
        out.roles["vu"] = {Role::Space::Edge, vu};
        out.routes["finish"] = {t(vu)};
    }
    finish(out, b);
    return out;
}

LevelBundle reduce_meta1c(const DGraph& g, Variant variant) {
    static const char* kinds[] = {"1c-a", "1c-b", "1c-c"};
    require_degree_valid(g);
    const VertexId v = directed_start(g);
    LevelBuilder b;
    LevelBundle out;
    out.kind = kinds[static_cast<int>(variant)];
    out.source = g;
    out.planar = is_planar(g.n, g.arcs);
    add_graph_vertices(out, b, g.n, variant != Variant::C);
    for (std::size_t j = 0; j < g.arcs.size(); ++j) {
        const DoorId d = b.add_door(false);
        const EdgeId e = b.add_edge(g.arcs[j].first, g.arcs[j].second, {.one_way = true, .door = d});
        out.roles[ename(j)] = {Role::Space::Edge, e};
        out.roles["door" + std::to_string(j)] = {Role::Space::Door, d};
        out.routes[ename(j) + ".fwd"] = {t(e)};
    }
    auto& level = b.level();
    level.start = v;
    switch (variant) {
        case Variant::A:
            for (VertexId w = 0; w < g.n; ++w) b.vertex(w).keys = 1;
            level.key_capacity = Capacity::One;
            break;
        case Variant::B: level.initial_keys = g.n; break;
        case Variant::C:
            for (VertexId w = 0; w < g.n; ++w) b.vertex(w).keys = 2;
            break;
    }
    if (variant == Variant::C) {
        const VertexId u = add_chain(out, b, v, g.n, [&](std::uint32_t) {
            return EdgeOptions{.one_way = true, .door = b.add_door(false)};
        });
        mark_exit(out, b, u);
    } else {
        const VertexId u = b.add_vertex(true);
        out.roles["u"] = {Role::Space::Vertex, u};
        const EdgeId vu = b.add_edge(v, u, {.one_way = true});
        out.roles["vu"] = {Role::Space::Edge, vu};
        out.routes["finish"] = {t(vu)};
    }
    finish(out, b);
    return out;
}

LevelBundle reduce_circuit_value(const MonotoneCircuit& c, Actuator mode) {
    if (mode == Actuator::Button3) throw Error(ErrorCode::BadParams, "circuit levels take plates or 1-buttons");
    topological_gate_order(c);  // validates names and acyclicity

    LevelBuilder b;
    LevelBundle out;
    out.kind = mode == Actuator::Plate ? "2a" : "3a";
    out.source = c;
    const VertexId hub = b.add_vertex();
    out.roles["hub"] = {Role::Space::Vertex, hub};
    b.level().start = hub;

    std::map<std::string, bool> input_value;
    for (const auto& in : c.inputs) input_value[in.name] = in.value;
    auto initially_open = [&](const std::string& wire) {
        auto it = input_value.find(wire);
        return it != input_value.end() && it->second;
    };

    // One door per (wire, reader): a door can guard only one edge.
    std::map<std::string, std::vector<DoorId>> readers;
    std::vector<std::array<DoorId, 2>> gate_inputs(c.gates.size());
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const auto& gate = c.gates[g];
        for (int s = 0; s < 2; ++s) {
            const auto& wire = s == 0 ? gate.a : gate.b;
            const DoorId d = b.add_door(initially_open(wire));
            gate_inputs[g][s] = d;
            readers[wire].push_back(d);
            out.roles["gate" + std::to_string(g) + ".in" + std::to_string(s)] = {Role::Space::Door, d};
        }
    }
    const DoorId exit_door = b.add_door(initially_open(c.output));
    readers[c.output].push_back(exit_door);
    out.roles["exit_door"] = {Role::Space::Door, exit_door};

    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        const auto& gate = c.gates[g];
        std::vector<DoorAction> outputs;
        for (DoorId d : readers[gate.name]) outputs.push_back(open_door(d));
        const auto name = "gate" + std::to_string(g);
        auto p = gate.kind == GateKind::Or
                     ? gadgets::or_gate(b, hub, gate_inputs[g][0], gate_inputs[g][1], outputs, mode)
                     : gadgets::and_gate(b, hub, gate_inputs[g][0], gate_inputs[g][1], outputs, mode);
        out.roles[name] = {Role::Space::Vertex, p.vertices["chamber"]};
        for (auto& [route, moves] : p.routes) out.routes[name + "." + route] = std::move(moves);
    }

    const VertexId x = b.add_vertex();
    const EdgeId e = b.add_edge(hub, x, {.door = exit_door});
    out.routes["finish"] = {t(e)};
    mark_exit(out, b, x);
    finish(out, b);
    return out;
}

LevelBundle reduce_meta2b(const DGraph& g) {
    require_degree_valid(g);
    const VertexId v = directed_start(g);
    LevelBuilder b;
    LevelBundle out;
    out.kind = "2b";
    out.source = g;
    out.planar = is_planar(g.n, g.arcs);
    add_graph_vertices(out, b, g.n, false);
    b.level().start = v;

    std::vector<DoorId> gate(g.n);
    for (VertexId w = 0; w < g.n; ++w) {
        gate[w] = b.add_door(false);
        b.add_plate(w, open_door(gate[w]));
        out.roles["E" + std::to_string(w)] = {Role::Space::Door, gate[w]};
    }
    for (std::size_t j = 0; j < g.arcs.size(); ++j) {
        auto p = gadgets::single_use_plates(b, g.arcs[j].first, g.arcs[j].second);
        out.roles[ename(j) + ".DA"] = {Role::Space::Door, p.doors["DA"]};
        out.roles[ename(j) + ".DB"] = {Role::Space::Door, p.doors["DB"]};
        out.roles[ename(j) + ".g1"] = {Role::Space::Vertex, p.vertices["g1"]};
        out.roles[ename(j) + ".g2"] = {Role::Space::Vertex, p.vertices["g2"]};
        out.routes[ename(j) + ".fwd"] = p.routes["forward"];
    }
    const VertexId u = add_chain(out, b, v, g.n, [&](std::uint32_t k) { return EdgeOptions{.door = gate[k]}; });
    mark_exit(out, b, u);
    finish(out, b);
    return out;
}

LevelBundle reduce_meta3b(const UGraph& g, VertexId v) {
    require_cubic(g);
    require_vertex(g, v);
    LevelBuilder b;
    LevelBundle out;
    out.kind = "3b";
    out.source = g;
    out.planar = is_planar(g.n, g.edges);
    add_graph_vertices(out, b, g.n, false);
    b.level().start = v;

    std::vector<DoorId> gate(g.n);
    for (VertexId w = 0; w < g.n; ++w) {
        gate[w] = b.add_door(false);
        const DoorId dummy = b.add_door(false);
        const auto k = b.add_button(w, {open_door(gate[w]), close_door(dummy)});
        out.roles["E" + std::to_string(w)] = {Role::Space::Door, gate[w]};
        out.routes["press" + std::to_string(w)] = {Move::press(w, k)};
    }
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        auto p = gadgets::single_use_buttons(b, g.edges[j].first, g.edges[j].second);
        for (const auto& [name, d] : p.doors) out.roles[ename(j) + "." + name] = {Role::Space::Door, d};
        out.roles[ename(j) + ".m1"] = {Role::Space::Vertex, p.vertices["m1"]};
        out.roles[ename(j) + ".m2"] = {Role::Space::Vertex, p.vertices["m2"]};
        out.routes[ename(j) + ".fwd"] = p.routes["forward"];
        out.routes[ename(j) + ".bwd"] = p.routes["backward"];
    }
    const VertexId u = add_chain(out, b, v, g.n, [&](std::uint32_t k) { return EdgeOptions{.door = gate[k]}; });
    mark_exit(out, b, u);
    finish(out, b);
    return out;
}

LevelBundle reduce_tqbf(const QuantifiedFormula& f, Actuator mode) {
    validate_formula(f);
    if (mode == Actuator::Button1) throw Error(ErrorCode::BadParams, "formula levels take plates or 3-buttons");
    const auto q = f.prefix.size();
    const auto m = f.clauses.size();

    LevelBuilder b;
    LevelBundle out;
    out.kind = mode == Actuator::Plate ? "2c" : "3c";
    out.source = f;

    std::vector<std::array<DoorId, 3>> literal(m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t s = 0; s < 3; ++s) {
            literal[j][s] = b.add_door(false);
            out.roles["c" + std::to_string(j) + ".lit" + std::to_string(s)] = {Role::Space::Door, literal[j][s]};
        }

    auto junctions = [&](const char* prefix, std::size_t count) {
        std::vector<VertexId> ids;
        for (std::size_t i = 0; i < count; ++i) {
            ids.push_back(b.add_vertex());
            out.roles[prefix + std::to_string(i)] = {Role::Space::Vertex, ids.back()};
        }
        return ids;
    };
    const auto top = junctions("J", q + 1);
    const auto row = junctions("K", m + 1);
    const auto bottom = junctions("H", q + 1);
    b.level().start = top[0];

    for (std::size_t i = 0; i < q; ++i) {
        const auto [quant, var] = f.prefix[i];
        std::vector<DoorAction> set_true, set_false;
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t s = 0; s < 3; ++s) {
                const auto& lit = f.clauses[j][s];
                if (lit.var != var) continue;
                const bool opens_when_true = !lit.negated;
                set_true.push_back({literal[j][s], opens_when_true ? DoorOp::Open : DoorOp::Close});
                set_false.push_back({literal[j][s], opens_when_true ? DoorOp::Close : DoorOp::Open});
            }
        auto p = quant == Quantifier::Exists
                     ? gadgets::existential(b, top[i], top[i + 1], bottom[i + 1], bottom[i], set_true, set_false, mode)
                     : gadgets::universal(b, top[i], top[i + 1], bottom[i + 1], bottom[i], set_true, set_false, mode);
        const auto name = "q" + std::to_string(i);
        for (const auto& [port, d] : p.doors) out.roles[name + "." + port] = {Role::Space::Door, d};
        for (const auto& [port, v] : p.vertices) out.roles[name + "." + port] = {Role::Space::Vertex, v};
        for (auto& [route, moves] : p.routes) out.routes[name + "." + route] = std::move(moves);
    }

    const EdgeId marked = b.add_edge(top[q], row[0], {.one_way = true});
    out.marked_edge = marked;
    out.roles["marked"] = {Role::Space::Edge, marked};
    out.routes["marked"] = {t(marked)};
    for (std::size_t j = 0; j < m; ++j) {
        auto p = gadgets::clause(b, row[j], row[j + 1], {literal[j].begin(), literal[j].end()});
        for (auto& [route, moves] : p.routes) out.routes["c" + std::to_string(j) + "." + route] = std::move(moves);
    }
    out.routes["descend"] = {t(b.add_edge(row[m], bottom[q], {.one_way = true}))};

    const VertexId x = b.add_vertex();
    out.routes["finish"] = {t(b.add_edge(bottom[0], x, {.one_way = true}))};
    mark_exit(out, b, x);
    finish(out, b);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorCode::SolutionMismatch, what); }

const std::vector<Move>& route(const LevelBundle& bundle, const std::string& name) {
    auto it = bundle.routes.find(name);
    if (it == bundle.routes.end()) mismatch("bundle has no route " + name);
    return it->second;
}

// Walks the cycle from the start vertex along original edges, then leaves
// through the bundle's finish route. Location buttons are pressed on first
// arrival where the reduction provides them.
Certificate cycle_witness(const LevelBundle& bundle, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                          bool directed, std::vector<std::uint32_t> cycle) {
    const VertexId start = bundle.level.start;
    auto at = std::find(cycle.begin(), cycle.end(), start);
    if (at == cycle.end()) mismatch("cycle misses the start vertex");
    std::rotate(cycle.begin(), at, cycle.end());
    cycle.push_back(start);

    Certificate cert;
    std::set<VertexId> pressed;
    auto press = [&](VertexId w) {
        auto it = bundle.routes.find("press" + std::to_string(w));
        if (it != bundle.routes.end() && pressed.insert(w).second) append(cert.moves, it->second);
    };
    press(start);
    std::vector<bool> used(edges.size(), false);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
        const auto a = cycle[i], z = cycle[i + 1];
        bool found = false;
        for (std::size_t j = 0; j < edges.size() && !found; ++j) {
            if (used[j]) continue;
            if (edges[j] == std::pair{a, z}) {
                append(cert.moves, route(bundle, ename(j) + ".fwd"));
            } else if (!directed && edges[j] == std::pair{z, a}) {
                append(cert.moves, route(bundle, ename(j) + ".bwd"));
            } else {
                continue;
            }
            used[j] = found = true;
        }
        if (!found) mismatch("no unused edge between " + std::to_string(a) + " and " + std::to_string(z));
        press(z);
    }
    append(cert.moves, route(bundle, "finish"));
    return cert;
}

Certificate circuit_witness(const LevelBundle& bundle, const MonotoneCircuit& c, const oracle::CircuitValues& w) {
    if (!oracle::verify(c, w)) mismatch("evaluation does not make the output true");
    Certificate cert;
    for (auto g : topological_gate_order(c)) {
        const auto& gate = c.gates[g];
        if (!w.values.at(gate.name)) continue;
        const auto name = "gate" + std::to_string(g);
        if (gate.kind == GateKind::And)
            append(cert.moves, route(bundle, name + ".fire"));
        else
            append(cert.moves, route(bundle, name + (w.values.at(gate.a) ? ".via_a" : ".via_b")));
    }
    append(cert.moves, route(bundle, "finish"));
    return cert;
}

// Replays the intended play: a top pass fixes values left to right, the
// clause row is crossed through a true literal, and the bottom pass either
// re-enters the innermost universal still owing its false case or descends.
Certificate tqbf_witness(const LevelBundle& bundle, const QuantifiedFormula& f, const oracle::QbfStrategy& s) {
    if (!oracle::verify(f, s)) mismatch("strategy does not satisfy the formula");
    const auto q = f.prefix.size();
    std::vector<bool> value(q, false);
    std::vector<bool> retried(q, false);
    std::vector<bool> assignment(f.num_vars + 1, false);
    Certificate cert;
    auto take = [&](const std::string& name) { append(cert.moves, route(bundle, name)); };
    auto qname = [](std::size_t i) { return "q" + std::to_string(i); };

    std::size_t from = 0;
    for (;;) {
        for (std::size_t i = from; i < q; ++i) {
            if (f.prefix[i].first == Quantifier::Exists) {
                value[i] = s.choice(value, i);
                take(qname(i) + (value[i] ? ".T" : ".F"));
            } else {
                value[i] = true;
                retried[i] = false;
                take(qname(i) + ".T");
            }
        }
        for (std::size_t i = 0; i < q; ++i) assignment[f.prefix[i].second] = value[i];
        take("marked");
        for (std::size_t j = 0; j < f.clauses.size(); ++j) {
            const auto& clause = f.clauses[j];
            auto lit = std::find_if(clause.begin(), clause.end(),
                                    [&](const Literal& l) { return assignment[l.var] != l.negated; });
            if (lit == clause.end()) mismatch("clause " + std::to_string(j) + " is false under the strategy");
            take("c" + std::to_string(j) + ".lit" + std::to_string(lit - clause.begin()));
        }
        take("descend");

        std::optional<std::size_t> retry;
        for (std::size_t i = q; i-- > 0;) {
            if (f.prefix[i].first == Quantifier::Forall && !retried[i]) {
                retry = i;
                break;
            }
            take(qname(i) + ".down");
        }
        if (!retry) break;
        retried[*retry] = true;
        value[*retry] = false;
        take(qname(*retry) + ".retry");
        from = *retry + 1;
    }
    take("finish");
    return cert;
}

}  // namespace

Certificate canonical_witness(const LevelBundle& bundle, const oracle::Answer& solution) {
    if (!solution.decision) mismatch("the oracle answered no");
    return std::visit(
        [&](const auto& source) -> Certificate {
            using T = std::decay_t<decltype(source)>;
            if constexpr (std::is_same_v<T, UGraph> || std::is_same_v<T, DGraph>) {
                const auto* cycle = std::get_if<oracle::HamCycle>(&solution.witness);
                if (!cycle || !oracle::verify(source, *cycle)) mismatch("expected a Hamiltonian cycle of the source");
                if constexpr (std::is_same_v<T, UGraph>)
                    return cycle_witness(bundle, source.edges, false, cycle->cycle);
                else
                    return cycle_witness(bundle, source.arcs, true, cycle->cycle);
            } else if constexpr (std::is_same_v<T, MonotoneCircuit>) {
                const auto* values = std::get_if<oracle::CircuitValues>(&solution.witness);
                if (!values) mismatch("expected a circuit evaluation");
                return circuit_witness(bundle, source, *values);
            } else {
                const auto* strategy = std::get_if<oracle::QbfStrategy>(&solution.witness);
                if (!strategy) mismatch("expected a strategy tree");
                return tqbf_witness(bundle, source, *strategy);
            }
        },
        bundle.source);
}

}  // namespace hardgame
