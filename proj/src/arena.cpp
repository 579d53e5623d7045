#include "hardgame/arena.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace hardgame {

namespace {

std::string join_violations(const std::vector<Violation>& v) {
    std::string out = "invalid level:";
    for (const auto& x : v) {
        out += ' ';
        out += to_string(x.code);
        out += '(';
        out += x.field;
        out += ')';
    }
    return out;
}

std::uint32_t capped_take(Capacity cap, std::uint32_t held, std::uint32_t available) {
    if (cap == Capacity::Unbounded) return available;
    return held >= 1 ? 0 : std::min<std::uint32_t>(1, available);
}

}  // namespace

std::string to_string(const Move& m) {
    if (m.kind == Move::Kind::Traverse) return "t " + std::to_string(m.target);
    return "p " + std::to_string(m.target) + " " + std::to_string(m.button);
}

std::string_view to_string(IllegalReason r) {
    switch (r) {
        case IllegalReason::NotIncident: return "NotIncident";
        case IllegalReason::Consumed: return "Consumed";
        case IllegalReason::WrongWay: return "WrongWay";
        case IllegalReason::NoToken: return "NoToken";
        case IllegalReason::DoorClosedNoKey: return "DoorClosedNoKey";
        case IllegalReason::NoSuchButton: return "NoSuchButton";
    }
    return "?";
}

std::string_view to_string(ViolationCode c) {
    switch (c) {
        case ViolationCode::IdNotDense: return "IdNotDense";
        case ViolationCode::StartOutOfRange: return "StartOutOfRange";
        case ViolationCode::EndpointOutOfRange: return "EndpointOutOfRange";
        case ViolationCode::UnknownDoor: return "UnknownDoor";
        case ViolationCode::DoorSharedByEdges: return "DoorSharedByEdges";
        case ViolationCode::MultipleExits: return "MultipleExits";
        case ViolationCode::MissingExit: return "MissingExit";
        case ViolationCode::TollOutOfRange: return "TollOutOfRange";
        case ViolationCode::InitialExceedsCapacity: return "InitialExceedsCapacity";
        case ViolationCode::MarkedEdgeOutOfRange: return "MarkedEdgeOutOfRange";
    }
    return "?";
}

InvalidLevel::InvalidLevel(std::vector<Violation> v)
    : std::runtime_error(join_violations(v)), violations_(std::move(v)) {}

std::vector<Violation> validate_level(const Level& level) {
    std::vector<Violation> out;
    auto add = [&](ViolationCode c, std::string field, std::string detail = {}) {
        out.push_back({c, std::move(field), std::move(detail)});
    };
    const auto nv = level.vertices.size();
    const auto nd = level.doors.size();

    for (std::size_t i = 0; i < nv; ++i)
        if (level.vertices[i].id != i) add(ViolationCode::IdNotDense, fmt::format("vertices[{}].id", i));
    for (std::size_t i = 0; i < level.edges.size(); ++i)
        if (level.edges[i].id != i) add(ViolationCode::IdNotDense, fmt::format("edges[{}].id", i));
    for (std::size_t i = 0; i < nd; ++i)
        if (level.doors[i].id != i) add(ViolationCode::IdNotDense, fmt::format("doors[{}].id", i));

    if (level.start >= nv) add(ViolationCode::StartOutOfRange, "start");

    auto check_actions = [&](const std::vector<DoorAction>& acts, const std::string& where) {
        for (std::size_t k = 0; k < acts.size(); ++k)
            if (acts[k].door >= nd) add(ViolationCode::UnknownDoor, fmt::format("{}[{}].door", where, k));
    };

    std::size_t exits = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        const auto& v = level.vertices[i];
        if (v.exit) ++exits;
        check_actions(v.plates, fmt::format("vertices[{}].plates", i));
        for (std::size_t b = 0; b < v.buttons.size(); ++b)
            check_actions(v.buttons[b], fmt::format("vertices[{}].buttons[{}]", i, b));
    }
    if (exits > 1) add(ViolationCode::MultipleExits, "vertices.exit");
    if (level.require_exit && exits == 0) add(ViolationCode::MissingExit, "requireExit");

    std::set<DoorId> carried;
    for (std::size_t i = 0; i < level.edges.size(); ++i) {
        const auto& e = level.edges[i];
        if (e.from >= nv || e.to >= nv) add(ViolationCode::EndpointOutOfRange, fmt::format("edges[{}]", i));
        if (e.toll > 1) add(ViolationCode::TollOutOfRange, fmt::format("edges[{}].toll", i));
        if (e.door) {
            if (*e.door >= nd) {
                add(ViolationCode::UnknownDoor, fmt::format("edges[{}].door", i));
            } else if (!carried.insert(*e.door).second) {
                add(ViolationCode::DoorSharedByEdges, fmt::format("edges[{}].door", i),
                    fmt::format("door {} already carried by another edge", *e.door));
            }
        }
    }

    if (level.token_capacity == Capacity::One && level.initial_tokens > 1)
        add(ViolationCode::InitialExceedsCapacity, "initialTokens");
    if (level.key_capacity == Capacity::One && level.initial_keys > 1)
        add(ViolationCode::InitialExceedsCapacity, "initialKeys");
    if (level.marked_edge && *level.marked_edge >= level.edges.size())
        add(ViolationCode::MarkedEdgeOutOfRange, "markedEdge");
    return out;
}

std::vector<VertexId> collected_vertices(const Level& level, const GameState& state) {
    std::vector<VertexId> out;
    for (const auto& v : level.vertices)
        if (state.tokens_left[v.id] < v.tokens || state.keys_left[v.id] < v.keys) out.push_back(v.id);
    return out;
}

// ---------------------------------------------------------------------------

LevelIndex::LevelIndex(const Level& level) : level_(&level), incident_(level.vertices.size()) {
    if (auto v = validate_level(level); !v.empty()) throw InvalidLevel(std::move(v));
    for (const auto& e : level.edges) {
        incident_[e.from].push_back(e.id);
        if (e.to != e.from) incident_[e.to].push_back(e.id);
    }
    for (const auto& v : level.vertices) {
        if (v.exit) exit_ = v.id;
        if (v.must_visit) ++must_visit_count_;
    }
}

void LevelIndex::arrive(GameState& s, VertexId v) const {
    const auto& spec = level_->vertices[v];
    s.position = v;
    for (const auto& act : spec.plates) s.open_doors[act.door] = act.op == DoorOp::Open;
    if (auto k = capped_take(level_->key_capacity, s.keys_held, s.keys_left[v])) {
        s.keys_held += k;
        s.keys_left[v] -= k;
    }
    if (auto t = capped_take(level_->token_capacity, s.tokens_held, s.tokens_left[v])) {
        s.tokens_held += t;
        s.tokens_left[v] -= t;
    }
    if (spec.must_visit) s.visited[v] = true;
}

std::optional<IllegalReason> LevelIndex::check_traverse(const GameState& s, EdgeId id) const {
    if (id >= level_->edges.size()) return IllegalReason::NotIncident;
    const auto& e = level_->edges[id];
    if (e.from != s.position && e.to != s.position) return IllegalReason::NotIncident;
    if (s.consumed_edges[id]) return IllegalReason::Consumed;
    if (e.one_way && e.from != s.position) return IllegalReason::WrongWay;
    if (e.toll > s.tokens_held) return IllegalReason::NoToken;
    if (e.door && !s.open_doors[*e.door] && s.keys_held == 0) return IllegalReason::DoorClosedNoKey;
    return std::nullopt;
}

std::optional<IllegalReason> LevelIndex::apply(GameState& s, const Move& m) const {
    if (m.kind == Move::Kind::Press) {
        const auto& spec = level_->vertices[s.position];
        if (m.target != s.position || m.button >= spec.buttons.size()) return IllegalReason::NoSuchButton;
        for (const auto& act : spec.buttons[m.button]) s.open_doors[act.door] = act.op == DoorOp::Open;
        return std::nullopt;
    }
    if (auto why = check_traverse(s, m.target)) return why;
    const auto& e = level_->edges[m.target];
    s.tokens_held -= e.toll;
    if (e.door && !s.open_doors[*e.door]) {
        --s.keys_held;
        s.open_doors[*e.door] = true;
    }
    if (e.single_use) s.consumed_edges[e.id] = true;
    arrive(s, e.from == s.position ? e.to : e.from);
    return std::nullopt;
}

void LevelIndex::legal_moves(const GameState& s, std::vector<Move>& out) const {
    out.clear();
    for (EdgeId e : incident_[s.position])
        if (!check_traverse(s, e)) out.push_back(Move::traverse(e));
    // incident_ is filled in edge-id order already
    const auto nb = level_->vertices[s.position].buttons.size();
    for (std::uint32_t b = 0; b < nb; ++b) out.push_back(Move::press(s.position, b));
}

bool LevelIndex::is_won(const GameState& s) const {
    if (level_->require_exit && (!exit_ || s.position != *exit_)) return false;
    for (const auto& v : level_->vertices)
        if (v.must_visit && !s.visited[v.id]) return false;
    return true;
}

// ---------------------------------------------------------------------------

GameState LevelIndex::initial_state() const {
    const Level& level = *level_;
    GameState s;
    s.tokens_held = level.initial_tokens;
    s.keys_held = level.initial_keys;
    s.open_doors.resize(level.doors.size());
    for (const auto& d : level.doors) s.open_doors[d.id] = d.initially_open;
    s.consumed_edges.assign(level.edges.size(), false);
    s.visited.assign(level.vertices.size(), false);
    s.tokens_left.resize(level.vertices.size());
    s.keys_left.resize(level.vertices.size());
    for (const auto& v : level.vertices) {
        s.tokens_left[v.id] = v.tokens;
        s.keys_left[v.id] = v.keys;
    }
    arrive(s, level.start);
    return s;
}

GameState initial_state(const Level& level) { return LevelIndex(level).initial_state(); }

MoveResult apply_move(const Level& level, const GameState& state, const Move& move) {
    const LevelIndex index(level);
    GameState next = state;
    if (auto why = index.apply(next, move)) return IllegalMove{*why};
    return next;
}

std::vector<Move> legal_moves(const Level& level, const GameState& state) {
    std::vector<Move> out;
    LevelIndex(level).legal_moves(state, out);
    return out;
}

bool is_won(const Level& level, const GameState& state) { return LevelIndex(level).is_won(state); }

}  // namespace hardgame
