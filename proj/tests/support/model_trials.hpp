#pragma once

// Randomized (level, move sequence) trials for the model invariants.

#include <algorithm>
#include <numeric>
#include <string>

#include "hardgame/arena.hpp"
#include "hardgame/generators.hpp"

namespace hardgame::trials {

inline std::vector<DoorAction> random_actions(Rng& rng, std::uint32_t doors, std::uint32_t count, bool closes) {
    std::vector<DoorAction> out;
    for (std::uint32_t i = 0; i < count && doors > 0; ++i)
        out.push_back({rng.below(doors), closes && rng.coin() ? DoorOp::Close : DoorOp::Open});
    return out;
}

/// Small valid level exercising every feature. `closes` = false keeps every
/// actuator opening only.
inline Level random_level(Rng& rng, bool closes) {
    Level level;
    const auto n = 2 + rng.below(5);
    const auto doors = rng.below(4);
    for (DoorId d = 0; d < doors; ++d) level.doors.push_back({d, rng.coin()});
    for (VertexId v = 0; v < n; ++v) {
        VertexSpec spec{.id = v};
        spec.must_visit = rng.below(3) == 0;
        if (rng.below(3) == 0) spec.tokens = 1 + rng.below(2);
        if (rng.below(4) == 0) spec.keys = 1 + rng.below(2);
        if (rng.below(4) == 0) spec.plates = random_actions(rng, doors, 1 + rng.below(2), closes);
        const auto buttons = rng.below(3) == 0 ? 1 + rng.below(2) : 0;
        for (std::uint32_t i = 0; i < buttons; ++i)
            if (doors > 0) spec.buttons.push_back(random_actions(rng, doors, 1 + rng.below(3), closes));
        level.vertices.push_back(std::move(spec));
    }
    std::vector<DoorId> free_doors(doors);
    std::iota(free_doors.begin(), free_doors.end(), 0);
    rng.shuffle(free_doors);
    const auto m = 1 + rng.below(8);
    for (EdgeId e = 0; e < m; ++e) {
        EdgeSpec spec{.id = e};
        spec.from = rng.below(n);
        spec.to = (spec.from + 1 + rng.below(n - 1)) % n;
        spec.one_way = rng.below(4) == 0;
        spec.single_use = rng.below(4) == 0;
        spec.toll = rng.below(4) == 0 ? 1 : 0;
        if (!free_doors.empty() && rng.coin()) {
            spec.door = free_doors.back();
            free_doors.pop_back();
        }
        level.edges.push_back(spec);
    }
    level.start = rng.below(n);
    if (rng.coin()) {
        level.vertices[rng.below(n)].exit = true;
        level.require_exit = rng.coin();
    }
    level.token_capacity = rng.coin() ? Capacity::One : Capacity::Unbounded;
    level.key_capacity = rng.coin() ? Capacity::One : Capacity::Unbounded;
    level.initial_tokens = rng.below(level.token_capacity == Capacity::One ? 2 : 3);
    level.initial_keys = rng.below(level.key_capacity == Capacity::One ? 2 : 3);
    return level;
}

/// Every move that could be attempted anywhere in the level, plus one
/// out-of-range edge and button per vertex.
inline std::vector<Move> move_universe(const Level& level) {
    std::vector<Move> out;
    for (EdgeId e = 0; e <= level.edges.size(); ++e) out.push_back(Move::traverse(e));
    for (const auto& v : level.vertices)
        for (std::uint32_t i = 0; i <= v.buttons.size(); ++i) out.push_back(Move::press(v.id, i));
    return out;
}

struct Totals {
    std::uint64_t tokens = 0;
    std::uint64_t keys = 0;
};

inline Totals placed(const Level& level) {
    Totals t{level.initial_tokens, level.initial_keys};
    for (const auto& v : level.vertices) {
        t.tokens += v.tokens;
        t.keys += v.keys;
    }
    return t;
}

inline Totals on_hand(const GameState& s) {
    Totals t{s.tokens_held, s.keys_held};
    for (auto x : s.tokens_left) t.tokens += x;
    for (auto x : s.keys_left) t.keys += x;
    return t;
}

inline bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

inline bool has_close(const Level& level) {
    for (const auto& v : level.vertices) {
        for (const auto& a : v.plates)
            if (a.op == DoorOp::Close) return true;
        for (const auto& b : v.buttons)
            for (const auto& a : b)
                if (a.op == DoorOp::Close) return true;
    }
    return false;
}

struct TrialReport {
    std::size_t trials = 0;
    std::size_t moves = 0;
    std::size_t determinism = 0;
    std::size_t conservation = 0;
    std::size_t monotone = 0;
    std::size_t soundness = 0;

    std::size_t failures() const { return determinism + conservation + monotone + soundness; }
};

/// Plays `count` random levels for up to `length` moves each, checking the
/// four model invariants after every step.
inline TrialReport run_trials(std::uint64_t seed, std::size_t count, std::size_t length) {
    Rng rng(seed);
    TrialReport report;
    for (std::size_t trial = 0; trial < count; ++trial) {
        const auto level = random_level(rng, rng.coin());
        const auto universe = move_universe(level);
        const auto total = placed(level);
        const bool open_only = !has_close(level);
        auto state = initial_state(level);
        std::uint64_t tolls = 0, keys_spent = 0;
        ++report.trials;
        for (std::size_t step = 0; step < length; ++step) {
            const auto legal = legal_moves(level, state);
            for (const auto& m : universe) {
                const bool listed = std::find(legal.begin(), legal.end(), m) != legal.end();
                const bool ok = std::holds_alternative<GameState>(apply_move(level, state, m));
                report.soundness += listed != ok;
            }
            if (legal.empty()) break;
            const auto move = legal[rng.below(std::uint32_t(legal.size()))];
            const auto result = apply_move(level, state, move);
            report.determinism += result != apply_move(level, state, move);
            const auto& next = std::get<GameState>(result);
            if (move.kind == Move::Kind::Traverse) {
                const auto& e = level.edges[move.target];
                tolls += e.toll;
                keys_spent += e.door && !state.open_doors[*e.door];
            }
            const auto have = on_hand(next);
            report.conservation += have.tokens + tolls != total.tokens || have.keys + keys_spent != total.keys;
            const auto before = collected_vertices(level, state), after = collected_vertices(level, next);
            const bool grew = subset(state.consumed_edges, next.consumed_edges) &&
                              subset(state.visited, next.visited) &&
                              std::includes(after.begin(), after.end(), before.begin(), before.end()) &&
                              (!open_only || subset(state.open_doors, next.open_doors));
            report.monotone += !grew;
            state = next;
            ++report.moves;
        }
    }
    return report;
}

}  // namespace hardgame::trials
