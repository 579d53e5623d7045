#include "hardgame/solver.hpp"

#include <algorithm>
#include <deque>

#include "state_store.hpp"

namespace hardgame {

namespace {

// Moves are stored per state in 32 bits: the top bit tags a press, which then
// carries the vertex in bits 8..30 and the button index in bits 0..7.
constexpr std::uint32_t kPressTag = 0x8000'0000u;

std::uint32_t pack(const Move& m) {
    if (m.kind == Move::Kind::Traverse) return m.target;
    return kPressTag | (m.target << 8) | (m.button & 0xff);
}

Move unpack(std::uint32_t code) {
    if (!(code & kPressTag)) return Move::traverse(code);
    return Move::press((code & ~kPressTag) >> 8, code & 0xff);
}

Certificate rebuild(const std::vector<std::uint32_t>& parent, const std::vector<std::uint32_t>& via,
                    std::uint32_t index) {
    Certificate cert;
    while (index != 0) {
        cert.moves.push_back(unpack(via[index]));
        index = parent[index];
    }
    std::reverse(cert.moves.begin(), cert.moves.end());
    return cert;
}

}  // namespace

std::string_view to_string(Verdict::Outcome o) {
    switch (o) {
        case Verdict::Outcome::Solvable: return "SOLVABLE";
        case Verdict::Outcome::Unsolvable: return "UNSOLVABLE";
        case Verdict::Outcome::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

CheckResult check_certificate(const Level& level, const Certificate& cert) {
    const LevelIndex index(level);
    GameState s = index.initial_state();
    for (std::size_t i = 0; i < cert.moves.size(); ++i) {
        if (auto why = index.apply(s, cert.moves[i])) return {CheckResult::Status::IllegalMove, i, why};
    }
    if (index.is_won(s)) return {CheckResult::Status::Won, cert.moves.size(), std::nullopt};
    return {CheckResult::Status::NotWon, cert.moves.size(), std::nullopt};
}

Verdict solve_exhaustive(const Level& level, std::size_t state_budget) {
    if (state_budget == 0) throw std::invalid_argument("state budget must be positive");
    const LevelIndex index(level);
    const detail::StateCodec codec(level);
    detail::StateStore store(codec.words());

    std::vector<std::uint64_t> key(codec.words());
    std::vector<std::uint32_t> parent{0}, via{0};

    GameState cur = index.initial_state();
    if (index.is_won(cur)) return {Verdict::Outcome::Solvable, {}, 1};
    codec.encode(cur, key.data());
    store.insert(key.data());

    GameState next;
    std::vector<Move> moves;
    // Store order is breadth-first order, so the store doubles as the queue.
    for (std::uint32_t i = 0; i < store.size(); ++i) {
        codec.decode(store.at(i), cur);
        index.legal_moves(cur, moves);
        const bool after_press = i != 0 && (via[i] & kPressTag);
        for (const auto& m : moves) {
            if (after_press && m.kind == Move::Kind::Press && pack(m) == via[i]) continue;
            next = cur;
            if (index.apply(next, m)) continue;
            codec.encode(next, key.data());
            auto [id, fresh] = store.insert(key.data());
            if (!fresh) continue;
            parent.push_back(i);
            via.push_back(pack(m));
            if (index.is_won(next)) return {Verdict::Outcome::Solvable, rebuild(parent, via, id), store.size()};
            if (store.size() >= state_budget) return {Verdict::Outcome::BudgetExceeded, {}, store.size()};
        }
    }
    return {Verdict::Outcome::Unsolvable, {}, store.size()};
}

MonotoneResult solve_monotone(const Level& level) {
    if (auto v = validate_level(level); !v.empty()) throw InvalidLevel(std::move(v));
    auto reject = [](const std::string& what) { throw PreconditionViolated("solve_monotone: level has " + what); };
    if (level.initial_tokens || level.initial_keys) reject("initial items");
    for (const auto& v : level.vertices) {
        if (v.tokens || v.keys) reject("placed items at vertex " + std::to_string(v.id));
        for (const auto& a : v.plates)
            if (a.op == DoorOp::Close) reject("a closing plate at vertex " + std::to_string(v.id));
        for (const auto& b : v.buttons)
            for (const auto& a : b)
                if (a.op == DoorOp::Close) reject("a closing button at vertex " + std::to_string(v.id));
    }
    for (const auto& e : level.edges) {
        if (e.toll) reject("toll edge " + std::to_string(e.id));
        if (e.single_use) reject("single-use edge " + std::to_string(e.id));
        if (e.one_way) reject("one-way edge " + std::to_string(e.id));
    }

    const LevelIndex index(level);
    std::vector<bool> open(level.doors.size());
    for (const auto& d : level.doors) open[d.id] = d.initially_open;

    MonotoneResult result;
    std::vector<bool> reached;
    for (;;) {
        ++result.rounds;
        reached.assign(level.vertices.size(), false);
        std::deque<VertexId> queue{level.start};
        reached[level.start] = true;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (EdgeId id : index.incident(v)) {
                ++result.steps;
                const auto& e = level.edges[id];
                if (e.door && !open[*e.door]) continue;
                const VertexId w = e.from == v ? e.to : e.from;
                if (!reached[w]) {
                    reached[w] = true;
                    queue.push_back(w);
                }
            }
        }
        bool opened = false;
        auto fire = [&](const DoorAction& a) {
            ++result.steps;
            if (!open[a.door]) open[a.door] = opened = true;
        };
        for (const auto& v : level.vertices) {
            if (!reached[v.id]) continue;
            for (const auto& a : v.plates) fire(a);
            for (const auto& b : v.buttons)
                for (const auto& a : b) fire(a);
        }
        if (!opened) break;
    }

    result.solvable = !level.require_exit || (index.exit() && reached[*index.exit()]);
    for (const auto& v : level.vertices)
        if (v.must_visit && !reached[v.id]) result.solvable = false;
    return result;
}

std::size_t count_traversals(const Certificate& cert, EdgeId edge) {
    return static_cast<std::size_t>(std::count_if(cert.moves.begin(), cert.moves.end(), [&](const Move& m) {
        return m.kind == Move::Kind::Traverse && m.target == edge;
    }));
}

std::optional<SolutionStats> shortest_solution_stats(const Level& level, std::size_t state_budget) {
    auto verdict = solve_exhaustive(level, state_budget);
    if (!verdict.solvable()) return std::nullopt;
    SolutionStats stats{verdict.witness.moves.size(), 0};
    if (level.marked_edge) stats.marked_traversals = count_traversals(verdict.witness, *level.marked_edge);
    return stats;
}

}  // namespace hardgame
