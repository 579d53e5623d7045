#include "hardgame/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hardgame {

namespace {

constexpr int kAttempts = 10'000;

}  // namespace

UGraph gen_cubic_graph(std::uint32_t n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw Error(ErrorCode::InfeasibleParameters, "cubic graphs need an even n >= 4");
    Rng rng(seed);
    std::vector<std::uint32_t> stubs;
    for (std::uint32_t v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        rng.shuffle(stubs);
        UGraph g{n, {}};
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
            const auto u = std::min(stubs[i], stubs[i + 1]), v = std::max(stubs[i], stubs[i + 1]);
            ok = u != v && seen.emplace(u, v).second;
        }
        if (!ok) continue;
        g.edges.assign(seen.begin(), seen.end());
        if (is_connected(g)) return g;
    }
    throw Error(ErrorCode::InfeasibleParameters, "no simple connected cubic graph found");
}

DGraph gen_degree_valid_digraph(std::uint32_t n_half, std::uint64_t seed) {
    if (n_half < 2) throw Error(ErrorCode::InfeasibleParameters, "degree-valid digraphs need nHalf >= 2");
    const std::uint32_t n = 2 * n_half;
    Rng rng(seed);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        // true marks a splitter (in 1, out 2).
        std::vector<bool> splitter(n, false);
        std::fill(splitter.begin(), splitter.begin() + n_half, true);
        rng.shuffle(splitter);
        std::vector<std::uint32_t> tails, heads;
        for (std::uint32_t v = 0; v < n; ++v) {
            tails.insert(tails.end(), splitter[v] ? 2 : 1, v);
            heads.insert(heads.end(), splitter[v] ? 1 : 2, v);
        }
        rng.shuffle(heads);
        std::set<std::pair<std::uint32_t, std::uint32_t>> arcs;
        bool ok = true;
        for (std::size_t i = 0; ok && i < tails.size(); ++i)
            ok = tails[i] != heads[i] && arcs.emplace(tails[i], heads[i]).second;
        if (ok) return DGraph{n, {arcs.begin(), arcs.end()}};
    }
    throw Error(ErrorCode::InfeasibleParameters, "no simple degree-valid digraph found");
}

QuantifiedFormula gen_qbf(std::uint32_t num_vars, std::uint32_t num_clauses, std::uint64_t seed) {
    if (num_vars == 0) throw Error(ErrorCode::InfeasibleParameters, "formulas need at least one variable");
    Rng rng(seed);
    QuantifiedFormula f;
    f.num_vars = num_vars;
    for (std::uint32_t v = 1; v <= num_vars; ++v)
        f.prefix.emplace_back(rng.coin() ? Quantifier::Forall : Quantifier::Exists, v);
    for (std::uint32_t j = 0; j < num_clauses; ++j) {
        Clause c;
        for (auto& lit : c) lit = {rng.below(num_vars) + 1, rng.coin()};
        f.clauses.push_back(c);
    }
    return f;
}

MonotoneCircuit gen_circuit(std::uint32_t num_inputs, std::uint32_t num_gates, std::uint64_t seed) {
    if (num_inputs == 0) throw Error(ErrorCode::InfeasibleParameters, "circuits need at least one input");
    Rng rng(seed);
    MonotoneCircuit c;
    std::vector<std::string> wires;
    for (std::uint32_t i = 1; i <= num_inputs; ++i) {
        c.inputs.push_back({"x" + std::to_string(i), rng.coin()});
        wires.push_back(c.inputs.back().name);
    }
    for (std::uint32_t g = 1; g <= num_gates; ++g) {
        const auto kind = rng.coin() ? GateKind::Or : GateKind::And;
        const auto a = wires[rng.below(std::uint32_t(wires.size()))];
        const auto b = wires[rng.below(std::uint32_t(wires.size()))];
        c.gates.push_back({"g" + std::to_string(g), kind, a, b});
        wires.push_back(c.gates.back().name);
    }
    c.output = wires.back();
    return c;
}

ray::RayLevel gen_ray_level(const RayGenParams& params, std::uint64_t seed) {
    using ray::Kind;
    if (params.width < 4 || params.height < 4)
        throw Error(ErrorCode::InfeasibleParameters, "ray levels need at least 4x4 cells");
    Rng rng(seed);
    auto level = ray::make_level(params.width, params.height);
    std::vector<ray::Point> free;
    for (std::uint32_t y = 0; y < params.height; ++y)
        for (std::uint32_t x = 0; x < params.width; ++x) {
            const bool border = x == 0 || y == 0 || x + 1 == params.width || y + 1 == params.height;
            if (border)
                level.at({int(x), int(y)}).kind = Kind::Opaque;
            else
                free.push_back({int(x), int(y)});
        }
    rng.shuffle(free);
    std::size_t next = 0;
    auto place = [&](ray::Tile tile) {
        if (next < free.size()) level.at(free[next++]) = tile;
    };

    place({Kind::Beam});
    place({Kind::Exit});
    const auto mirrors = rng.below(params.max_mirrors + 1);
    for (std::uint32_t i = 0; i < mirrors; ++i) place({Kind::Mirror});
    const auto polarizators = rng.below(params.max_polarizators + 1);
    for (std::uint32_t i = 0; i < polarizators; ++i)
        place({Kind::Polarizator, std::uint8_t(rng.below(8)), rng.coin()});
    const auto items = rng.below(params.max_items + 1);
    for (std::uint32_t i = 0; i < items; ++i) place({Kind::Item});
    const auto walls = rng.below(4);
    for (std::uint32_t i = 0; i < walls; ++i) place({rng.coin() ? Kind::Opaque : Kind::Reflecting});
    if (rng.below(3) == 0) place({Kind::Mine});
    if (rng.below(3) == 0 && next + 2 <= free.size()) {
        place({Kind::Teleporter, 0, false, 'a'});
        place({Kind::Teleporter, 0, false, 'a'});
    }

    // Number the items in row-major order.
    std::uint32_t item = 0;
    for (auto& tile : level.tiles)
        if (tile.kind == Kind::Item) tile.item = item++;
    return level;
}

}  // namespace hardgame
