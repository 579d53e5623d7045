#include "hardgame/raysim.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace hardgame::ray {

RayLevel make_level(std::uint32_t width, std::uint32_t height) {
    return {width, height, std::vector<Tile>(std::size_t(width) * height)};
}

void validate(const RayLevel& level) {
    auto bad = [](const std::string& what) { throw Error(ErrorCode::BadParams, what); };
    if (level.tiles.size() != std::size_t(level.width) * level.height) bad("tile count does not match the size");
    int beams = 0, exits = 0;
    std::map<char, int> pairs;
    std::uint32_t next_item = 0;
    for (const auto& tile : level.tiles) {
        switch (tile.kind) {
            case Kind::Beam: ++beams; break;
            case Kind::Exit: ++exits; break;
            case Kind::Teleporter:
                if (tile.pair < 'a' || tile.pair > 'z' || tile.pair == 'o')
                    bad("teleporter id must be a lowercase letter other than 'o'");
                ++pairs[tile.pair];
                break;
            case Kind::Item:
                if (tile.item != next_item++) bad("item indices must follow row-major order");
                break;
            case Kind::Polarizator:
                if (tile.orientation > 7) bad("polarizator orientation out of range");
                break;
            default: break;
        }
    }
    if (beams != 1) bad("a ray level needs exactly one beam");
    if (exits != 1) bad("a ray level needs exactly one exit");
    for (const auto& [id, count] : pairs)
        if (count != 2) bad(std::string("teleporter ") + id + " must occur exactly twice");
}

namespace {

std::optional<Point> twin(const RayLevel& level, Point p) {
    const char id = level.at(p).pair;
    for (int y = 0; y < int(level.height); ++y)
        for (int x = 0; x < int(level.width); ++x) {
            const Point q{x, y};
            if (q != p && level.at(q).kind == Kind::Teleporter && level.at(q).pair == id) return q;
        }
    return std::nullopt;
}

bool is_emitter(Kind k) { return k == Kind::Beam || k == Kind::Mirror; }

}  // namespace

TraceResult trace_ray(const RayLevel& level, Point from, int k, Phase phase, const PolarizatorChoice& choice) {
    if (!level.inside(from) || !is_emitter(level.at(from).kind))
        throw Error(ErrorCode::BadOrigin, "rays start from the beam or a mirror");
    if (k < 0 || k > 15) throw Error(ErrorCode::BadOrigin, "direction index out of range");

    TraceResult r;
    std::vector<std::uint16_t> seen(level.tiles.size(), 0);
    Point p = from;
    int dir = k;
    auto stop = [&](TraceResult::Kind kind, Point at) {
        r.kind = kind;
        r.at = at;
        return r;
    };
    for (;;) {
        const Point n{p.x + kDirections[dir].x, p.y + kDirections[dir].y};
        if (!level.inside(n)) return stop(TraceResult::Kind::Absorbed, n);
        auto& mask = seen[std::size_t(n.y) * level.width + std::size_t(n.x)];
        if (mask & (1u << dir)) return stop(TraceResult::Kind::Periodic, n);
        mask |= std::uint16_t(1u << dir);

        const Tile& tile = level.at(n);
        switch (tile.kind) {
            case Kind::Empty: break;
            case Kind::Item:
                if (std::find(r.items.begin(), r.items.end(), tile.item) == r.items.end()) r.items.push_back(tile.item);
                break;
            case Kind::Opaque:
            case Kind::Mine: return stop(TraceResult::Kind::Absorbed, n);
            case Kind::Reflecting: dir = opposite(dir); break;
            case Kind::Polarizator: {
                int orientation = tile.orientation;
                if (tile.rotating) {
                    orientation = (tile.orientation + phase) % 8;
                } else if (choice) {
                    auto chosen = choice(n);
                    if (!chosen) return stop(TraceResult::Kind::Undecided, n);
                    orientation = *chosen;
                }
                r.crossed_polarizator = true;
                if (dir / 2 != orientation) return stop(TraceResult::Kind::Absorbed, n);
                break;
            }
            case Kind::Teleporter: {
                auto other = twin(level, n);
                if (!other) return stop(TraceResult::Kind::Absorbed, n);
                p = *other;
                continue;
            }
            case Kind::Mirror:
            case Kind::Beam:
            case Kind::Exit: return stop(TraceResult::Kind::Terminates, n);
        }
        p = n;
    }
}

std::optional<std::uint32_t> ElementGraph::node_at(Point p) const {
    auto it = std::find(nodes.begin(), nodes.end(), p);
    if (it == nodes.end()) return std::nullopt;
    return std::uint32_t(it - nodes.begin());
}

ElementGraph build_reachability_graph(const RayLevel& level, Phase phase) {
    ElementGraph g;
    std::map<std::uint32_t, std::uint32_t> item_node;
    for (int y = 0; y < int(level.height); ++y)
        for (int x = 0; x < int(level.width); ++x) {
            const Tile& tile = level.at({x, y});
            const auto id = std::uint32_t(g.nodes.size());
            switch (tile.kind) {
                case Kind::Beam: g.beam = id; break;
                case Kind::Exit: g.exit = id; break;
                case Kind::Item: item_node[tile.item] = id; break;
                case Kind::Mirror: break;
                default: continue;
            }
            g.nodes.push_back({x, y});
        }
    for (const auto& [item, node] : item_node) g.items.push_back(node);
    g.arcs.resize(g.nodes.size());

    for (std::uint32_t u = 0; u < g.nodes.size(); ++u) {
        if (!is_emitter(level.at(g.nodes[u]).kind)) continue;
        for (int k = 0; k < 16; ++k) {
            const auto r = trace_ray(level, g.nodes[u], k, phase);
            auto add = [&](std::uint32_t v) {
                if (v == u) return;
                g.arcs[u].insert(v);
                if (r.crossed_polarizator) g.polarized.insert({u, v});
            };
            for (auto item : r.items) add(g.items.at(item));
            if (r.kind == TraceResult::Kind::Terminates) add(*g.node_at(r.at));
        }
    }
    return g;
}

DeflektorResult solve_deflektor(const RayLevel& level) {
    validate(level);
    std::vector<ElementGraph> phases;
    for (Phase i = 0; i < 8; ++i) phases.push_back(build_reachability_graph(level, i));
    const auto e = std::uint32_t(phases[0].nodes.size());
    const auto stages = std::uint32_t(phases[0].items.size()) + 1;  // the exit is the last "item"

    // Node numbering: copy j of G* holds eight phase copies of the element
    // set, then one merged beam per copy, then the ending vertex.
    auto node = [&](std::uint32_t j, Phase i, std::uint32_t v) { return (j * 8 + i) * e + v; };
    const std::uint32_t merged_beam_base = stages * 8 * e;
    const std::uint32_t ending = merged_beam_base + stages;
    std::vector<std::vector<std::uint32_t>> arcs(ending + 1);

    for (std::uint32_t j = 0; j < stages; ++j) {
        for (Phase i = 0; i < 8; ++i) {
            const auto& g = phases[i];
            arcs[merged_beam_base + j].push_back(node(j, i, g.beam));
            for (std::uint32_t u = 0; u < e; ++u)
                for (auto v : g.arcs[u]) arcs[node(j, i, u)].push_back(node(j, i, v));
            const bool last = j + 1 == stages;
            if (!last) {
                arcs[node(j, i, g.items[j])].push_back(merged_beam_base + j + 1);
            } else if (g.exit) {
                arcs[node(j, i, *g.exit)].push_back(ending);
            }
        }
    }

    std::vector<std::int64_t> parent(arcs.size(), -1);
    std::deque<std::uint32_t> queue{merged_beam_base};
    parent[merged_beam_base] = merged_beam_base;
    while (!queue.empty() && parent[ending] == -1) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto v : arcs[u]) {
            if (parent[v] != -1) continue;
            parent[v] = u;
            queue.push_back(v);
        }
    }
    DeflektorResult result;
    if (parent[ending] == -1) return result;
    result.solvable = true;

    std::vector<std::uint32_t> path;
    for (auto v = ending; v != merged_beam_base; v = std::uint32_t(parent[v])) path.push_back(v);
    std::reverse(path.begin(), path.end());
    PlanStep step;
    for (auto v : path) {
        if (v == ending) break;
        if (v >= merged_beam_base) {
            if (!step.chain.empty()) {
                step.item = std::uint32_t(result.plan.size());
                result.plan.push_back(step);
            }
            step = {};
            continue;
        }
        step.phase = Phase((v / e) % 8);
        step.chain.push_back(phases[0].nodes[v % e]);
    }
    step.item.reset();
    result.plan.push_back(step);
    return result;
}

namespace {

class BruteSearch {
public:
    BruteSearch(const RayLevel& level, bool orientable) : level_(level), orientable_(orientable) {}

    void run(Phase phase, Point beam) {
        phase_ = phase;
        for (int k = 0; k < 16; ++k) shoot(beam, k);
    }

    std::set<std::uint32_t> items;
    bool exit = false;

private:
    void shoot(Point from, int k) {
        PolarizatorChoice choice;
        if (orientable_)
            choice = [this](Point p) -> std::optional<int> {
                auto it = polarizators_.find(p);
                if (it == polarizators_.end()) return std::nullopt;
                return it->second;
            };
        const auto r = trace_ray(level_, from, k, phase_, choice);
        if (r.kind == TraceResult::Kind::Undecided) {
            for (int o = 0; o < 8; ++o) {
                polarizators_[r.at] = o;
                shoot(from, k);
            }
            polarizators_.erase(r.at);
            return;
        }
        items.insert(r.items.begin(), r.items.end());
        if (r.kind != TraceResult::Kind::Terminates) return;
        const Kind hit = level_.at(r.at).kind;
        if (hit == Kind::Exit) exit = true;
        // A mirror already on this ray keeps its aim, so the ray would loop.
        if (hit != Kind::Mirror || !used_.insert(r.at).second) return;
        for (int aim = 0; aim < 16; ++aim) shoot(r.at, aim);
        used_.erase(r.at);
    }

    const RayLevel& level_;
    bool orientable_;
    Phase phase_ = 0;
    std::map<Point, int> polarizators_;
    std::set<Point> used_;
};

}  // namespace

bool solve_ray_brute(const RayLevel& level, const RayBounds& bounds) {
    validate(level);
    std::uint32_t mirrors = 0, polarizators = 0, item_count = 0;
    Point beam;
    for (int y = 0; y < int(level.height); ++y)
        for (int x = 0; x < int(level.width); ++x) {
            const auto kind = level.at({x, y}).kind;
            mirrors += kind == Kind::Mirror;
            polarizators += kind == Kind::Polarizator;
            item_count += kind == Kind::Item;
            if (kind == Kind::Beam) beam = {x, y};
        }
    if (mirrors > bounds.max_mirrors || polarizators > bounds.max_polarizators)
        throw Error(ErrorCode::TooLarge, std::to_string(mirrors) + " mirrors and " + std::to_string(polarizators) +
                                             " polarizators exceed the brute-force bounds");

    BruteSearch search(level, bounds.orientable_polarizators);
    std::size_t before;
    do {
        before = search.items.size();
        for (Phase i = 0; i < 8; ++i) search.run(i, beam);
    } while (search.items.size() != before);
    return search.items.size() == item_count && search.exit;
}

Shot fire(const RayLevel& level, const Configuration& config) {
    Shot shot;
    Point from;
    for (int y = 0; y < int(level.height); ++y)
        for (int x = 0; x < int(level.width); ++x)
            if (level.at({x, y}).kind == Kind::Beam) from = {x, y};
    PolarizatorChoice choice = [&](Point p) -> std::optional<int> {
        auto it = config.polarizators.find(p);
        return it == config.polarizators.end() ? level.at(p).orientation : it->second;
    };
    int aim = config.beam_aim;
    for (;;) {
        shot.chain.push_back(from);
        const auto r = trace_ray(level, from, aim, config.phase, choice);
        for (auto item : r.items)
            if (std::find(shot.items.begin(), shot.items.end(), item) == shot.items.end()) shot.items.push_back(item);
        if (r.kind != TraceResult::Kind::Terminates) return shot;
        const Kind hit = level.at(r.at).kind;
        if (hit == Kind::Exit) {
            shot.reached_exit = true;
            return shot;
        }
        if (hit != Kind::Mirror || std::find(shot.chain.begin(), shot.chain.end(), r.at) != shot.chain.end())
            return shot;
        from = r.at;
        auto it = config.mirrors.find(from);
        aim = it == config.mirrors.end() ? 0 : it->second;
    }
}

// ---------------------------------------------------------------------------
// Vertex gadget, local coordinates inside a 12x12 box. Rays entering from
// the left port run east through the central polarizator to M1, which can
// send them diagonally to M2; rays entering from the bottom port run north
// through the polarizator straight to M2. M2 aims at the top or right port.

namespace {

constexpr int kBox = 12;
constexpr Point kLeft{0, 7}, kBottom{3, 10}, kTop{3, 1}, kRight{9, 4};
constexpr Point kCenter{3, 7}, kM1{6, 7}, kM2{3, 4};
constexpr Point kCorridor[] = {{1, 7}, {2, 7}, {4, 7}, {5, 7}, {3, 9}, {3, 8}, {3, 6}, {3, 5}, {5, 6},
                               {4, 5}, {3, 3}, {3, 2}, {4, 4}, {5, 4}, {6, 4}, {7, 4}, {8, 4}};

Point offset(Point origin, Point local) { return {origin.x + local.x, origin.y + local.y}; }

}  // namespace

MindbenderLevel reduce_mindbender(const DGraph& g, std::uint32_t s, std::uint32_t t) {
    if (s >= g.n || t >= g.n) throw Error(ErrorCode::BadParams, "s and t must be vertices of the graph");
    const auto in = in_degrees(g), out = out_degrees(g);
    for (std::uint32_t v = 0; v < g.n; ++v)
        if (in[v] > 2 || out[v] > 2)
            throw Error(ErrorCode::DegreeViolation, "vertex " + std::to_string(v) + " has degree above two");

    std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
    for (const auto& arc : g.arcs)
        if (arc.second != s && arc.first != t) kept.push_back(arc);
    if (kept.size() > 25) throw Error(ErrorCode::TooLarge, "more arcs than teleporter ids");

    // Two-colour the arcs so each vertex uses each port type at most once per
    // side: arcs sharing a tail or a head alternate. Components are paths or
    // even cycles, so the alternation never conflicts.
    std::vector<int> colour(kept.size(), -1);
    for (std::size_t seed = 0; seed < kept.size(); ++seed) {
        if (colour[seed] != -1) continue;
        colour[seed] = 1;
        std::deque<std::size_t> queue{seed};
        while (!queue.empty()) {
            const auto a = queue.front();
            queue.pop_front();
            for (std::size_t b = 0; b < kept.size(); ++b) {
                if (b == a || colour[b] != -1) continue;
                if (kept[b].first == kept[a].first || kept[b].second == kept[a].second) {
                    colour[b] = 1 - colour[a];
                    queue.push_back(b);
                }
            }
        }
    }

    MindbenderLevel m;
    m.level = make_level(kBox * g.n, kBox);
    for (auto& tile : m.level.tiles) tile.kind = Kind::Opaque;
    for (std::uint32_t v = 0; v < g.n; ++v) {
        const Point o{int(v) * kBox, 0};
        m.origin.push_back(o);
        for (auto c : kCorridor) m.level.at(offset(o, c)).kind = Kind::Empty;
        m.level.at(offset(o, kCenter)) = {Kind::Polarizator, 0, false, 0, 0};
        m.level.at(offset(o, kM1)).kind = Kind::Mirror;
        m.level.at(offset(o, kM2)).kind = Kind::Mirror;
    }
    m.level.at(offset(m.origin[s], kLeft)).kind = Kind::Beam;
    m.level.at(offset(m.origin[t], kRight)).kind = Kind::Exit;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const bool horizontal = colour[i] == 1;
        const char id = char('a' + i + (i >= 'o' - 'a'));  // 'o' marks a mine
        const auto [a, b] = kept[i];
        m.level.at(offset(m.origin[a], horizontal ? kRight : kTop)) = {Kind::Teleporter, 0, false, id, 0};
        m.level.at(offset(m.origin[b], horizontal ? kLeft : kBottom)) = {Kind::Teleporter, 0, false, id, 0};
        m.horizontal.emplace(kept[i], horizontal);
    }
    return m;
}

Configuration mindbender_configuration(const MindbenderLevel& m, const oracle::Path& path) {
    if (path.vertices.empty()) throw Error(ErrorCode::SolutionMismatch, "empty path");
    Configuration c;
    const auto& p = path.vertices;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto kind = [&](std::uint32_t a, std::uint32_t b) {
            auto it = m.horizontal.find({a, b});
            if (it == m.horizontal.end())
                throw Error(ErrorCode::SolutionMismatch,
                            "arc " + std::to_string(a) + "->" + std::to_string(b) + " is not wired");
            return it->second;
        };
        const bool enters_left = i == 0 || kind(p[i - 1], p[i]);
        const bool leaves_right = i + 1 == p.size() || kind(p[i], p[i + 1]);
        const Point o = m.origin.at(p[i]);
        c.polarizators[offset(o, kCenter)] = enters_left ? 0 : 6;
        if (enters_left) c.mirrors[offset(o, kM1)] = 10;
        c.mirrors[offset(o, kM2)] = leaves_right ? 0 : 12;
    }
    return c;
}

}  // namespace hardgame::ray
