#include "hardgame/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace hardgame::oracle {

namespace {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

// Depth-first extension of a simple path from vertex 0. `closes(u)` says
// whether u has an edge back to the start that is usable as the final edge.
class HamSearch {
public:
    HamSearch(std::uint32_t n, Adjacency succ, std::function<bool(std::uint32_t)> closes)
        : n_(n), succ_(std::move(succ)), closes_(std::move(closes)), on_path_(n, false) {}

    std::optional<std::vector<std::uint32_t>> run() {
        path_ = {0};
        on_path_[0] = true;
        if (extend()) return path_;
        return std::nullopt;
    }

private:
    // Every unvisited vertex still needs an unvisited or endpoint neighbour.
    bool viable() const {
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (on_path_[v]) continue;
            bool ok = false;
            for (auto w : succ_[v])
                if (!on_path_[w] || w == 0 || w == path_.back()) ok = true;
            if (!ok) return false;
        }
        return true;
    }

    bool extend() {
        if (path_.size() == n_) return closes_(path_.back());
        if (!viable()) return false;
        for (auto w : succ_[path_.back()]) {
            if (on_path_[w]) continue;
            on_path_[w] = true;
            path_.push_back(w);
            if (extend()) return true;
            path_.pop_back();
            on_path_[w] = false;
        }
        return false;
    }

    std::uint32_t n_;
    Adjacency succ_;
    std::function<bool(std::uint32_t)> closes_;
    std::vector<bool> on_path_;
    std::vector<std::uint32_t> path_;
};

void check_bound(std::uint32_t n, std::uint32_t bound, const char* what) {
    if (n > bound)
        throw Error(ErrorCode::TooLarge,
                    std::string(what) + " instance of size " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
}

std::multiset<std::pair<std::uint32_t, std::uint32_t>> undirected_multiset(const UGraph& g) {
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> out;
    for (auto [a, b] : g.edges) out.insert(std::minmax(a, b));
    return out;
}

}  // namespace

bool QbfStrategy::choice(const std::vector<bool>& values, std::size_t depth) const {
    std::int32_t node = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        const auto& n = nodes.at(static_cast<std::size_t>(node));
        node = n.quantifier == Quantifier::Exists ? n.child[0] : n.child[values[i] ? 1 : 0];
    }
    return nodes.at(static_cast<std::size_t>(node)).value;
}

Answer ham_cycle(const UGraph& g, std::uint32_t bound) {
    check_bound(g.n, bound, "Hamiltonian cycle");
    if (g.n == 0) return {false, {}};
    const auto edges = undirected_multiset(g);
    if (g.n == 1) return edges.count({0, 0}) ? Answer{true, HamCycle{{0}}} : Answer{false, {}};
    if (g.n == 2) return edges.count({0, 1}) >= 2 ? Answer{true, HamCycle{{0, 1}}} : Answer{false, {}};

    Adjacency adj(g.n);
    for (auto [a, b] : edges) {
        if (a == b) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    HamSearch search(g.n, adj, [&](std::uint32_t last) { return edges.count(std::minmax(last, 0u)) > 0; });
    if (auto path = search.run()) return {true, HamCycle{*path}};
    return {false, {}};
}

Answer ham_cycle(const DGraph& g, std::uint32_t bound) {
    check_bound(g.n, bound, "Hamiltonian cycle");
    if (g.n == 0) return {false, {}};
    std::set<std::pair<std::uint32_t, std::uint32_t>> arcs(g.arcs.begin(), g.arcs.end());
    if (g.n == 1) return arcs.count({0, 0}) ? Answer{true, HamCycle{{0}}} : Answer{false, {}};
    Adjacency succ(g.n);
    for (auto [a, b] : arcs)
        if (a != b) succ[a].push_back(b);
    HamSearch search(g.n, succ, [&](std::uint32_t last) { return arcs.count({last, 0u}) > 0; });
    if (auto path = search.run()) return {true, HamCycle{*path}};
    return {false, {}};
}

bool satisfies(const QuantifiedFormula& f, const std::vector<bool>& assignment) {
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return assignment[l.var] != l.negated; });
    });
}

Answer eval_qbf(const QuantifiedFormula& f, std::uint32_t bound) {
    validate_formula(f);
    check_bound(static_cast<std::uint32_t>(f.prefix.size()), bound, "QBF");
    std::vector<bool> assignment(f.num_vars + 1, false);
    QbfStrategy strategy;

    // Returns the node index of a winning subtree, or -1.
    std::function<std::int32_t(std::size_t)> solve = [&](std::size_t depth) -> std::int32_t {
        if (depth == f.prefix.size()) return satisfies(f, assignment) ? -2 : -1;  // -2: leaf success
        const auto [q, var] = f.prefix[depth];
        const auto mark = strategy.nodes.size();
        if (q == Quantifier::Exists) {
            for (bool value : {false, true}) {
                assignment[var] = value;
                strategy.nodes.push_back({var, q, value, {-1, -1}});
                const auto self = static_cast<std::int32_t>(strategy.nodes.size() - 1);
                const auto child = solve(depth + 1);
                if (child != -1) {
                    strategy.nodes[static_cast<std::size_t>(self)].child[0] = child >= 0 ? child : -1;
                    return self;
                }
                strategy.nodes.resize(mark);
            }
            return -1;
        }
        strategy.nodes.push_back({var, q, false, {-1, -1}});
        const auto self = static_cast<std::int32_t>(strategy.nodes.size() - 1);
        for (bool value : {false, true}) {
            assignment[var] = value;
            const auto child = solve(depth + 1);
            if (child == -1) {
                strategy.nodes.resize(mark);
                return -1;
            }
            strategy.nodes[static_cast<std::size_t>(self)].child[value ? 1 : 0] = child >= 0 ? child : -1;
        }
        return self;
    };

    const auto root = solve(0);
    if (root == -1) return {false, {}};
    return {true, strategy};
}

Answer eval_circuit(const MonotoneCircuit& c) {
    const auto order = topological_gate_order(c);
    CircuitValues w;
    for (const auto& in : c.inputs) w.values[in.name] = in.value;
    for (auto g : order) {
        const auto& gate = c.gates[g];
        const bool a = w.values.at(gate.a), b = w.values.at(gate.b);
        w.values[gate.name] = gate.kind == GateKind::And ? (a && b) : (a || b);
    }
    const bool out = w.values.at(c.output);
    return {out, std::move(w)};
}

Answer connectivity(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                    std::uint32_t s, std::uint32_t t, bool directed) {
    Adjacency adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        if (!directed) adj[b].push_back(a);
    }
    std::vector<std::int64_t> parent(n, -1);
    parent[s] = s;
    std::deque<std::uint32_t> queue{s};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (v == t) break;
        for (auto w : adj[v]) {
            if (parent[w] != -1) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    if (parent[t] == -1) return {false, {}};
    Path p;
    for (auto v = t; v != s; v = static_cast<std::uint32_t>(parent[v])) p.vertices.push_back(v);
    p.vertices.push_back(s);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return {true, std::move(p)};
}

// ---------------------------------------------------------------------------

namespace {

template <class HasEdge>
bool verify_cycle(std::uint32_t n, const HamCycle& w, HasEdge has_edge) {
    if (w.cycle.size() != n || n == 0) return false;
    std::vector<bool> seen(n, false);
    for (auto v : w.cycle) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!has_edge(w.cycle[i], w.cycle[(i + 1) % n], i)) return false;
    return true;
}

}  // namespace

bool verify(const UGraph& g, const HamCycle& w) {
    const auto edges = undirected_multiset(g);
    if (g.n == 2) return verify_cycle(g.n, w, [&](auto, auto, auto) { return edges.count({0, 1}) >= 2; });
    return verify_cycle(g.n, w, [&](auto a, auto b, auto) { return edges.count(std::minmax(a, b)) > 0; });
}

bool verify(const DGraph& g, const HamCycle& w) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> arcs(g.arcs.begin(), g.arcs.end());
    return verify_cycle(g.n, w, [&](auto a, auto b, auto) { return arcs.count({a, b}) > 0; });
}

bool verify(const QuantifiedFormula& f, const QbfStrategy& w) {
    std::vector<bool> assignment(f.num_vars + 1, false);
    std::function<bool(std::size_t, std::int32_t)> walk = [&](std::size_t depth, std::int32_t node) {
        if (depth == f.prefix.size()) return satisfies(f, assignment);
        if (node < 0 || static_cast<std::size_t>(node) >= w.nodes.size()) return false;
        const auto& n = w.nodes[static_cast<std::size_t>(node)];
        if (n.var != f.prefix[depth].second || n.quantifier != f.prefix[depth].first) return false;
        if (n.quantifier == Quantifier::Exists) {
            assignment[n.var] = n.value;
            return walk(depth + 1, n.child[0]);
        }
        for (bool value : {false, true}) {
            assignment[n.var] = value;
            if (!walk(depth + 1, n.child[value ? 1 : 0])) return false;
        }
        return true;
    };
    if (f.prefix.empty()) return satisfies(f, assignment);
    return walk(0, 0);
}

bool verify(const MonotoneCircuit& c, const CircuitValues& w) {
    for (const auto& in : c.inputs) {
        auto it = w.values.find(in.name);
        if (it == w.values.end() || it->second != in.value) return false;
    }
    for (const auto& g : c.gates) {
        auto get = [&](const std::string& name) -> std::optional<bool> {
            auto it = w.values.find(name);
            if (it == w.values.end()) return std::nullopt;
            return it->second;
        };
        auto self = get(g.name), a = get(g.a), b = get(g.b);
        if (!self || !a || !b) return false;
        if (*self != (g.kind == GateKind::And ? (*a && *b) : (*a || *b))) return false;
    }
    return w.values.count(c.output) && w.values.at(c.output);
}

bool verify(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges, std::uint32_t s,
            std::uint32_t t, bool directed, const Path& w) {
    if (w.vertices.empty() || w.vertices.front() != s || w.vertices.back() != t) return false;
    std::set<std::pair<std::uint32_t, std::uint32_t>> e;
    for (auto [a, b] : edges) {
        e.insert({a, b});
        if (!directed) e.insert({b, a});
    }
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
        if (w.vertices[i] >= n) return false;
        if (!e.count({w.vertices[i], w.vertices[i + 1]})) return false;
    }
    return true;
}

}  // namespace hardgame::oracle
