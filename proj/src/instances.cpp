#include "hardgame/instances.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace hardgame {

std::string_view to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegreeViolation: return "DegreeViolation";
        case ErrorCode::NoValidStartVertex: return "NoValidStartVertex";
        case ErrorCode::MalformedCircuit: return "MalformedCircuit";
        case ErrorCode::CyclicCircuit: return "CyclicCircuit";
        case ErrorCode::MalformedFormula: return "MalformedFormula";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorCode::SolutionMismatch: return "SolutionMismatch";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::BadOrigin: return "BadOrigin";
        case ErrorCode::SyntaxError: return "SyntaxError";
    }
    return "?";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

std::vector<std::uint32_t> degrees(const UGraph& g) {
    std::vector<std::uint32_t> d(g.n, 0);
    for (auto [a, b] : g.edges) {
        ++d[a];
        ++d[b];
    }
    return d;
}

bool is_cubic(const UGraph& g) {
    const auto d = degrees(g);
    return std::all_of(d.begin(), d.end(), [](auto x) { return x == 3; });
}

bool is_simple(const UGraph& g) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (auto [a, b] : g.edges) {
        if (a == b) return false;
        if (!seen.insert(std::minmax(a, b)).second) return false;
    }
    return true;
}

bool is_connected(const UGraph& g) {
    if (g.n == 0) return true;
    std::vector<std::uint32_t> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::uint32_t components = g.n;
    for (auto [a, b] : g.edges) {
        auto ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

std::vector<std::uint32_t> in_degrees(const DGraph& g) {
    std::vector<std::uint32_t> d(g.n, 0);
    for (auto [a, b] : g.arcs) ++d[b];
    return d;
}

std::vector<std::uint32_t> out_degrees(const DGraph& g) {
    std::vector<std::uint32_t> d(g.n, 0);
    for (auto [a, b] : g.arcs) ++d[a];
    return d;
}

bool is_degree_valid(const DGraph& g) {
    const auto in = in_degrees(g), out = out_degrees(g);
    for (std::uint32_t v = 0; v < g.n; ++v) {
        const bool splitter = in[v] == 1 && out[v] == 2;
        const bool merger = in[v] == 2 && out[v] == 1;
        if (!splitter && !merger) return false;
    }
    return true;
}

bool is_planar(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(n);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (auto [a, b] : edges)
        if (a != b && seen.insert(std::minmax(a, b)).second) boost::add_edge(a, b, g);
    return boost::boyer_myrvold_planarity_test(g);
}

UGraph complete_graph_k4() { return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}; }

UGraph cube_graph_q3() {
    UGraph g{8, {}};
    for (std::uint32_t v = 0; v < 8; ++v)
        for (std::uint32_t bit : {1u, 2u, 4u})
            if (v < (v ^ bit)) g.edges.emplace_back(v, v ^ bit);
    return g;
}

UGraph petersen_graph() {
    UGraph g{10, {}};
    for (std::uint32_t i = 0; i < 5; ++i) {
        g.edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        g.edges.emplace_back(i, i + 5);                // spokes
        g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

void validate_formula(const QuantifiedFormula& f) {
    std::set<std::uint32_t> bound;
    for (auto [q, v] : f.prefix) {
        if (v == 0 || v > f.num_vars)
            throw Error(ErrorCode::MalformedFormula, "prefix variable " + std::to_string(v) + " out of range");
        if (!bound.insert(v).second)
            throw Error(ErrorCode::MalformedFormula, "variable " + std::to_string(v) + " quantified twice");
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
        for (const auto& lit : f.clauses[j])
            if (!bound.count(lit.var))
                throw Error(ErrorCode::MalformedFormula,
                            "clause " + std::to_string(j + 1) + " uses unquantified variable " + std::to_string(lit.var));
}

std::vector<std::size_t> topological_gate_order(const MonotoneCircuit& c) {
    std::map<std::string, long> index;  // -1 for inputs, gate index otherwise
    for (const auto& in : c.inputs)
        if (!index.emplace(in.name, -1).second) throw Error(ErrorCode::MalformedCircuit, "duplicate name " + in.name);
    for (std::size_t g = 0; g < c.gates.size(); ++g)
        if (!index.emplace(c.gates[g].name, static_cast<long>(g)).second)
            throw Error(ErrorCode::MalformedCircuit, "duplicate name " + c.gates[g].name);
    if (!index.count(c.output)) throw Error(ErrorCode::MalformedCircuit, "undefined output " + c.output);

    std::vector<std::vector<std::size_t>> readers(c.gates.size());
    std::vector<std::size_t> pending(c.gates.size(), 0);
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
        for (const auto* src : {&c.gates[g].a, &c.gates[g].b}) {
            auto it = index.find(*src);
            if (it == index.end())
                throw Error(ErrorCode::MalformedCircuit, "gate " + c.gates[g].name + " reads undefined " + *src);
            if (it->second >= 0) {
                readers[static_cast<std::size_t>(it->second)].push_back(g);
                ++pending[g];
            }
        }
    }
    std::vector<std::size_t> order;
    for (std::size_t g = 0; g < c.gates.size(); ++g)
        if (!pending[g]) order.push_back(g);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto r : readers[order[i]])
            if (--pending[r] == 0) order.push_back(r);
    if (order.size() != c.gates.size()) throw Error(ErrorCode::CyclicCircuit, "gates form a cycle");
    return order;
}

}  // namespace hardgame
