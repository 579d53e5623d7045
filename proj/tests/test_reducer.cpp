#include <doctest.h>

#include "hardgame/formats.hpp"
#include "hardgame/reducer.hpp"
#include "support/corpus.hpp"

using namespace hardgame;

namespace {

bool has_error(ErrorCode code, const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

std::uint64_t placed_tokens(const Level& level) {
    std::uint64_t n = level.initial_tokens;
    for (const auto& v : level.vertices) n += v.tokens;
    return n;
}

std::uint64_t placed_keys(const Level& level) {
    std::uint64_t n = level.initial_keys;
    for (const auto& v : level.vertices) n += v.keys;
    return n;
}

MonotoneCircuit and_or(bool x, bool y, GateKind kind) {
    MonotoneCircuit c;
    c.inputs = {{"x", x}, {"y", y}};
    c.gates = {{"g", kind, "x", "y"}};
    c.output = "g";
    return c;
}

}  // namespace

TEST_SUITE("reducer") {
    TEST_CASE("Hamiltonian skeleton sizes") {
        const auto k4 = complete_graph_k4();
        const auto b = reduce_meta1(k4, 0, true);
        CHECK(b.kind == "1");
        CHECK(b.level.vertices.size() == 5);
        CHECK(b.level.edges.size() == 7);
        CHECK(b.level.doors.empty());
        CHECK(b.level.require_exit);
        CHECK(validate_level(b.level).empty());
        for (const auto& e : b.level.edges) CHECK(e.single_use);
        CHECK_FALSE(reduce_meta1(k4, 0, false).level.require_exit);
    }

    TEST_CASE("toll variants") {
        const auto k4 = complete_graph_k4();
        const auto a = reduce_meta1b(k4, 0, Variant::A);
        CHECK(a.kind == "1b-a");
        CHECK(placed_tokens(a.level) == 5);
        const auto c = reduce_meta1b(k4, 0, Variant::C);
        CHECK(placed_tokens(c.level) == 8);
        for (std::uint32_t k = 0; k < 4; ++k) {
            const auto e = c.roles.at("chain" + std::to_string(k)).id;
            CHECK(c.level.edges[e].toll == 1);
        }
        CHECK_FALSE(c.roles.contains("chain4"));
    }

    TEST_CASE("directed key variants") {
        const auto g = gen_degree_valid_digraph(2, 0);
        const auto a = reduce_meta1c(g, Variant::A);
        CHECK(a.kind == "1c-a");
        CHECK(a.uses_one_way);
        CHECK(a.level.doors.size() == g.arcs.size());
        CHECK(placed_keys(a.level) == g.n);
        for (const auto& d : a.level.doors) CHECK_FALSE(d.initially_open);
        CHECK(reduce_meta1c(g, Variant::B).level.initial_keys == g.n);
        const auto c = reduce_meta1c(g, Variant::C);
        CHECK(placed_keys(c.level) == 2 * g.n);
        for (std::uint32_t k = 0; k < g.n; ++k) CHECK(c.roles.contains("chain" + std::to_string(k)));
    }

    TEST_CASE("start vertex for directed levels") {
        const auto valid = gen_degree_valid_digraph(3, 4);
        const auto s = directed_start(valid);
        CHECK(in_degrees(valid)[s] == 2);
        CHECK(out_degrees(valid)[s] == 1);
        for (std::uint32_t v = 0; v < s; ++v) CHECK_FALSE((in_degrees(valid)[v] == 2 && out_degrees(valid)[v] == 1));
        CHECK(has_error(ErrorCode::NoValidStartVertex, [&] { directed_start(DGraph{2, {{0, 1}, {1, 0}}}); }));
        // vertex 0 has in- and out-degree 2
        const DGraph bad{4, {{0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 3}, {3, 2}}};
        CHECK(has_error(ErrorCode::DegreeViolation, [&] { reduce_meta1c(bad, Variant::A); }));
    }

    TEST_CASE("input errors") {
        const UGraph square{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
        CHECK(has_error(ErrorCode::DegreeViolation, [&] { reduce_meta1(square, 0, true); }));
        CHECK(has_error(ErrorCode::DegreeViolation, [&] { reduce_meta3b(square, 0); }));
        CHECK(has_error(ErrorCode::BadParams, [&] { reduce_meta1(complete_graph_k4(), 9, true); }));
        CHECK(has_error(ErrorCode::DegreeViolation, [&] { reduce_meta2b(DGraph{2, {{0, 1}, {1, 0}}}); }));
        auto f = corpus::formula({{Quantifier::Exists, 1}}, {{1, 2, 1}});
        CHECK(has_error(ErrorCode::MalformedFormula, [&] { reduce_tqbf(f, Actuator::Plate); }));
        CHECK(has_error(ErrorCode::BadParams, [&] { reduce_tqbf(corpus::fixed_formulas()[0].second, Actuator::Button1); }));
        auto c = and_or(true, true, GateKind::And);
        CHECK(has_error(ErrorCode::BadParams, [&] { reduce_circuit_value(c, Actuator::Button3); }));
        c.gates.push_back({"h", GateKind::Or, "h", "x"});
        CHECK(has_error(ErrorCode::CyclicCircuit, [&] { reduce_circuit_value(c, Actuator::Plate); }));
        c.gates.back() = {"h", GateKind::Or, "zz", "x"};
        CHECK(has_error(ErrorCode::MalformedCircuit, [&] { reduce_circuit_value(c, Actuator::Plate); }));
    }

    TEST_CASE("circuit levels decide the circuit") {
        for (auto mode : {Actuator::Plate, Actuator::Button1})
            for (auto kind : {GateKind::And, GateKind::Or})
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y) {
                        const auto c = and_or(x, y, kind);
                        const bool want = kind == GateKind::And ? x && y : x || y;
                        const auto bundle = reduce_circuit_value(c, mode);
                        CAPTURE(bundle.kind);
                        CAPTURE(x);
                        CAPTURE(y);
                        CHECK(solve_exhaustive(bundle.level).solvable() == want);
                        CHECK(solve_monotone(bundle.level).solvable == want);
                    }
    }

    TEST_CASE("formula levels decide the formula") {
        for (const auto& [name, f] : corpus::fixed_formulas())
            for (auto mode : {Actuator::Plate, Actuator::Button3}) {
                const auto bundle = reduce_tqbf(f, mode);
                CAPTURE(name);
                CAPTURE(bundle.kind);
                CHECK(validate_level(bundle.level).empty());
                CHECK(bundle.level.marked_edge);
                CHECK(solve_exhaustive(bundle.level).solvable() == oracle::eval_qbf(f).decision);
            }
    }

    TEST_CASE("canonical witnesses") {
        SUBCASE("K4 single-use tour") {
            const auto g = complete_graph_k4();
            const auto bundle = reduce_meta1(g, 0, true);
            const auto cert = canonical_witness(bundle, oracle::ham_cycle(g));
            CHECK(cert.moves.size() == 5);
            CHECK(check_certificate(bundle.level, cert).won());
        }
        SUBCASE("every variant on Q3") {
            const auto g = cube_graph_q3();
            const auto answer = oracle::ham_cycle(g);
            std::vector<LevelBundle> bundles = {reduce_meta1(g, 0, true), reduce_meta1(g, 0, false),
                                                reduce_meta3b(g, 0)};
            for (auto v : {Variant::A, Variant::B, Variant::C}) bundles.push_back(reduce_meta1b(g, 0, v));
            for (const auto& b : bundles) {
                CAPTURE(b.kind);
                CHECK(check_certificate(b.level, canonical_witness(b, answer)).won());
            }
        }
        SUBCASE("directed variants") {
            for (const auto& [name, g] : corpus::degree_valid_digraphs()) {
                const auto answer = oracle::ham_cycle(g);
                if (!answer.decision) continue;
                CAPTURE(name);
                for (auto v : {Variant::A, Variant::B, Variant::C}) {
                    const auto b = reduce_meta1c(g, v);
                    CHECK(check_certificate(b.level, canonical_witness(b, answer)).won());
                }
                const auto b = reduce_meta2b(g);
                CHECK(check_certificate(b.level, canonical_witness(b, answer)).won());
            }
        }
        SUBCASE("circuits and formulas") {
            const auto c = and_or(true, false, GateKind::Or);
            const auto cb = reduce_circuit_value(c, Actuator::Button1);
            CHECK(check_certificate(cb.level, canonical_witness(cb, oracle::eval_circuit(c))).won());
            const auto f = corpus::fixed_formulas()[3].second;
            const auto fb = reduce_tqbf(f, Actuator::Button3);
            CHECK(check_certificate(fb.level, canonical_witness(fb, oracle::eval_qbf(f))).won());
        }
        SUBCASE("mismatched solutions") {
            const auto g = complete_graph_k4();
            const auto bundle = reduce_meta1(g, 0, true);
            CHECK(has_error(ErrorCode::SolutionMismatch, [&] { canonical_witness(bundle, {false, {}}); }));
            const oracle::Answer wrong{true, oracle::HamCycle{{0, 1, 2}}};
            CHECK(has_error(ErrorCode::SolutionMismatch, [&] { canonical_witness(bundle, wrong); }));
            const auto circuit = oracle::eval_circuit(and_or(true, true, GateKind::And));
            CHECK(has_error(ErrorCode::SolutionMismatch, [&] { canonical_witness(bundle, circuit); }));
        }
    }

    TEST_CASE("universal rounds on the marked edge") {
        for (const auto& [name, f] : corpus::universal_tautologies()) {
            CAPTURE(name);
            const auto bundle = reduce_tqbf(f, Actuator::Plate);
            const auto cert = canonical_witness(bundle, oracle::eval_qbf(f));
            CHECK(count_traversals(cert, *bundle.marked_edge) == std::size_t(1) << f.prefix.size());
        }
    }

    TEST_CASE("reductions are deterministic") {
        const auto g = petersen_graph();
        CHECK(serialize(reduce_meta3b(g, 2).level) == serialize(reduce_meta3b(g, 2).level));
        const auto f = gen_qbf(3, 3, 9);
        CHECK(serialize(reduce_tqbf(f, Actuator::Button3).level) == serialize(reduce_tqbf(f, Actuator::Button3).level));
        const auto d = gen_degree_valid_digraph(3, 2);
        CHECK(serialize(reduce_meta2b(d).level) == serialize(reduce_meta2b(d).level));
    }

    TEST_CASE("extra token lets the toll variant with n+1 tokens win on a non-Hamiltonian graph") {
        // Petersen has no Hamiltonian cycle, yet with one spare token the avatar
        // can detour v -> u -> v on the dangling edge and still finish. The
        // acceptance suite reports this disagreement.
        const auto g = petersen_graph();
        CHECK_FALSE(oracle::ham_cycle(g).decision);
        const auto bundle = reduce_meta1b(g, 0, Variant::B);
        CHECK(placed_tokens(bundle.level) == g.n + 1);
        CHECK(solve_exhaustive(bundle.level).solvable());
        CHECK_FALSE(solve_exhaustive(reduce_meta1b(g, 0, Variant::A).level).solvable());
    }
}
