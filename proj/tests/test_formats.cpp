#include <doctest.h>

#include "hardgame/formats.hpp"
#include "hardgame/generators.hpp"
#include "hardgame/reducer.hpp"
#include "support/corpus.hpp"
#include "support/model_trials.hpp"

using namespace hardgame;

namespace {

struct Where {
    std::size_t line = 0, column = 0;
};

template <class F>
Where syntax_error(F&& f) {
    try {
        f();
    } catch (const SyntaxError& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        return {e.line(), e.column()};
    }
    FAIL("no syntax error");
    return {};
}

bool has_error(ErrorCode code, const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_SUITE("formats") {
    TEST_CASE("undirected graphs") {
        const auto g = parse_ugraph("c K4\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
        CHECK(g == complete_graph_k4());
        CHECK(serialize(g) == "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
        CHECK(parse_ugraph("p edge 2 1\n\ne 1 2") == UGraph{2, {{0, 1}}});
    }

    TEST_CASE("graph syntax errors") {
        auto at = syntax_error([] { parse_ugraph("p edge 2 1\ne 1 3\n"); });
        CHECK(at.line == 2);
        CHECK(at.column == 5);
        at = syntax_error([] { parse_ugraph("p edge 2 2\ne 1 2\n"); });
        CHECK(at.line == 3);
        at = syntax_error([] { parse_ugraph("p edge 2 1\ne 1 02\n"); });
        CHECK(at.column == 5);
        syntax_error([] { parse_ugraph("p edge 2 1\ne +1 2\n"); });
        syntax_error([] { parse_ugraph("p edge 2 1\ne 1 2 3\n"); });
        syntax_error([] { parse_ugraph("p edge 2 1\na 1 2\n"); });
        syntax_error([] { parse_dgraph("p edge 2 1\ne 1 2\n"); });
        syntax_error([] { parse_ugraph("p edge 2 0\ne 1 2\n"); });
        syntax_error([] { parse_ugraph(""); });
    }

    TEST_CASE("directed graphs") {
        const auto g = parse_dgraph("p edge 3 3\na 1 2\na 2 3\na 3 1\n");
        CHECK(g == DGraph{3, {{0, 1}, {1, 2}, {2, 0}}});
        CHECK(parse_dgraph(serialize(g)) == g);
    }

    TEST_CASE("quantified formulas") {
        const auto f = parse_qbf("c one var\np cnf 1 1\ne 1 0\n1 1 1 0\n");
        CHECK(f == corpus::fixed_formulas()[0].second);
        SUBCASE("grouped prefix lines") {
            const auto g = parse_qbf("p cnf 3 1\ne 1 2 0\na 3 0\n1 -2 3 0\n");
            CHECK(g.prefix.size() == 3);
            CHECK(serialize(g) == "p cnf 3 1\ne 1 2 0\na 3 0\n1 -2 3 0\n");
        }
        SUBCASE("a two-literal clause") {
            const auto at = syntax_error([] { parse_qbf("p cnf 2 1\ne 1 2 0\n1 2 0\n"); });
            CHECK(at.line == 3);
            CHECK(at.column == 5);
        }
        SUBCASE("missing terminator") { CHECK(syntax_error([] { parse_qbf("p cnf 1 1\ne 1 0\n1 1 1\n"); }).line == 3); }
        SUBCASE("free variables parse but do not validate") {
            const auto g = parse_qbf("p cnf 2 1\ne 1 0\n1 2 1 0\n");
            CHECK(has_error(ErrorCode::MalformedFormula, [&] { validate_formula(g); }));
            CHECK(syntax_error([] { parse_qbf("p cnf 2 1\ne 1 0\n1 3 1 0\n"); }).column == 3);
        }
    }

    TEST_CASE("circuits") {
        const auto text = "# and of two\nin x 1\nin y 0\ngate g AND x y\nout g\n";
        const auto c = parse_circuit(text);
        CHECK(c.inputs.size() == 2);
        CHECK(c.gates[0] == CircuitGate{"g", GateKind::And, "x", "y"});
        CHECK(c.output == "g");
        CHECK(serialize(c) == "in x 1\nin y 0\ngate g AND x y\nout g\n");
        syntax_error([] { parse_circuit("in x 1\nout x\nout x\n"); });
        syntax_error([] { parse_circuit("in x 1\n"); });
        syntax_error([] { parse_circuit("in x 2\nout x\n"); });
        syntax_error([] { parse_circuit("in x 1\ngate g XOR x x\nout g\n"); });
    }

    TEST_CASE("ray levels") {
        const auto level = parse_ray_level("ray 4 2\nBR2*\nR.aX\nrbase a 3\nrbase b 6\n");
        CHECK(level.at({1, 0}).rotating);
        CHECK(level.at({1, 0}).orientation == 3);
        CHECK(level.at({0, 1}).orientation == 6);
        CHECK(level.at({2, 0}).orientation == 2);
        CHECK(level.at({3, 0}).kind == ray::Kind::Item);
        CHECK(serialize(level) == "ray 4 2\nBR2*\nR.aX\nrbase a 3\nrbase b 6\n");
        CHECK(serialize(parse_ray_level("ray 2 1\nRX\n")) == "ray 2 1\nRX\nrbase a 0\n");
        CHECK(syntax_error([] { parse_ray_level("ray 3 1\nB.\n"); }).column == 3);
        CHECK(syntax_error([] { parse_ray_level("ray 3 1\nB?X\n"); }).column == 2);
        syntax_error([] { parse_ray_level("ray 2 1\nBX\nrbase a 0\n"); });
        syntax_error([] { parse_ray_level("ray 2 1\nRX\nrbase a 8\n"); });
        syntax_error([] { parse_ray_level("ray 3 1\nRRX\nrbase a 0\nrbase a 1\n"); });
    }

    TEST_CASE("levels") {
        SUBCASE("every field round-trips") {
            Rng rng(23);
            for (int i = 0; i < 200; ++i) {
                auto level = trials::random_level(rng, true);
                if (rng.coin()) level.marked_edge = 0;
                const auto text = serialize(level);
                CHECK(text.back() == '\n');
                CHECK(parse_level(text) == level);
            }
        }
        SUBCASE("unknown keys and wrong types report a path") {
            Rng rng(1);
            const auto text = serialize(trials::random_level(rng, false));
            auto bad = text;
            bad.replace(bad.find("\"start\""), 7, "\"begin\"");
            CHECK_THROWS_AS(parse_level(bad), SyntaxError);
            bad = text;
            bad.replace(bad.find("\"tokenCapacity\": \""), 18, "\"tokenCapacity\": 1, \"x\": \"");
            CHECK_THROWS_AS(parse_level(bad), SyntaxError);
        }
        SUBCASE("malformed JSON") {
            const auto at = syntax_error([] { parse_level("{\n  \"vertices\": [,]\n}\n"); });
            CHECK(at.line == 2);
        }
        SUBCASE("parsing does not validate") {
            LevelBuilder b;
            b.add_vertex();
            auto level = b.take();
            level.require_exit = true;
            const auto parsed = parse_level(serialize(level));
            CHECK(parsed == level);
            CHECK_THROWS_AS(initial_state(parsed), InvalidLevel);
        }
    }

    TEST_CASE("certificates") {
        const Certificate c{{Move::traverse(3), Move::press(1, 0)}};
        CHECK(serialize(c) == "t 3\np 1 0\n");
        CHECK(parse_certificate("# witness\nt 3\n\np 1 0\n") == c);
        CHECK(parse_certificate("") == Certificate{});
        CHECK(syntax_error([] { parse_certificate("t 3\nx 1\n"); }).line == 2);
        syntax_error([] { parse_certificate("t\n"); });
        syntax_error([] { parse_certificate("p 1\n"); });
    }

    TEST_CASE("answers") {
        CHECK(format_answer(oracle::ham_cycle(complete_graph_k4())) == "yes\ncycle 1 2 3 4\n");
        CHECK(format_answer(oracle::ham_cycle(petersen_graph())) == "no\n");
        CHECK(format_answer(oracle::connectivity(3, {{0, 2}}, 0, 2, true)) == "yes\npath 1 3\n");
        MonotoneCircuit c;
        c.inputs = {{"x", true}};
        c.gates = {{"g", GateKind::Or, "x", "x"}};
        c.output = "g";
        CHECK(format_answer(oracle::eval_circuit(c)) == "yes\nvalue g 1\nvalue x 1\n");
        const auto strategy = format_answer(oracle::eval_qbf(corpus::fixed_formulas()[3].second));
        CHECK(strategy.starts_with("yes\n"));
        CHECK(strategy.find("a 1 0") != std::string::npos);
        CHECK(strategy.find("e 2 1") != std::string::npos);
    }

    TEST_CASE("round trips over generated and reduced instances") {
        for (const auto& [name, g] : corpus::cubic_graphs()) {
            CAPTURE(name);
            CHECK(parse_ugraph(serialize(g)) == g);
            const auto bundle = reduce_meta3b(g, 0);
            CHECK(parse_level(serialize(bundle.level)) == bundle.level);
        }
        for (const auto& [name, g] : corpus::degree_valid_digraphs()) {
            CAPTURE(name);
            CHECK(parse_dgraph(serialize(g)) == g);
            const auto bundle = reduce_meta2b(g);
            CHECK(parse_level(serialize(bundle.level)) == bundle.level);
        }
        for (const auto& [name, f] : corpus::formulas()) {
            CAPTURE(name);
            CHECK(parse_qbf(serialize(f)) == f);
            const auto bundle = reduce_tqbf(f, Actuator::Button3);
            CHECK(parse_level(serialize(bundle.level)) == bundle.level);
        }
        for (const auto& [name, c] : corpus::circuits()) {
            CAPTURE(name);
            CHECK(parse_circuit(serialize(c)) == c);
        }
        for (const auto& [name, level] : corpus::ray_levels()) {
            CAPTURE(name);
            CHECK(parse_ray_level(serialize(level)) == level);
        }
        const auto bundle = reduce_meta1(cube_graph_q3(), 0, true);
        const auto cert = canonical_witness(bundle, oracle::ham_cycle(cube_graph_q3()));
        CHECK(parse_certificate(serialize(cert)) == cert);
    }
}

TEST_SUITE("generators") {
    TEST_CASE("random numbers") {
        Rng a(42), b(42), c(43);
        for (int i = 0; i < 10; ++i) {
            const auto x = a.next();
            CHECK(x == b.next());
        }
        CHECK(a.next() != c.next());
        // First draw from seed 0 is the high half of the increment.
        CHECK(Rng(0).next() == std::uint32_t(1442695040888963407ULL >> 32));
    }

    TEST_CASE("cubic graphs") {
        CHECK(gen_cubic_graph(4, 0) == complete_graph_k4());
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto g = gen_cubic_graph(10, seed);
            CHECK(g.n == 10);
            CHECK(is_cubic(g));
            CHECK(is_simple(g));
            CHECK(is_connected(g));
            CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
        }
        CHECK(gen_cubic_graph(12, 7) == gen_cubic_graph(12, 7));
        CHECK(has_error(ErrorCode::InfeasibleParameters, [] { gen_cubic_graph(5, 0); }));
        CHECK(has_error(ErrorCode::InfeasibleParameters, [] { gen_cubic_graph(2, 0); }));
    }

    TEST_CASE("degree-valid digraphs") {
        const auto small = gen_degree_valid_digraph(2, 0);
        CHECK(small.n == 4);
        CHECK(small.arcs.size() == 6);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto g = gen_degree_valid_digraph(3, seed);
            CHECK(is_degree_valid(g));
            std::set<std::pair<std::uint32_t, std::uint32_t>> unique(g.arcs.begin(), g.arcs.end());
            CHECK(unique.size() == g.arcs.size());
            for (const auto& [u, v] : g.arcs) CHECK(u != v);
        }
        CHECK(gen_degree_valid_digraph(4, 3) == gen_degree_valid_digraph(4, 3));
        CHECK(has_error(ErrorCode::InfeasibleParameters, [] { gen_degree_valid_digraph(1, 0); }));
    }

    TEST_CASE("formulas and circuits") {
        const auto f = gen_qbf(4, 5, 1);
        CHECK_NOTHROW(validate_formula(f));
        CHECK(f.clauses.size() == 5);
        for (std::uint32_t i = 0; i < 4; ++i) CHECK(f.prefix[i].second == i + 1);
        CHECK(gen_qbf(4, 5, 1) == f);
        const auto c = gen_circuit(3, 6, 2);
        CHECK(c.inputs.front().name == "x1");
        CHECK(c.gates.front().name == "g1");
        CHECK(c.output == "g6");
        CHECK_NOTHROW(topological_gate_order(c));
        CHECK(gen_circuit(3, 6, 2) == c);
    }

    TEST_CASE("ray levels") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto level = gen_ray_level({}, seed);
            CHECK_NOTHROW(ray::validate(level));
            for (std::uint32_t x = 0; x < level.width; ++x) {
                CHECK(level.at({int(x), 0}).kind == ray::Kind::Opaque);
                CHECK(level.at({int(x), int(level.height) - 1}).kind == ray::Kind::Opaque);
            }
        }
        CHECK(gen_ray_level({}, 5) == gen_ray_level({}, 5));
    }
}
