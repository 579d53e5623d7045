#include "hardgame/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hardgame/formats.hpp"
#include "hardgame/generators.hpp"
#include "hardgame/oracle.hpp"
#include "hardgame/raysim.hpp"
#include "hardgame/reducer.hpp"
#include "hardgame/solver.hpp"

namespace hardgame {

namespace {

namespace fs = std::filesystem;

// Input problems: bad files, bad syntax, bad parameters. Exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

std::size_t default_budget() {
    const char* env = std::getenv("HARDGAME_BUDGET");
    if (!env) return kDefaultStateBudget;
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw UsageError("HARDGAME_BUDGET must be a positive integer");
    return value;
}

const std::vector<std::string> kMetas = {"1",    "1b-a", "1b-b", "1b-c", "1c-a", "1c-b", "1c-c",
                                         "2a",   "2b",   "2c",   "3a",   "3b",   "3c"};

Variant variant_of(const std::string& meta) {
    switch (meta.back()) {
        case 'a': return Variant::A;
        case 'b': return Variant::B;
        default: return Variant::C;
    }
}

// Source instance as read from a file, with the parser chosen by the meta.
Instance read_instance(const std::string& meta, const std::string& text) {
    if (meta == "1" || meta.starts_with("1b") || meta == "3b") return parse_ugraph(text);
    if (meta.starts_with("1c") || meta == "2b") return parse_dgraph(text);
    if (meta == "2a" || meta == "3a") return parse_circuit(text);
    return parse_qbf(text);
}

struct ReduceOptions {
    std::uint32_t vertex = 0;  // 0-based
    bool require_exit = true;
};

LevelBundle build_bundle(const std::string& meta, const Instance& source, const ReduceOptions& opts) {
    if (meta == "1") return reduce_meta1(std::get<UGraph>(source), opts.vertex, opts.require_exit);
    if (meta.starts_with("1b")) return reduce_meta1b(std::get<UGraph>(source), opts.vertex, variant_of(meta));
    if (meta.starts_with("1c")) return reduce_meta1c(std::get<DGraph>(source), variant_of(meta));
    if (meta == "2a") return reduce_circuit_value(std::get<MonotoneCircuit>(source), Actuator::Plate);
    if (meta == "3a") return reduce_circuit_value(std::get<MonotoneCircuit>(source), Actuator::Button1);
    if (meta == "2b") return reduce_meta2b(std::get<DGraph>(source));
    if (meta == "3b") return reduce_meta3b(std::get<UGraph>(source), opts.vertex);
    if (meta == "2c") return reduce_tqbf(std::get<QuantifiedFormula>(source), Actuator::Plate);
    return reduce_tqbf(std::get<QuantifiedFormula>(source), Actuator::Button3);
}

oracle::Answer ask_oracle(const Instance& source) {
    return std::visit(
        [](const auto& x) -> oracle::Answer {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, UGraph> || std::is_same_v<T, DGraph>)
                return oracle::ham_cycle(x);
            else if constexpr (std::is_same_v<T, QuantifiedFormula>)
                return oracle::eval_qbf(x);
            else
                return oracle::eval_circuit(x);
        },
        source);
}

std::string describe(const CheckResult& r, std::size_t moves) {
    switch (r.status) {
        case CheckResult::Status::Won: return "won\n";
        case CheckResult::Status::IllegalMove:
            return fmt::format("failed at step {}: {}\n", r.step, to_string(*r.reason));
        case CheckResult::Status::NotWon: break;
    }
    return fmt::format("not won after {} moves\n", moves);
}

std::string point(ray::Point p) { return fmt::format("({},{})", p.x, p.y); }

struct Cli {
    CLI::App app{"Reductions, solvers and checkers for graph games with doors, keys and tokens", "hardgame"};

    std::string meta, in, out_path, witness, corpus;
    std::uint32_t vertex = 1;
    bool no_exit = false;

    std::string level_path, cert_path;
    std::optional<std::size_t> budget;
    bool stats = false, monotone = false;

    std::string oracle_kind, oracle_file;
    bool directed = false;
    std::uint32_t s = 1, t = 1;

    std::string ray_level;
    int rx = 0, ry = 0, rdir = 0, rphase = 0;
    ray::RayBounds bounds;

    std::uint64_t seed = 0;
    std::uint32_t n = 4, n_half = 2, vars = 2, clauses = 2, inputs = 3, gates = 4;
    RayGenParams ray_params;

    CLI::App* reduce = nullptr;
    CLI::App* solve = nullptr;
    CLI::App* check = nullptr;
    CLI::App* oracle = nullptr;
    CLI::App* ray = nullptr;
    CLI::App* ray_trace = nullptr;
    CLI::App* ray_solve = nullptr;
    CLI::App* ray_brute = nullptr;
    CLI::App* ray_reduce = nullptr;
    CLI::App* gen = nullptr;
    CLI::App* gen_cubic = nullptr;
    CLI::App* gen_dvd = nullptr;
    CLI::App* gen_qbf = nullptr;
    CLI::App* gen_circuit = nullptr;
    CLI::App* gen_ray = nullptr;
    CLI::App* verify = nullptr;

    Cli() {
        app.require_subcommand(1);

        reduce = app.add_subcommand("reduce", "Compile a source instance into a level");
        reduce->add_option("--meta", meta, "Reduction")->required()->check(CLI::IsMember(kMetas));
        reduce->add_option("--in", in, "Source instance file")->required();
        reduce->add_option("--out", out_path, "Level file (JSON)")->required();
        reduce->add_option("--witness", witness, "Also write the canonical winning certificate");
        reduce->add_option("--vertex", vertex, "Distinguished vertex, 1-based (graph reductions)")
            ->check(CLI::PositiveNumber);
        reduce->add_flag("--no-exit", no_exit, "Do not require ending on the exit (reduction 1)");

        solve = app.add_subcommand("solve", "Decide a level by exhaustive search");
        solve->add_option("level", level_path, "Level file")->required();
        solve->add_option("--budget", budget, "State budget")->check(CLI::PositiveNumber);
        solve->add_flag("--stats", stats, "Print the minimum witness length and marked-edge count");
        solve->add_flag("--monotone", monotone, "Use the fixpoint solver for open-only levels");
        solve->add_option("--witness", witness, "Write the minimum witness");

        check = app.add_subcommand("check", "Replay a certificate on a level");
        check->add_option("level", level_path, "Level file")->required();
        check->add_option("cert", cert_path, "Certificate file")->required();

        oracle = app.add_subcommand("oracle", "Answer a source instance by brute force");
        oracle->add_option("kind", oracle_kind, "Problem")->required()->check(
            CLI::IsMember({"ham", "qbf", "circuit", "conn"}));
        oracle->add_option("file", oracle_file, "Instance file")->required();
        oracle->add_flag("--directed", directed, "Directed graph input (ham, conn)");
        oracle->add_option("--s", s, "Source vertex, 1-based (conn)")->check(CLI::PositiveNumber);
        oracle->add_option("--t", t, "Target vertex, 1-based (conn)")->check(CLI::PositiveNumber);

        ray = app.add_subcommand("ray", "Grid laser levels");
        ray->require_subcommand(1);
        ray_trace = ray->add_subcommand("trace", "Trace one ray");
        ray_trace->add_option("level", ray_level, "Ray level file")->required();
        ray_trace->add_option("--x", rx, "Origin column")->required();
        ray_trace->add_option("--y", ry, "Origin row")->required();
        ray_trace->add_option("--dir", rdir, "Direction 0..15")->required()->check(CLI::Range(0, 15));
        ray_trace->add_option("--phase", rphase, "Phase 0..7")->check(CLI::Range(0, 7));
        ray_solve = ray->add_subcommand("solve", "Decide a level with the chained reachability graphs");
        ray_solve->add_option("level", ray_level, "Ray level file")->required();
        ray_brute = ray->add_subcommand("brute", "Decide a level by exhaustive configuration search");
        ray_brute->add_option("level", ray_level, "Ray level file")->required();
        ray_brute->add_option("--max-mirrors", bounds.max_mirrors, "Mirror bound")->check(CLI::PositiveNumber);
        ray_brute->add_option("--max-polarizators", bounds.max_polarizators, "Polarizator bound")
            ->check(CLI::PositiveNumber);
        ray_brute->add_flag("--orientable", bounds.orientable_polarizators, "Static polarizators are player-set");
        ray_reduce = ray->add_subcommand("reduce", "Compile a directed s-t connectivity instance");
        ray_reduce->add_option("--in", in, "Directed graph file")->required();
        ray_reduce->add_option("--out", out_path, "Ray level file")->required();
        ray_reduce->add_option("--s", s, "Source vertex, 1-based")->required()->check(CLI::PositiveNumber);
        ray_reduce->add_option("--t", t, "Target vertex, 1-based")->required()->check(CLI::PositiveNumber);

        gen = app.add_subcommand("gen", "Generate a seeded random instance");
        gen->require_subcommand(1);
        gen_cubic = gen->add_subcommand("cubic", "Connected simple cubic graph");
        gen_cubic->add_option("--n", n, "Vertex count (even, >= 4)")->required();
        gen_dvd = gen->add_subcommand("dvd", "Degree-valid digraph");
        gen_dvd->add_option("--n-half", n_half, "Vertices of each degree type")->required();
        gen_qbf = gen->add_subcommand("qbf", "Quantified 3-CNF formula");
        gen_qbf->add_option("--vars", vars, "Variable count");
        gen_qbf->add_option("--clauses", clauses, "Clause count");
        gen_circuit = gen->add_subcommand("circuit", "Monotone circuit");
        gen_circuit->add_option("--inputs", inputs, "Input count");
        gen_circuit->add_option("--gates", gates, "Gate count");
        gen_ray = gen->add_subcommand("ray", "Ray level");
        gen_ray->add_option("--width", ray_params.width, "Width");
        gen_ray->add_option("--height", ray_params.height, "Height");
        for (auto* sub : {gen_cubic, gen_dvd, gen_qbf, gen_circuit, gen_ray}) {
            sub->add_option("--seed", seed, "PRNG seed");
            sub->add_option("--out", out_path, "Output file (default: standard output)");
        }

        verify = app.add_subcommand("verify", "Compare solver and oracle verdicts over a corpus");
        verify->add_option("--meta", meta, "Reduction")->required()->check(CLI::IsMember(kMetas));
        verify->add_option("--corpus", corpus, "Directory of instance files")->required();
        verify->add_option("--budget", budget, "State budget")->check(CLI::PositiveNumber);
        verify->add_option("--vertex", vertex, "Distinguished vertex, 1-based")->check(CLI::PositiveNumber);
        verify->add_flag("--no-exit", no_exit, "Do not require ending on the exit (reduction 1)");
    }

    std::size_t state_budget() const { return budget ? *budget : default_budget(); }

    int run(std::ostream& out) {
        if (reduce->parsed()) return run_reduce(out);
        if (solve->parsed()) return run_solve(out);
        if (check->parsed()) return run_check(out);
        if (oracle->parsed()) return run_oracle(out);
        if (ray->parsed()) return run_ray(out);
        if (gen->parsed()) return run_gen(out);
        return run_verify(out);
    }

    int run_reduce(std::ostream& out) {
        const auto source = read_instance(meta, read_file(in));
        const auto bundle = reduce_bundle(source);
        write_file(out_path, serialize(bundle.level));
        out << fmt::format("{}: {} vertices, {} edges, {} doors\n", bundle.kind, bundle.level.vertices.size(),
                           bundle.level.edges.size(), bundle.level.doors.size());
        if (witness.empty()) return 0;
        const auto answer = ask_oracle(source);
        if (!answer.decision) {
            out << "no witness: the source instance is a no-instance\n";
            return 1;
        }
        write_file(witness, serialize(canonical_witness(bundle, answer)));
        return 0;
    }

    LevelBundle reduce_bundle(const Instance& source) const {
        return build_bundle(meta, source, {vertex - 1, !no_exit});
    }

    int run_solve(std::ostream& out) {
        const auto level = parse_level(read_file(level_path));
        if (monotone) {
            const auto r = solve_monotone(level);
            out << (r.solvable ? "SOLVABLE\n" : "UNSOLVABLE\n");
            out << fmt::format("rounds {}\nsteps {}\n", r.rounds, r.steps);
            return 0;
        }
        const auto verdict = solve_exhaustive(level, state_budget());
        out << to_string(verdict.outcome) << '\n';
        out << fmt::format("states {}\n", verdict.states_explored);
        if (verdict.solvable()) {
            out << fmt::format("length {}\n", verdict.witness.moves.size());
            if (stats && level.marked_edge)
                out << fmt::format("marked {}\n", count_traversals(verdict.witness, *level.marked_edge));
            if (!witness.empty()) write_file(witness, serialize(verdict.witness));
        }
        return 0;
    }

    int run_check(std::ostream& out) {
        const auto level = parse_level(read_file(level_path));
        const auto cert = parse_certificate(read_file(cert_path));
        const auto r = check_certificate(level, cert);
        out << describe(r, cert.moves.size());
        return r.won() ? 0 : 1;
    }

    int run_oracle(std::ostream& out) {
        const auto text = read_file(oracle_file);
        oracle::Answer answer;
        if (oracle_kind == "ham") {
            answer = directed ? oracle::ham_cycle(parse_dgraph(text)) : oracle::ham_cycle(parse_ugraph(text));
        } else if (oracle_kind == "qbf") {
            answer = oracle::eval_qbf(parse_qbf(text));
        } else if (oracle_kind == "circuit") {
            answer = oracle::eval_circuit(parse_circuit(text));
        } else {
            std::uint32_t count = 0;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
            if (directed) {
                auto g = parse_dgraph(text);
                count = g.n;
                edges = std::move(g.arcs);
            } else {
                auto g = parse_ugraph(text);
                count = g.n;
                edges = std::move(g.edges);
            }
            if (s > count || t > count) throw UsageError("--s and --t must name vertices of the graph");
            answer = oracle::connectivity(count, edges, s - 1, t - 1, directed);
        }
        out << format_answer(answer);
        return 0;
    }

    int run_ray(std::ostream& out) {
        if (ray_reduce->parsed()) {
            const auto g = parse_dgraph(read_file(in));
            if (s > g.n || t > g.n) throw UsageError("--s and --t must name vertices of the graph");
            const auto m = ray::reduce_mindbender(g, s - 1, t - 1);
            write_file(out_path, serialize(m.level));
            out << fmt::format("ray level {}x{}\n", m.level.width, m.level.height);
            return 0;
        }
        const auto level = parse_ray_level(read_file(ray_level));
        if (ray_trace->parsed()) {
            const auto r = ray::trace_ray(level, {rx, ry}, rdir, ray::Phase(rphase));
            static constexpr const char* kinds[] = {"terminates", "absorbed", "periodic", "undecided"};
            out << fmt::format("{} at {}\n", kinds[int(r.kind)], point(r.at));
            if (!r.items.empty()) {
                out << "items";
                for (auto i : r.items) out << ' ' << i;
                out << '\n';
            }
            return 0;
        }
        if (ray_solve->parsed()) {
            const auto r = ray::solve_deflektor(level);
            out << (r.solvable ? "SOLVABLE\n" : "UNSOLVABLE\n");
            for (const auto& step : r.plan) {
                out << (step.item ? fmt::format("item {}", *step.item) : std::string("exit"));
                out << fmt::format(" phase {}", int(step.phase));
                for (auto p : step.chain) out << ' ' << point(p);
                out << '\n';
            }
            return 0;
        }
        out << (ray::solve_ray_brute(level, bounds) ? "SOLVABLE\n" : "UNSOLVABLE\n");
        return 0;
    }

    int run_gen(std::ostream& out) {
        std::string text;
        if (gen_cubic->parsed())
            text = serialize(gen_cubic_graph(n, seed));
        else if (gen_dvd->parsed())
            text = serialize(gen_degree_valid_digraph(n_half, seed));
        else if (gen_qbf->parsed())
            text = serialize(hardgame::gen_qbf(vars, clauses, seed));
        else if (gen_circuit->parsed())
            text = serialize(hardgame::gen_circuit(inputs, gates, seed));
        else
            text = serialize(gen_ray_level(ray_params, seed));
        emit(out_path, text, out);
        return 0;
    }

    int run_verify(std::ostream& out) {
        if (!fs::is_directory(corpus)) throw UsageError(corpus + " is not a directory");
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(corpus))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        const auto limit = state_budget();

        std::size_t agree = 0;
        out << fmt::format("{:<24} {:<8} {:<16} {:<8} {}\n", "instance", "oracle", "solver", "witness", "result");
        for (const auto& file : files) {
            std::string oracle_col = "-", solver_col = "-", witness_col = "-";
            bool ok = false;
            try {
                const auto source = read_instance(meta, read_file(file.string()));
                const auto bundle = reduce_bundle(source);
                const auto answer = ask_oracle(source);
                const auto verdict = solve_exhaustive(bundle.level, limit);
                oracle_col = answer.decision ? "yes" : "no";
                solver_col = std::string(to_string(verdict.outcome));
                ok = verdict.outcome != Verdict::Outcome::BudgetExceeded && verdict.solvable() == answer.decision;
                if (answer.decision) {
                    const bool won = check_certificate(bundle.level, canonical_witness(bundle, answer)).won();
                    witness_col = won ? "won" : "lost";
                    ok = ok && won;
                }
            } catch (const std::exception& e) {
                solver_col = "error";
                witness_col = e.what();
            }
            agree += ok;
            out << fmt::format("{:<24} {:<8} {:<16} {:<8} {}\n", file.filename().string(), oracle_col, solver_col,
                               witness_col, ok ? "PASS" : "FAIL");
        }
        out << fmt::format("{}/{} agree\n", agree, files.size());
        return agree == files.size() ? 0 : 1;
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Cli cli;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        cli.app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = cli.app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        return cli.run(out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InvalidLevel& e) {
        err << "error: invalid level: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::bad_variant_access&) {
        err << "error: instance does not match the reduction\n";
    }
    return 2;
}

}  // namespace hardgame
