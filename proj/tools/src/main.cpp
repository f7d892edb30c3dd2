#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "maxqp/errors.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

}  // namespace

int main(int argc, char** argv) {
    using namespace maxqp;
    CLI::App app{"maxqp: approximate and exact solvers for max x^T A x over x in {-1,1}^n"};
    app.require_subcommand(1);

    cli::SolveCommand solve;
    std::string instance;
    auto* s = app.add_subcommand("solve", "Solve an instance and print a key=value report");
    s->add_option("instance", instance, "Instance file")->required();
    s->add_option("--algo", solve.options.algo, "Algorithm")
        ->check(CLI::IsMember(cli::kAlgorithms))
        ->capture_default_str();
    s->add_option("--epsilon", solve.options.epsilon, "Accuracy for baker/partition, in (0,1]");
    s->add_option("--oracle", solve.options.oracle, "Exact oracle for the ratio")->check(CLI::IsMember(cli::kOracles));
    s->add_option("--partition", solve.options.partition, "Partition file for --algo partition");
    s->add_option("--decomposition", solve.options.decomposition, "Tree decomposition file for --algo exact-tw");
    s->add_option("--width-cap", solve.options.width_cap, "Largest decomposition width to run DP on")
        ->capture_default_str();
    s->add_option("--seed", solve.options.seed, "Recorded in the report");
    s->add_flag("--emit-assignment", solve.emit_assignment, "Print the assignment after the report");
    s->add_option("--assignment-out", solve.assignment_out, "Write the assignment file here");
    s->add_flag("--timing", solve.options.timing, "Add wall time (millis=) to the report");

    cli::GenCommand gen;
    std::string kind = "sparse-random";
    std::string weights = "pm1";
    std::string config;
    auto* g = app.add_subcommand("gen", "Write a seeded random instance");
    g->add_option("--kind", kind, "grid-spin-glass, sparse-random, d-regular, perfect-matching, "
                                  "clique-plus-matching, maxcut-subdivision, planar-triangulation");
    g->add_option("--rows", gen.spec.rows);
    g->add_option("--cols", gen.spec.cols);
    g->add_option("--n", gen.spec.n);
    g->add_option("--m", gen.spec.m);
    g->add_option("--degree", gen.spec.degree);
    g->add_flag("--diagonals", gen.spec.diagonals, "Grid: add one diagonal per cell");
    g->add_option("--weights", weights, "positive, pm1 or real")->capture_default_str();
    g->add_option("--seed", gen.spec.seed);
    g->add_option("--config", config, "key=value recipe as written in instance comments (overrides flags)");
    g->add_option("--out", gen.out, "Output file (default stdout)");

    std::string eval_instance;
    std::string eval_assignment;
    auto* e = app.add_subcommand("eval", "Print the value of an assignment");
    e->add_option("instance", eval_instance)->required();
    e->add_option("assignment", eval_assignment)->required();

    std::string stats_instance;
    auto* st = app.add_subcommand("stats", "Print size, degree, degeneracy and density");
    st->add_option("instance", stats_instance)->required();

    cli::BenchCommand bench;
    auto* b = app.add_subcommand("bench", "Run a suite of (generator x algorithm) cells and write CSV");
    b->add_option("suite", bench.suite, "Suite file")->required();
    b->add_option("--out", bench.out, "CSV file (default stdout)");
    b->add_option("--threads", bench.threads, "Worker threads")->capture_default_str();
    b->add_flag("--timing", bench.timing, "Fill the millis column (otherwise 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*s) {
            solve.instance = instance;
            cli::cmd_solve(solve, std::cout);
        } else if (*g) {
            if (!config.empty()) {
                gen.spec = parse_generator_config(config);
            } else {
                gen.spec.kind = parse_generator_kind(kind);
                gen.spec.weights = parse_weight_mode(weights);
            }
            cli::cmd_gen(gen, std::cout);
        } else if (*e) {
            cli::cmd_eval(eval_instance, eval_assignment, std::cout);
        } else if (*st) {
            cli::cmd_stats(stats_instance, std::cout);
        } else if (*b) {
            cli::cmd_bench(bench, std::cout);
        }
    } catch (const ValidationError& err) {
        std::cerr << "maxqp: " << err.what() << '\n';
        return kExitValidation;
    } catch (const CapacityError& err) {
        std::cerr << "maxqp: " << err.what() << '\n';
        return kExitCapacity;
    } catch (const IoError& err) {
        std::cerr << "maxqp: " << err.what() << '\n';
        return kExitIo;
    } catch (const std::exception& err) {
        std::cerr << "maxqp: internal error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
