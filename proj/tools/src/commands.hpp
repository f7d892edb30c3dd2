#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxqp/approx.hpp"
#include "maxqp/generate.hpp"
#include "maxqp/graph.hpp"
#include "maxqp/treewidth.hpp"

namespace maxqp::cli {

inline const std::vector<std::string> kAlgorithms = {"auto", "greedy-matching", "easypack", "star-pack",
                                                     "exact-tw", "baker", "partition", "brute-force"};
inline const std::vector<std::string> kOracles = {"brute-force", "exact-tw"};

struct SolveOptions {
    std::string algo = "auto";
    std::optional<double> epsilon;
    std::optional<std::string> oracle;
    std::optional<std::filesystem::path> partition;
    std::optional<std::filesystem::path> decomposition;
    int width_cap = kDefaultWidthCap;
    std::uint64_t seed = 0;  // echoed only; every solver is deterministic
    bool timing = false;
};

/// One solver run. `algo` is the algorithm actually run (auto resolves to a concrete one).
struct SolveReport {
    std::string instance;
    std::string algo;
    double value = 0.0;
    double guarantee = 1.0;
    std::string guarantee_expr = "1";
    std::vector<CertificateEntry> certificate;
    std::optional<int> width;
    std::optional<double> oracle;
    std::optional<double> ratio;
    std::optional<double> millis;
    std::uint64_t seed = 0;
    Assignment assignment;
};

/// Single key=value line; value and width come first. Timing appears only when measured.
std::string format_report(const SolveReport& r);

SolveReport solve_instance(const WeightedGraph& g, const SolveOptions& opts, const std::string& instance_id);

/// Exact optimum through the named oracle ("brute-force" or "exact-tw").
double oracle_value(const WeightedGraph& g, const std::string& oracle, int width_cap = kDefaultWidthCap);

struct SolveCommand {
    std::filesystem::path instance;
    SolveOptions options;
    bool emit_assignment = false;
    std::optional<std::filesystem::path> assignment_out;
};
void cmd_solve(const SolveCommand& cmd, std::ostream& out);

struct GenCommand {
    GeneratorSpec spec;
    std::optional<std::filesystem::path> out;
};
void cmd_gen(const GenCommand& cmd, std::ostream& out);

void cmd_eval(const std::filesystem::path& instance, const std::filesystem::path& assignment, std::ostream& out);

void cmd_stats(const std::filesystem::path& instance, std::ostream& out);

/// One suite line: a generated instance and the algorithms to run on it.
struct BenchInstance {
    std::string name;
    GeneratorSpec spec;
    std::vector<std::string> algos;
    std::optional<std::string> oracle;
    std::optional<double> epsilon;
    int width_cap = kDefaultWidthCap;
};

/// Suite file: one instance per line, whitespace-separated key=value tokens.
///   name=grid6 kind=grid-spin-glass rows=6 cols=6 weights=pm1 seed=3 algos=baker,exact-tw oracle=exact-tw epsilon=0.5
/// Blank lines and '#' comments are skipped.
std::vector<BenchInstance> parse_suite(std::istream& in);

struct BenchRow {
    std::string instance;
    std::string algo;
    std::size_t n = 0;
    std::size_t m = 0;
    double value = 0.0;
    std::optional<double> oracle;
    std::optional<double> ratio;
    double guarantee = 1.0;
    double millis = 0.0;
};

/// Runs every (instance, algo) cell on `threads` workers. Rows come back sorted by
/// (instance, algo) whatever the thread count. millis stays 0 unless `timing`.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& suite, unsigned threads, bool timing);

/// CSV header instance,algo,n,m,value,oracle,ratio,guarantee,millis then one line per row.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

struct BenchCommand {
    std::filesystem::path suite;
    std::optional<std::filesystem::path> out;
    unsigned threads = 1;
    bool timing = false;
};
void cmd_bench(const BenchCommand& cmd, std::ostream& out);

}  // namespace maxqp::cli
