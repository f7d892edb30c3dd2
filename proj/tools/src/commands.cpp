#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "maxqp/errors.hpp"
#include "maxqp/io.hpp"
#include "maxqp/oracle.hpp"
#include "maxqp/schemes.hpp"

namespace maxqp::cli {

namespace {

using Clock = std::chrono::steady_clock;

ApproxResult exact_result(Assignment a) {
    ApproxResult r;
    r.value = a.value();
    r.assignment = std::move(a);
    return r;
}

double ratio_of(double value, double opt) {
    // opt >= 0 always; an optimum of zero forces value == 0.
    return opt <= kTolerance ? 1.0 : value / opt;
}

std::string_view token_key(std::string_view tok, std::string_view& value) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw ValidationError("expected key=value, got '" + std::string(tok) + "'");
    }
    value = tok.substr(eq + 1);
    return tok.substr(0, eq);
}

double parse_double(std::string_view text, const char* what) {
    try {
        std::size_t used = 0;
        const std::string s(text);
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("bad ") + what + " '" + std::string(text) + "'");
}

void require_known(const std::string& name, const std::vector<std::string>& known, const char* what) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw ValidationError(std::string("unknown ") + what + " '" + name + "'");
    }
}

}  // namespace

std::string format_report(const SolveReport& r) {
    std::ostringstream s;
    s << "value=" << format_number(r.value);
    if (r.width) s << " width=" << *r.width;
    s << " algo=" << r.algo << " instance=" << r.instance;
    s << " guarantee=" << format_number(r.guarantee) << " bound=" << r.guarantee_expr;
    for (const auto& c : r.certificate) s << ' ' << c.name << '=' << format_number(c.value);
    if (r.oracle) s << " oracle=" << format_number(*r.oracle) << " ratio=" << format_number(*r.ratio);
    s << " seed=" << r.seed;
    if (r.millis) s << " millis=" << format_number(*r.millis);
    return s.str();
}

double oracle_value(const WeightedGraph& g, const std::string& oracle, int width_cap) {
    if (oracle == "brute-force") return brute_force(g).value();
    if (oracle == "exact-tw") return solve_treewidth(g, to_nice(build_decomposition(g, width_cap)), width_cap).value();
    throw ValidationError("unknown oracle '" + oracle + "'");
}

SolveReport solve_instance(const WeightedGraph& g, const SolveOptions& opts, const std::string& instance_id) {
    require_known(opts.algo, kAlgorithms, "algorithm");
    if (opts.oracle) require_known(*opts.oracle, kOracles, "oracle");
    if (opts.epsilon && !(*opts.epsilon > 0.0 && *opts.epsilon <= 1.0)) {
        throw ValidationError("epsilon must lie in (0, 1]");
    }
    if (opts.width_cap < 0) throw ValidationError("width cap must be non-negative");

    SolveReport rep;
    rep.instance = instance_id;
    rep.seed = opts.seed;
    const auto start = Clock::now();

    std::string algo = opts.algo;
    std::optional<TreeDecomposition> td;
    if (algo == "auto") {
        try {
            td = build_decomposition(g, opts.width_cap);
            algo = "exact-tw";
        } catch (const CapacityError&) {
            algo = opts.epsilon ? "baker" : "greedy-matching";
        }
    }
    rep.algo = algo;

    auto need_epsilon = [&]() {
        if (!opts.epsilon) throw ValidationError("--algo " + algo + " requires --epsilon");
        return *opts.epsilon;
    };

    ApproxResult r;
    if (algo == "greedy-matching") {
        r = solve_bounded_degree(g);
    } else if (algo == "easypack") {
        r = solve_degenerate(g);
    } else if (algo == "star-pack") {
        r = solve_dense(g);
    } else if (algo == "exact-tw") {
        if (opts.decomposition) {
            td = read_decomposition_file(*opts.decomposition, g.n());
            validate_decomposition(g, *td);
        } else if (!td) {
            td = build_decomposition(g, opts.width_cap);
        }
        const auto ntd = to_nice(*td);
        rep.width = ntd.width();
        r = exact_result(solve_treewidth(g, ntd, opts.width_cap));
    } else if (algo == "baker") {
        r = solve_baker(g, need_epsilon(), opts.width_cap);
    } else if (algo == "partition") {
        const double eps = need_epsilon();
        std::optional<VertexPartition> part;
        if (opts.partition) part = read_partition_file(*opts.partition, g.n());
        r = solve_partition_scheme(g, eps, part, opts.width_cap);
    } else {
        r = exact_result(brute_force(g));
    }
    const auto stop = Clock::now();

    rep.value = r.value;
    rep.guarantee = r.guarantee;
    rep.guarantee_expr = r.guarantee_expr.empty() ? "1" : r.guarantee_expr;
    rep.certificate = std::move(r.certificate);
    rep.assignment = std::move(r.assignment);
    if (opts.oracle) {
        rep.oracle = oracle_value(g, *opts.oracle, opts.width_cap);
        rep.ratio = ratio_of(rep.value, *rep.oracle);
    }
    if (opts.timing) rep.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return rep;
}

void cmd_solve(const SolveCommand& cmd, std::ostream& out) {
    const auto inst = read_instance_file(cmd.instance);
    const auto rep = solve_instance(inst.graph, cmd.options, cmd.instance.filename().string());
    out << format_report(rep) << '\n';
    if (cmd.emit_assignment) write_assignment(out, rep.assignment.spins());
    if (cmd.assignment_out) {
        std::ofstream f(*cmd.assignment_out);
        if (!f) throw IoError("cannot open '" + cmd.assignment_out->string() + "' for writing");
        write_assignment(f, rep.assignment.spins());
    }
}

void cmd_gen(const GenCommand& cmd, std::ostream& out) {
    const auto g = generate(cmd.spec);
    if (cmd.out) {
        write_instance_file(*cmd.out, g, cmd.spec);
    } else {
        write_instance(out, g, cmd.spec);
    }
}

void cmd_eval(const std::filesystem::path& instance, const std::filesystem::path& assignment, std::ostream& out) {
    const auto inst = read_instance_file(instance);
    const auto x = read_assignment_file(assignment, inst.graph.n());
    out << format_number(evaluate(inst.graph, x)) << '\n';
}

void cmd_stats(const std::filesystem::path& instance, std::ostream& out) {
    const auto inst = read_instance_file(instance);
    const auto s = stats(inst.graph);
    out << "n=" << inst.graph.n() << " m=" << inst.graph.m() << " unit=" << (inst.graph.is_unit() ? 1 : 0)
        << " abs_weight=" << format_number(s.abs_weight) << " max_degree=" << s.max_degree
        << " degeneracy=" << s.degeneracy << " density=" << format_number(s.density()) << '\n';
}

std::vector<BenchInstance> parse_suite(std::istream& in) {
    std::vector<BenchInstance> suite;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string tok;
        std::string gen_config;
        BenchInstance bi;
        bool any = false;
        try {
            while (tokens >> tok) {
                if (!any && tok.front() == '#') break;
                any = true;
                std::string_view value;
                const auto key = token_key(tok, value);
                if (key == "name") {
                    bi.name = value;
                } else if (key == "algos") {
                    std::string_view rest = value;
                    while (!rest.empty()) {
                        const auto comma = rest.find(',');
                        std::string algo(rest.substr(0, comma));
                        require_known(algo, kAlgorithms, "algorithm");
                        bi.algos.push_back(std::move(algo));
                        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
                    }
                } else if (key == "oracle") {
                    bi.oracle = value;
                    require_known(*bi.oracle, kOracles, "oracle");
                } else if (key == "epsilon") {
                    bi.epsilon = parse_double(value, "epsilon");
                } else if (key == "width-cap") {
                    bi.width_cap = static_cast<int>(parse_double(value, "width-cap"));
                } else {
                    gen_config += tok + ' ';
                }
            }
            if (!any) continue;
            if (bi.name.empty()) throw ValidationError("missing name=");
            if (bi.algos.empty()) throw ValidationError("missing algos=");
            bi.spec = parse_generator_config(gen_config);
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError& e) {
            throw ParseError(lineno, e.what());
        }
        suite.push_back(std::move(bi));
    }
    for (std::size_t i = 0; i < suite.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (suite[i].name == suite[j].name) throw ValidationError("duplicate suite name '" + suite[i].name + "'");
        }
    }
    return suite;
}

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& suite, unsigned threads, bool timing) {
    struct Cell {
        std::size_t instance;
        std::size_t algo;
    };
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        for (std::size_t a = 0; a < suite[i].algos.size(); ++a) cells.push_back({i, a});
    }
    std::vector<BenchRow> rows(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());

    // Each worker regenerates instances itself; WeightedGraph is immutable, but
    // generation is cheap next to solving and keeps workers independent.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t c; (c = next.fetch_add(1)) < cells.size();) {
            const auto& bi = suite[cells[c].instance];
            try {
                const auto g = generate(bi.spec);
                SolveOptions opts;
                opts.algo = bi.algos[cells[c].algo];
                opts.epsilon = bi.epsilon;
                opts.oracle = bi.oracle;
                opts.width_cap = bi.width_cap;
                opts.seed = bi.spec.seed;
                opts.timing = timing;
                const auto rep = solve_instance(g, opts, bi.name);
                rows[c] = {bi.name, rep.algo, g.n(), g.m(), rep.value, rep.oracle, rep.ratio, rep.guarantee,
                           rep.millis.value_or(0.0)};
                if (opts.algo == "auto") rows[c].algo = "auto:" + rep.algo;
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cells.size()))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return a.instance != b.instance ? a.instance < b.instance : a.algo < b.algo;
    });
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "instance,algo,n,m,value,oracle,ratio,guarantee,millis\n";
    for (const auto& r : rows) {
        out << r.instance << ',' << r.algo << ',' << r.n << ',' << r.m << ',' << format_number(r.value) << ','
            << (r.oracle ? format_number(*r.oracle) : "") << ',' << (r.ratio ? format_number(*r.ratio) : "") << ','
            << format_number(r.guarantee) << ',' << format_number(r.millis) << '\n';
    }
}

void cmd_bench(const BenchCommand& cmd, std::ostream& out) {
    std::ifstream in(cmd.suite);
    if (!in) throw IoError("cannot open '" + cmd.suite.string() + "' for reading");
    const auto rows = run_bench(parse_suite(in), cmd.threads, cmd.timing);
    if (cmd.out) {
        std::ofstream f(*cmd.out);
        if (!f) throw IoError("cannot open '" + cmd.out->string() + "' for writing");
        write_bench_csv(f, rows);
    } else {
        write_bench_csv(out, rows);
    }
}

}  // namespace maxqp::cli
