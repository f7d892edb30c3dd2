#include "maxqp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "maxqp/errors.hpp"

namespace maxqp {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
    T value{};
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;  // from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || first == token.data() + token.size()) {
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

Vertex parse_vertex(std::string_view token, std::size_t line, std::size_t n) {
    const long long id = parse_number<long long>(token, line, "vertex id");
    if (id < 1 || static_cast<std::size_t>(id) > n) {
        throw ParseError(line, "vertex id " + std::string(token) + " out of range [1, " + std::to_string(n) + "]");
    }
    return static_cast<Vertex>(id - 1);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

}  // namespace

std::string format_number(double w) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
    return std::string(buf, ptr);
}

Instance read_instance(std::istream& in) {
    Instance inst;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Entry> entries;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = split(line);
        if (tokens.empty()) continue;
        if (tokens[0].front() == '#') {
            const auto gen = line.find("gen ");
            if (tokens[0] == "#" && tokens.size() > 1 && tokens[1] == "gen" && gen != std::string::npos) {
                try {
                    inst.generator = parse_generator_config(std::string_view(line).substr(gen + 4));
                } catch (const ValidationError& e) {
                    throw ParseError(lineno, e.what());
                }
            }
            continue;
        }
        if (tokens[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "maxqp") throw ParseError(lineno, "expected 'p maxqp <n> <m>'");
            n = parse_number<std::size_t>(tokens[2], lineno, "vertex count");
            m = parse_number<std::size_t>(tokens[3], lineno, "edge count");
            have_header = true;
            entries.reserve(m);
            continue;
        }
        if (tokens[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge before 'p maxqp' header");
            if (tokens.size() != 4) throw ParseError(lineno, "expected 'e <u> <v> <w>'");
            if (entries.size() == m) throw ParseError(lineno, "more edge lines than the header's m=" + std::to_string(m));
            Entry e;
            e.u = parse_vertex(tokens[1], lineno, n);
            e.v = parse_vertex(tokens[2], lineno, n);
            e.w = parse_number<double>(tokens[3], lineno, "weight");
            e.line = lineno;
            entries.push_back(e);
            continue;
        }
        throw ParseError(lineno, "unrecognised line '" + line + "'");
    }
    if (!have_header) throw ParseError(lineno + 1, "missing 'p maxqp <n> <m>' header");
    if (entries.size() != m) {
        throw ParseError(lineno + 1, "header declares m=" + std::to_string(m) + " but " + std::to_string(entries.size()) +
                                         " edge lines follow");
    }
    inst.graph = load_graph(n, entries);
    return inst;
}

Instance read_instance_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const WeightedGraph& g, const std::optional<GeneratorSpec>& generator) {
    if (generator) out << "# gen " << to_config_line(*generator) << '\n';
    out << "p maxqp " << g.n() << ' ' << g.m() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << format_number(e.w) << '\n';
}

void write_instance_file(const std::filesystem::path& path, const WeightedGraph& g,
                         const std::optional<GeneratorSpec>& generator) {
    auto out = open_output(path);
    write_instance(out, g, generator);
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::vector<Spin> read_assignment(std::istream& in, std::size_t n) {
    std::vector<Spin> x;
    x.reserve(n);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (auto token : split(line)) {
            if (token == "+1" || token == "1") x.push_back(1);
            else if (token == "-1") x.push_back(-1);
            else throw ParseError(lineno, "assignment token '" + std::string(token) + "' is not +1/-1");
        }
    }
    if (x.size() != n) {
        throw ValidationError("assignment has " + std::to_string(x.size()) + " entries, instance has " +
                              std::to_string(n) + " vertices");
    }
    return x;
}

std::vector<Spin> read_assignment_file(const std::filesystem::path& path, std::size_t n) {
    auto in = open_input(path);
    return read_assignment(in, n);
}

void write_assignment(std::ostream& out, std::span<const Spin> x) {
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << (x[i] > 0 ? "+1" : "-1");
    out << '\n';
}

VertexPartition read_partition(std::istream& in, std::size_t n) {
    std::vector<std::vector<Vertex>> parts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = split(line);
        if (!tokens.empty() && tokens[0].front() == '#') continue;
        auto& part = parts.emplace_back();
        for (auto token : tokens) part.push_back(parse_vertex(token, lineno, n));
    }
    return load_partition(n, std::move(parts));
}

VertexPartition read_partition_file(const std::filesystem::path& path, std::size_t n) {
    auto in = open_input(path);
    return read_partition(in, n);
}

void write_partition(std::ostream& out, const VertexPartition& p) {
    for (const auto& part : p.parts) {
        for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i] + 1;
        out << '\n';
    }
}

TreeDecomposition read_decomposition(std::istream& in, std::size_t n) {
    TreeDecomposition td;
    std::map<long long, int> index_of;
    std::vector<std::pair<long long, long long>> links;
    std::vector<std::size_t> link_lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = split(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens[0] == "b") {
            if (tokens.size() < 2) throw ParseError(lineno, "expected 'b <bag-id> <v...>'");
            const auto id = parse_number<long long>(tokens[1], lineno, "bag id");
            if (!index_of.emplace(id, static_cast<int>(td.bags.size())).second) {
                throw ParseError(lineno, "duplicate bag id " + std::string(tokens[1]));
            }
            auto& bag = td.bags.emplace_back();
            for (std::size_t i = 2; i < tokens.size(); ++i) bag.push_back(parse_vertex(tokens[i], lineno, n));
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) throw ParseError(lineno, "vertex repeated in bag");
        } else if (tokens[0] == "t") {
            if (tokens.size() != 3) throw ParseError(lineno, "expected 't <parent> <child>'");
            links.emplace_back(parse_number<long long>(tokens[1], lineno, "bag id"),
                               parse_number<long long>(tokens[2], lineno, "bag id"));
            link_lines.push_back(lineno);
        } else {
            throw ParseError(lineno, "unrecognised line '" + line + "'");
        }
    }
    td.parent.assign(td.bags.size(), -1);
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto p = index_of.find(links[i].first);
        const auto c = index_of.find(links[i].second);
        if (p == index_of.end() || c == index_of.end()) throw ParseError(link_lines[i], "link names an unknown bag");
        if (td.parent[c->second] != -1) throw ParseError(link_lines[i], "bag has two parents");
        td.parent[c->second] = p->second;
    }
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        if (td.parent[i] != -1) continue;
        if (td.root != -1) throw ValidationError("decomposition: more than one root bag");
        td.root = static_cast<int>(i);
    }
    return td;
}

TreeDecomposition read_decomposition_file(const std::filesystem::path& path, std::size_t n) {
    auto in = open_input(path);
    return read_decomposition(in, n);
}

void write_decomposition(std::ostream& out, const TreeDecomposition& td) {
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (std::size_t i = 0; i < td.parent.size(); ++i) {
        if (td.parent[i] != -1) out << "t " << td.parent[i] + 1 << ' ' << i + 1 << '\n';
    }
}

}  // namespace maxqp
