#include "maxqp/generate.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <utility>
#include <vector>

#include "maxqp/errors.hpp"
#include "maxqp/oracle.hpp"

namespace maxqp {

namespace {

double draw_weight(SplitMix64& rng, WeightMode mode) {
    switch (mode) {
        case WeightMode::positive: return 1.0;
        case WeightMode::plus_minus_one: return rng.coin() ? 1.0 : -1.0;
        case WeightMode::real: {
            const double magnitude = 1.0 - rng.uniform();  // (0, 1]
            return rng.coin() ? magnitude : -magnitude;
        }
    }
    return 1.0;
}

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

WeightedGraph grid(const GeneratorSpec& s, SplitMix64& rng) {
    if (s.rows == 0 || s.cols == 0) throw ValidationError("grid-spin-glass needs rows >= 1 and cols >= 1");
    const std::size_t n = s.rows * s.cols;
    auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * s.cols + c); };
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < s.rows; ++r) {
        for (std::size_t c = 0; c < s.cols; ++c) {
            if (c + 1 < s.cols) edges.push_back({id(r, c), id(r, c + 1), draw_weight(rng, s.weights)});
            if (r + 1 < s.rows) edges.push_back({id(r, c), id(r + 1, c), draw_weight(rng, s.weights)});
            if (s.diagonals && r + 1 < s.rows && c + 1 < s.cols) {
                if (rng.coin()) edges.push_back({id(r, c), id(r + 1, c + 1), draw_weight(rng, s.weights)});
                else edges.push_back({id(r, c + 1), id(r + 1, c), draw_weight(rng, s.weights)});
            }
        }
    }
    return WeightedGraph(n, std::move(edges));
}

std::vector<std::pair<Vertex, Vertex>> random_pairs(std::size_t n, std::size_t m, SplitMix64& rng) {
    const std::size_t max_pairs = n < 2 ? 0 : n * (n - 1) / 2;
    if (m > max_pairs) {
        throw ValidationError("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
    }
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m);
    if (2 * m > max_pairs) {
        // Dense request: partial Fisher-Yates over all pairs.
        std::vector<std::pair<Vertex, Vertex>> all;
        all.reserve(max_pairs);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) all.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        for (std::size_t i = 0; i < m; ++i) {
            std::swap(all[i], all[i + rng.below(all.size() - i)]);
            out.push_back(all[i]);
        }
        return out;
    }
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(2 * m);
    while (out.size() < m) {
        const auto u = static_cast<Vertex>(rng.below(n));
        const auto v = static_cast<Vertex>(rng.below(n));
        if (u == v || !taken.insert(pair_key(u, v)).second) continue;
        out.emplace_back(std::min(u, v), std::max(u, v));
    }
    return out;
}

WeightedGraph sparse_random(const GeneratorSpec& s, SplitMix64& rng) {
    const auto pairs = random_pairs(s.n, s.m, rng);
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, draw_weight(rng, s.weights)});
    return WeightedGraph(s.n, std::move(edges));
}

WeightedGraph d_regular(const GeneratorSpec& s, SplitMix64& rng) {
    const std::size_t n = s.n;
    const std::size_t d = s.degree;
    if ((n * d) % 2 != 0) throw ValidationError("d-regular needs n*d even");
    if (d >= n && !(d == 0)) throw ValidationError("d-regular needs d < n");
    constexpr int kRestarts = 1000;
    for (int attempt = 0; attempt < kRestarts; ++attempt) {
        std::vector<Vertex> stubs;
        stubs.reserve(n * d);
        for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), d, static_cast<Vertex>(v));
        std::unordered_set<std::uint64_t> taken;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            // Draw a random stub pair; reject loops and repeats a bounded number of times.
            stuck = true;
            for (int tries = 0; tries < 100; ++tries) {
                const std::size_t i = rng.below(stubs.size());
                const std::size_t j = rng.below(stubs.size());
                const Vertex a = stubs[i];
                const Vertex b = stubs[j];
                if (i == j || a == b || taken.count(pair_key(a, b))) continue;
                taken.insert(pair_key(a, b));
                pairs.emplace_back(std::min(a, b), std::max(a, b));
                const std::size_t hi = std::max(i, j);
                const std::size_t lo = std::min(i, j);
                std::swap(stubs[hi], stubs.back());
                stubs.pop_back();
                std::swap(stubs[lo], stubs.back());
                stubs.pop_back();
                stuck = false;
                break;
            }
        }
        if (stuck) continue;
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [u, v] : pairs) edges.push_back({u, v, draw_weight(rng, s.weights)});
        return WeightedGraph(n, std::move(edges));
    }
    throw ValidationError("d-regular: configuration model failed to produce a simple graph");
}

WeightedGraph perfect_matching(const GeneratorSpec& s, SplitMix64& rng) {
    if (s.n % 2 != 0) throw ValidationError("perfect-matching needs even n");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < s.n; i += 2) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), draw_weight(rng, s.weights)});
    }
    return WeightedGraph(s.n, std::move(edges));
}

WeightedGraph clique_plus_matching(const GeneratorSpec& s, SplitMix64& rng) {
    const auto c = static_cast<std::size_t>(std::sqrt(static_cast<double>(s.n)));
    if ((s.n - c) % 2 != 0) {
        throw ValidationError("clique-plus-matching: n - floor(sqrt(n)) = " + std::to_string(s.n - c) + " is odd");
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < c; ++u) {
        for (std::size_t v = u + 1; v < c; ++v) {
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), draw_weight(rng, s.weights)});
        }
    }
    for (std::size_t i = c; i + 1 < s.n; i += 2) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), draw_weight(rng, s.weights)});
    }
    return WeightedGraph(s.n, std::move(edges));
}

WeightedGraph planar_triangulation(const GeneratorSpec& s, SplitMix64& rng) {
    const std::size_t n = s.n;
    if (n < 3) throw ValidationError("planar-triangulation needs n >= 3");
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};  // inner and outer face
    std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {0, 2}, {1, 2}};
    for (std::size_t v = 3; v < n; ++v) {
        const std::size_t f = rng.below(faces.size());
        const auto [a, b, c] = faces[f];
        const auto nv = static_cast<Vertex>(v);
        pairs.emplace_back(a, nv);
        pairs.emplace_back(b, nv);
        pairs.emplace_back(c, nv);
        faces[f] = {a, b, nv};
        faces.push_back({b, c, nv});
        faces.push_back({a, c, nv});
    }
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, draw_weight(rng, s.weights)});
    return WeightedGraph(n, std::move(edges));
}

std::size_t parse_size(std::string_view key, std::string_view text) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError("generator: bad value '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::grid_spin_glass: return "grid-spin-glass";
        case GeneratorKind::sparse_random: return "sparse-random";
        case GeneratorKind::d_regular: return "d-regular";
        case GeneratorKind::perfect_matching: return "perfect-matching";
        case GeneratorKind::clique_plus_matching: return "clique-plus-matching";
        case GeneratorKind::maxcut_subdivision: return "maxcut-subdivision";
        case GeneratorKind::planar_triangulation: return "planar-triangulation";
    }
    return "?";
}

std::string_view to_string(WeightMode mode) {
    switch (mode) {
        case WeightMode::positive: return "positive";
        case WeightMode::plus_minus_one: return "pm1";
        case WeightMode::real: return "real";
    }
    return "?";
}

GeneratorKind parse_generator_kind(std::string_view text) {
    for (auto kind : {GeneratorKind::grid_spin_glass, GeneratorKind::sparse_random, GeneratorKind::d_regular,
                      GeneratorKind::perfect_matching, GeneratorKind::clique_plus_matching,
                      GeneratorKind::maxcut_subdivision, GeneratorKind::planar_triangulation}) {
        if (to_string(kind) == text) return kind;
    }
    throw ValidationError("unknown generator kind '" + std::string(text) + "'");
}

WeightMode parse_weight_mode(std::string_view text) {
    for (auto mode : {WeightMode::positive, WeightMode::plus_minus_one, WeightMode::real}) {
        if (to_string(mode) == text) return mode;
    }
    throw ValidationError("unknown weight mode '" + std::string(text) + "' (positive, pm1, real)");
}

WeightedGraph generate(const GeneratorSpec& spec) {
    SplitMix64 rng(spec.seed);
    switch (spec.kind) {
        case GeneratorKind::grid_spin_glass: return grid(spec, rng);
        case GeneratorKind::sparse_random: return sparse_random(spec, rng);
        case GeneratorKind::d_regular: return d_regular(spec, rng);
        case GeneratorKind::perfect_matching: return perfect_matching(spec, rng);
        case GeneratorKind::clique_plus_matching: return clique_plus_matching(spec, rng);
        case GeneratorKind::maxcut_subdivision: {
            GeneratorSpec base = spec;
            base.weights = WeightMode::positive;
            return subdivide_for_maxcut(sparse_random(base, rng));
        }
        case GeneratorKind::planar_triangulation: return planar_triangulation(spec, rng);
    }
    throw ValidationError("unknown generator kind");
}

std::string to_config_line(const GeneratorSpec& s) {
    std::ostringstream out;
    out << "kind=" << to_string(s.kind);
    switch (s.kind) {
        case GeneratorKind::grid_spin_glass:
            out << " rows=" << s.rows << " cols=" << s.cols;
            if (s.diagonals) out << " diagonals=1";
            break;
        case GeneratorKind::sparse_random:
        case GeneratorKind::maxcut_subdivision: out << " n=" << s.n << " m=" << s.m; break;
        case GeneratorKind::d_regular: out << " n=" << s.n << " degree=" << s.degree; break;
        case GeneratorKind::perfect_matching:
        case GeneratorKind::clique_plus_matching:
        case GeneratorKind::planar_triangulation: out << " n=" << s.n; break;
    }
    if (s.kind != GeneratorKind::maxcut_subdivision) out << " weights=" << to_string(s.weights);
    out << " seed=" << s.seed;
    return out.str();
}

GeneratorSpec parse_generator_config(std::string_view line) {
    GeneratorSpec spec;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ValidationError("generator: expected key=value, got '" + token + "'");
        const std::string_view key = std::string_view(token).substr(0, eq);
        const std::string_view value = std::string_view(token).substr(eq + 1);
        if (key == "kind") spec.kind = parse_generator_kind(value);
        else if (key == "rows") spec.rows = parse_size(key, value);
        else if (key == "cols") spec.cols = parse_size(key, value);
        else if (key == "n") spec.n = parse_size(key, value);
        else if (key == "m") spec.m = parse_size(key, value);
        else if (key == "degree") spec.degree = parse_size(key, value);
        else if (key == "diagonals") spec.diagonals = parse_size(key, value) != 0;
        else if (key == "weights") spec.weights = parse_weight_mode(value);
        else if (key == "seed") spec.seed = parse_size(key, value);
        else throw ValidationError("generator: unknown key '" + std::string(key) + "'");
    }
    return spec;
}

}  // namespace maxqp
