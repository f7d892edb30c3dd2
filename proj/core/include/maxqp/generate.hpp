#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "maxqp/graph.hpp"

namespace maxqp {

/// SplitMix64: the fixed, portable generator behind every seeded instance, so a
/// (spec, seed) pair reproduces the same instance on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do r = next();
        while (r >= limit);
        return r % bound;
    }

    /// Uniform in [0, 1) with 53 bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() noexcept { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

enum class GeneratorKind {
    grid_spin_glass,
    sparse_random,
    d_regular,
    perfect_matching,
    clique_plus_matching,
    maxcut_subdivision,
    planar_triangulation,
};

enum class WeightMode {
    positive,        // every weight +1
    plus_minus_one,  // i.i.d. uniform +-1
    real,            // uniform magnitude in (0, 1], random sign
};

/// Instance recipe. Unused fields are ignored by kinds that do not need them.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::sparse_random;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t degree = 0;
    bool diagonals = false;  // grid: add one random diagonal per cell (stays planar)
    WeightMode weights = WeightMode::plus_minus_one;
    std::uint64_t seed = 0;
};

std::string_view to_string(GeneratorKind kind);
std::string_view to_string(WeightMode mode);
GeneratorKind parse_generator_kind(std::string_view text);
WeightMode parse_weight_mode(std::string_view text);

/// Builds the instance. Identical specs give identical graphs. Throws
/// ValidationError on infeasible parameters (odd n*d, m above n(n-1)/2, ...).
///
///   grid-spin-glass       rows x cols grid, optional diagonals
///   sparse-random         m distinct pairs sampled without replacement
///   d-regular             configuration model, restarted on collisions
///   perfect-matching      n/2 disjoint edges
///   clique-plus-matching  K_floor(sqrt n) plus a perfect matching on the rest
///   maxcut-subdivision    sparse-random (n, m) passed through subdivide_for_maxcut
///   planar-triangulation  stacked triangulation on n vertices
WeightedGraph generate(const GeneratorSpec& spec);

/// "kind=grid-spin-glass rows=4 cols=4 weights=pm1 seed=1"; the same key=value
/// form is accepted by parse_generator_config and written into instance comments.
std::string to_config_line(const GeneratorSpec& spec);

/// Parses whitespace-separated key=value tokens. Unknown keys are rejected.
GeneratorSpec parse_generator_config(std::string_view line);

}  // namespace maxqp
