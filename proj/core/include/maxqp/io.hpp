#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxqp/assignment.hpp"
#include "maxqp/generate.hpp"
#include "maxqp/graph.hpp"
#include "maxqp/schemes.hpp"
#include "maxqp/treewidth.hpp"

namespace maxqp {

/// Instance file (UTF-8 text):
///
///     # comment
///     # gen kind=grid-spin-glass rows=4 cols=4 weights=pm1 seed=1
///     p maxqp <n> <m>
///     e <u> <v> <w>        (m lines, 1-based ids, w a decimal literal)
///
/// Entries are merged by load_graph. A "# gen ..." comment, if present, records
/// the generator recipe.
struct Instance {
    WeightedGraph graph;
    std::optional<GeneratorSpec> generator;
};

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::filesystem::path& path);
void write_instance(std::ostream& out, const WeightedGraph& g, const std::optional<GeneratorSpec>& generator = {});
void write_instance_file(const std::filesystem::path& path, const WeightedGraph& g,
                         const std::optional<GeneratorSpec>& generator = {});

/// Shortest decimal literal that parses back to exactly `w`; unit weights print as "1"/"-1".
std::string format_number(double w);

/// Assignment file: one line of n space-separated "+1"/"-1" tokens.
std::vector<Spin> read_assignment(std::istream& in, std::size_t n);
std::vector<Spin> read_assignment_file(const std::filesystem::path& path, std::size_t n);
void write_assignment(std::ostream& out, std::span<const Spin> x);

/// Partition file: line i lists the 1-based ids of V_{i-1}; an empty line is an empty part.
VertexPartition read_partition(std::istream& in, std::size_t n);
VertexPartition read_partition_file(const std::filesystem::path& path, std::size_t n);
void write_partition(std::ostream& out, const VertexPartition& p);

/// Decomposition file: "b <bag-id> <v...>" lines and "t <parent-id> <child-id>" lines.
/// The root is the one bag that is nobody's child.
TreeDecomposition read_decomposition(std::istream& in, std::size_t n);
TreeDecomposition read_decomposition_file(const std::filesystem::path& path, std::size_t n);
void write_decomposition(std::ostream& out, const TreeDecomposition& td);

}  // namespace maxqp
