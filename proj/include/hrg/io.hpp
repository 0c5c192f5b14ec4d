#pragma once

#include <hrg/graph.hpp>
#include <hrg/sampling.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrg {

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File contents are malformed or disagree with each other. `line` is
/// 1-based, 0 when the problem is not tied to a line.
class DataError : public std::runtime_error {
public:
    DataError(const std::string& what, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// %.17g, enough digits for an exact double round trip.
std::string format_double(double x);

/*
 * Coordinate file:
 *   # hrg v1 n=<n> alpha=<a> C=<c> R=<r> seed=<s> mode=<fixed|poisson>
 *   <id>\t<r>\t<phi>
 * one line per node, ids 0..N-1 in sampling order.
 */
void write_coordinates(std::ostream& out, const PointSet& points);
PointSet read_coordinates(std::istream& in);

/// One "<u>\t<v>" line per edge, u < v, lexicographically sorted, no header.
void write_edges(std::ostream& out, const Graph& g);
/// Ids must be < node_count and u != v; either orientation is accepted.
std::vector<Edge> read_edges(std::istream& in, std::size_t node_count);

void save_coordinates(const std::filesystem::path& path, const PointSet& points);
PointSet load_coordinates(const std::filesystem::path& path);
void save_edges(const std::filesystem::path& path, const Graph& g);
std::vector<Edge> load_edges(const std::filesystem::path& path, std::size_t node_count);

/// Reads both files and rebuilds the graph they describe.
Graph load_graph(const std::filesystem::path& coords, const std::filesystem::path& edges);

}  // namespace hrg
