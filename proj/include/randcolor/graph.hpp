#pragma once

#include "randcolor/exact.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace randcolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
/// with u < v, sorted; the graph is immutable once built.
class Graph {
public:
    Graph() = default;

    /// Validates and canonicalizes. Throws std::invalid_argument on a
    /// self-loop, duplicate edge or endpoint >= n.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const std::uint32_t> degrees() const { return degrees_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> degrees_;
};

/// Degree invariants. sigma2 is the sum of squared degrees (first Zagreb
/// index); wedges counts unordered pairs of adjacent edges.
struct GraphStats {
    std::int64_t n = 0;
    std::int64_t m = 0;
    Integer sigma2;
    Integer wedges;
    std::int64_t max_degree = 0;
};

GraphStats stats(const Graph& g);

/// Sum over edges of d(u) + d(v); equals sigma2 by counting in two ways.
Integer edge_degree_sum(const Graph& g);

/// sigma2 / m^2, exact. Throws std::domain_error when m = 0.
Rational zeta_squared(const Graph& g);
Rational zeta_squared(const GraphStats& s);
double zeta(const Graph& g);

namespace generators {

Graph complete(std::size_t n);
/// Center is vertex 0, leaves 1..n-1.
Graph star(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// d-regular circulant: i ~ i +- 1..d/2, plus the antipodal chord when d is odd.
Graph regular_circulant(std::size_t n, std::size_t d);
/// Creation sequence over {'I','D'}: each letter adds a vertex that is
/// isolated or dominating with respect to the vertices added so far.
Graph threshold(std::string_view creation_sequence);
Graph disjoint_union(std::span<const Graph> parts);

} // namespace generators

/// Error raised by the edge-list reader; carries the 1-based line number.
class EdgeListError : public std::runtime_error {
public:
    enum class Kind { Io, Malformed, EndpointOutOfRange, DuplicateEdge, SelfLoop, CountMismatch };

    EdgeListError(Kind kind, std::size_t line, const std::string& what)
        : std::runtime_error(what), kind_(kind), line_(line)
    {
    }

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

/// Text format: "n m\n" followed by m lines "u v\n".
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);
Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

} // namespace randcolor
