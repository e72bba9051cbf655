#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "netcoh/errors.hpp"

namespace netcoh {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph with contiguous 0-based vertex ids.
///
/// Adjacency is stored in CSR form with sorted neighbor lists. The
/// constructor normalizes its input: self-loops are dropped and duplicate
/// edges (either orientation) collapse to one. Instances are safe to share
/// across threads once constructed.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on vertices 0..n-1 from an arbitrary edge list.
    Graph(VertexId n, std::vector<Edge> edges);

    /// Parses whitespace-delimited "u v" lines. Lines whose first
    /// non-blank character is '%' or '#' are comments; blank lines are
    /// skipped. Original labels are remapped to contiguous 0-based ids in
    /// first-appearance order.
    ///
    /// Throws ParseError on malformed tokens (with line number) and
    /// GraphError when no usable edge remains.
    static Graph from_edge_list(std::istream& in);
    static Graph from_edge_list(const std::string& text);
    static Graph from_edge_list_file(const std::string& path);

    VertexId num_vertices() const noexcept { return n_; }
    std::int64_t num_edges() const noexcept { return m_; }

    VertexId degree(VertexId v) const { return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]); }
    VertexId max_degree() const noexcept;

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    bool has_edge(VertexId u, VertexId v) const;

    /// All edges as (min, max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_connected() const;

private:
    VertexId n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_ = {0};
    std::vector<VertexId> adjacency_;
};

/// Induced subgraph on the largest connected component, relabeled to
/// contiguous ids in ascending original-id order. Ties go to the component
/// containing the smallest original id.
Graph largest_connected_component(const Graph& g);

struct LccExtraction {
    Graph graph;
    std::int64_t dropped_vertices = 0;
};
LccExtraction extract_largest_component(const Graph& g);

/// L = D - A, dense symmetric positive semi-definite.
Eigen::MatrixXd laplacian(const Graph& g);

/// 2M/N.
double average_degree(const Graph& g);

/// Mean shortest-path length over unordered vertex pairs, by BFS from
/// every vertex (parallel over sources). Throws GraphError when g is
/// disconnected or has fewer than two vertices.
double average_path_length(const Graph& g);

/// Histogram degree -> vertex count; counts sum to N.
std::map<VertexId, std::int64_t> degree_distribution(const Graph& g);

/// Single-source BFS hop distances; unreachable vertices get -1.
std::vector<VertexId> bfs_distances(const Graph& g, VertexId source);

/// Writes "u v" lines in lexicographic (min, max) order.
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

}  // namespace netcoh
