#pragma once

#include <random>
#include <vector>

#include "netcoh/graph.hpp"

namespace netcoh::testing {

// Erdos-Renyi G(n, p); may be disconnected.
inline Graph er_graph(VertexId n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Connected ER-style sample: keep the largest component.
inline Graph er_connected(VertexId n, double p, std::mt19937_64& rng) {
    return largest_connected_component(er_graph(n, p, rng));
}

// Uniform random attachment tree on n vertices.
inline Graph random_tree(VertexId n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) {
        std::uniform_int_distribution<VertexId> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Graph(n, std::move(edges));
}

inline double rel_diff(double a, double b) {
    double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace netcoh::testing
