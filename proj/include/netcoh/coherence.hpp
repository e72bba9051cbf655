#pragma once

#include <cstdint>
#include <string>

#include "netcoh/graph.hpp"

#include "json.hpp"

namespace netcoh {

/// Per-graph record of size, distance, coherence, and bounds.
/// Field order is the serialization order.
struct CoherenceReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    double rho = 0.0;               // average degree 2M/N
    double mu = 0.0;                // average path length
    double h_fo = 0.0;              // first-order coherence
    double lower_asymptotic = 0.0;  // 1/(2 rho); valid only for large N
    double lower_exact = 0.0;       // N/(4M) - 1/(2M) + 1/(4MN)
    double upper = 0.0;             // (N-1)/(4N) * mu

    nlohmann::ordered_json to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

/// H_FO = tr(L+)/(2N), the mean steady-state deviation variance of the
/// noisy consensus dynamics. Uses the eigenvalue route up to
/// `dense_route_limit` vertices and the deflated-solve route above it.
/// Throws GraphError on disconnected input or N < 2.
double first_order_coherence(const Graph& g);

/// Route selection threshold for first_order_coherence.
inline constexpr VertexId dense_route_limit = 2048;

struct LowerBounds {
    double exact = 0.0;       // N/(4M) - 1/(2M) + 1/(4MN); tight iff complete graph
    double asymptotic = 0.0;  // 1/(2 rho) = N/(4M); valid as N -> inf
};

/// Coherence lower bounds from vertex and edge counts alone.
/// Throws std::invalid_argument when m < n - 1 (no connected graph exists).
LowerBounds coherence_lower_bound(std::int64_t n, std::int64_t m);

/// (N-1)/(4N) * mu; tight iff g is a tree.
double coherence_upper_bound(const Graph& g);

/// Full report; caller is expected to pass a connected graph (apply
/// largest_connected_component first).
CoherenceReport analyze(const Graph& g);

}  // namespace netcoh
