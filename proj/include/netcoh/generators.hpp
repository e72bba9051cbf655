#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "netcoh/graph.hpp"

namespace netcoh {

/// Identifier of the pseudo-random generator used by the stochastic
/// families, recorded in run manifests.
inline constexpr const char* rng_id = "mt19937_64/splitmix64";

/// Stream derivation for replica/grid seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Generation request echoed into manifests and file headers.
struct GenSpec {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;  // insertion order
    std::uint64_t seed = 0;
    bool stochastic = false;

    std::string describe() const;  // "family(k=v, ...)"
};

/// Preferential-attachment network grown from the complete graph K_8.
/// Each step attaches one new vertex to m distinct existing vertices,
/// chosen degree-proportionally (repeated draws, repeats discarded).
/// Final size n, M = 28 + m (n - 8). Requires 1 <= m <= 8 and n >= 8.
Graph ba_network(VertexId n, int m, std::uint64_t seed);

/// d-dimensional random Apollonian network grown from K_{d+2}. Each step
/// picks an active (d+1)-clique uniformly at random, joins a new vertex to
/// all its members, retires it, and activates the d+1 cliques formed with
/// the new vertex. Requires d >= 2 and n >= d + 2.
Graph hdran(int d, VertexId n, std::uint64_t seed);

/// Deterministic scale-free web F_g: starting from a triangle, every
/// iteration attaches one new vertex to both endpoints of each existing
/// edge. N = (3^{g+1} + 3)/2, M = 3^{g+1}. New vertices are numbered in
/// the scan order of their parent edges (sorted (min, max) pairs), so
/// F_{g-1} is the subgraph induced by the first N_{g-1} ids.
Graph pseudofractal(int g);

/// One growth iteration of the pseudofractal construction.
Graph pseudofractal_step(const Graph& fg);

/// Record of one spawned vertex pair in a 4-clique growth step: the two
/// new vertices and the endpoints of the parent edge they attach to.
struct CliqueSpawn {
    VertexId first = 0;
    VertexId second = 0;
    VertexId parent_u = 0;
    VertexId parent_v = 0;
};

struct Clique4Step {
    Graph graph;
    std::vector<CliqueSpawn> spawned;  // one per parent edge, scan order
};

/// Deterministic 4-clique motif network T_g: starting from K_4, every
/// iteration adds, per existing edge, a new adjacent vertex pair wired to
/// both endpoints (one 4-clique per old edge). N = (2/5)(6^{g+1} + 4),
/// M = 6^{g+1}. Numbering follows the same scan-order convention as
/// pseudofractal().
Graph clique4_motif(int g);

/// One growth iteration of the 4-clique construction, with the spawn map
/// needed by the resistance-evolution recursion.
Clique4Step clique4_step(const Graph& tg);

std::int64_t pseudofractal_vertices(int g);
std::int64_t pseudofractal_edges(int g);
std::int64_t clique4_vertices(int g);
std::int64_t clique4_edges(int g);

// Reference families.
Graph path_graph(VertexId n);
Graph cycle_graph(VertexId n);
Graph star_graph(VertexId n);      // one hub + (n-1) leaves
Graph complete_graph(VertexId n);
Graph ring_lattice(VertexId n, int k);   // k even, 0 < k < n
Graph torus_grid(int d, VertexId side);  // side >= 3, N = side^d

}  // namespace netcoh
