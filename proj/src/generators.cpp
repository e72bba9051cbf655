#include "netcoh/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace netcoh {

namespace {

constexpr std::int64_t capacity_limit = 10'000'000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<Edge> complete_edges(VertexId n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return edges;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

std::string GenSpec::describe() const {
    std::string s = family + "(";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) s += ", ";
        s += k + "=" + v;
        first = false;
    }
    s += ")";
    return s;
}

Graph ba_network(VertexId n, int m, std::uint64_t seed) {
    if (m < 1 || m > 8) throw std::invalid_argument("ba: m must be in 1..8");
    if (n < 8) throw std::invalid_argument("ba: n must be at least 8 (seed graph is K_8)");

    std::vector<Edge> edges = complete_edges(8);
    // Degree-proportional sampling via the repeated-id urn.
    std::vector<VertexId> urn;
    urn.reserve(static_cast<std::size_t>(2) * (28 + static_cast<std::size_t>(m) * (n - 8)));
    for (VertexId v = 0; v < 8; ++v) urn.insert(urn.end(), 7, v);

    std::mt19937_64 rng(splitmix64(seed));
    std::vector<VertexId> targets;
    for (VertexId v = 8; v < n; ++v) {
        targets.clear();
        std::uniform_int_distribution<std::size_t> pick(0, urn.size() - 1);
        while (targets.size() < static_cast<std::size_t>(m)) {
            VertexId candidate = urn[pick(rng)];
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        for (VertexId t : targets) {
            edges.emplace_back(t, v);
            urn.push_back(t);
        }
        urn.insert(urn.end(), static_cast<std::size_t>(m), v);
    }
    return Graph(n, std::move(edges));
}

Graph hdran(int d, VertexId n, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("hdran: d must be at least 2");
    if (n < d + 2) throw std::invalid_argument("hdran: n must be at least d+2");

    const VertexId base = static_cast<VertexId>(d) + 2;
    std::vector<Edge> edges = complete_edges(base);

    // Active (d+1)-cliques, each usable once. Retirement swaps with the
    // back so selection stays O(1); replica determinism only needs a fixed
    // traversal given the seed, not a canonical order.
    std::vector<std::vector<VertexId>> active;
    for (VertexId skip = 0; skip < base; ++skip) {
        std::vector<VertexId> clique;
        for (VertexId v = 0; v < base; ++v)
            if (v != skip) clique.push_back(v);
        active.push_back(std::move(clique));
    }

    std::mt19937_64 rng(splitmix64(seed));
    for (VertexId v = base; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, active.size() - 1);
        std::size_t idx = pick(rng);
        std::vector<VertexId> chosen = std::move(active[idx]);
        if (idx + 1 != active.size()) active[idx] = std::move(active.back());
        active.pop_back();

        for (VertexId u : chosen) edges.emplace_back(u, v);
        for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
            std::vector<VertexId> next;
            next.reserve(chosen.size());
            for (std::size_t i = 0; i < chosen.size(); ++i)
                if (i != skip) next.push_back(chosen[i]);
            next.push_back(v);
            active.push_back(std::move(next));
        }
    }
    return Graph(n, std::move(edges));
}

std::int64_t pseudofractal_vertices(int g) { return (ipow(3, g + 1) + 3) / 2; }
std::int64_t pseudofractal_edges(int g) { return ipow(3, g + 1); }
std::int64_t clique4_vertices(int g) { return 2 * (ipow(6, g + 1) + 4) / 5; }
std::int64_t clique4_edges(int g) { return ipow(6, g + 1); }

Graph pseudofractal_step(const Graph& fg) {
    const VertexId n_old = fg.num_vertices();
    std::vector<Edge> edges = fg.edges();  // (min,max) scan order
    std::vector<Edge> grown = edges;
    VertexId next = n_old;
    for (const auto& [u, v] : edges) {
        grown.emplace_back(u, next);
        grown.emplace_back(v, next);
        ++next;
    }
    return Graph(next, std::move(grown));
}

Graph pseudofractal(int g) {
    if (g < 0) throw std::invalid_argument("pseudofractal: g must be non-negative");
    if (g > 14 || pseudofractal_vertices(g) > capacity_limit)
        throw std::invalid_argument("pseudofractal: requested iteration exceeds capacity");
    Graph f(3, {{0, 1}, {0, 2}, {1, 2}});
    for (int i = 0; i < g; ++i) f = pseudofractal_step(f);
    return f;
}

Clique4Step clique4_step(const Graph& tg) {
    const VertexId n_old = tg.num_vertices();
    std::vector<Edge> edges = tg.edges();
    std::vector<Edge> grown = edges;
    std::vector<CliqueSpawn> spawned;
    spawned.reserve(edges.size());
    VertexId next = n_old;
    for (const auto& [u, v] : edges) {
        VertexId a = next++;
        VertexId b = next++;
        grown.emplace_back(a, b);
        grown.emplace_back(u, a);
        grown.emplace_back(v, a);
        grown.emplace_back(u, b);
        grown.emplace_back(v, b);
        spawned.push_back({a, b, u, v});
    }
    return {Graph(next, std::move(grown)), std::move(spawned)};
}

Graph clique4_motif(int g) {
    if (g < 0) throw std::invalid_argument("clique4: g must be non-negative");
    if (g > 8 || clique4_vertices(g) > capacity_limit)
        throw std::invalid_argument("clique4: requested iteration exceeds capacity");
    Graph t(4, complete_edges(4));
    for (int i = 0; i < g; ++i) t = clique4_step(t).graph;
    return t;
}

Graph path_graph(VertexId n) {
    if (n < 1) throw std::invalid_argument("path: n must be positive");
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(VertexId n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph star_graph(VertexId n) {
    if (n < 2) throw std::invalid_argument("star: n must be at least 2");
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, std::move(edges));
}

Graph complete_graph(VertexId n) {
    if (n < 1) throw std::invalid_argument("complete: n must be positive");
    return Graph(n, complete_edges(n));
}

Graph ring_lattice(VertexId n, int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("ring_lattice: k must be even and >= 2");
    if (k >= n) throw std::invalid_argument("ring_lattice: k must be smaller than n");
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v)
        for (int off = 1; off <= k / 2; ++off)
            edges.emplace_back(v, static_cast<VertexId>((v + off) % n));
    return Graph(n, std::move(edges));
}

Graph torus_grid(int d, VertexId side) {
    if (d < 1) throw std::invalid_argument("torus: dimension must be positive");
    if (side < 3) throw std::invalid_argument("torus: side must be at least 3");
    std::int64_t n = 1;
    for (int i = 0; i < d; ++i) {
        n *= side;
        if (n > capacity_limit) throw std::invalid_argument("torus: size exceeds capacity");
    }
    std::vector<Edge> edges;
    std::int64_t stride = 1;
    for (int dim = 0; dim < d; ++dim) {
        for (std::int64_t v = 0; v < n; ++v) {
            std::int64_t coord = (v / stride) % side;
            std::int64_t next = coord + 1 == side ? v - (side - 1) * stride : v + stride;
            edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(next));
        }
        stride *= side;
    }
    return Graph(static_cast<VertexId>(n), std::move(edges));
}

}  // namespace netcoh
