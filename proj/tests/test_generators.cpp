#include "doctest.h"

#include <algorithm>

#include "netcoh/generators.hpp"
#include "netcoh/graph.hpp"

using namespace netcoh;

namespace {

void check_simple_connected(const Graph& g) {
    std::int64_t degree_sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        degree_sum += g.degree(v);
        auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        CHECK(std::find(nb.begin(), nb.end(), v) == nb.end());
    }
    CHECK(degree_sum == 2 * g.num_edges());
    CHECK(g.is_connected());
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("ba: no growth steps leaves the K8 core") {
    for (int m : {1, 5, 8}) {
        Graph g = ba_network(8, m, 123 + m);
        CHECK(g.num_vertices() == 8);
        CHECK(g.num_edges() == 28);
    }
}

TEST_CASE("ba: one growth step") {
    Graph g = ba_network(9, 2, 7);
    CHECK(g.num_vertices() == 9);
    CHECK(g.num_edges() == 30);
    CHECK(g.degree(8) == 2);
}

TEST_CASE("ba: edge count, degree floor, reproducibility") {
    Graph g = ba_network(1024, 4, 7);
    CHECK(g.num_vertices() == 1024);
    CHECK(g.num_edges() == 28 + 4 * (1024 - 8));
    VertexId min_deg = g.num_vertices();
    for (VertexId v = 0; v < g.num_vertices(); ++v) min_deg = std::min(min_deg, g.degree(v));
    CHECK(min_deg >= 4);
    check_simple_connected(g);

    Graph again = ba_network(1024, 4, 7);
    CHECK(again.edges() == g.edges());
    Graph other = ba_network(1024, 4, 8);
    CHECK(other.edges() != g.edges());
}

TEST_CASE("ba: parameter validation") {
    CHECK_THROWS_AS(ba_network(100, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(ba_network(100, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ba_network(7, 2, 1), std::invalid_argument);
}

TEST_CASE("hdran: base cases and one step") {
    Graph k4 = hdran(2, 4, 5);
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);

    Graph g = hdran(2, 5, 5);
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 9);
    CHECK(g.degree(4) == 3);
}

TEST_CASE("hdran: edge count formula and average degree limit") {
    for (int d : {2, 3}) {
        VertexId n = 2000;
        Graph g = hdran(d, n, 1);
        CHECK(g.num_edges() ==
              static_cast<std::int64_t>(d + 2) * (d + 1) / 2 +
                  static_cast<std::int64_t>(d + 1) * (n - d - 2));
        check_simple_connected(g);
        double rho = average_degree(g);
        CHECK(std::abs(rho - 2.0 * (d + 1)) / (2.0 * (d + 1)) < 0.05);
    }
    Graph a = hdran(3, 500, 99), b = hdran(3, 500, 99);
    CHECK(a.edges() == b.edges());
    CHECK_THROWS_AS(hdran(1, 100, 0), std::invalid_argument);
    CHECK_THROWS_AS(hdran(2, 3, 0), std::invalid_argument);
}

TEST_CASE("pseudofractal: sizes and seed graph") {
    Graph f0 = pseudofractal(0);
    CHECK(f0.num_vertices() == 3);
    CHECK(f0.num_edges() == 3);

    Graph f1 = pseudofractal(1);
    CHECK(f1.num_vertices() == 6);
    CHECK(f1.num_edges() == 9);

    Graph f3 = pseudofractal(3);
    CHECK(f3.num_vertices() == 42);
    CHECK(f3.num_edges() == 81);

    for (int g = 0; g <= 8; ++g) {
        CHECK(pseudofractal_vertices(g) == (static_cast<std::int64_t>(std::pow(3, g + 1)) + 3) / 2);
        CHECK(pseudofractal_edges(g) == static_cast<std::int64_t>(std::pow(3, g + 1)));
    }
    Graph f5 = pseudofractal(5);
    CHECK(f5.num_vertices() == pseudofractal_vertices(5));
    CHECK(f5.num_edges() == pseudofractal_edges(5));
    check_simple_connected(f5);

    CHECK_THROWS_AS(pseudofractal(-1), std::invalid_argument);
    CHECK_THROWS_AS(pseudofractal(15), std::invalid_argument);
}

TEST_CASE("pseudofractal: degree doubling by arrival iteration") {
    // A vertex added at iteration s has degree 2^{g-s+1} in F_g.
    for (int g = 1; g <= 5; ++g) {
        Graph f = pseudofractal(g);
        for (int s = 0; s <= g; ++s) {
            VertexId lo = s == 0 ? 0 : static_cast<VertexId>(pseudofractal_vertices(s - 1));
            VertexId hi = static_cast<VertexId>(pseudofractal_vertices(s));
            VertexId expected = static_cast<VertexId>(1) << (g - s + 1);
            for (VertexId v = lo; v < hi; ++v) CHECK(f.degree(v) == expected);
        }
    }
}

TEST_CASE("pseudofractal: nested growth") {
    Graph f2 = pseudofractal(2);
    Graph f3 = pseudofractal(3);
    for (const auto& [u, v] : f2.edges()) CHECK(f3.has_edge(u, v));
}

TEST_CASE("clique4: sizes and seed graph") {
    Graph t0 = clique4_motif(0);
    CHECK(t0.num_vertices() == 4);
    CHECK(t0.num_edges() == 6);

    Graph t1 = clique4_motif(1);
    CHECK(t1.num_vertices() == 16);
    CHECK(t1.num_edges() == 36);

    Graph t2 = clique4_motif(2);
    CHECK(t2.num_vertices() == 88);
    CHECK(t2.num_edges() == 216);

    for (int g = 0; g <= 3; ++g) {
        Graph t = clique4_motif(g);
        CHECK(t.num_vertices() == clique4_vertices(g));
        CHECK(t.num_edges() == clique4_edges(g));
    }
    for (int g = 0; g <= 6; ++g)
        CHECK(5 * clique4_vertices(g) == 2 * (clique4_edges(g) + 4));
    check_simple_connected(clique4_motif(3));
    CHECK_THROWS_AS(clique4_motif(9), std::invalid_argument);
}

TEST_CASE("clique4: new vertices arrive with degree three") {
    for (int g = 1; g <= 3; ++g) {
        Graph t = clique4_motif(g);
        VertexId lo = static_cast<VertexId>(clique4_vertices(g - 1));
        for (VertexId v = lo; v < t.num_vertices(); ++v) CHECK(t.degree(v) == 3);
    }
}

TEST_CASE("clique4: nested growth and spawn records") {
    Graph t1 = clique4_motif(1);
    Clique4Step step = clique4_step(t1);
    CHECK(step.graph.num_vertices() == 88);
    CHECK(step.spawned.size() == 36);
    for (const auto& [u, v] : t1.edges()) CHECK(step.graph.has_edge(u, v));
    VertexId expect = t1.num_vertices();
    for (const CliqueSpawn& s : step.spawned) {
        CHECK(s.first == expect);
        CHECK(s.second == expect + 1);
        expect += 2;
        CHECK(t1.has_edge(s.parent_u, s.parent_v));
        CHECK(step.graph.has_edge(s.first, s.second));
        CHECK(step.graph.has_edge(s.first, s.parent_u));
        CHECK(step.graph.has_edge(s.first, s.parent_v));
        CHECK(step.graph.has_edge(s.second, s.parent_u));
        CHECK(step.graph.has_edge(s.second, s.parent_v));
    }
}

TEST_CASE("reference families") {
    Graph p3 = path_graph(3);
    CHECK(p3.num_vertices() == 3);
    CHECK(p3.num_edges() == 2);

    CHECK(complete_graph(5).num_edges() == 10);

    Graph c6 = cycle_graph(6);
    CHECK(c6.num_edges() == 6);
    for (VertexId v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

    // torus(1, n) is the cycle.
    Graph t1 = torus_grid(1, 6);
    CHECK(t1.edges() == c6.edges());

    Graph t2 = torus_grid(2, 4);
    CHECK(t2.num_vertices() == 16);
    CHECK(t2.num_edges() == 32);
    for (VertexId v = 0; v < 16; ++v) CHECK(t2.degree(v) == 4);
    check_simple_connected(t2);

    Graph rl = ring_lattice(10, 4);
    CHECK(rl.num_edges() == 20);
    for (VertexId v = 0; v < 10; ++v) CHECK(rl.degree(v) == 4);

    CHECK_THROWS_AS(ring_lattice(10, 3), std::invalid_argument);
    CHECK_THROWS_AS(ring_lattice(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(torus_grid(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("seed derivation separates streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}

}  // TEST_SUITE
