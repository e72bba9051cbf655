#include "netcoh/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace netcoh {

Graph::Graph(VertexId n, std::vector<Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    n_ = n;
    m_ = static_cast<std::int64_t>(edges.size());
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    std::partial_sum(deg.begin(), deg.end(), offsets_.begin() + 1);
    adjacency_.resize(static_cast<std::size_t>(2) * m_);
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    for (VertexId v = 0; v < n_; ++v)
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
}

namespace {

bool parse_vertex_token(std::string_view tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && out >= 0;
}

}  // namespace

Graph Graph::from_edge_list(std::istream& in) {
    std::unordered_map<std::int64_t, VertexId> ids;
    std::vector<Edge> edges;
    std::string line;
    long lineno = 0;

    auto intern = [&ids](std::int64_t label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(ids.size()));
        return it->second;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '%' || line[pos] == '#') continue;

        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (b.empty()) throw ParseError("expected two vertex tokens", lineno);
        if (fields >> extra) throw ParseError("trailing token '" + extra + "'", lineno);

        std::int64_t la = 0, lb = 0;
        if (!parse_vertex_token(a, la))
            throw ParseError("malformed vertex token '" + a + "'", lineno);
        if (!parse_vertex_token(b, lb))
            throw ParseError("malformed vertex token '" + b + "'", lineno);

        VertexId u = intern(la);
        VertexId v = intern(lb);
        if (u != v) edges.emplace_back(u, v);
    }
    if (edges.empty()) throw GraphError("edge list contains no usable edges");
    return Graph(static_cast<VertexId>(ids.size()), std::move(edges));
}

Graph Graph::from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

Graph Graph::from_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open '" + path + "'");
    return from_edge_list(in);
}

VertexId Graph::max_degree() const noexcept {
    VertexId best = 0;
    for (VertexId v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto dist = bfs_distances(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](VertexId d) { return d < 0; });
}

std::vector<VertexId> bfs_distances(const Graph& g, VertexId source) {
    const VertexId n = g.num_vertices();
    if (source < 0 || source >= n) throw GraphError("BFS source out of range");
    std::vector<VertexId> dist(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> queue;
    queue.reserve(static_cast<std::size_t>(n));
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

LccExtraction extract_largest_component(const Graph& g) {
    const VertexId n = g.num_vertices();
    if (n == 0) throw GraphError("empty graph");

    std::vector<VertexId> component(static_cast<std::size_t>(n), -1);
    std::vector<std::int64_t> size_of;
    for (VertexId s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        VertexId c = static_cast<VertexId>(size_of.size());
        std::int64_t count = 0;
        std::vector<VertexId> queue = {s};
        component[s] = c;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            ++count;
            for (VertexId v : g.neighbors(queue[head])) {
                if (component[v] < 0) {
                    component[v] = c;
                    queue.push_back(v);
                }
            }
        }
        size_of.push_back(count);
    }

    // Largest component; ties resolved by the smallest contained original
    // id, which is the first component discovered at that size.
    VertexId best = 0;
    for (VertexId c = 1; c < static_cast<VertexId>(size_of.size()); ++c)
        if (size_of[c] > size_of[best]) best = c;

    std::vector<VertexId> remap(static_cast<std::size_t>(n), -1);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v)
        if (component[v] == best) remap[v] = next++;

    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        if (component[u] != best) continue;
        for (VertexId v : g.neighbors(u))
            if (v > u) edges.emplace_back(remap[u], remap[v]);
    }
    return {Graph(next, std::move(edges)), n - next};
}

Graph largest_connected_component(const Graph& g) {
    return extract_largest_component(g).graph;
}

Eigen::MatrixXd laplacian(const Graph& g) {
    const VertexId n = g.num_vertices();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (VertexId u = 0; u < n; ++u) {
        L(u, u) = g.degree(u);
        for (VertexId v : g.neighbors(u)) L(u, v) = -1.0;
    }
    return L;
}

double average_degree(const Graph& g) {
    if (g.num_vertices() == 0) throw GraphError("empty graph");
    return 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
}

double average_path_length(const Graph& g) {
    const VertexId n = g.num_vertices();
    if (n < 2) throw GraphError("average path length needs at least two vertices");

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
    std::atomic<VertexId> next_source{0};
    std::atomic<bool> disconnected{false};
    std::vector<std::int64_t> partial(workers, 0);

    auto sweep = [&](unsigned w) {
        std::vector<VertexId> dist(static_cast<std::size_t>(n));
        std::vector<VertexId> queue;
        queue.reserve(static_cast<std::size_t>(n));
        std::int64_t local = 0;
        for (;;) {
            VertexId s = next_source.fetch_add(1);
            if (s >= n || disconnected.load(std::memory_order_relaxed)) break;
            std::fill(dist.begin(), dist.end(), -1);
            queue.clear();
            dist[s] = 0;
            queue.push_back(s);
            VertexId reached = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                VertexId u = queue[head];
                ++reached;
                local += dist[u];
                for (VertexId v : g.neighbors(u)) {
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if (reached != n) {
                disconnected.store(true, std::memory_order_relaxed);
                break;
            }
        }
        partial[w] = local;
    };

    if (workers == 1) {
        sweep(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
        for (auto& t : pool) t.join();
    }
    if (disconnected.load()) throw GraphError("graph is disconnected");

    // Every unordered pair is counted twice across the sweeps.
    std::int64_t total = std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
    double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return static_cast<double>(total) / (2.0 * pairs);
}

std::map<VertexId, std::int64_t> degree_distribution(const Graph& g) {
    std::map<VertexId, std::int64_t> hist;
    for (VertexId v = 0; v < g.num_vertices(); ++v) ++hist[g.degree(v)];
    return hist;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.neighbors(u))
            if (v > u) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

}  // namespace netcoh
