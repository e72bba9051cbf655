#include "netcoh/coherence.hpp"

#include <cstdio>
#include <stdexcept>

#include "netcoh/spectral.hpp"

namespace netcoh {

namespace {

std::string sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

double first_order_coherence(const Graph& g) {
    const VertexId n = g.num_vertices();
    if (n < 2) throw GraphError("coherence undefined for fewer than two vertices");
    if (!g.is_connected()) throw GraphError("graph is disconnected");
    double trace = n <= dense_route_limit ? pseudoinverse_trace(g)
                                          : pseudoinverse_trace_solve(g);
    return trace / (2.0 * static_cast<double>(n));
}

LowerBounds coherence_lower_bound(std::int64_t n, std::int64_t m) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (m < n - 1)
        throw std::invalid_argument("no connected graph has fewer than N-1 edges");
    double dn = static_cast<double>(n);
    double dm = static_cast<double>(m);
    LowerBounds b;
    b.exact = dn / (4.0 * dm) - 1.0 / (2.0 * dm) + 1.0 / (4.0 * dm * dn);
    b.asymptotic = dn / (4.0 * dm);  // = 1/(2 rho)
    return b;
}

double coherence_upper_bound(const Graph& g) {
    const VertexId n = g.num_vertices();
    if (n < 2) throw GraphError("bound undefined for fewer than two vertices");
    double mu = average_path_length(g);
    return (static_cast<double>(n) - 1.0) / (4.0 * static_cast<double>(n)) * mu;
}

CoherenceReport analyze(const Graph& g) {
    CoherenceReport r;
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.rho = average_degree(g);
    r.mu = average_path_length(g);
    r.h_fo = first_order_coherence(g);
    LowerBounds lb = coherence_lower_bound(r.n, r.m);
    r.lower_asymptotic = lb.asymptotic;
    r.lower_exact = lb.exact;
    r.upper = (static_cast<double>(r.n) - 1.0) / (4.0 * static_cast<double>(r.n)) * r.mu;
    return r;
}

nlohmann::ordered_json CoherenceReport::to_json() const {
    return nlohmann::ordered_json{
        {"n", n},
        {"m", m},
        {"rho", rho},
        {"mu", mu},
        {"h_fo", h_fo},
        {"lower_asymptotic", lower_asymptotic},
        {"lower_exact", lower_exact},
        {"upper", upper},
    };
}

std::string CoherenceReport::csv_header() {
    return "n,m,rho,mu,h_fo,lower_asymptotic,lower_exact,upper";
}

std::string CoherenceReport::to_csv_row() const {
    std::string row = std::to_string(n) + ',' + std::to_string(m);
    for (double x : {rho, mu, h_fo, lower_asymptotic, lower_exact, upper})
        row += ',' + sig12(x);
    return row;
}

}  // namespace netcoh
