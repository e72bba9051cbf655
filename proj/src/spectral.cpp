#include "netcoh/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace netcoh {

namespace {

void require_connected(const Graph& g) {
    if (!g.is_connected()) throw GraphError("graph is disconnected");
}

double zero_cutoff(VertexId n, double lambda_max) {
    double scale = std::max<double>(n, 10);
    return scale * std::numeric_limits<double>::epsilon() * std::max(lambda_max, 1.0);
}

// (L + J/N), the standard rank-one deflation of the Laplacian kernel.
Eigen::MatrixXd deflated_laplacian(const Graph& g) {
    Eigen::MatrixXd A = laplacian(g);
    A.array() += 1.0 / static_cast<double>(g.num_vertices());
    return A;
}

}  // namespace

int LaplacianSpectrum::zero_count() const {
    int count = 0;
    for (double ev : eigenvalues) {
        if (ev > zero_tolerance) break;
        ++count;
    }
    return count;
}

double LaplacianSpectrum::lambda_1() const {
    int zeros = zero_count();
    if (zeros != 1 || eigenvalues.size() < 2)
        throw GraphError("algebraic connectivity undefined: spectrum is not that of a connected graph");
    return eigenvalues[1];
}

LaplacianSpectrum spectrum(const Graph& g) {
    const VertexId n = g.num_vertices();
    if (n < 1) throw GraphError("empty graph");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("Laplacian eigendecomposition did not converge");

    LaplacianSpectrum spec;
    spec.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
    spec.zero_tolerance = zero_cutoff(n, spec.eigenvalues.back());

    if (spec.eigenvalues.front() < -spec.zero_tolerance)
        throw NumericalError("negative Laplacian eigenvalue beyond tolerance: " +
                             std::to_string(spec.eigenvalues.front()));
    double sum = 0.0;
    for (double ev : spec.eigenvalues) sum += ev;
    double expected = 2.0 * static_cast<double>(g.num_edges());
    if (std::abs(sum - expected) > 1e-8 * std::max(1.0, expected))
        throw NumericalError("eigenvalue sum deviates from 2M by " +
                             std::to_string(sum - expected));
    return spec;
}

double pseudoinverse_trace(const Graph& g) {
    require_connected(g);
    LaplacianSpectrum spec = spectrum(g);
    if (spec.zero_count() != 1)
        throw GraphError("graph is disconnected (multiple zero eigenvalues)");
    double trace = 0.0;
    // Ascending order accumulates the dominant reciprocals first.
    for (std::size_t i = 1; i < spec.eigenvalues.size(); ++i)
        trace += 1.0 / spec.eigenvalues[i];
    return trace;
}

double pseudoinverse_trace_solve(const Graph& g) {
    require_connected(g);
    const VertexId n = g.num_vertices();
    if (n == 1) return 0.0;

    Eigen::LLT<Eigen::MatrixXd> llt(deflated_laplacian(g));
    if (llt.info() != Eigen::Success)
        throw NumericalError("Cholesky factorization of deflated Laplacian failed");
    // tr(A^-1) = ||R^-1||_F^2 for A = R R^T.
    Eigen::MatrixXd inv_factor =
        llt.matrixL().solve(Eigen::MatrixXd::Identity(n, n));
    return inv_factor.squaredNorm() - 1.0;
}

Eigen::MatrixXd laplacian_pseudoinverse(const Graph& g) {
    require_connected(g);
    const VertexId n = g.num_vertices();
    Eigen::MatrixXd Lp = deflated_laplacian(g)
                             .llt()
                             .solve(Eigen::MatrixXd::Identity(n, n));
    Lp.array() -= 1.0 / static_cast<double>(n);
    return Lp;
}

ResistanceMatrix resistance_matrix(const Graph& g) {
    Eigen::MatrixXd Lp = laplacian_pseudoinverse(g);
    const Eigen::VectorXd diag = Lp.diagonal();
    Eigen::MatrixXd omega =
        diag.replicate(1, Lp.cols()) + diag.transpose().replicate(Lp.rows(), 1) - 2.0 * Lp;
    omega.diagonal().setZero();
    return {std::move(omega)};
}

double resistance(const Graph& g, VertexId i, VertexId j) {
    const VertexId n = g.num_vertices();
    if (i < 0 || j < 0 || i >= n || j >= n) throw GraphError("vertex id out of range");
    if (i == j) return 0.0;
    require_connected(g);

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(i) = 1.0;
    rhs(j) = -1.0;
    // J annihilates e_i - e_j, so the deflated solve is exact here.
    Eigen::VectorXd y = deflated_laplacian(g).llt().solve(rhs);
    return y(i) - y(j);
}

double kirchhoff_index(const Graph& g) { return kirchhoff_index(g, resistance_matrix(g)); }

double kirchhoff_index(const Graph& g, const ResistanceMatrix& omega) {
    (void)g;
    const VertexId n = omega.size();
    double sum = 0.0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) sum += omega(i, j);
    return sum;
}

double multiplicative_degree_kirchhoff(const Graph& g) {
    return multiplicative_degree_kirchhoff(g, resistance_matrix(g));
}

double multiplicative_degree_kirchhoff(const Graph& g, const ResistanceMatrix& omega) {
    const VertexId n = omega.size();
    double sum = 0.0;
    for (VertexId i = 0; i < n; ++i) {
        double di = g.degree(i);
        for (VertexId j = i + 1; j < n; ++j) sum += di * g.degree(j) * omega(i, j);
    }
    return sum;
}

double additive_degree_kirchhoff(const Graph& g) {
    return additive_degree_kirchhoff(g, resistance_matrix(g));
}

double additive_degree_kirchhoff(const Graph& g, const ResistanceMatrix& omega) {
    const VertexId n = omega.size();
    double sum = 0.0;
    for (VertexId i = 0; i < n; ++i) {
        double di = g.degree(i);
        for (VertexId j = i + 1; j < n; ++j) sum += (di + g.degree(j)) * omega(i, j);
    }
    return sum;
}

double foster_residual(const Graph& g) { return foster_residual(g, resistance_matrix(g)); }

double foster_residual(const Graph& g, const ResistanceMatrix& omega) {
    double edge_sum = 0.0;
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.neighbors(u))
            if (v > u) edge_sum += omega(u, v);
    return std::abs(edge_sum - static_cast<double>(g.num_vertices() - 1));
}

double sum_rule_residual(const Graph& g, VertexId i, VertexId j) {
    return sum_rule_residual(g, i, j, resistance_matrix(g));
}

double sum_rule_residual(const Graph& g, VertexId i, VertexId j, const ResistanceMatrix& omega) {
    const VertexId n = g.num_vertices();
    if (i < 0 || j < 0 || i >= n || j >= n) throw GraphError("vertex id out of range");
    if (i == j) throw std::invalid_argument("sum rule needs two distinct vertices");
    double acc = g.degree(i) * omega(i, j);
    for (VertexId k : g.neighbors(i)) acc += omega(i, k) - omega(j, k);
    return std::abs(acc - 2.0);
}

void write_csv(const ResistanceMatrix& omega, std::ostream& out) {
    const VertexId n = omega.size();
    char buf[40];
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = 0; j < n; ++j) {
            std::snprintf(buf, sizeof buf, "%.12g", omega(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace netcoh
