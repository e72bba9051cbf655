#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "netcoh/graph.hpp"

namespace netcoh {

/// Eigenvalues of the Laplacian, sorted ascending, with the relative
/// threshold used to classify numerically-zero eigenvalues.
struct LaplacianSpectrum {
    std::vector<double> eigenvalues;
    double zero_tolerance = 0.0;

    int zero_count() const;
    bool connected() const { return zero_count() == 1; }
    double lambda_max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
    /// Smallest nonzero eigenvalue (algebraic connectivity); requires a
    /// connected spectrum.
    double lambda_1() const;
};

/// Full dense symmetric eigendecomposition of L.
LaplacianSpectrum spectrum(const Graph& g);

/// tr(L+) = sum of reciprocal nonzero eigenvalues. Reference route.
/// Throws GraphError on disconnected input.
double pseudoinverse_trace(const Graph& g);

/// tr(L+) through the deflated solve: trace((L + J/N)^-1) - 1 with J the
/// all-ones matrix. Independent of the eigenvalue route; cheaper than a
/// full decomposition for large N.
double pseudoinverse_trace_solve(const Graph& g);

/// Moore-Penrose pseudoinverse of L (dense).
Eigen::MatrixXd laplacian_pseudoinverse(const Graph& g);

/// Symmetric matrix of pairwise effective resistances, zero diagonal.
struct ResistanceMatrix {
    Eigen::MatrixXd entries;

    double operator()(VertexId i, VertexId j) const { return entries(i, j); }
    VertexId size() const { return static_cast<VertexId>(entries.rows()); }
};

/// All pairwise effective resistances from one pseudoinverse:
/// Omega_ij = L+_ii + L+_jj - 2 L+_ij.
ResistanceMatrix resistance_matrix(const Graph& g);

/// Effective resistance between one pair (single linear solve).
double resistance(const Graph& g, VertexId i, VertexId j);

/// R(G) = sum of Omega_ij over unordered pairs.
double kirchhoff_index(const Graph& g);
double kirchhoff_index(const Graph& g, const ResistanceMatrix& omega);

/// R*(G) = sum of d_i d_j Omega_ij over unordered pairs.
double multiplicative_degree_kirchhoff(const Graph& g);
double multiplicative_degree_kirchhoff(const Graph& g, const ResistanceMatrix& omega);

/// R+(G) = sum of (d_i + d_j) Omega_ij over unordered pairs.
double additive_degree_kirchhoff(const Graph& g);
double additive_degree_kirchhoff(const Graph& g, const ResistanceMatrix& omega);

/// |sum of Omega over edges - (N - 1)|; vanishes by Foster's theorem.
double foster_residual(const Graph& g);
double foster_residual(const Graph& g, const ResistanceMatrix& omega);

/// |d_i Omega_ij + sum_{k in N(i)} (Omega_ik - Omega_jk) - 2|; vanishes by
/// the resistance sum rule. Throws std::invalid_argument when i == j.
double sum_rule_residual(const Graph& g, VertexId i, VertexId j);
double sum_rule_residual(const Graph& g, VertexId i, VertexId j, const ResistanceMatrix& omega);

/// Row-major CSV at 12 significant digits.
void write_csv(const ResistanceMatrix& omega, std::ostream& out);

}  // namespace netcoh
