#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "netcoh/graph.hpp"

#include "json.hpp"

namespace netcoh {

enum class Scheme { euler_maruyama, exact_gaussian };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

/// Integration and sampling plan for the noisy consensus dynamics
/// dx = -L x dt + dW.
struct SimConfig {
    double dt = 0.0;                    // <= 0: auto (0.1/lambda_max for Euler, 1/lambda_max exact)
    std::int64_t burn_in_steps = -1;    // < 0: auto, covers 10/lambda_1 of model time
    std::int64_t sample_steps = 100000;
    int replicas = 10;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::exact_gaussian;
};

/// Monte-Carlo coherence estimate with replica-level standard error.
struct SimEstimate {
    double h_fo_hat = 0.0;
    double std_error = 0.0;
    SimConfig config;                      // resolved values (actual dt, burn-in)
    std::optional<double> analytic_h_fo;   // filled when the spectrum was computed
    std::vector<double> replica_means;
    std::string rng;

    nlohmann::ordered_json to_json() const;
};

/// Integrates the dynamics from x(0) = 0 and estimates H_FO as the
/// time-and-replica average of (1/N) ||x - mean(x) 1||^2 over post-burn-in
/// steps. Replicas run on independent seed streams; the reduction is in
/// fixed replica order.
///
/// exact_gaussian samples the exact discrete-time Gaussian transition in
/// the Laplacian eigenbasis (no discretization bias) and needs the dense
/// spectrum. euler_maruyama uses x <- x - dt L x + sqrt(dt) xi with sparse
/// products and scales to graphs beyond dense decomposition; above
/// `sim_dense_limit` vertices it requires an explicit burn_in_steps and
/// validates dt only at runtime (divergence raises NumericalError).
SimEstimate simulate_coherence(const Graph& g, SimConfig cfg);

inline constexpr VertexId sim_dense_limit = 5000;

/// Single-replica integrator; exposed for stepwise control in tests and
/// diagnostics. State lives in vertex space.
class ConsensusSimulator {
public:
    ConsensusSimulator(const Graph& g, Scheme scheme, double dt, std::uint64_t seed);

    void step();
    /// (1/N) ||x - mean(x) 1||^2 of the current state.
    double deviation_variance() const;
    /// Shifts every coordinate; the consensus projection ignores it.
    void add_constant(double c);
    const Eigen::VectorXd& state() const { return x_; }
    double dt() const { return dt_; }

private:
    void build_exact_propagator(const Graph& g);

    Scheme scheme_;
    double dt_;
    std::mt19937_64 rng_;
    Eigen::VectorXd x_;
    // Euler path: CSR adjacency.
    std::vector<std::int64_t> offsets_;
    std::vector<VertexId> adjacency_;
    Eigen::VectorXd degrees_;
    // Exact path: dense propagator and noise factor.
    Eigen::MatrixXd propagator_;
    Eigen::MatrixXd noise_factor_;
    Eigen::VectorXd scratch_;
};

}  // namespace netcoh
