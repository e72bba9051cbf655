#include "netcoh/sim.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

#include "netcoh/generators.hpp"
#include "netcoh/spectral.hpp"

namespace netcoh {

std::string to_string(Scheme s) {
    return s == Scheme::euler_maruyama ? "euler_maruyama" : "exact_gaussian";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "euler_maruyama") return Scheme::euler_maruyama;
    if (name == "exact_gaussian") return Scheme::exact_gaussian;
    throw std::invalid_argument("unknown scheme '" + name + "'");
}

ConsensusSimulator::ConsensusSimulator(const Graph& g, Scheme scheme, double dt,
                                       std::uint64_t seed)
    : scheme_(scheme), dt_(dt), rng_(seed), x_(Eigen::VectorXd::Zero(g.num_vertices())) {
    if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
    const VertexId n = g.num_vertices();
    if (scheme_ == Scheme::euler_maruyama) {
        offsets_.assign(1, 0);
        degrees_.resize(n);
        for (VertexId v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            adjacency_.insert(adjacency_.end(), nb.begin(), nb.end());
            offsets_.push_back(static_cast<std::int64_t>(adjacency_.size()));
            degrees_(v) = g.degree(v);
        }
        scratch_.resize(n);
    } else {
        build_exact_propagator(g);
    }
}

void ConsensusSimulator::build_exact_propagator(const Graph& g) {
    const VertexId n = g.num_vertices();
    if (n > sim_dense_limit)
        throw std::invalid_argument("exact_gaussian needs a dense eigendecomposition; "
                                    "use euler_maruyama beyond " +
                                    std::to_string(sim_dense_limit) + " vertices");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g));
    if (solver.info() != Eigen::Success)
        throw NumericalError("Laplacian eigendecomposition did not converge");
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();

    double tol = std::max<double>(n, 10) * std::numeric_limits<double>::epsilon() *
                 std::max(lambda(n - 1), 1.0);
    Eigen::VectorXd decay(n), noise_scale(n);
    for (VertexId i = 0; i < n; ++i) {
        double lam = lambda(i);
        if (lam <= tol) {
            // Consensus mode: pure Brownian drift, projected out by the
            // deviation estimator.
            decay(i) = 1.0;
            noise_scale(i) = std::sqrt(dt_);
        } else {
            decay(i) = std::exp(-lam * dt_);
            noise_scale(i) = std::sqrt((1.0 - std::exp(-2.0 * lam * dt_)) / (2.0 * lam));
        }
    }
    propagator_ = vectors * decay.asDiagonal() * vectors.transpose();
    noise_factor_ = vectors * noise_scale.asDiagonal();
    scratch_.resize(n);
}

void ConsensusSimulator::step() {
    const auto n = static_cast<VertexId>(x_.size());
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (VertexId i = 0; i < n; ++i) scratch_(i) = gauss(rng_);

    if (scheme_ == Scheme::euler_maruyama) {
        const double sqrt_dt = std::sqrt(dt_);
        Eigen::VectorXd next(n);
        for (VertexId i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::int64_t e = offsets_[i]; e < offsets_[i + 1]; ++e)
                acc += x_(adjacency_[e]);
            next(i) = x_(i) - dt_ * (degrees_(i) * x_(i) - acc) + sqrt_dt * scratch_(i);
        }
        x_.swap(next);
    } else {
        x_ = propagator_ * x_ + noise_factor_ * scratch_;
    }
}

double ConsensusSimulator::deviation_variance() const {
    const double mean = x_.mean();
    return (x_.array() - mean).matrix().squaredNorm() / static_cast<double>(x_.size());
}

void ConsensusSimulator::add_constant(double c) { x_.array() += c; }

namespace {

struct ResolvedPlan {
    SimConfig cfg;
    std::optional<double> analytic;
    double divergence_guard = 0.0;
};

ResolvedPlan resolve_plan(const Graph& g, SimConfig cfg) {
    if (!g.is_connected()) throw GraphError("graph is disconnected");
    if (g.num_vertices() < 2) throw GraphError("simulation needs at least two vertices");
    if (cfg.replicas < 1) throw std::invalid_argument("replicas must be at least 1");
    if (cfg.sample_steps < 1) throw std::invalid_argument("sample_steps must be at least 1");

    ResolvedPlan plan;
    const VertexId n = g.num_vertices();
    if (n <= sim_dense_limit) {
        LaplacianSpectrum spec = spectrum(g);
        double lambda_max = spec.lambda_max();
        double lambda_1 = spec.lambda_1();
        double trace = 0.0;
        for (std::size_t i = 1; i < spec.eigenvalues.size(); ++i)
            trace += 1.0 / spec.eigenvalues[i];
        plan.analytic = trace / (2.0 * n);

        if (cfg.dt <= 0.0)
            cfg.dt = (cfg.scheme == Scheme::euler_maruyama ? 0.1 : 1.0) / lambda_max;
        if (cfg.scheme == Scheme::euler_maruyama && cfg.dt >= 2.0 / lambda_max)
            throw std::invalid_argument("dt >= 2/lambda_max is unstable for euler_maruyama");
        if (cfg.burn_in_steps < 0)
            cfg.burn_in_steps =
                static_cast<std::int64_t>(std::ceil(10.0 / (lambda_1 * cfg.dt)));
    } else {
        if (cfg.scheme == Scheme::exact_gaussian)
            throw std::invalid_argument("exact_gaussian needs a dense eigendecomposition; "
                                        "use euler_maruyama beyond " +
                                        std::to_string(sim_dense_limit) + " vertices");
        if (cfg.dt <= 0.0) cfg.dt = 0.05 / g.max_degree();  // Gershgorin: lambda_max <= 2 d_max
        if (cfg.burn_in_steps < 0)
            throw std::invalid_argument(
                "burn_in_steps must be given explicitly beyond the dense limit");
    }
    plan.divergence_guard = 1e12 * std::max(plan.analytic.value_or(1.0), 1.0);
    plan.cfg = cfg;
    return plan;
}

// Runs one replica and returns `batches` contiguous batch means of the
// deviation variance (batches == 1 gives the plain replica mean).
std::vector<double> run_replica(const Graph& g, const SimConfig& cfg,
                                std::uint64_t replica_seed, double guard, int batches) {
    ConsensusSimulator sim(g, cfg.scheme, cfg.dt, replica_seed);
    for (std::int64_t s = 0; s < cfg.burn_in_steps; ++s) {
        sim.step();
        if ((s & 63) == 0 && sim.deviation_variance() > guard)
            throw NumericalError("simulation diverged; reduce dt");
    }
    std::vector<double> means;
    means.reserve(batches);
    std::int64_t done = 0;
    for (int b = 0; b < batches; ++b) {
        std::int64_t quota = cfg.sample_steps * (b + 1) / batches;
        double acc = 0.0;
        std::int64_t width = quota - done;
        for (; done < quota; ++done) {
            sim.step();
            double var = sim.deviation_variance();
            if (var > guard) throw NumericalError("simulation diverged; reduce dt");
            acc += var;
        }
        means.push_back(acc / static_cast<double>(width));
    }
    return means;
}

double spread_error(const std::vector<double>& means, double center) {
    double ss = 0.0;
    for (double m : means) ss += (m - center) * (m - center);
    std::size_t k = means.size();
    return std::sqrt(ss / static_cast<double>(k - 1) / static_cast<double>(k));
}

}  // namespace

SimEstimate simulate_coherence(const Graph& g, SimConfig cfg) {
    ResolvedPlan plan = resolve_plan(g, cfg);
    cfg = plan.cfg;

    // With one replica the standard error comes from batch means within
    // the single run instead of the replica spread.
    const int batches =
        cfg.replicas >= 2 ? 1 : static_cast<int>(std::min<std::int64_t>(10, cfg.sample_steps));

    std::vector<std::vector<double>> batch_means(cfg.replicas);
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const unsigned workers = std::min<unsigned>(
        std::max(1u, std::thread::hardware_concurrency()), cfg.replicas);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int r = next.fetch_add(1);
            if (r >= cfg.replicas) break;
            try {
                batch_means[r] =
                    run_replica(g, cfg, derive_seed(cfg.seed, r), plan.divergence_guard, batches);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                break;
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    SimEstimate est;
    est.config = cfg;
    est.analytic_h_fo = plan.analytic;
    est.rng = rng_id;
    for (const auto& bm : batch_means) {
        double sum = std::accumulate(bm.begin(), bm.end(), 0.0);
        est.replica_means.push_back(sum / static_cast<double>(bm.size()));
    }
    est.h_fo_hat = std::accumulate(est.replica_means.begin(), est.replica_means.end(), 0.0) /
                   static_cast<double>(cfg.replicas);

    if (cfg.replicas >= 2) {
        est.std_error = spread_error(est.replica_means, est.h_fo_hat);
    } else if (batches > 1) {
        est.std_error = spread_error(batch_means[0], est.h_fo_hat);
    }
    return est;
}

nlohmann::ordered_json SimEstimate::to_json() const {
    nlohmann::ordered_json j{
        {"h_fo_hat", h_fo_hat},
        {"std_error", std_error},
        {"config",
         {{"dt", config.dt},
          {"burn_in_steps", config.burn_in_steps},
          {"sample_steps", config.sample_steps},
          {"replicas", config.replicas},
          {"seed", config.seed},
          {"scheme", to_string(config.scheme)}}},
        {"analytic_h_fo", nullptr},
        {"replica_means", replica_means},
        {"rng", rng},
    };
    if (analytic_h_fo) j["analytic_h_fo"] = *analytic_h_fo;
    return j;
}

}  // namespace netcoh
