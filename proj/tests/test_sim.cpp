#include "doctest.h"

#include <cmath>

#include "netcoh/generators.hpp"
#include "netcoh/sim.hpp"
#include "netcoh/spectral.hpp"
#include "support.hpp"

using namespace netcoh;

TEST_SUITE("sim") {

TEST_CASE("exact scheme matches the analytic value on K5") {
    SimConfig cfg;
    cfg.scheme = Scheme::exact_gaussian;
    cfg.replicas = 8;
    cfg.sample_steps = 8000;
    cfg.seed = 2024;
    SimEstimate est = simulate_coherence(complete_graph(5), cfg);
    REQUIRE(est.analytic_h_fo.has_value());
    CHECK(*est.analytic_h_fo == doctest::Approx(4.0 / 50.0).epsilon(1e-12));
    CHECK(std::abs(est.h_fo_hat - *est.analytic_h_fo) < 4 * est.std_error);
    CHECK(est.std_error > 0.0);
    CHECK(est.config.dt > 0.0);
    CHECK(est.config.burn_in_steps > 0);
    CHECK(est.rng == std::string(rng_id));
}

TEST_CASE("error shrinks as samples grow") {
    auto run = [](std::int64_t samples) {
        SimConfig cfg;
        cfg.scheme = Scheme::exact_gaussian;
        cfg.replicas = 6;
        cfg.sample_steps = samples;
        cfg.seed = 99;
        return simulate_coherence(complete_graph(5), cfg);
    };
    SimEstimate coarse = run(2000);
    SimEstimate fine = run(8000);
    // Quadrupling the samples roughly halves the standard error.
    CHECK(fine.std_error < coarse.std_error);
    CHECK(fine.std_error > 0.2 * coarse.std_error);
    CHECK(fine.std_error < 0.8 * coarse.std_error);
}

TEST_CASE("euler bias is positive and shrinks with dt") {
    Graph k10 = complete_graph(10);
    const double analytic = 9.0 / 200.0;
    auto run = [&](double dt) {
        SimConfig cfg;
        cfg.scheme = Scheme::euler_maruyama;
        cfg.dt = dt;
        cfg.replicas = 6;
        cfg.sample_steps = 60000;
        cfg.seed = 11;
        return simulate_coherence(k10, cfg).h_fo_hat;
    };
    double coarse = run(0.01);
    double fine = run(0.005);
    CHECK(std::abs(fine - analytic) < std::abs(coarse - analytic));
    CHECK(coarse > analytic);  // Euler inflates the stationary variance
}

TEST_CASE("estimator ignores a constant shift") {
    Graph s6 = star_graph(6);
    ConsensusSimulator sim(s6, Scheme::exact_gaussian, 0.05, 77);
    for (int i = 0; i < 500; ++i) sim.step();
    double before = sim.deviation_variance();
    sim.add_constant(123.456);
    CHECK(sim.deviation_variance() == doctest::Approx(before).epsilon(1e-9));
    // And the dynamics stay on the shifted trajectory's deviations.
    sim.step();
    CHECK(std::isfinite(sim.deviation_variance()));
}

TEST_CASE("replica spread is consistent with the reported error") {
    SimConfig cfg;
    cfg.scheme = Scheme::exact_gaussian;
    cfg.replicas = 12;
    cfg.sample_steps = 4000;
    cfg.seed = 31337;
    SimEstimate est = simulate_coherence(cycle_graph(12), cfg);
    REQUIRE(est.replica_means.size() == 12);
    double lo = *std::min_element(est.replica_means.begin(), est.replica_means.end());
    double hi = *std::max_element(est.replica_means.begin(), est.replica_means.end());
    double spread = hi - lo;
    double se_scale = est.std_error * std::sqrt(12.0);
    // Range of 12 i.i.d. draws sits near 3 sigma; allow a factor of 2.
    CHECK(spread > se_scale * 3.0 / 2.0);
    CHECK(spread < se_scale * 3.0 * 2.0);
}

TEST_CASE("unstable explicit dt raises a numerical error") {
    // Beyond the dense limit the dt precheck is unavailable, so the
    // divergence guard has to catch it.
    Graph big_path = path_graph(5200);
    SimConfig cfg;
    cfg.scheme = Scheme::euler_maruyama;
    cfg.dt = 3.0;  // far beyond 2/lambda_max ~ 0.5
    cfg.burn_in_steps = 5000;
    cfg.sample_steps = 100;
    cfg.replicas = 1;
    CHECK_THROWS_AS(simulate_coherence(big_path, cfg), NumericalError);
}

TEST_CASE("configuration validation") {
    Graph k5 = complete_graph(5);
    SimConfig cfg;
    cfg.dt = 0.5;  // 2/lambda_max = 0.4 for K5
    cfg.scheme = Scheme::euler_maruyama;
    CHECK_THROWS_AS(simulate_coherence(k5, cfg), std::invalid_argument);

    SimConfig bad_reps;
    bad_reps.replicas = 0;
    CHECK_THROWS_AS(simulate_coherence(k5, bad_reps), std::invalid_argument);

    Graph two(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(simulate_coherence(two, SimConfig{}), GraphError);

    Graph big = path_graph(5200);
    SimConfig needs_burn;
    needs_burn.scheme = Scheme::euler_maruyama;
    CHECK_THROWS_AS(simulate_coherence(big, needs_burn), std::invalid_argument);
    SimConfig exact_big;
    exact_big.scheme = Scheme::exact_gaussian;
    CHECK_THROWS_AS(simulate_coherence(big, exact_big), std::invalid_argument);
}

TEST_CASE("single replica uses batch means for the error") {
    SimConfig cfg;
    cfg.replicas = 1;
    cfg.sample_steps = 5000;
    cfg.seed = 8;
    SimEstimate est = simulate_coherence(complete_graph(6), cfg);
    CHECK(est.std_error > 0.0);
    CHECK(est.replica_means.size() == 1);
}

TEST_CASE("scheme names round trip") {
    CHECK(to_string(scheme_from_string("euler_maruyama")) == "euler_maruyama");
    CHECK(to_string(scheme_from_string("exact_gaussian")) == "exact_gaussian");
    CHECK_THROWS_AS(scheme_from_string("rk4"), std::invalid_argument);
}

}  // TEST_SUITE
