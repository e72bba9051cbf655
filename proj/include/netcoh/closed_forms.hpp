#pragma once

#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include "netcoh/generators.hpp"

namespace netcoh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Arbitrary-precision rational with a float view. The closed forms below
/// mix 2^g, 3^g, and 6^g terms whose cancellations would destroy a
/// floating-point evaluation.
struct ExactValue {
    Rational value;

    double float_view() const { return value.convert_to<double>(); }
    std::string str() const;  // "p/q" (or "p" when integral)

    friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

// Pseudofractal web F_g ----------------------------------------------------

/// Kirchhoff index R(F_g), exact.
ExactValue pseudofractal_kirchhoff(int g);

/// First-order coherence H_FO(F_g) = R(F_g) / (2 N_g^2), exact.
/// Converges to 25/84.
ExactValue pseudofractal_coherence(int g);

/// Diagnostic variant: exactly half the Kirchhoff-route coherence. Matches
/// an alternate printed normalization; not consistent with the g = 0
/// spectrum or the 25/84 limit.
ExactValue pseudofractal_coherence_alt(int g);

ExactValue pseudofractal_coherence_limit();  // 25/84

// 4-clique motif network T_g -----------------------------------------------

/// Kirchhoff index, multiplicative and additive degree-Kirchhoff indices.
struct Clique4Indices {
    ExactValue kirchhoff;       // R
    ExactValue multiplicative;  // R*
    ExactValue additive;        // R+

    friend bool operator==(const Clique4Indices&, const Clique4Indices&) = default;
};

/// Closed forms for (R, R*, R+) of T_g, exact.
Clique4Indices clique4_kirchhoff_indices(int g);

/// One step of the coupled recursion taking the exact indices of T_g to
/// those of T_{g+1}; iterating from (3, 27, 18) at g = 0 reproduces the
/// closed forms.
Clique4Indices clique4_kirchhoff_recursion_step(const Clique4Indices& prev, int g_of_prev);

/// H_FO(T_g) = R(T_g) / (2 N_g^2), exact. Converges to 39/176.
ExactValue clique4_coherence(int g);

ExactValue clique4_coherence_limit();  // 39/176

// Resistance evolution -----------------------------------------------------

/// Builds the resistance matrix of T_{g+1} from the resistance matrix of
/// T_g and the spawn map of the growth step, using the five evolution
/// cases:
///   old-old           : Omega/2
///   twin pair         : 1/2
///   new-old (k,l)->j  : (3 + 2 Omega_jl + 2 Omega_jk - Omega_kl)/8
///   new-new (k,l),(p,q): (6 + Omega_kq + Omega_kp + Omega_lp + Omega_lq
///                              - Omega_kl - Omega_pq)/8
/// (the new-old case covers j in {k,l}, where it reduces to
/// Omega_kl/8 + 3/8). All reads are from the level-g matrix.
Eigen::MatrixXd resistance_recursion_step(const Eigen::MatrixXd& omega_g,
                                          std::span<const CliqueSpawn> spawned);

ExactValue exact_vertices(const std::string& family, int g);  // N_g as exact integer
ExactValue exact_edges(const std::string& family, int g);     // M_g as exact integer

}  // namespace netcoh
