#include "netcoh/closed_forms.hpp"

#include <stdexcept>

namespace netcoh {

namespace {

BigInt pow_int(BigInt base, int exp) {
    BigInt r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

Rational pseudofractal_kirchhoff_numerator(int g) {
    // 50*3^{3g+3} - 35*3^{2g+2}*2^{g+1} + 48*3^{2g+2}
    //   + 30*3^{g+2}*2^{g+1} - 14*3^{g+2} + 225*2^{g+1}
    BigInt p3_g2 = pow_int(3, g + 2);
    BigInt p3_2g2 = pow_int(3, 2 * g + 2);
    BigInt p3_3g3 = pow_int(3, 3 * g + 3);
    BigInt p2_g1 = pow_int(2, g + 1);
    return Rational(50 * p3_3g3 - 35 * p3_2g2 * p2_g1 + 48 * p3_2g2 + 30 * p3_g2 * p2_g1 -
                    14 * p3_g2 + 225 * p2_g1);
}

Rational pseudofractal_n(int g) { return Rational(pow_int(3, g + 1) + 3, 2); }
Rational clique4_n(int g) { return Rational(2 * (pow_int(6, g + 1) + 4), 5); }
Rational clique4_m(int g) { return Rational(pow_int(6, g + 1)); }

void require_level(int g) {
    if (g < 0) throw std::invalid_argument("iteration index must be non-negative");
}

}  // namespace

std::string ExactValue::str() const {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) s += "/" + denominator(value).str();
    return s;
}

ExactValue pseudofractal_kirchhoff(int g) {
    require_level(g);
    return {pseudofractal_kirchhoff_numerator(g) / Rational(112 * pow_int(3, g + 2))};
}

ExactValue pseudofractal_coherence(int g) {
    require_level(g);
    Rational n = pseudofractal_n(g);
    return {pseudofractal_kirchhoff(g).value / (2 * n * n)};
}

ExactValue pseudofractal_coherence_alt(int g) {
    require_level(g);
    return {pseudofractal_coherence(g).value / 2};
}

ExactValue pseudofractal_coherence_limit() { return {Rational(25, 84)}; }

Clique4Indices clique4_kirchhoff_indices(int g) {
    require_level(g);
    BigInt p2_g = pow_int(2, g);
    BigInt p3_g = pow_int(3, g);

    // R* = (1/5) 2^g 3^{g+2} (13*2^{g+1}*3^g - 5*3^{g+1} + 4)
    Rational mul = Rational(p2_g * p3_g * 9 * (26 * p2_g * p3_g - 15 * p3_g + 4), 5);

    // R+ = (9/275)(169*2^{2g+2}*3^{2g} - 55*2^{g+1}*3^{2g+1}
    //              + 11*2^{g+3}*3^g + 35*3^{g+1} + 11)
    BigInt p6_g = p2_g * p3_g;
    Rational add = Rational(9 * (676 * p6_g * p6_g - 330 * p6_g * p3_g + 88 * p6_g +
                                 105 * p3_g + 11),
                            275);

    // R = (3/275)(13*2^{2g+1}*3^{2g+2} - 11*2^g*3^{2g+2} + 13*2^{g+2}*3^g
    //             + 7*3^{g+2} - 11 + 36*2^{-g})
    Rational kir = Rational(3) *
                   (Rational(234 * p6_g * p6_g - 99 * p6_g * p3_g + 52 * p6_g + 63 * p3_g - 11) +
                    Rational(36, p2_g)) /
                   275;

    return {{kir}, {mul}, {add}};
}

Clique4Indices clique4_kirchhoff_recursion_step(const Clique4Indices& prev, int g_of_prev) {
    require_level(g_of_prev);
    Rational n = clique4_n(g_of_prev);
    Rational m = clique4_m(g_of_prev);
    const Rational& r = prev.kirchhoff.value;
    const Rational& rs = prev.multiplicative.value;
    const Rational& rp = prev.additive.value;

    Rational kir = Rational(3, 2) * m * m - Rational(1, 4) * n * (n - 1) +
                   Rational(1, 4) * m * (n - 2) + Rational(1, 2) * (r + rp + rs);
    Rational mul = 9 * (3 * m * m - m * n) + 18 * rs;
    Rational add = Rational(27, 2) * m * m - Rational(3, 2) * m -
                   Rational(3, 4) * n * (n - 1) - Rational(9, 4) * m * n + 3 * rp + 6 * rs;
    return {{kir}, {mul}, {add}};
}

ExactValue clique4_coherence(int g) {
    require_level(g);
    Rational n = clique4_n(g);
    return {clique4_kirchhoff_indices(g).kirchhoff.value / (2 * n * n)};
}

ExactValue clique4_coherence_limit() { return {Rational(39, 176)}; }

Eigen::MatrixXd resistance_recursion_step(const Eigen::MatrixXd& omega_g,
                                          std::span<const CliqueSpawn> spawned) {
    const auto n_old = static_cast<VertexId>(omega_g.rows());
    if (omega_g.rows() != omega_g.cols())
        throw std::invalid_argument("resistance matrix must be square");
    const auto n_new = n_old + 2 * static_cast<VertexId>(spawned.size());

    for (std::size_t idx = 0; idx < spawned.size(); ++idx) {
        const CliqueSpawn& s = spawned[idx];
        VertexId expected_first = n_old + 2 * static_cast<VertexId>(idx);
        if (s.first != expected_first || s.second != expected_first + 1 ||
            s.parent_u < 0 || s.parent_u >= n_old || s.parent_v < 0 || s.parent_v >= n_old)
            throw std::invalid_argument("spawn map does not match the resistance matrix level");
    }

    Eigen::MatrixXd out(n_new, n_new);
    out.topLeftCorner(n_old, n_old) = 0.5 * omega_g;

    auto set = [&out](VertexId i, VertexId j, double v) {
        out(i, j) = v;
        out(j, i) = v;
    };

    for (const CliqueSpawn& s : spawned) {
        const VertexId k = s.parent_u, l = s.parent_v;
        const double okl = omega_g(k, l);
        set(s.first, s.second, 0.5);
        for (VertexId j = 0; j < n_old; ++j) {
            // Covers j == k and j == l, where it reduces to okl/8 + 3/8.
            double v = (3.0 + 2.0 * omega_g(j, l) + 2.0 * omega_g(j, k) - okl) / 8.0;
            set(s.first, j, v);
            set(s.second, j, v);
        }
    }

    for (std::size_t a = 0; a < spawned.size(); ++a) {
        const CliqueSpawn& sa = spawned[a];
        const VertexId k = sa.parent_u, l = sa.parent_v;
        for (std::size_t b = a + 1; b < spawned.size(); ++b) {
            const CliqueSpawn& sb = spawned[b];
            const VertexId p = sb.parent_u, q = sb.parent_v;
            double v = (6.0 + omega_g(k, q) + omega_g(k, p) + omega_g(l, p) + omega_g(l, q) -
                        omega_g(k, l) - omega_g(p, q)) /
                       8.0;
            set(sa.first, sb.first, v);
            set(sa.first, sb.second, v);
            set(sa.second, sb.first, v);
            set(sa.second, sb.second, v);
        }
    }

    out.diagonal().setZero();
    return out;
}

ExactValue exact_vertices(const std::string& family, int g) {
    require_level(g);
    if (family == "pseudofractal") return {pseudofractal_n(g)};
    if (family == "clique4") return {clique4_n(g)};
    throw std::invalid_argument("unknown family '" + family + "'");
}

ExactValue exact_edges(const std::string& family, int g) {
    require_level(g);
    if (family == "pseudofractal") return {Rational(pow_int(3, g + 1))};
    if (family == "clique4") return {clique4_m(g)};
    throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace netcoh
