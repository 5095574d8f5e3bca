#include "tspine/constants.hpp"

#include <cmath>

namespace tspine {

double c0(Genus g) { return 2.0 * std::asinh(std::sqrt(g.cos_angle())); }

double c1_residual(Genus g, double c) { return length_beta_diag(g, c) - 2.0 * c; }

double c1(Genus g, const SolverConfig& cfg) {
    const ScalarFn f = [g](double c) { return c1_residual(g, c); };
    const Bracket br = expand_upward(f, 0.1, 1.0, kCMax);
    return find_root(f, br.lo, br.hi, cfg);
}

double level_half_polynomial(double cosh_half_c) {
    const double C = cosh_half_c;
    return (C - 1.0) * (C - 1.0) * (2.0 * C + 1.0) / (2.0 * C - 1.0);
}

double c_half_cosh(Genus g, const SolverConfig& cfg) {
    const double level = g.cos_angle() * g.cos_angle();
    const ScalarFn f = [level](double C) { return level_half_polynomial(C) - level; };
    // level < 1 and the polynomial equals 1 at C ~ 1.78, so [1, 2] brackets the root.
    return find_root(f, 1.0, 2.0, cfg);
}

double c_half(Genus g, const SolverConfig& cfg) {
    return 2.0 * detail::safe_acosh(c_half_cosh(g, cfg));
}

GenusConstants genus_constants(Genus g, const SolverConfig& cfg) {
    return {c0(g), c1(g, cfg), c_half(g, cfg)};
}

}  // namespace tspine
