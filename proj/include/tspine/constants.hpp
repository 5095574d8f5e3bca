#pragma once

// Genus-dependent constants of the spine characterization:
//   c0     - the point (c0, 0) where l_alpha = l_gamma on the line t = 0,
//   c1     - the point (c1, c1) where l_beta = l_gamma on the line t = c,
//   c_half - the unique c with u1(c) = 1/2 on the beta = gamma arc.

#include "tspine/geometry.hpp"
#include "tspine/roots.hpp"

namespace tspine {

struct GenusConstants {
    double c0;
    double c1;
    double c_half;
};

/// 2 arcsinh(sqrt(cos(pi/(g+1)))).
double c0(Genus g);

/// Root of cosh(c) = 2 cos^2(pi/(g+1)) + cosh(s(c)), bracketed by doubling
/// the upper end of [0.1, 1] up to the numeric window cap.
double c1(Genus g, const SolverConfig& cfg = kTightSolver);

/// The C > 1 solving (C-1)^2 (2C+1) / (2C-1) = cos^2(pi/(g+1)).
double c_half_cosh(Genus g, const SolverConfig& cfg = kTightSolver);

/// 2 arccosh(c_half_cosh(g)).
double c_half(Genus g, const SolverConfig& cfg = kTightSolver);

GenusConstants genus_constants(Genus g, const SolverConfig& cfg = kTightSolver);

/// (C-1)^2 (2C+1) / (2C-1).
double level_half_polynomial(double cosh_half_c);

/// Residual of the c1 defining equation in length form: l_beta(c, c) - 2c.
double c1_residual(Genus g, double c);

}  // namespace tspine
