#pragma once

// Bracketed scalar root finding. Bisection is the reference method; Brent's
// method is offered as an accelerated alternative and is cross-checked
// against bisection in the tests.

#include <functional>
#include <stdexcept>

namespace tspine {

class NoSignChangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MaxIterationsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 200;

    /// Throws std::invalid_argument on non-positive tolerances or max_iter < 1.
    void validate() const;
};

/// Bisect down to (near) machine resolution. Default for the genus constants
/// and the arc solvers, whose residual targets sit at 1e-10.
inline constexpr SolverConfig kTightSolver{1e-15, 4e-16, 300};

using ScalarFn = std::function<double(double)>;

/// Root of f on [lo, hi] by bisection. Requires f(lo) * f(hi) <= 0; returns
/// an endpoint exactly when f vanishes there. Terminates when the bracket is
/// narrower than abs_tol + rel_tol * |x| or cannot shrink further.
double find_root(const ScalarFn& f, double lo, double hi, const SolverConfig& cfg = {});

/// Brent's method on the same contract as find_root.
double find_root_brent(const ScalarFn& f, double lo, double hi, const SolverConfig& cfg = {});

struct Bracket {
    double lo;
    double hi;
};

/// Starting from [lo, hi], doubles hi (keeping lo) until f changes sign or hi
/// would exceed cap. Throws NoSignChangeError when the cap is reached.
Bracket expand_upward(const ScalarFn& f, double lo, double hi, double cap);

}  // namespace tspine
