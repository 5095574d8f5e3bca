#include "tspine/roots.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace tspine {

namespace {

[[noreturn]] void throw_no_sign_change(double lo, double hi, double flo, double fhi) {
    std::ostringstream os;
    os.precision(17);
    os << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << flo << " f(hi)=" << fhi;
    throw NoSignChangeError(os.str());
}

bool opposite_or_zero(double a, double b) { return a == 0.0 || b == 0.0 || (a < 0.0) != (b < 0.0); }

}  // namespace

void SolverConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw std::invalid_argument("solver tolerances must be > 0");
    if (max_iter < 1) throw std::invalid_argument("solver max_iter must be >= 1");
}

double find_root(const ScalarFn& f, double lo, double hi, const SolverConfig& cfg) {
    cfg.validate();
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo);
    const double fhi = f(hi);
    if (std::isnan(flo) || std::isnan(fhi)) throw NoSignChangeError("f is NaN at a bracket endpoint");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!opposite_or_zero(flo, fhi)) throw_no_sign_change(lo, hi, flo, fhi);

    for (int it = 0; it < cfg.max_iter; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) return mid;  // bracket at machine resolution
        if (hi - lo <= cfg.abs_tol + cfg.rel_tol * std::abs(mid)) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    std::ostringstream os;
    os.precision(17);
    os << "bisection did not converge in " << cfg.max_iter << " iterations; bracket [" << lo << ", "
       << hi << "]";
    throw MaxIterationsError(os.str());
}

// Brent (1973), following the classical zeroin layout.
double find_root_brent(const ScalarFn& f, double lo, double hi, const SolverConfig& cfg) {
    cfg.validate();
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (std::isnan(fa) || std::isnan(fb)) throw NoSignChangeError("f is NaN at a bracket endpoint");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (!opposite_or_zero(fa, fb)) throw_no_sign_change(lo, hi, fa, fb);

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < cfg.max_iter; ++it) {
        if ((fb < 0.0) == (fc < 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 0.5 * (cfg.abs_tol + cfg.rel_tol * std::abs(b));
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;

        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw MaxIterationsError("brent did not converge in " + std::to_string(cfg.max_iter) + " iterations");
}

Bracket expand_upward(const ScalarFn& f, double lo, double hi, double cap) {
    const double flo = f(lo);
    for (;;) {
        const double fhi = f(hi);
        if (opposite_or_zero(flo, fhi)) return {lo, hi};
        if (hi >= cap) throw_no_sign_change(lo, hi, flo, fhi);
        hi = std::min(2.0 * hi, cap);
    }
}

}  // namespace tspine
