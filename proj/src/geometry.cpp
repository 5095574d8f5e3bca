#include "tspine/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tspine {

namespace {

// Slack on the strip 0 <= t <= c, so that points produced by a solver that
// lands exactly on t = c are not rejected.
double strip_slack(double c) { return 1e-12 * std::max(1.0, c); }

void check_strip(double c, double t, CurveClass k) {
    const double slack = strip_slack(c);
    if (!(t >= -slack && t <= c + slack)) {
        std::ostringstream os;
        os << to_string(k) << " length needs 0 <= t <= c, got c=" << c << " t=" << t
           << "; reduce to the fundamental domain first";
        throw PreconditionError(os.str());
    }
}

double log_cosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

double log_sinh(double x) {
    // x > 0
    if (x < 20.0) return std::log(std::sinh(x));
    return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

// asinh(exp(l)).
double asinh_exp(double l) {
    if (l < 20.0) return std::asinh(std::exp(l));
    return l + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * l)));
}

// sinh(s/2) = cos(pi/(g+1)) / sinh(c/2), exact and free of cancellation.
double sinh_half_seam(Genus g, double c) { return g.cos_angle() / std::sinh(0.5 * c); }

}  // namespace

Genus::Genus(int g) : g_(g), cos_angle_(0.0) {
    if (g < 2) throw PreconditionError("genus must be >= 2, got " + std::to_string(g));
    cos_angle_ = std::cos(std::numbers::pi / static_cast<double>(g + 1));
}

std::string_view to_string(CurveClass k) noexcept {
    switch (k) {
        case CurveClass::Alpha: return "alpha";
        case CurveClass::Beta: return "beta";
        case CurveClass::Gamma: return "gamma";
        case CurveClass::Delta: return "delta";
    }
    return "?";
}

double LengthReport::operator[](CurveClass k) const noexcept {
    switch (k) {
        case CurveClass::Alpha: return alpha;
        case CurveClass::Beta: return beta;
        case CurveClass::Gamma: return gamma;
        case CurveClass::Delta: return delta;
    }
    return 0.0;
}

void check_window(double c) {
    if (!(c >= kCMin && c <= kCMax)) {
        std::ostringstream os;
        os << "c=" << c << " outside the numeric window [" << kCMin << ", " << kCMax << "]";
        throw DomainError(os.str());
    }
}

namespace detail {

double safe_acosh(double x) {
    if (x < 1.0) {
        if (x >= 1.0 - 1e-12) return 0.0;
        throw DomainError("arccosh argument below 1: " + std::to_string(x));
    }
    return std::log(x + std::sqrt((x - 1.0) * (x + 1.0)));
}

double acosh_cosh_product(double a, double b) {
    a = std::abs(a);
    b = std::abs(b);
    if (a + b > 40.0) {
        // cosh(a) cosh(b) > e^38: arccosh(y) = log y + log(1 + sqrt(1 - y^-2)).
        const double log_y = log_cosh(a) + log_cosh(b);
        return log_y + std::log1p(std::sqrt(-std::expm1(-2.0 * log_y)));
    }
    // cosh(a) cosh(b) - 1 = 2 sinh^2(a/2) cosh(b) + 2 sinh^2(b/2), and
    // arccosh(1 + 2 z^2) = 2 arcsinh(z).
    const double sa = std::sinh(0.5 * a);
    const double sb = std::sinh(0.5 * b);
    return 2.0 * std::asinh(std::sqrt(sa * sa * std::cosh(b) + sb * sb));
}

double alpha_length(Genus g, double c, double t) {
    const double s = 2.0 * std::asinh(sinh_half_seam(g, c));
    return 4.0 * acosh_cosh_product(0.5 * s, 0.5 * t);
}

double beta_length(Genus g, double c, double t) {
    // cosh(l/2) = cosh s cosh(t/2) cosh(c - t/2) - sinh(t/2) sinh(c - t/2)
    //           = 1 + 2 sinh^2(s/2) cosh(t/2) cosh(c - t/2) + 2 sinh^2((c - t)/2).
    const double sh = sinh_half_seam(g, c);
    const double sd = std::sinh(0.5 * (c - t));
    const double z2 = sh * sh * std::cosh(0.5 * t) * std::cosh(c - 0.5 * t) + sd * sd;
    return 4.0 * std::asinh(std::sqrt(z2));
}

double delta_length(Genus g, double c, double t) {
    const double s = 2.0 * std::asinh(sinh_half_seam(g, c));
    const double gp1 = static_cast<double>(g.value() + 1);
    const double mult = g.even() ? 4.0 * gp1 : 2.0 * gp1;
    return mult * acosh_cosh_product(0.5 * s, 0.5 * (c - t));
}

}  // namespace detail

double seam_length(Genus g, double c) {
    check_window(c);
    return 2.0 * std::asinh(sinh_half_seam(g, c));
}

double length(Genus g, double c, double t, CurveClass k) {
    check_window(c);
    if (!std::isfinite(t)) throw DomainError("twist must be finite");
    switch (k) {
        case CurveClass::Gamma: return 2.0 * c;
        case CurveClass::Alpha: return detail::alpha_length(g, c, t);
        case CurveClass::Beta:
            check_strip(c, t, k);
            return detail::beta_length(g, c, t);
        case CurveClass::Delta:
            check_strip(c, t, k);
            return detail::delta_length(g, c, t);
    }
    throw PreconditionError("unknown curve class");
}

LengthReport lengths(Genus g, double c, double t) {
    return {length(g, c, t, CurveClass::Alpha), length(g, c, t, CurveClass::Beta),
            length(g, c, t, CurveClass::Gamma), length(g, c, t, CurveClass::Delta)};
}

double length_beta_diag(Genus g, double c) {
    check_window(c);
    // cosh(l/2) = 2K^2 + cosh s  =>  cosh(l/2) - 1 = 2 (K^2 + sinh^2(s/2)).
    const double k = g.cos_angle();
    const double sh = sinh_half_seam(g, c);
    return 4.0 * std::asinh(std::sqrt(k * k + sh * sh));
}

DualCoords dual_coords(Genus g, double c, double t) {
    check_window(c);
    if (!std::isfinite(t)) throw DomainError("twist must be finite");
    DualCoords d{};
    d.s = 2.0 * std::asinh(sinh_half_seam(g, c));
    const double abs_t = std::abs(t);
    d.c_alpha = 2.0 * detail::acosh_cosh_product(0.5 * d.s, 0.5 * abs_t);
    d.s_alpha = 2.0 * std::asinh(g.cos_angle() / std::sinh(0.5 * d.c_alpha));
    if (abs_t == 0.0) {
        d.t_alpha = 0.0;
        return d;
    }
    // Eliminating c_alpha and s_alpha from the four coordinate-change relations gives
    //   sinh(|t_a|/2) sinh(c_a/2) cosh(s_a/2) = sinh(|t|/2) sinh(c/2) cosh(s/2),
    // which avoids the cancellation of cosh(c/2)/cosh(s_a/2) - 1 near t = 0.
    double abs_ta = 0.0;
    if (abs_t < 600.0 && d.c_alpha < 600.0) {
        const double ratio = std::sinh(0.5 * abs_t) * std::sinh(0.5 * c) * std::cosh(0.5 * d.s) /
                             (std::sinh(0.5 * d.c_alpha) * std::cosh(0.5 * d.s_alpha));
        abs_ta = 2.0 * std::asinh(ratio);
    } else {
        const double log_ratio = log_sinh(0.5 * abs_t) + log_sinh(0.5 * c) +
                                 log_cosh(0.5 * d.s) - log_sinh(0.5 * d.c_alpha) -
                                 log_cosh(0.5 * d.s_alpha);
        abs_ta = 2.0 * asinh_exp(log_ratio);
    }
    if (!std::isfinite(abs_ta)) {
        std::ostringstream os;
        os << "dual twist not finite at c=" << c << " t=" << t;
        throw DomainError(os.str());
    }
    d.t_alpha = t > 0.0 ? -abs_ta : abs_ta;
    return d;
}

CTPair involution_f(Genus g, double c, double t) {
    const DualCoords d = dual_coords(g, c, t);
    return {d.c_alpha, d.t_alpha};
}

}  // namespace tspine
