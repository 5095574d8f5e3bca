#include "tspine/spine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tspine/domain.hpp"
#include "tspine/roots.hpp"

namespace tspine {

namespace {

constexpr double kEndpointTol = 1e-12;

[[noreturn]] void throw_below(std::string_view what, double c, double bound) {
    std::ostringstream os;
    os.precision(17);
    os << what << " is defined for c >= " << bound << ", got c=" << c;
    throw DomainError(os.str());
}

void require_in_F0(Genus g, double c, double t) {
    if (!in_F0(g, c, t)) {
        std::ostringstream os;
        os.precision(17);
        os << "point (c=" << c << ", t=" << t << ") is outside F0";
        throw PreconditionError(os.str());
    }
}

}  // namespace

std::string_view to_string(ArcKind k) noexcept {
    return k == ArcKind::BetaGamma ? "beta-gamma" : "alpha-gamma";
}

bool SystoleReport::contains(CurveClass k) const noexcept {
    return std::find(systoles.begin(), systoles.end(), k) != systoles.end();
}

double u1(Genus g, double c, const GenusConstants& k) {
    check_window(c);
    if (c < k.c1 - kEndpointTol) throw_below("u1", c, k.c1);
    if (c <= k.c1 + kEndpointTol) return 1.0;
    // l_beta(c, cu) - 2c is strictly decreasing in u.
    const ScalarFn f = [g, c](double u) { return detail::beta_length(g, c, c * u) - 2.0 * c; };
    return find_root(f, 1e-15, 1.0, kTightSolver);
}

double u1(Genus g, double c) { return u1(g, c, genus_constants(g)); }

double u0(Genus g, double c, const GenusConstants& k) {
    check_window(c);
    if (c < k.c0 - kEndpointTol) throw_below("u0", c, k.c0);
    if (c <= k.c0 + kEndpointTol) return 0.0;
    // l_alpha(c, cu) - 2c is strictly increasing in u.
    const ScalarFn f = [g, c](double u) { return detail::alpha_length(g, c, c * u) - 2.0 * c; };
    return find_root(f, 0.0, 1.0 - 1e-15, kTightSolver);
}

double u0(Genus g, double c) { return u0(g, c, genus_constants(g)); }

TriplePoint triple_point(Genus g, const GenusConstants& k) {
    const double lo = std::max(k.c0, k.c1);
    // h > 0 at lo since u1(c1) = 1 while u0 < 1.
    const ScalarFn h = [&](double c) { return u1(g, c, k) - u0(g, c, k); };
    const Bracket br = expand_upward(h, lo, 2.0 * lo, kCMax);
    const double c_M = find_root(h, br.lo, br.hi, kTightSolver);
    return {c_M, u1(g, c_M, k), u0(g, c_M, k)};
}

TriplePoint triple_point(Genus g) { return triple_point(g, genus_constants(g)); }

SpineConstants spine_constants(Genus g) {
    const GenusConstants base = genus_constants(g);
    return {base, triple_point(g, base)};
}

double candidate_systole(Genus g, double c, double t) {
    const LengthReport l = lengths(g, c, t);
    return std::min({l.alpha, l.beta, l.gamma, l.delta});
}

SystoleReport systole_report(Genus g, double c, double t, double tie_tol, const SpineConstants& k) {
    if (!(tie_tol > 0.0)) throw PreconditionError("tie_tol must be > 0");
    require_in_F0(g, c, t);
    SystoleReport r{};
    r.lengths = lengths(g, c, t);
    r.tie_tol = tie_tol;
    r.sys_length = std::min({r.lengths.alpha, r.lengths.beta, r.lengths.gamma, r.lengths.delta});
    for (CurveClass cls : kAllCurveClasses) {
        if (r.lengths[cls] <= r.sys_length * (1.0 + tie_tol)) r.systoles.push_back(cls);
    }
    r.on_spine = in_spine(g, c, t / c, 1e-9, k);
    return r;
}

SystoleReport systole_report(Genus g, double c, double t, double tie_tol) {
    return systole_report(g, c, t, tie_tol, spine_constants(g));
}

bool in_spine(Genus g, double c, double u, double tol, const SpineConstants& k) {
    require_in_F0(g, c, u * c);
    const double c_M = k.triple.c_M;
    if (c >= k.base.c1 - tol && c <= c_M + tol) {
        const double cc = std::clamp(c, k.base.c1, c_M);
        if (std::abs(u - u1(g, cc, k.base)) <= tol) return true;
    }
    if (c >= k.base.c0 - tol && c <= c_M + tol) {
        const double cc = std::clamp(c, k.base.c0, c_M);
        if (std::abs(u - u0(g, cc, k.base)) <= tol) return true;
    }
    return false;
}

bool in_spine(Genus g, double c, double u, double tol) {
    return in_spine(g, c, u, tol, spine_constants(g));
}

SpineArc trace_arc(Genus g, ArcKind kind, double c_hi, int n_samples, const SpineConstants& k) {
    if (n_samples < 2) throw PreconditionError("trace_arc needs at least 2 samples");
    if (!(c_hi <= kCMax)) throw PreconditionError("trace_arc c_hi exceeds the numeric window");
    const double c_lo = kind == ArcKind::BetaGamma ? k.base.c1 : k.base.c0;
    const double c_top = std::min(c_hi, k.triple.c_M);
    if (!(c_top > c_lo)) {
        std::ostringstream os;
        os << "trace_arc: upper end " << c_top << " not above the arc start " << c_lo;
        throw PreconditionError(os.str());
    }

    SpineArc arc{kind, {}, c_lo, c_top};
    arc.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double c = i == n_samples - 1
                             ? c_top
                             : c_lo + (c_top - c_lo) * static_cast<double>(i) / (n_samples - 1);
        try {
            const double u = kind == ArcKind::BetaGamma ? u1(g, c, k.base) : u0(g, c, k.base);
            arc.samples.push_back({g, c, u});
        } catch (const std::exception& e) {
            throw std::runtime_error("trace_arc sample " + std::to_string(i) + ": " + e.what());
        }
    }
    return arc;
}

SpineArc trace_arc(Genus g, ArcKind kind, double c_hi, int n_samples) {
    return trace_arc(g, kind, c_hi, n_samples, spine_constants(g));
}

}  // namespace tspine
