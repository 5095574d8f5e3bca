#pragma once

// The two implicit arcs making up the spine inside the fundamental domain:
//   u1(c): slope u = t/c with l_beta = l_gamma, defined for c >= c1,
//   u0(c): slope with l_alpha = l_gamma, defined for c >= c0,
// joined at the unique point where alpha, beta and gamma all have the same
// length.

#include <string_view>
#include <vector>

#include "tspine/constants.hpp"
#include "tspine/geometry.hpp"

namespace tspine {

struct SlopePoint {
    Genus genus;
    double c;
    double u;

    double t() const noexcept { return c * u; }
};

enum class ArcKind { BetaGamma, AlphaGamma };

std::string_view to_string(ArcKind k) noexcept;

struct SpineArc {
    ArcKind kind;
    std::vector<SlopePoint> samples;
    double c_lo;
    double c_hi;
};

struct TriplePoint {
    double c_M;
    double u_M;
    /// u0(c_M); equals u_M up to solver resolution.
    double u0_at_c_M;
};

struct SystoleReport {
    double sys_length;
    std::vector<CurveClass> systoles;
    LengthReport lengths;
    double tie_tol;
    /// True when the point lies on one of the two spine arcs, where the four
    /// families are proven to contain every systole. Elsewhere the report is
    /// only the minimum over the four candidate families.
    bool on_spine;

    bool contains(CurveClass k) const noexcept;
};

inline constexpr double kDefaultTieTol = 1e-9;

/// Constants plus the triple point, computed once per genus.
struct SpineConstants {
    GenusConstants base;
    TriplePoint triple;
};

SpineConstants spine_constants(Genus g);

/// Unique u in (0, 1] with l_beta(c, c u) = 2c. Requires c >= c1 - 1e-12.
double u1(Genus g, double c, const GenusConstants& k);
double u1(Genus g, double c);

/// Unique u in [0, 1) with l_alpha(c, c u) = 2c. Requires c >= c0 - 1e-12.
double u0(Genus g, double c, const GenusConstants& k);
double u0(Genus g, double c);

TriplePoint triple_point(Genus g, const GenusConstants& k);
TriplePoint triple_point(Genus g);

/// Minimum of the four candidate lengths at (c, t); requires 0 <= t <= c.
double candidate_systole(Genus g, double c, double t);

/// Requires (c, t) inside F0 and tie_tol > 0.
SystoleReport systole_report(Genus g, double c, double t, double tie_tol, const SpineConstants& k);
SystoleReport systole_report(Genus g, double c, double t, double tie_tol = kDefaultTieTol);

/// Membership of (c, u c) in the union of the two arcs, each widened by tol in
/// c and u. Requires (c, u c) inside F0.
bool in_spine(Genus g, double c, double u, double tol, const SpineConstants& k);
bool in_spine(Genus g, double c, double u, double tol);

/// Samples an arc uniformly in c on [c_lo(kind), min(c_hi, c_M)]. Each sample
/// is solved independently; u is not assumed monotone in c.
SpineArc trace_arc(Genus g, ArcKind kind, double c_hi, int n_samples, const SpineConstants& k);
SpineArc trace_arc(Genus g, ArcKind kind, double c_hi, int n_samples);

}  // namespace tspine
