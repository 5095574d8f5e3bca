#pragma once

// Closed-form geodesic lengths on the Teichmueller curve of surfaces with an
// order-(g+1) rotation, in Fenchel-Nielsen coordinates (c, t) where c is half
// the cuff length and t the twist (length units).

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tspine {

/// Raised when an argument falls outside the supported numeric window or a
/// formula's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a caller violates an operation's precondition (e.g. the strip
/// 0 <= t <= c required by the beta and delta formulas).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Supported range of the half cuff length c. Outside it sinh/cosh overflow
/// or cancel in double precision.
inline constexpr double kCMin = 1e-6;
inline constexpr double kCMax = 50.0;

class Genus {
public:
    explicit Genus(int g);

    int value() const noexcept { return g_; }
    bool even() const noexcept { return g_ % 2 == 0; }

    /// cos(pi / (g + 1)); the right-hand side of the seam/cuff relation.
    double cos_angle() const noexcept { return cos_angle_; }

    friend bool operator==(const Genus& a, const Genus& b) noexcept { return a.g_ == b.g_; }

private:
    int g_;
    double cos_angle_;
};

struct FNPoint {
    Genus genus;
    double c;
    double t;

    double u() const noexcept { return t / c; }
};

struct DualCoords {
    double s;        // seam length w.r.t. gamma
    double c_alpha;  // half length of alpha
    double t_alpha;  // twist w.r.t. alpha; sign opposite to t
    double s_alpha;  // seam length w.r.t. alpha
};

enum class CurveClass { Alpha, Beta, Gamma, Delta };

inline constexpr std::array<CurveClass, 4> kAllCurveClasses = {
    CurveClass::Alpha, CurveClass::Beta, CurveClass::Gamma, CurveClass::Delta};

std::string_view to_string(CurveClass k) noexcept;

/// Single-component geodesic lengths of the four candidate multi-curves.
struct LengthReport {
    double alpha;
    double beta;
    double gamma;
    double delta;

    double operator[](CurveClass k) const noexcept;
};

/// Throws DomainError unless c lies in [kCMin, kCMax].
void check_window(double c);

/// Seam length s with cos(pi/(g+1)) = sinh(c/2) sinh(s/2).
double seam_length(Genus g, double c);

/// Length of one component of the given curve class at (c, t). Beta and Delta
/// require 0 <= t <= c; Gamma and Alpha accept any twist.
double length(Genus g, double c, double t, CurveClass k);

/// All four lengths at once. Requires 0 <= t <= c.
LengthReport lengths(Genus g, double c, double t);

/// l_beta(c, c) through 2 arccosh(2 cos^2(pi/(g+1)) + cosh s).
double length_beta_diag(Genus g, double c);

DualCoords dual_coords(Genus g, double c, double t);

struct CTPair {
    double c;
    double t;
};

/// The order-two map exchanging the gamma- and alpha-based coordinates:
/// (c, t) -> (c_alpha, t_alpha).
CTPair involution_f(Genus g, double c, double t);

namespace detail {

/// arccosh(cosh(a) * cosh(b)) for a, b >= 0 without cancellation near zero or
/// overflow for large arguments.
double acosh_cosh_product(double a, double b);

/// arccosh with inputs in [1 - 1e-12, 1) clamped to 1.
double safe_acosh(double x);

// Formula evaluations without window or strip checks. Used where a finite
// difference stencil steps marginally past the strip edge.
double alpha_length(Genus g, double c, double t);
double beta_length(Genus g, double c, double t);
double delta_length(Genus g, double c, double t);

}  // namespace detail

}  // namespace tspine
