#pragma once

// Fundamental domains F and F0, the half-plane picture of the Teichmueller
// curve, and the action of the generators D_alpha, D_gamma, r0 and f.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tspine/geometry.hpp"

namespace tspine {

struct HalfPlanePoint {
    double x;
    double y;
};

/// (c, t) -> t/c + i/c.
HalfPlanePoint minsky_embed(double c, double t);

/// Boundary tolerance for F and F0 membership.
inline constexpr double kBoundaryTol = 1e-12;

/// |t| <= c and |t_alpha| <= c_alpha.
bool in_F(Genus g, double c, double t);

/// in_F, t >= 0 and c <= c_alpha.
bool in_F0(Genus g, double c, double t);

enum class Letter { DA, DA_inv, DG, DG_inv, R0, F };

/// Word syntax: A = D_alpha, a = D_alpha^-1, G = D_gamma, g = D_gamma^-1,
/// R = r0, F = f.
char to_char(Letter l) noexcept;
Letter inverse(Letter l) noexcept;

class WordParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MCGWord {
    std::vector<Letter> letters;

    bool empty() const noexcept { return letters.empty(); }
    std::size_t size() const noexcept { return letters.size(); }

    MCGWord inverse() const;
    /// Comma separated, e.g. "A,G,a".
    std::string to_string() const;
    /// Accepts the comma separated syntax; whitespace around letters is ignored
    /// and the empty string is the identity.
    static MCGWord parse(std::string_view text);

    friend bool operator==(const MCGWord&, const MCGWord&) = default;
};

enum class BoundaryGeodesic { L_minus1, L_0, L_1, L_alpha_minus1, L_alpha_0, L_alpha_1, L_minus1_1 };

inline constexpr BoundaryGeodesic kAllBoundaryGeodesics[] = {
    BoundaryGeodesic::L_minus1,       BoundaryGeodesic::L_0,       BoundaryGeodesic::L_1,
    BoundaryGeodesic::L_alpha_minus1, BoundaryGeodesic::L_alpha_0, BoundaryGeodesic::L_alpha_1,
    BoundaryGeodesic::L_minus1_1};

std::string_view to_string(BoundaryGeodesic b) noexcept;

/// Samples of a boundary geodesic in (c, t) coordinates.
///
/// L_j (t = j c) is sampled at n values of c uniform on [c_lo, c_hi].
/// L_alpha_j (t_alpha = j c_alpha) is parametrized the same way by its dual
/// cuff c_alpha: the sample with c_alpha = c' is f(c', j c'), since f swaps
/// the two coordinate systems. A fixed c meets L_alpha_j in zero or two points,
/// so c itself is not a usable parameter there.
/// L_minus1_1 (c = c_alpha) is returned on its t >= 0 half, which bounds F0:
/// t = u0(c) c for c uniform on [max(c_lo, c0), c_hi]. The other half is its
/// image under r0.
std::vector<CTPair> boundary_samples(Genus g, BoundaryGeodesic tag, double c_lo, double c_hi, int n);

/// boundary_samples embedded in the upper half-plane.
std::vector<HalfPlanePoint> boundary_polyline(Genus g, BoundaryGeodesic tag, double c_lo, double c_hi,
                                              int n);

CTPair apply_letter(Genus g, Letter l, double c, double t);

struct Trajectory {
    CTPair final;
    /// Input followed by the point after each letter.
    std::vector<CTPair> points;
};

/// Applies letters left to right.
Trajectory apply_word(Genus g, const MCGWord& w, double c, double t);

class NonTerminationError : public std::runtime_error {
public:
    NonTerminationError(const std::string& what, CTPair last) : std::runtime_error(what), last_(last) {}
    CTPair last_state() const noexcept { return last_; }

private:
    CTPair last_;
};

struct Reduction {
    CTPair point;
    /// apply_word(word, input) == point.
    MCGWord word;
};

inline constexpr int kDefaultMaxSteps = 100000;

/// Maps (c, t) into F0 by greedy twists followed by the reflections r0 and f.
Reduction reduce_to_F0(Genus g, double c, double t, int max_steps = kDefaultMaxSteps);

}  // namespace tspine
