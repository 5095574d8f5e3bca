#include "tspine/domain.hpp"

#include <cmath>
#include <sstream>

#include "tspine/constants.hpp"
#include "tspine/spine.hpp"

namespace tspine {

HalfPlanePoint minsky_embed(double c, double t) {
    if (!(c > 0.0)) throw DomainError("minsky_embed needs c > 0");
    return {t / c, 1.0 / c};
}

bool in_F(Genus g, double c, double t) {
    if (std::abs(t) > c + kBoundaryTol) return false;
    const DualCoords d = dual_coords(g, c, t);
    return std::abs(d.t_alpha) <= d.c_alpha + kBoundaryTol;
}

bool in_F0(Genus g, double c, double t) {
    if (t < -kBoundaryTol || std::abs(t) > c + kBoundaryTol) return false;
    const DualCoords d = dual_coords(g, c, t);
    return std::abs(d.t_alpha) <= d.c_alpha + kBoundaryTol && c <= d.c_alpha + kBoundaryTol;
}

char to_char(Letter l) noexcept {
    switch (l) {
        case Letter::DA: return 'A';
        case Letter::DA_inv: return 'a';
        case Letter::DG: return 'G';
        case Letter::DG_inv: return 'g';
        case Letter::R0: return 'R';
        case Letter::F: return 'F';
    }
    return '?';
}

Letter inverse(Letter l) noexcept {
    switch (l) {
        case Letter::DA: return Letter::DA_inv;
        case Letter::DA_inv: return Letter::DA;
        case Letter::DG: return Letter::DG_inv;
        case Letter::DG_inv: return Letter::DG;
        case Letter::R0: return Letter::R0;
        case Letter::F: return Letter::F;
    }
    return l;
}

MCGWord MCGWord::inverse() const {
    MCGWord w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(tspine::inverse(*it));
    return w;
}

std::string MCGWord::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ',';
        s += to_char(letters[i]);
    }
    return s;
}

MCGWord MCGWord::parse(std::string_view text) {
    MCGWord w;
    const auto is_space = [](char ch) { return ch == ' ' || ch == '\t'; };
    std::size_t pos = 0;
    bool all_blank = true;
    for (char ch : text) all_blank = all_blank && is_space(ch);
    if (all_blank) return w;

    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && is_space(tok.front())) tok.remove_prefix(1);
        while (!tok.empty() && is_space(tok.back())) tok.remove_suffix(1);
        if (tok.size() != 1) throw WordParseError("bad word token '" + std::string(tok) + "'");
        switch (tok.front()) {
            case 'A': w.letters.push_back(Letter::DA); break;
            case 'a': w.letters.push_back(Letter::DA_inv); break;
            case 'G': w.letters.push_back(Letter::DG); break;
            case 'g': w.letters.push_back(Letter::DG_inv); break;
            case 'R': w.letters.push_back(Letter::R0); break;
            case 'F': w.letters.push_back(Letter::F); break;
            default: throw WordParseError("unknown letter '" + std::string(tok) + "'");
        }
        pos = comma + 1;
    }
    return w;
}

std::string_view to_string(BoundaryGeodesic b) noexcept {
    switch (b) {
        case BoundaryGeodesic::L_minus1: return "L_minus1";
        case BoundaryGeodesic::L_0: return "L_0";
        case BoundaryGeodesic::L_1: return "L_1";
        case BoundaryGeodesic::L_alpha_minus1: return "L_alpha_minus1";
        case BoundaryGeodesic::L_alpha_0: return "L_alpha_0";
        case BoundaryGeodesic::L_alpha_1: return "L_alpha_1";
        case BoundaryGeodesic::L_minus1_1: return "L_minus1_1";
    }
    return "?";
}

std::vector<CTPair> boundary_samples(Genus g, BoundaryGeodesic tag, double c_lo, double c_hi, int n) {
    if (n < 2) throw PreconditionError("boundary polyline needs n >= 2");
    if (!(c_lo < c_hi)) throw PreconditionError("boundary polyline needs c_lo < c_hi");
    check_window(c_lo);
    check_window(c_hi);

    double lo = c_lo;
    GenusConstants k{};
    if (tag == BoundaryGeodesic::L_minus1_1) {
        k = genus_constants(g);
        lo = std::max(c_lo, k.c0);
        if (!(lo < c_hi)) throw PreconditionError("L_minus1_1 starts at c0; range lies below it");
    }

    std::vector<CTPair> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double c = i == n - 1 ? c_hi : lo + (c_hi - lo) * static_cast<double>(i) / (n - 1);
        switch (tag) {
            case BoundaryGeodesic::L_minus1: out.push_back({c, -c}); break;
            case BoundaryGeodesic::L_0: out.push_back({c, 0.0}); break;
            case BoundaryGeodesic::L_1: out.push_back({c, c}); break;
            case BoundaryGeodesic::L_alpha_minus1: out.push_back(involution_f(g, c, -c)); break;
            case BoundaryGeodesic::L_alpha_0: out.push_back(involution_f(g, c, 0.0)); break;
            case BoundaryGeodesic::L_alpha_1: out.push_back(involution_f(g, c, c)); break;
            case BoundaryGeodesic::L_minus1_1: out.push_back({c, u0(g, c, k) * c}); break;
        }
    }
    return out;
}

std::vector<HalfPlanePoint> boundary_polyline(Genus g, BoundaryGeodesic tag, double c_lo, double c_hi,
                                              int n) {
    std::vector<HalfPlanePoint> out;
    for (const CTPair& p : boundary_samples(g, tag, c_lo, c_hi, n)) out.push_back(minsky_embed(p.c, p.t));
    return out;
}

CTPair apply_letter(Genus g, Letter l, double c, double t) {
    check_window(c);
    switch (l) {
        case Letter::DG: return {c, t + 2.0 * c};
        case Letter::DG_inv: return {c, t - 2.0 * c};
        case Letter::R0: return {c, -t};
        case Letter::F: return involution_f(g, c, t);
        case Letter::DA:
        case Letter::DA_inv: {
            // D_alpha is D_gamma read in the alpha-based coordinates: f D_gamma f.
            const CTPair d = involution_f(g, c, t);
            check_window(d.c);
            const double twist = l == Letter::DA ? 2.0 * d.c : -2.0 * d.c;
            return involution_f(g, d.c, d.t + twist);
        }
    }
    throw PreconditionError("unknown letter");
}

Trajectory apply_word(Genus g, const MCGWord& w, double c, double t) {
    Trajectory tr{{c, t}, {}};
    tr.points.reserve(w.size() + 1);
    tr.points.push_back({c, t});
    for (Letter l : w.letters) {
        tr.final = apply_letter(g, l, tr.final.c, tr.final.t);
        tr.points.push_back(tr.final);
    }
    return tr;
}

Reduction reduce_to_F0(Genus g, double c, double t, int max_steps) {
    if (max_steps < 1) throw PreconditionError("max_steps must be >= 1");
    Reduction r{{c, t}, {}};
    const auto step = [&](Letter l) {
        r.point = apply_letter(g, l, r.point.c, r.point.t);
        r.word.letters.push_back(l);
    };

    int steps = 0;
    for (;;) {
        if (std::abs(r.point.t) > r.point.c + kBoundaryTol) {
            step(r.point.t > 0.0 ? Letter::DG_inv : Letter::DG);
        } else {
            const DualCoords d = dual_coords(g, r.point.c, r.point.t);
            if (std::abs(d.t_alpha) <= d.c_alpha + kBoundaryTol) break;
            step(d.t_alpha > 0.0 ? Letter::DA_inv : Letter::DA);
        }
        if (++steps >= max_steps) {
            std::ostringstream os;
            os.precision(17);
            os << "reduction did not reach F after " << max_steps << " steps; last state c=" << r.point.c
               << " t=" << r.point.t;
            throw NonTerminationError(os.str(), r.point);
        }
    }

    if (r.point.t < -kBoundaryTol) step(Letter::R0);
    const DualCoords d = dual_coords(g, r.point.c, r.point.t);
    if (r.point.c > d.c_alpha + kBoundaryTol) {
        step(Letter::F);
        if (r.point.t < -kBoundaryTol) step(Letter::R0);
    }
    return r;
}

}  // namespace tspine
