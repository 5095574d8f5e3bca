// tspine: lengths, constants, spine arcs, the fundamental domain and the
// claim checker from the command line. Data goes to stdout (or --out),
// diagnostics to stderr.
//
// exit codes: 0 ok, 1 verification failures, 2 usage errors, 3 runtime errors

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "output.hpp"
#include "tspine/constants.hpp"
#include "tspine/domain.hpp"
#include "tspine/geometry.hpp"
#include "tspine/spine.hpp"
#include "tspine/verify.hpp"

namespace {

using namespace tspine;
using namespace tspine::cli;
using nlohmann::json;

constexpr int kMaxGenus = 1000000;

// Usage errors found after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "json";
    std::string out;

    Format fmt() const { return format == "csv" ? Format::Csv : Format::Json; }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "Write output to FILE instead of stdout");
}

CLI::Option* add_genus(CLI::App* sub, int& g) {
    return sub->add_option("--genus", g, "Genus g >= 2")->required()->check(CLI::Range(2, kMaxGenus));
}

json pair_json(const CTPair& p) { return {{"c", num(p.c)}, {"t", num(p.t)}}; }

// ---- constants ------------------------------------------------------------

struct ConstantsArgs {
    Common common;
    int genus = 0;
};

void cmd_constants(const ConstantsArgs& a) {
    const Genus g(a.genus);
    const SpineConstants k = spine_constants(g);
    const double C = std::cosh(k.base.c_half / 2);
    Sink sink(a.common.out);
    if (a.common.fmt() == Format::Json) {
        sink.emit(json{{"genus", a.genus},
                       {"c0", num(k.base.c0)},
                       {"c1", num(k.base.c1)},
                       {"c_half", num(k.base.c_half)},
                       {"C", num(C)},
                       {"c_M", num(k.triple.c_M)},
                       {"u_M", num(k.triple.u_M)}});
    } else {
        Table t{{"genus", "c0", "c1", "c_half", "C", "c_M", "u_M"}, {}};
        t.add({static_cast<long long>(a.genus), k.base.c0, k.base.c1, k.base.c_half, C, k.triple.c_M,
               k.triple.u_M});
        sink.emit(t);
    }
}

// ---- lengths --------------------------------------------------------------

struct LengthsArgs {
    Common common;
    int genus = 0;
    double c = 0.0;
    std::optional<double> t;
    std::optional<double> u;
};

void cmd_lengths(const LengthsArgs& a) {
    if (a.t.has_value() == a.u.has_value()) throw UsageError("give exactly one of --t and --u");
    const Genus g(a.genus);
    if (!(a.c > 0.0)) throw UsageError("--c must be positive");
    const double c = a.c;
    const double t = a.t ? *a.t : *a.u * c;
    check_window(c);

    // beta and delta are only defined on the strip 0 <= t <= c.
    const bool strip = t >= 0.0 && t <= c;
    const double la = length(g, c, t, CurveClass::Alpha);
    const double lg = length(g, c, t, CurveClass::Gamma);
    const std::optional<double> lb = strip ? std::optional(length(g, c, t, CurveClass::Beta)) : std::nullopt;
    const std::optional<double> ld = strip ? std::optional(length(g, c, t, CurveClass::Delta)) : std::nullopt;
    const DualCoords d = dual_coords(g, c, t);

    Sink sink(a.common.out);
    if (a.common.fmt() == Format::Json) {
        sink.emit(json{{"genus", a.genus},
                       {"c", num(c)},
                       {"t", num(t)},
                       {"u", num(t / c)},
                       {"alpha", num(la)},
                       {"beta", num(lb)},
                       {"gamma", num(lg)},
                       {"delta", num(ld)},
                       {"s", num(d.s)},
                       {"c_alpha", num(d.c_alpha)},
                       {"t_alpha", num(d.t_alpha)},
                       {"s_alpha", num(d.s_alpha)}});
    } else {
        Table tab{{"genus", "c", "t", "u", "alpha", "beta", "gamma", "delta", "s", "c_alpha", "t_alpha", "s_alpha"},
                  {}};
        tab.add({static_cast<long long>(a.genus), c, t, t / c, la, opt_cell(lb), lg, opt_cell(ld), d.s, d.c_alpha,
                 d.t_alpha, d.s_alpha});
        sink.emit(tab);
    }
}

// ---- trace ----------------------------------------------------------------

struct TraceArgs {
    Common common;
    int genus = 0;
    std::string arc;
    int samples = 64;
};

void cmd_trace(const TraceArgs& a) {
    const Genus g(a.genus);
    const ArcKind kind = a.arc == "beta-gamma" ? ArcKind::BetaGamma : ArcKind::AlphaGamma;
    const SpineArc arc = trace_arc(g, kind, kCMax, a.samples, spine_constants(g));

    Sink sink(a.common.out);
    if (a.common.fmt() == Format::Json) {
        json rows = json::array();
        for (const SlopePoint& p : arc.samples) {
            const LengthReport l = lengths(g, p.c, p.t());
            rows.push_back({{"c", num(p.c)},
                            {"u", num(p.u)},
                            {"t", num(p.t())},
                            {"l_alpha", num(l.alpha)},
                            {"l_beta", num(l.beta)},
                            {"l_gamma", num(l.gamma)},
                            {"l_delta", num(l.delta)}});
        }
        sink.emit(rows);
    } else {
        Table tab{{"c", "u", "t", "l_alpha", "l_beta", "l_gamma", "l_delta"}, {}};
        for (const SlopePoint& p : arc.samples) {
            const LengthReport l = lengths(g, p.c, p.t());
            tab.add({p.c, p.u, p.t(), l.alpha, l.beta, l.gamma, l.delta});
        }
        sink.emit(tab);
    }
}

// ---- domain ---------------------------------------------------------------

struct DomainArgs {
    Common common;
    int genus = 0;
    int n = 128;
    double c_lo = 0.1;
    double c_hi = 6.0;
};

struct Polyline {
    std::string name;
    std::vector<CTPair> points;
};

void cmd_domain(const DomainArgs& a) {
    if (!(a.c_lo < a.c_hi)) throw UsageError("--c-min must be below --c-max");
    const Genus g(a.genus);
    const SpineConstants k = spine_constants(g);

    std::vector<Polyline> lines;
    for (BoundaryGeodesic b : kAllBoundaryGeodesics)
        lines.push_back({std::string(to_string(b)), boundary_samples(g, b, a.c_lo, a.c_hi, a.n)});
    for (ArcKind kind : {ArcKind::BetaGamma, ArcKind::AlphaGamma}) {
        Polyline pl{"spine_" + std::string(to_string(kind)), {}};
        for (const SlopePoint& p : trace_arc(g, kind, kCMax, a.n, k).samples) pl.points.push_back({p.c, p.t()});
        lines.push_back(std::move(pl));
    }

    Sink sink(a.common.out);
    if (a.common.fmt() == Format::Json) {
        json arr = json::array();
        for (const Polyline& pl : lines) {
            json pts = json::array();
            for (const CTPair& p : pl.points) {
                const HalfPlanePoint h = minsky_embed(p.c, p.t);
                pts.push_back({{"c", num(p.c)}, {"t", num(p.t)}, {"x", num(h.x)}, {"y", num(h.y)}});
            }
            arr.push_back({{"name", pl.name}, {"points", std::move(pts)}});
        }
        sink.emit(json{{"genus", a.genus},
                       {"triple_point", {{"c", num(k.triple.c_M)}, {"u", num(k.triple.u_M)}}},
                       {"polylines", std::move(arr)}});
    } else {
        Table tab{{"name", "index", "c", "t", "x", "y"}, {}};
        for (const Polyline& pl : lines) {
            long long i = 0;
            for (const CTPair& p : pl.points) {
                const HalfPlanePoint h = minsky_embed(p.c, p.t);
                tab.add({pl.name, i++, p.c, p.t, h.x, h.y});
            }
        }
        sink.emit(tab);
    }
}

// ---- orbit ----------------------------------------------------------------

struct OrbitArgs {
    Common common;
    int genus = 2;
    std::string word;
    std::string base;
};

CTPair parse_base(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--base expects C,T");
    const auto parse = [&](std::string part) {
        std::istringstream is(part);
        is.imbue(std::locale::classic());
        double v = 0.0;
        is >> v;
        if (!is || !(is >> std::ws).eof()) throw UsageError("--base: bad number '" + part + "'");
        return v;
    };
    return {parse(s.substr(0, comma)), parse(s.substr(comma + 1))};
}

void cmd_orbit(const OrbitArgs& a) {
    const Genus g(a.genus);
    MCGWord w;
    try {
        w = MCGWord::parse(a.word);
    } catch (const WordParseError& e) {
        throw UsageError(e.what());
    }
    CTPair base;
    if (a.base.empty()) {
        const TriplePoint tp = triple_point(g);
        base = {tp.c_M, tp.u_M * tp.c_M};
    } else {
        base = parse_base(a.base);
    }

    const Trajectory tr = apply_word(g, w, base.c, base.t);
    const Reduction red = reduce_to_F0(g, tr.final.c, tr.final.t);

    Sink sink(a.common.out);
    if (a.common.fmt() == Format::Json) {
        json traj = json::array();
        for (std::size_t i = 0; i < tr.points.size(); ++i) {
            const CTPair& p = tr.points[i];
            const HalfPlanePoint h = minsky_embed(p.c, p.t);
            json row = {{"step", i}, {"c", num(p.c)}, {"t", num(p.t)}, {"x", num(h.x)}, {"y", num(h.y)}};
            row["letter"] = i == 0 ? json(nullptr) : json(std::string(1, to_char(w.letters[i - 1])));
            traj.push_back(std::move(row));
        }
        sink.emit(json{{"genus", a.genus},
                       {"word", w.to_string()},
                       {"base", pair_json(base)},
                       {"trajectory", std::move(traj)},
                       {"final", pair_json(tr.final)},
                       {"reduction", {{"word", red.word.to_string()}, {"point", pair_json(red.point)}}}});
    } else {
        Table tab{{"kind", "step", "letter", "c", "t", "x", "y"}, {}};
        for (std::size_t i = 0; i < tr.points.size(); ++i) {
            const CTPair& p = tr.points[i];
            const HalfPlanePoint h = minsky_embed(p.c, p.t);
            tab.add({std::string("trajectory"), static_cast<long long>(i),
                     i == 0 ? Cell{} : Cell{std::string(1, to_char(w.letters[i - 1]))}, p.c, p.t, h.x, h.y});
        }
        const HalfPlanePoint h = minsky_embed(red.point.c, red.point.t);
        tab.add({std::string("reduced"), static_cast<long long>(red.word.size()), red.word.to_string(), red.point.c,
                 red.point.t, h.x, h.y});
        sink.emit(tab);
    }
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    Common common;
    std::vector<int> genus;
    int grid = 200;
    unsigned long long seed = 0;
    std::string claim;
};

int cmd_verify(const VerifyArgs& a) {
    VerifyConfig cfg;
    if (!a.genus.empty()) cfg.genus_list = a.genus;
    cfg.grid_n = a.grid;
    cfg.seed = a.seed;
    cfg.validate();

    std::vector<ClaimResult> results;
    if (a.claim.empty()) {
        results = run_all(cfg);
    } else {
        try {
            results = run_claim(a.claim, cfg);
        } catch (const UnknownClaimError& e) {
            throw UsageError(e.what());
        }
        if (results.empty()) throw UsageError("claim '" + a.claim + "' applies to none of the requested genera");
    }

    std::map<ClaimStatus, int> count;
    for (const ClaimResult& r : results) ++count[r.status];

    Sink sink(a.common.out);
    if (a.common.fmt() == Format::Json) {
        json claims = json::array();
        for (const ClaimResult& r : results) {
            claims.push_back({{"claim_id", r.claim_id},
                              {"genus", r.genus ? json(*r.genus) : json(nullptr)},
                              {"passed", r.passed},
                              {"status", std::string(to_string(r.status))},
                              {"worst_residual", num(r.worst_residual)},
                              {"witness", r.witness ? pair_json(*r.witness) : json(nullptr)},
                              {"details", r.details}});
        }
        sink.emit(json{{"seed", cfg.seed},
                       {"grid", cfg.grid_n},
                       {"genus_list", cfg.genus_list},
                       {"claims", std::move(claims)},
                       {"summary",
                        {{"total", results.size()},
                         {"passed", count[ClaimStatus::Passed]},
                         {"failed", count[ClaimStatus::Failed]},
                         {"inconclusive", count[ClaimStatus::Inconclusive]}}}});
    } else {
        Table tab{{"claim_id", "genus", "status", "passed", "worst_residual", "witness_c", "witness_t", "details"}, {}};
        for (const ClaimResult& r : results) {
            tab.add({r.claim_id, r.genus ? Cell{static_cast<long long>(*r.genus)} : Cell{},
                     std::string(to_string(r.status)), std::string(r.passed ? "true" : "false"), r.worst_residual,
                     r.witness ? Cell{r.witness->c} : Cell{}, r.witness ? Cell{r.witness->t} : Cell{}, r.details});
        }
        sink.emit(tab);
    }
    for (const ClaimResult& r : results)
        if (!r.passed)
            std::cerr << "tspine: claim " << r.claim_id << (r.genus ? " g=" + std::to_string(*r.genus) : "")
                      << " " << to_string(r.status) << ": " << r.details << '\n';
    return results.size() == static_cast<std::size_t>(count[ClaimStatus::Passed]) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thurston spine on the rotation-symmetric Teichmueller curve"};
    app.require_subcommand(1);

    ConstantsArgs ca;
    auto* s_const = app.add_subcommand("constants", "c0, c1, c_half and the triple point");
    add_genus(s_const, ca.genus);
    add_common(s_const, ca.common);

    LengthsArgs la;
    auto* s_len = app.add_subcommand("lengths", "Lengths of alpha, beta, gamma, delta at (c, t)");
    add_genus(s_len, la.genus);
    s_len->add_option("--c", la.c, "Cuff parameter c")->required();
    auto* opt_t = s_len->add_option("--t", la.t, "Twist t");
    auto* opt_u = s_len->add_option("--u", la.u, "Slope u, t = u c");
    opt_t->excludes(opt_u);
    add_common(s_len, la.common);

    TraceArgs ta;
    auto* s_trace = app.add_subcommand("trace", "Sample one spine arc");
    add_genus(s_trace, ta.genus);
    s_trace->add_option("--arc", ta.arc, "beta-gamma or alpha-gamma")
        ->required()
        ->check(CLI::IsMember({"beta-gamma", "alpha-gamma"}));
    s_trace->add_option("--samples", ta.samples, "Number of samples")->check(CLI::Range(2, 10000000))
        ->capture_default_str();
    add_common(s_trace, ta.common);

    DomainArgs da;
    auto* s_dom = app.add_subcommand("domain", "Boundary geodesics and spine arcs in the half-plane");
    add_genus(s_dom, da.genus);
    s_dom->add_option("--n", da.n, "Samples per polyline")->check(CLI::Range(2, 10000000))->capture_default_str();
    s_dom->add_option("--c-min", da.c_lo, "Lower end of the c range")
        ->check(CLI::Range(kCMin, kCMax))
        ->capture_default_str();
    s_dom->add_option("--c-max", da.c_hi, "Upper end of the c range")
        ->check(CLI::Range(kCMin, kCMax))
        ->capture_default_str();
    add_common(s_dom, da.common);

    OrbitArgs oa;
    auto* s_orbit = app.add_subcommand("orbit", "Apply a word in A,a,G,g,R,F and reduce back to F0");
    s_orbit->add_option("--genus", oa.genus, "Genus g >= 2")->check(CLI::Range(2, kMaxGenus))->capture_default_str();
    s_orbit->add_option("--word", oa.word, "Comma separated letters, applied left to right")->required();
    s_orbit->add_option("--base", oa.base, "Start point C,T (default: the triple point)");
    add_common(s_orbit, oa.common);

    VerifyArgs va;
    auto* s_ver = app.add_subcommand("verify", "Run the numerical claim checks");
    s_ver->add_option("--genus", va.genus, "Genus to check (repeatable; default 2 3 5)")
        ->check(CLI::Range(2, kMaxGenus));
    s_ver->add_option("--grid", va.grid, "Region grid side")->check(CLI::Range(8, 100000))->capture_default_str();
    s_ver->add_option("--seed", va.seed, "Seed for random sampling")->capture_default_str();
    s_ver->add_option("--claim", va.claim, "Run a single claim");
    add_common(s_ver, va.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*s_const) cmd_constants(ca);
        if (*s_len) cmd_lengths(la);
        if (*s_trace) cmd_trace(ta);
        if (*s_dom) cmd_domain(da);
        if (*s_orbit) cmd_orbit(oa);
        if (*s_ver) return cmd_verify(va);
    } catch (const UsageError& e) {
        std::cerr << "tspine: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "tspine: error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
