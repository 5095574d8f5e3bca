#include <doctest.h>

#include <cmath>

#include "tspine/domain.hpp"
#include "tspine/spine.hpp"

using namespace tspine;

namespace {

struct Frozen {
    int g;
    double c_M, u_M, u1_probe, u0_probe;  // u1(c1 + 0.2), u0(c0 + 0.3)
};

constexpr Frozen kFrozen[] = {
    {2, 1.5285709194809982, 0.6425622950915548, 0.41372318621261707, 0.7226687646841929},
    {3, 1.8238974892796844, 0.6769384364396739, 0.4546594102022673, 0.6805752763532736},
    {5, 2.0231900873394353, 0.6981372584158301, 0.4745883993231338, 0.6555319612734189},
};

}  // namespace

TEST_CASE("slopes and triple point match high precision values") {
    for (const Frozen& f : kFrozen) {
        const Genus g(f.g);
        const SpineConstants k = spine_constants(g);
        CAPTURE(f.g);
        CHECK(u1(g, k.base.c1 + 0.2) == doctest::Approx(f.u1_probe).epsilon(1e-12));
        CHECK(u0(g, k.base.c0 + 0.3) == doctest::Approx(f.u0_probe).epsilon(1e-12));
        CHECK(k.triple.c_M == doctest::Approx(f.c_M).epsilon(1e-11));
        CHECK(k.triple.u_M == doctest::Approx(f.u_M).epsilon(1e-10));
    }
}

TEST_CASE("u1 and u0 endpoints and domains") {
    const Genus g(3);
    const GenusConstants k = genus_constants(g);
    CHECK(u1(g, k.c1, k) == 1.0);
    CHECK(u0(g, k.c0, k) == 0.0);
    CHECK_THROWS_AS(u1(g, k.c1 - 1e-3, k), DomainError);
    CHECK_THROWS_AS(u0(g, k.c0 - 1e-3, k), DomainError);
    CHECK(u1(g, k.c_half, k) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("u1 decreases and u0 increases") {
    const Genus g(5);
    const GenusConstants k = genus_constants(g);
    double p1 = 2.0, p0 = -1.0;
    for (double c = k.c1; c < 6.0; c += 0.1) {
        const double a = u1(g, c, k);
        CHECK(a < p1);
        p1 = a;
    }
    for (double c = k.c0; c < 6.0; c += 0.1) {
        const double b = u0(g, c, k);
        CHECK(b > p0);
        p0 = b;
    }
}

TEST_CASE("traced arcs") {
    for (int gi : {2, 3, 5}) {
        const Genus g(gi);
        const SpineConstants k = spine_constants(g);
        const SpineArc bg = trace_arc(g, ArcKind::BetaGamma, kCMax, 64, k);
        const SpineArc ag = trace_arc(g, ArcKind::AlphaGamma, kCMax, 64, k);
        REQUIRE(bg.samples.size() == 64);
        CHECK(bg.samples.front().u == 1.0);
        CHECK(ag.samples.front().u == 0.0);
        CHECK(bg.samples.back().c == k.triple.c_M);
        CHECK(ag.samples.back().c == k.triple.c_M);
        for (const SlopePoint& p : bg.samples)
            CHECK(std::abs(length(g, p.c, p.t(), CurveClass::Beta) - 2.0 * p.c) < 1e-9);
        for (const SlopePoint& p : ag.samples)
            CHECK(std::abs(length(g, p.c, p.t(), CurveClass::Alpha) - 2.0 * p.c) < 1e-9);
    }
    CHECK_THROWS_AS(trace_arc(Genus(2), ArcKind::BetaGamma, kCMax, 1), PreconditionError);
    CHECK_THROWS_AS(trace_arc(Genus(2), ArcKind::BetaGamma, 1.0, 8), PreconditionError);
}

TEST_CASE("systole report at the triple point") {
    const Genus g(3);
    const SpineConstants k = spine_constants(g);
    const double t = k.triple.u_M * k.triple.c_M;
    const SystoleReport r = systole_report(g, k.triple.c_M, t, kDefaultTieTol, k);
    CHECK(r.contains(CurveClass::Alpha));
    CHECK(r.contains(CurveClass::Beta));
    CHECK(r.contains(CurveClass::Gamma));
    CHECK_FALSE(r.contains(CurveClass::Delta));
    CHECK(r.on_spine);
    CHECK(r.sys_length == doctest::Approx(2.0 * k.triple.c_M).epsilon(1e-12));
}

TEST_CASE("systole report off the spine") {
    const Genus g(3);
    const SystoleReport r = systole_report(g, 0.5, 0.25, kDefaultTieTol);
    CHECK(r.systoles.size() == 1);
    CHECK(r.contains(CurveClass::Gamma));
    CHECK_FALSE(r.on_spine);
    CHECK_THROWS_AS(systole_report(g, 1.0, -0.5, kDefaultTieTol), PreconditionError);
    CHECK_THROWS_AS(systole_report(g, 1.0, 0.5, 0.0), PreconditionError);
}

TEST_CASE("points on the arcs are recognised as spine points") {
    const Genus g(2);
    const SpineConstants k = spine_constants(g);
    const double c = 0.5 * (k.base.c1 + k.triple.c_M);
    CHECK(in_spine(g, c, u1(g, c, k.base), 1e-9, k));
    CHECK_FALSE(in_spine(g, c, u1(g, c, k.base) - 1e-3, 1e-9, k));
}
