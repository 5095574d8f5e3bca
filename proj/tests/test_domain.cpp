#include <doctest.h>

#include <cmath>
#include <random>

#include "tspine/constants.hpp"
#include "tspine/domain.hpp"
#include "tspine/spine.hpp"
#include "tspine/verify.hpp"

using namespace tspine;

TEST_CASE("minsky embedding") {
    const HalfPlanePoint p = minsky_embed(2.0, 1.0);
    CHECK(p.x == 0.5);
    CHECK(p.y == 0.5);
    CHECK_THROWS_AS(minsky_embed(0.0, 1.0), DomainError);
}

TEST_CASE("word parsing") {
    CHECK(MCGWord::parse("").empty());
    CHECK(MCGWord::parse("  ").empty());
    const MCGWord w = MCGWord::parse("A, a,G ,g,R,F");
    REQUIRE(w.size() == 6);
    CHECK(w.letters[0] == Letter::DA);
    CHECK(w.letters[5] == Letter::F);
    CHECK(w.to_string() == "A,a,G,g,R,F");
    CHECK(MCGWord::parse(w.to_string()) == w);
    CHECK(w.inverse().to_string() == "F,R,G,g,A,a");
    CHECK_THROWS_AS(MCGWord::parse("X"), WordParseError);
    CHECK_THROWS_AS(MCGWord::parse("A,,G"), WordParseError);
    CHECK_THROWS_AS(MCGWord::parse("AG"), WordParseError);
    CHECK_THROWS_AS(MCGWord::parse("A,"), WordParseError);
}

TEST_CASE("twist action") {
    const Genus g(2);
    const Trajectory tr = apply_word(g, MCGWord::parse("G"), 1.0, 0.3);
    CHECK(tr.final.c == 1.0);
    CHECK(tr.final.t == doctest::Approx(2.3).epsilon(1e-15));
    const Trajectory back = apply_word(g, MCGWord::parse("G,g"), 1.0, 0.3);
    CHECK(back.final.c == 1.0);
    CHECK(back.final.t == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(back.points.size() == 3);
}

TEST_CASE("reflections are involutions and D_alpha inverts") {
    const Genus g(3);
    for (const char* word : {"R,R", "F,F", "A,a", "a,A", "G,A,a,g"}) {
        const CTPair p = apply_word(g, MCGWord::parse(word), 1.1, 0.4).final;
        CAPTURE(word);
        CHECK(p.c == doctest::Approx(1.1).epsilon(1e-12));
        CHECK(p.t == doctest::Approx(0.4).epsilon(1e-12));
    }
}

TEST_CASE("D_alpha leaves the alpha length fixed") {
    const Genus g(2);
    for (double t : {-0.7, 0.0, 0.4, 1.3}) {
        const CTPair q = apply_letter(g, Letter::DA, 1.2, t);
        CHECK(length(g, q.c, q.t, CurveClass::Alpha) ==
              doctest::Approx(length(g, 1.2, t, CurveClass::Alpha)).epsilon(1e-12));
    }
}

TEST_CASE("window checks on the action") {
    CHECK_THROWS_AS(apply_letter(Genus(2), Letter::DG, 60.0, 0.0), DomainError);
}

TEST_CASE("membership") {
    const Genus g(2);
    const TriplePoint tp = triple_point(g);
    CHECK(in_F0(g, tp.c_M, tp.u_M * tp.c_M));
    CHECK(in_F(g, 1.0, -0.5));
    CHECK_FALSE(in_F0(g, 1.0, -0.5));
    CHECK_FALSE(in_F(g, 1.0, 1.5));
    // large c: the dual cuff is smaller than c, so the point is outside F0
    CHECK_FALSE(in_F0(g, 3.0, 0.1));
}

TEST_CASE("reduction of points already in F0 is the identity") {
    const Genus g(5);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const CTPair p = sampling::random_F0_interior(g, rng);
        CHECK(reduce_to_F0(g, p.c, p.t).word.empty());
    }
}

TEST_CASE("reduction lands in F0 and its word reproduces it") {
    const Genus g(2);
    for (double c : {0.4, 1.0, 2.5}) {
        for (double t : {-9.0, -1.0, 0.2, 3.3, 11.0}) {
            const Reduction r = reduce_to_F0(g, c, t);
            CHECK(in_F0(g, r.point.c, r.point.t));
            const CTPair q = apply_word(g, r.word, c, t).final;
            CHECK(q.c == doctest::Approx(r.point.c).epsilon(1e-12));
            CHECK(q.t == doctest::Approx(r.point.t).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("reduction step limit") {
    CHECK_THROWS_AS(reduce_to_F0(Genus(2), 1.0, 40.0, 3), NonTerminationError);
    try {
        reduce_to_F0(Genus(2), 1.0, 40.0, 3);
    } catch (const NonTerminationError& e) {
        CHECK(e.last_state().t == doctest::Approx(34.0));
    }
    CHECK_THROWS_AS(reduce_to_F0(Genus(2), 1.0, 0.5, 0), PreconditionError);
}

TEST_CASE("orbit from the triple point returns to it") {
    const Genus g(3);
    const TriplePoint tp = triple_point(g);
    const double t = tp.u_M * tp.c_M;
    const Trajectory tr = apply_word(g, MCGWord::parse("A,G,A,g"), tp.c_M, t);
    CHECK(tr.points.size() == 5);
    const Reduction r = reduce_to_F0(g, tr.final.c, tr.final.t);
    CHECK(r.point.c == doctest::Approx(tp.c_M).epsilon(1e-9));
    CHECK(r.point.t == doctest::Approx(t).epsilon(1e-9));
}

TEST_CASE("boundary samples") {
    const Genus g(2);
    for (const CTPair& p : boundary_samples(g, BoundaryGeodesic::L_1, 0.2, 5.0, 20)) {
        CHECK(minsky_embed(p.c, p.t).x == 1.0);
    }
    for (const CTPair& p : boundary_samples(g, BoundaryGeodesic::L_0, 0.2, 5.0, 20)) CHECK(p.t == 0.0);
    for (const CTPair& p : boundary_samples(g, BoundaryGeodesic::L_alpha_1, 0.2, 5.0, 20)) {
        const DualCoords d = dual_coords(g, p.c, p.t);
        CHECK(d.t_alpha == doctest::Approx(d.c_alpha).epsilon(1e-10));
    }
    const auto mid = boundary_samples(g, BoundaryGeodesic::L_minus1_1, 0.2, 5.0, 20);
    CHECK(mid.front().c == doctest::Approx(genus_constants(g).c0));
    for (const CTPair& p : mid) {
        CHECK(p.t >= 0.0);
        CHECK(dual_coords(g, p.c, p.t).c_alpha == doctest::Approx(p.c).epsilon(1e-10));
    }
    CHECK_THROWS_AS(boundary_samples(g, BoundaryGeodesic::L_0, 1.0, 1.0, 5), PreconditionError);
    CHECK_THROWS_AS(boundary_samples(g, BoundaryGeodesic::L_0, 0.1, 1.0, 1), PreconditionError);
}
