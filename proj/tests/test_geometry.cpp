#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tspine/geometry.hpp"

using namespace tspine;

namespace {

// Literal textbook forms, fine away from the arccosh boundary.
double naive_seam(double K, double c) { return 2.0 * std::asinh(K / std::sinh(c / 2)); }

double naive_alpha(double K, double c, double t) {
    const double s = naive_seam(K, c);
    return 4.0 * std::acosh(std::cosh(s / 2) * std::cosh(t / 2));
}

double naive_beta(double K, double c, double t) {
    const double s = naive_seam(K, c);
    return 2.0 * std::acosh(std::cosh(s) * std::cosh(t / 2) * std::cosh(c - t / 2) -
                            std::sinh(t / 2) * std::sinh(c - t / 2));
}

double naive_delta(int g, double K, double c, double t) {
    const double s = naive_seam(K, c);
    const double m = g % 2 == 0 ? 4.0 * g + 4.0 : 2.0 * g + 2.0;
    return m * std::acosh(std::cosh(s / 2) * std::cosh((c - t) / 2));
}

double K_of(int g) { return std::cos(std::numbers::pi / (g + 1)); }

}  // namespace

TEST_CASE("genus validation") {
    CHECK_THROWS_AS(Genus(1), PreconditionError);
    CHECK_THROWS_AS(Genus(-4), PreconditionError);
    CHECK(Genus(2).even());
    CHECK_FALSE(Genus(3).even());
    CHECK(Genus(3).cos_angle() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("numeric window") {
    const Genus g(2);
    CHECK_THROWS_AS(seam_length(g, 0.0), DomainError);
    CHECK_THROWS_AS(seam_length(g, 1e-7), DomainError);
    CHECK_THROWS_AS(seam_length(g, 51.0), DomainError);
    CHECK_THROWS_AS(seam_length(g, std::nan("")), DomainError);
    CHECK_NOTHROW(seam_length(g, kCMin));
    CHECK_NOTHROW(seam_length(g, kCMax));
}

TEST_CASE("seam length against high precision values") {
    CHECK(seam_length(Genus(2), 1.0) == doctest::Approx(1.7049128323580137).epsilon(1e-14));
    CHECK(seam_length(Genus(3), 1.0) == doctest::Approx(2.2254196317613576).epsilon(1e-14));
    CHECK(seam_length(Genus(5), 1.0) == doctest::Approx(2.5627151712920881).epsilon(1e-14));
    // self-dual point: s = c where sinh^2(c/2) = cos(pi/3)
    const double c0 = 2.0 * std::asinh(std::sqrt(0.5));
    CHECK(seam_length(Genus(2), c0) == doctest::Approx(c0).epsilon(1e-14));
}

TEST_CASE("lengths against high precision values") {
    CHECK(length(Genus(2), 1.0, 1.0, CurveClass::Alpha) == doctest::Approx(4.066253280307896).epsilon(1e-14));
    CHECK(length(Genus(3), 1.0, 1.0, CurveClass::Alpha) == doctest::Approx(5.030663801180479).epsilon(1e-14));
    CHECK(length(Genus(5), 1.0, 1.0, CurveClass::Alpha) == doctest::Approx(5.675310643469338).epsilon(1e-14));
    CHECK(length(Genus(2), 1.0, 0.0, CurveClass::Beta) == doctest::Approx(4.315879814969434).epsilon(1e-14));
    CHECK(length(Genus(3), 1.0, 0.0, CurveClass::Beta) == doctest::Approx(5.331957457525312).epsilon(1e-14));
    CHECK(length(Genus(5), 1.0, 0.0, CurveClass::Beta) == doctest::Approx(5.999892230570763).epsilon(1e-14));
}

TEST_CASE("lengths agree with the literal formulas away from the boundary") {
    for (int gi : {2, 3, 4, 5, 8}) {
        const Genus g(gi);
        const double K = K_of(gi);
        for (double c : {0.3, 0.9, 1.7, 3.0, 6.0}) {
            for (double u : {0.05, 0.3, 0.5, 0.8, 0.97}) {
                const double t = u * c;
                CAPTURE(gi);
                CAPTURE(c);
                CAPTURE(u);
                CHECK(length(g, c, t, CurveClass::Alpha) == doctest::Approx(naive_alpha(K, c, t)).epsilon(1e-11));
                CHECK(length(g, c, t, CurveClass::Beta) == doctest::Approx(naive_beta(K, c, t)).epsilon(1e-11));
                CHECK(length(g, c, t, CurveClass::Delta) == doctest::Approx(naive_delta(gi, K, c, t)).epsilon(1e-11));
                CHECK(length(g, c, t, CurveClass::Gamma) == 2.0 * c);
            }
        }
    }
}

TEST_CASE("alpha at t = 0 is twice the seam") {
    for (int gi : {2, 3, 7}) {
        for (double c : {1e-6, 0.01, 1.0, 20.0, 50.0}) {
            const Genus g(gi);
            CHECK(length(g, c, 0.0, CurveClass::Alpha) == doctest::Approx(2.0 * seam_length(g, c)).epsilon(1e-14));
        }
    }
}

TEST_CASE("beta diagonal form matches the general formula") {
    for (int gi : {2, 3, 5, 11}) {
        for (double c : {1e-4, 0.1, 1.0, 4.0, 12.0, 40.0}) {
            const Genus g(gi);
            CHECK(length_beta_diag(g, c) == doctest::Approx(length(g, c, c, CurveClass::Beta)).epsilon(1e-10));
        }
    }
}

TEST_CASE("beta and delta reject twists outside the strip") {
    const Genus g(2);
    CHECK_THROWS_AS(length(g, 1.0, -0.1, CurveClass::Beta), PreconditionError);
    CHECK_THROWS_AS(length(g, 1.0, 1.1, CurveClass::Delta), PreconditionError);
    CHECK_THROWS_AS(lengths(g, 1.0, 1.5), PreconditionError);
    CHECK_NOTHROW(length(g, 1.0, -3.0, CurveClass::Alpha));
    CHECK(length(g, 1.0, -0.4, CurveClass::Alpha) == length(g, 1.0, 0.4, CurveClass::Alpha));
}

TEST_CASE("delta multiplicity by parity") {
    // g even: (4g+4) copies of the arccosh term, g odd: (2g+2)
    for (int gi : {2, 3, 4, 5}) {
        const Genus g(gi);
        const double per = std::acosh(std::cosh(seam_length(g, 1.0) / 2) * std::cosh(0.25));
        const double m = gi % 2 == 0 ? 4.0 * gi + 4 : 2.0 * gi + 2;
        CHECK(length(g, 1.0, 0.5, CurveClass::Delta) == doctest::Approx(m * per).epsilon(1e-13));
    }
}

TEST_CASE("dual coordinates satisfy the defining relations") {
    const Genus g(3);
    const double K = g.cos_angle();
    for (double c : {0.05, 0.7, 2.0, 9.0}) {
        for (double t : {-1.5 * c, -0.2 * c, 0.3 * c, c, 1.9 * c}) {
            const DualCoords d = dual_coords(g, c, t);
            CHECK(std::sinh(c / 2) * std::sinh(d.s / 2) == doctest::Approx(K).epsilon(1e-13));
            CHECK(std::cosh(d.c_alpha / 2) ==
                  doctest::Approx(std::cosh(d.s / 2) * std::cosh(t / 2)).epsilon(1e-13));
            CHECK(std::sinh(d.c_alpha / 2) * std::sinh(d.s_alpha / 2) == doctest::Approx(K).epsilon(1e-13));
            CHECK(std::cosh(c / 2) ==
                  doctest::Approx(std::cosh(d.s_alpha / 2) * std::cosh(d.t_alpha / 2)).epsilon(1e-12));
            CHECK(t * d.t_alpha < 0.0);
        }
    }
    CHECK(dual_coords(g, 1.0, 0.0).t_alpha == 0.0);
}

TEST_CASE("self-dual point on L0") {
    const Genus g(2);
    const double c0 = 2.0 * std::asinh(std::sqrt(0.5));
    const DualCoords d = dual_coords(g, c0, 0.0);
    CHECK(d.c_alpha == doctest::Approx(c0).epsilon(1e-14));
    CHECK(d.t_alpha == 0.0);
}

TEST_CASE("involution is its own inverse, including far from the origin") {
    for (int gi : {2, 5}) {
        const Genus g(gi);
        for (double c : {1e-3, 0.1, 1.0, 8.0, 20.0}) {
            for (double u : {-1.8, -0.5, 0.0, 0.25, 1.0, 1.7}) {
                const CTPair y = involution_f(g, c, u * c);
                const CTPair z = involution_f(g, y.c, y.t);
                CHECK(z.c == doctest::Approx(c).epsilon(1e-10));
                CHECK(z.t == doctest::Approx(u * c).epsilon(1e-10).scale(c));
            }
        }
    }
}

TEST_CASE("stable helpers") {
    CHECK(detail::acosh_cosh_product(0.0, 0.0) == 0.0);
    CHECK(detail::acosh_cosh_product(1.2, 0.0) == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(detail::acosh_cosh_product(0.3, 0.4) ==
          doctest::Approx(std::acosh(std::cosh(0.3) * std::cosh(0.4))).epsilon(1e-14));
    // log-space branch: cosh a cosh b ~ e^(a+b)/4
    CHECK(detail::acosh_cosh_product(300.0, 400.0) == doctest::Approx(700.0 - std::log(2.0)).epsilon(1e-15));
    CHECK(detail::safe_acosh(1.0 - 1e-13) == 0.0);
    CHECK_THROWS_AS(detail::safe_acosh(0.9), DomainError);
}

TEST_CASE("partial derivatives: analytic beta slope vanishes at t = c") {
    // l_beta(c, t) = l_beta(c, 2c - t): the t-derivative at t = c is zero.
    const Genus g(2);
    for (double c : {0.5, 1.0, 3.0}) {
        const double h = 1e-3;
        CHECK(detail::beta_length(g, c, c - h) == doctest::Approx(detail::beta_length(g, c, c + h)).epsilon(1e-13));
    }
}
