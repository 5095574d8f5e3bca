#include <doctest.h>

#include <cmath>

#include "tspine/roots.hpp"

using namespace tspine;

TEST_CASE("bisection finds closed-form roots") {
    const double r = find_root([](double x) { return std::cosh(x) - 2.0; }, 0.0, 3.0);
    CHECK(r == doctest::Approx(std::acosh(2.0)).epsilon(1e-12));
    const double r2 = find_root([](double x) { return std::pow(std::sinh(x / 2), 2) - 0.5; }, 0.5, 2.0);
    CHECK(r2 == doctest::Approx(2.0 * std::asinh(std::sqrt(0.5))).epsilon(1e-12));
}

TEST_CASE("brent agrees with bisection") {
    const ScalarFn f = [](double x) { return x * x * x - 2.0 * x - 5.0; };
    CHECK(find_root_brent(f, 2.0, 3.0) == doctest::Approx(find_root(f, 2.0, 3.0)).epsilon(1e-12));
    CHECK(find_root_brent(f, 3.0, 2.0) == doctest::Approx(2.0945514815423265).epsilon(1e-12));
}

TEST_CASE("tight config reaches machine resolution") {
    const double r = find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0, kTightSolver);
    CHECK(std::abs(r - std::sqrt(2.0)) <= 4.5e-16);
}

TEST_CASE("endpoint roots are returned exactly") {
    CHECK(find_root([](double x) { return x - 1.0; }, 1.0, 2.0) == 1.0);
    CHECK(find_root([](double x) { return x - 2.0; }, 1.0, 2.0) == 2.0);
    CHECK(find_root_brent([](double x) { return x - 2.0; }, 1.0, 2.0) == 2.0);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoSignChangeError);
    CHECK_THROWS_AS(find_root_brent([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoSignChangeError);
    SolverConfig few{1e-300, 1e-300, 3};
    CHECK_THROWS_AS(find_root([](double x) { return x - 0.3; }, 0.0, 1.0, few), MaxIterationsError);
    SolverConfig bad{-1.0, 0.0, 10};
    CHECK_THROWS(bad.validate());
    CHECK_THROWS(find_root([](double x) { return x; }, -1.0, 1.0, bad));
}

TEST_CASE("upward bracket expansion") {
    const ScalarFn f = [](double x) { return 7.3 - x; };
    const Bracket b = expand_upward(f, 0.1, 1.0, 50.0);
    CHECK(b.lo <= 7.3);
    CHECK(b.hi >= 7.3);
    CHECK(f(b.lo) * f(b.hi) <= 0.0);
    CHECK_THROWS_AS(expand_upward(f, 0.1, 1.0, 5.0), NoSignChangeError);
}
