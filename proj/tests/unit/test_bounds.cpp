#include "spiky/bounds.hpp"
#include "spiky/error.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace spiky;

TEST_CASE("kl exponent examples")
{
    CHECK(bounds::kl_exponent(std::numbers::pi / 2) == 0.0);
    CHECK(bounds::kl_exponent(2 * 0.583808) == doctest::Approx(-std::log2(std::cos(0.583808))).epsilon(1e-5));
    CHECK(bounds::kl_exponent(1e-8) > 20.0);
    CHECK_THROWS_AS(bounds::kl_exponent(0.0), DomainError);
    CHECK_THROWS_AS(bounds::kl_exponent(1.6), DomainError);
}

TEST_CASE("covering exponent examples")
{
    CHECK(bounds::covering_exponent(std::numbers::pi / 3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bounds::covering_exponent(std::numbers::pi / 4) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bounds::covering_exponent(1e-8) < 1e-15);
    CHECK_THROWS_AS(bounds::covering_exponent(std::numbers::pi / 2), DomainError);
}

TEST_CASE("balancing root")
{
    const double a = bounds::solve_alpha(1e-6);
    CHECK(a >= 0.583807);
    CHECK(a <= 0.583809);
    CHECK(1.0 / std::cos(a) < 1.19851);
    CHECK(2 * a * 180 / std::numbers::pi == doctest::Approx(66.9).epsilon(0.05 / 66.9));
    CHECK_THROWS_AS(bounds::solve_alpha(0.0), DomainError);

    // Halving the tolerance moves the root by at most the tolerance.
    for (double tol : {1e-3, 1e-6, 1e-9}) CHECK(std::abs(bounds::solve_alpha(tol) - bounds::solve_alpha(tol / 2)) <= tol);
}

TEST_CASE("monotonicity on a fine grid")
{
    const int steps = 10000;
    double prev_f = INFINITY;
    double prev_g = -INFINITY;
    for (int i = 1; i < steps; ++i) {
        const double x = std::numbers::pi / 4 * i / steps;
        const double f = bounds::kl_exponent(2 * x);
        const double g = bounds::covering_exponent(x);
        CHECK(f < prev_f);
        CHECK(g > prev_g);
        prev_f = f;
        prev_g = g;
    }
    const double q = std::numbers::pi / 4;
    CHECK(bounds::kl_exponent(2 * q) - bounds::covering_exponent(q) == doctest::Approx(-0.5).epsilon(1e-9));
}

TEST_CASE("exponent report constants")
{
    const auto r = bounds::exponent_report();
    CHECK(r.gallai_upper == doctest::Approx(1.22474).epsilon(1e-5));
    CHECK(r.gallai_lower == doctest::Approx(1.15470).epsilon(1e-5));
    CHECK(r.bound_base < 1.19851 + 1e-5);
    CHECK(bounds::kl_exponent(2 * r.alpha_star) == doctest::Approx(bounds::covering_exponent(r.alpha_star)).epsilon(1e-9));
    CHECK(r.table.size() == 9);
}
