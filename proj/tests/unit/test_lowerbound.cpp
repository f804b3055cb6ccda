#include "oracles.hpp"
#include "spiky/error.hpp"
#include "spiky/lowerbound.hpp"
#include "spiky/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace spiky;

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

TEST_CASE("separated sets stay in the window")
{
    for (int n = 3; n <= 6; ++n) {
        const auto x = construct_separated_set(n, 12, n);
        CHECK_NOTHROW(validate_separated(x, 0.0));
        for (std::size_t i = 0; i < x.points.size(); ++i) {
            for (std::size_t j = i + 1; j < x.points.size(); ++j) {
                const double d = angular_distance(x.points[i], x.points[j]);
                CHECK(d >= kPi / 3);
                CHECK(d <= 2 * kPi / 3);
            }
        }
    }
    const auto one = construct_separated_set(3, 1, 0);
    CHECK(one.points.size() == 1);
    CHECK(one.reached_target);
    CHECK_THROWS_AS(construct_separated_set(2, 3, 0), DomainError);
    SeparatedSetParams bad;
    bad.epsilon = kPi / 6;
    CHECK_THROWS_AS(construct_separated_set(3, 3, 0, bad), DomainError);
}

TEST_CASE("budget exhaustion is flagged")
{
    SeparatedSetParams p;
    p.max_draws = 50;
    const auto x = construct_separated_set(3, 500, 1, p);
    CHECK_FALSE(x.reached_target);
    CHECK(x.points.size() < 500);
    CHECK(x.draws == 50);
}

TEST_CASE("three orthonormal axes reach six symmetric points")
{
    SeparatedSet x{3, {}, 0.0, true, 0};
    for (int i = 0; i < 3; ++i) x.points.emplace_back(Vector::basis(3, i));
    const auto y = symmetrize(x);
    CHECK(y.points.size() == 6);
    CHECK(oracle::min_pairwise_angle(y.points) == doctest::Approx(kPi / 2));
    // Greedy sampling stalls well below the six equiangular lines of the icosahedron.
    const auto sampled = construct_separated_set(3, 3, 4);
    CHECK(sampled.reached_target);
}

TEST_CASE("symmetrization")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto x = construct_separated_set(5, 10, seed);
        const auto y = symmetrize(x);
        CHECK(y.points.size() == 2 * x.points.size());
        CHECK(oracle::min_pairwise_angle(y.points) >= kPi / 3 - 1e-12);
        for (const auto& p : y.points) {
            const UnitVector neg = -p;
            CHECK(std::count(y.points.begin(), y.points.end(), neg) == 1);
        }
    }
    SeparatedSet close{3, {UnitVector(Vector::basis(3, 0)), UnitVector::normalized(Vector{1.0, 0.1, 0.0})}, 0.0, true, 0};
    CHECK_THROWS_AS(symmetrize(close), PreconditionError);
}

TEST_CASE("lower-bound body")
{
    const auto y = symmetrize(construct_separated_set(4, 10, 3));
    const auto k = build_lower_bound_body(y);
    for (const auto& v : k.vertices()) CHECK(v.norm() == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-14));
    for (const auto& v : k.vertices()) CHECK(base_cap(v).angular_radius == doctest::Approx(kPi / 6).epsilon(1e-12));
    CHECK(oracle::caps_disjoint(k.vertices(), 1e-9));
    // Central symmetry.
    for (const auto& v : k.vertices()) CHECK(std::count(k.vertices().begin(), k.vertices().end(), -v) == 1);
}

TEST_CASE("illumination multiplicity")
{
    const auto y = symmetrize(construct_separated_set(4, 12, 8));
    CHECK(illumination_multiplicity(y, -y.points[0]) == 1);
    {
        SeparatedSet x{3, {UnitVector(Vector::basis(3, 0))}, 0.0, true, 0};
        const auto two = symmetrize(x);
        CHECK(illumination_multiplicity(two, UnitVector(Vector::basis(3, 1))) == 0);
        const auto rep = multiplicity_report(two, 2000, 1);
        CHECK(rep.max == 1);
        REQUIRE(rep.witness.has_value());
        CHECK(*rep.witness == 2.0);
    }
    Rng rng(5);
    for (int s = 0; s < 2000; ++s) {
        const UnitVector u(Vector(rng.unit_vector(4)));
        const auto m = illumination_multiplicity(y, u);
        CHECK(m == oracle::brute_multiplicity(y.points, u));
        CHECK(m <= y.points.size());
        // The count for -u equals the count for u over the negated labels.
        CHECK(illumination_multiplicity(y, -u) == oracle::brute_multiplicity(y.points, -u));
        std::vector<UnitVector> relabeled;
        for (const auto& p : y.points) relabeled.push_back(-p);
        CHECK(oracle::brute_multiplicity(relabeled, -u) == m);
    }
}

TEST_CASE("multiplicity report")
{
    const auto y = symmetrize(construct_separated_set(5, 15, 2));
    const auto a = multiplicity_report(y, 3000, 9);
    const auto b = multiplicity_report(y, 3000, 9);
    CHECK(a.histogram == b.histogram);
    CHECK(a.max == b.max);
    std::size_t total = 0;
    for (auto h : a.histogram) total += h;
    CHECK(total == 3000);
    REQUIRE(a.witness.has_value());
    CHECK(*a.witness == doctest::Approx(static_cast<double>(y.points.size()) / a.max));
    REQUIRE(a.argmax.has_value());
    CHECK(illumination_multiplicity(y, *a.argmax) == a.max);
    CHECK_THROWS_AS(multiplicity_report(y, 0, 1), DomainError);
}
