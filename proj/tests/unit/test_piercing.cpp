#include "oracles.hpp"
#include "spiky/error.hpp"
#include "spiky/piercing.hpp"
#include "spiky/random.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace spiky;

namespace {

BallFamily family(int n, std::vector<Ball> balls)
{
    return BallFamily(n, std::move(balls));
}

} // namespace

TEST_CASE("normalization examples")
{
    {
        const auto [f, sim] = normalize_family(family(2, {Ball(Vector{3.0, 3.0}, 2.0)}));
        CHECK(f.balls[0].center == Vector{0.0, 0.0});
        CHECK(f.balls[0].radius == 1.0);
        CHECK(sim.scale == 2.0);
        CHECK(sim.apply(Vector{0.0, 0.0}) == Vector{3.0, 3.0});
    }
    {
        const auto [f, sim] = normalize_family(family(2, {Ball(Vector{0.0, 0.0}, 1.0), Ball(Vector{0.5, 0.0}, 3.0)}));
        CHECK(sim.scale == 1.0);
        CHECK(sim.offset == Vector{0.0, 0.0});
        CHECK(f.balls[1].center == Vector{0.5, 0.0});
    }
    {
        const auto [f, sim] = normalize_family(family(2, {Ball(Vector{0.0, 0.0}, 2.0), Ball(Vector{1.0, 0.0}, 4.0)}));
        CHECK(f.balls[0] == Ball(Vector{0.0, 0.0}, 1.0));
        CHECK(f.balls[1] == Ball(Vector{0.5, 0.0}, 2.0));
    }
    CHECK_THROWS_AS(family(2, {}), DomainError);
    CHECK_THROWS_AS(family(2, {Ball(Vector{0.0, 0.0, 0.0}, 1.0)}), DimensionMismatch);
}

TEST_CASE("cap overlap radius")
{
    CHECK(cap_overlap_radius(2.0, 3) == doctest::Approx(std::acos(0.75)).epsilon(1e-15));
    CHECK(cap_overlap_radius(2.0, 3) == doctest::Approx(0.7227342478).epsilon(1e-9));
    CHECK(cap_overlap_radius(1e12, 3) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-9));
    CHECK(cap_overlap_radius(INFINITY, 3) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-15));
    CHECK(cap_overlap_radius(5.0, 5) == doctest::Approx(std::acos(15.0 / 24.0)).epsilon(1e-15));
    CHECK_THROWS_AS(cap_overlap_radius(1.9, 3), DomainError);
    // The radius grows with r towards pi/3.
    double prev = 0.0;
    for (double r = 2.0; r < 100.0; r += 0.5) {
        CHECK(cap_overlap_radius(r, 3) > prev);
        prev = cap_overlap_radius(r, 3);
    }
}

TEST_CASE("scale count")
{
    CHECK(scale_count(std::sqrt(2.0), 2.0) == 3);
    for (int n = 2; n <= 10; ++n) {
        const double lambda = 1.0 / std::sqrt(1.0 - 1.0 / n);
        const int t = scale_count(lambda, n);
        CHECK(std::pow(lambda, t) > n);
        CHECK(std::pow(lambda, t - 1) <= n * (1 + 1e-12));
    }
    CHECK_THROWS_AS(scale_count(1.0, 2.0), DomainError);
}

TEST_CASE("sphere layer in the plane")
{
    PiercingConfig cfg;
    const auto pts = pierce_large(2, cfg);
    CHECK(pts.size() == 5);
    for (const auto& p : pts) CHECK(p.norm() == doctest::Approx(2.0).epsilon(1e-14));
    const Ball tangent(Vector{3.0, 0.0}, 2.0);
    bool hit = false;
    for (const auto& p : pts) hit = hit || point_in_ball(p, tangent);
    CHECK(hit);
}

TEST_CASE("sphere layer pierces every large ball meeting the unit ball")
{
    Rng rng(21);
    for (int n = 2; n <= 4; ++n) {
        PiercingConfig cfg;
        cfg.seed = 3;
        const auto pts = pierce_large(n, cfg);
        for (int trial = 0; trial < 300; ++trial) {
            const double r = n + rng.uniform() * 40.0;
            const Vector u(rng.unit_vector(n));
            const Ball b(u * ((1.0 + r) * rng.uniform(0.2, 1.0)), r);
            bool hit = false;
            for (const auto& p : pts) hit = hit || point_in_ball(p, b);
            CHECK(hit);
        }
    }
}

TEST_CASE("covering points by balls")
{
    Rng rng(4);
    {
        const std::vector<Vector> one{Vector{1.0, 2.0}};
        const auto c = cover_points_by_balls(one, 0.5, 0);
        REQUIRE(c.size() == 1);
        CHECK(c[0] == one[0]);
    }
    {
        std::vector<Vector> cluster;
        for (int i = 0; i < 20; ++i) cluster.push_back(Vector(rng.in_unit_ball(3)) * 0.99);
        const auto c = cover_points_by_balls(cluster, 2.0, 1);
        CHECK(c.size() <= 2);
    }
    {
        std::vector<Vector> pts;
        for (int i = 0; i < 100; ++i) pts.push_back(Vector(rng.in_unit_ball(3)) * 2.0);
        const auto c = cover_points_by_balls(pts, 1.0, 2);
        for (const auto& p : pts) {
            double best = INFINITY;
            for (const auto& q : c) best = std::min(best, distance(p, q));
            CHECK(best <= 1.0);
        }
        CHECK(cover_points_by_balls(pts, 1.0, 2) == c);
    }
    CHECK_THROWS_AS(cover_points_by_balls({}, 1.0, 0), DomainError);
}

TEST_CASE("refined cover of a ball")
{
    {
        const auto r = refine_ball_cover(Vector{0.0, 0.0}, 1.0);
        CHECK(r.centers.size() == 4);
        CHECK(r.radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
        CHECK(r.centers[0][0] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    }
    {
        const auto r = refine_ball_cover(Vector::zero(4), 1.0);
        const Vector p{0.5, 0.5, 0.5, 0.5};
        CHECK(distance(p, r.centers[0]) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
        CHECK(r.radius == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    }
    Rng rng(6);
    for (int n = 2; n <= 7; ++n) {
        const Vector c(rng.unit_vector(n));
        const auto r = refine_ball_cover(c * 3.0, 2.5);
        for (int s = 0; s < 2000; ++s) {
            const Vector p = c * 3.0 + Vector(rng.in_unit_ball(n)) * 2.5;
            double best = INFINITY;
            for (const auto& q : r.centers) best = std::min(best, distance(p, q));
            CHECK(best <= r.radius + 1e-12);
        }
    }
}

TEST_CASE("pierce examples")
{
    {
        const auto set = pierce(family(2, {Ball(Vector{0.0, 0.0}, 1.0)}));
        REQUIRE(set.points.size() == 1);
        CHECK(set.points[0] == Vector{0.0, 0.0});
        CHECK(set.sources[0] == -1);
        CHECK(verify_piercing(family(2, {Ball(Vector{0.0, 0.0}, 1.0)}), {Vector{0.0, 0.0}}).ok);
    }
    {
        const auto f = family(2, {Ball(Vector{0.0, 0.0}, 1.0), Ball(Vector{5.5, 0.0}, 5.0)});
        const auto set = pierce(f);
        CHECK(verify_piercing(f, set.points).ok);
        CHECK(set.accounting.large_balls == 1);
        CHECK(set.accounting.sphere_layer == 5);
        CHECK(set.accounting.t == 3);
        CHECK(set.accounting.lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        bool layer_hits = false;
        for (std::size_t i = 0; i < set.points.size(); ++i)
            if (set.sources[i] == 0) layer_hits = layer_hits || point_in_ball(set.points[i], f.balls[1]);
        CHECK(layer_hits);
    }
}

TEST_CASE("pierce rejects families that are not pairwise intersecting")
{
    const auto f = family(2, {Ball(Vector{0.0, 0.0}, 1.0), Ball(Vector{3.1, 0.0}, 2.0)});
    CHECK_THROWS_AS(pierce(f), PreconditionError);
    const auto pair = find_disjoint_pair(f);
    REQUIRE(pair.has_value());
    CHECK(pair->first == 0);
    CHECK(pair->second == 1);
    PiercingConfig bad;
    bad.lambda = 2.0;
    CHECK_THROWS_AS(pierce(family(2, {Ball(Vector{0.0, 0.0}, 1.0)}), bad), DomainError);
    bad.lambda.reset();
    bad.large_threshold = 1.5;
    CHECK_THROWS_AS(pierce(family(2, {Ball(Vector{0.0, 0.0}, 1.0)}), bad), DomainError);
}

TEST_CASE("verify_piercing examples")
{
    const auto f = family(2, {Ball(Vector{0.0, 0.0}, 1.0), Ball(Vector{3.0, 0.0}, 2.0)});
    std::vector<Vector> centers;
    for (const auto& b : f.balls) centers.push_back(b.center);
    CHECK(verify_piercing(f, centers).ok);
    const auto miss = verify_piercing(f, {Vector{10.0, 10.0}});
    CHECK_FALSE(miss.ok);
    CHECK(miss.unpierced == 0u);
    CHECK_THROWS_AS(verify_piercing(f, {Vector{0.0, 0.0, 0.0}}), DimensionMismatch);
}

TEST_CASE("pierce soundness, accounting and determinism on random families")
{
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 3;
        const auto f = oracle::random_intersecting_family(n, 50, 4.0 * n, 100 + trial);
        PiercingConfig cfg;
        cfg.seed = trial;
        const auto set = pierce(f, cfg);
        CHECK(verify_piercing(f, set.points).ok);
        std::size_t expect = set.accounting.sphere_layer;
        for (const auto& s : set.accounting.scales) expect += 2 * static_cast<std::size_t>(n) * s.cover_count;
        CHECK(set.points.size() == expect);
        CHECK(set.accounting.total == expect);
        CHECK(pierce(f, cfg).points == set.points);
    }
}

TEST_CASE("pierce commutes with similarities")
{
    const auto f = oracle::random_intersecting_family(3, 40, 12.0, 7);
    std::vector<Ball> moved;
    const Vector shift{4.0, -2.0, 1.0};
    for (const auto& b : f.balls) moved.emplace_back(b.center * 2.0 + shift, b.radius * 2.0);
    const BallFamily g(3, moved);
    const auto a = pierce(f);
    const auto b = pierce(g);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i)
        CHECK(distance(a.points[i] * 2.0 + shift, b.points[i]) <= 1e-9);
}
