#pragma once

#include "spiky/geometry.hpp"
#include "spiky/sphere_cover.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace spiky {

// Non-empty family of closed balls of a common dimension.
struct BallFamily {
    BallFamily(int n, std::vector<Ball> b);

    int dimension;
    std::vector<Ball> balls;

    friend bool operator==(const BallFamily&, const BallFamily&) = default;
};

// First pair (i < j) of balls that do not intersect, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_disjoint_pair(const BallFamily& f, double tol = kDefaultTol);

// original = scale * normalized + offset
struct Similarity {
    double scale = 1.0;
    Vector offset;

    Vector apply(const Vector& x) const { return x * scale + offset; }
    Vector invert(const Vector& y) const { return (y - offset) * (1.0 / scale); }
};

struct PiercingConfig {
    // Scale ratio between consecutive radius classes; defaults to
    // (1 - 1/n)^{-1/2}, which is also its upper limit.
    std::optional<double> lambda;
    // Balls with normalized radius >= this are pierced by the sphere layer;
    // defaults to n.
    std::optional<double> large_threshold;
    CoverParams cover;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    // When false a failed verification is recorded in PiercingSet::verified
    // instead of thrown.
    bool strict = true;
};

// Provenance tag of a piercing point: 0 for the sphere layer C_0, k >= 1 for
// the radius class [lambda^{k-1}, lambda^k), -1 for the single-ball shortcut.
using PointSource = int;

struct ScaleClass {
    int k;
    double lower;
    double upper;
    std::size_t balls;
    std::size_t cover_count;
    std::size_t points;
};

struct PiercingAccounting {
    double lambda = 0.0;
    int t = 0;
    double large_threshold = 0.0;
    double cap_radius = 0.0;
    std::size_t large_balls = 0;
    std::size_t sphere_layer = 0;
    std::vector<ScaleClass> scales;
    std::size_t total = 0;
};

struct PiercingSet {
    int dimension;
    std::vector<Vector> points;
    std::vector<PointSource> sources;
    Similarity transform;
    PiercingAccounting accounting;
    bool verified = false;
    std::optional<std::size_t> unpierced;
};

struct PiercingCheck {
    bool ok;
    std::optional<std::size_t> unpierced;
};

// Translate and scale so the (first) smallest ball becomes B^n.
std::pair<BallFamily, Similarity> normalize_family(const BallFamily& f);

// arccos((2r + 5) / (4 (r + 1))): angular radius of a cap of 2 S^{n-1} inside
// any ball of radius r >= 2 meeting the unit ball.
double cap_overlap_radius(double r, int n);

// Smallest t with lambda^t > threshold.
int scale_count(double lambda, double threshold);

// 2 * (centers of a certified cover of S^{n-1} by caps of radius
// cap_overlap_radius(threshold)); pierces every ball of radius >= threshold
// that meets B^n.
std::vector<Vector> pierce_large(int n, const PiercingConfig& config);

// Greedy cover of the points by balls of the given radius; candidate centers
// are the farthest uncovered point and its midpoints with other uncovered
// points.
std::vector<Vector> cover_points_by_balls(const std::vector<Vector>& points, double radius, std::uint64_t seed);

struct RefinedCover {
    std::vector<Vector> centers;
    double radius;
};

// center +- (r2 / sqrt(n)) e_i: 2n balls of radius r2 sqrt(1 - 1/n) covering
// the ball (center, r2).
RefinedCover refine_ball_cover(const Vector& center, double r2);

// Throws PreconditionError for a family that is not pairwise intersecting and
// VerificationError if the constructed set misses a ball.
PiercingSet pierce(const BallFamily& f, const PiercingConfig& config = {});

PiercingCheck verify_piercing(const BallFamily& f, const std::vector<Vector>& points, double tol = kDefaultTol);

} // namespace spiky
