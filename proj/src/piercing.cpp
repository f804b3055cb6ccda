#include "spiky/piercing.hpp"

#include "spiky/error.hpp"
#include "spiky/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace spiky {

namespace {

double default_lambda(int n)
{
    return 1.0 / std::sqrt(1.0 - 1.0 / n);
}

struct Resolved {
    double lambda;
    double threshold;
};

Resolved resolve(int n, const PiercingConfig& config)
{
    const double max_lambda = default_lambda(n);
    Resolved r{config.lambda.value_or(max_lambda), config.large_threshold.value_or(static_cast<double>(n))};
    if (!(r.lambda > 1.0) || r.lambda > max_lambda * (1.0 + 1e-12))
        throw DomainError("piercing: lambda must lie in (1, (1 - 1/n)^{-1/2}]");
    if (!(r.threshold >= 2.0)) throw DomainError("piercing: large-ball threshold must be at least 2");
    return r;
}

} // namespace

BallFamily::BallFamily(int n, std::vector<Ball> b) : dimension(n), balls(std::move(b))
{
    if (n < 2) throw DimensionMismatch("ball family dimension must be at least 2");
    if (balls.empty()) throw DomainError("ball family must be non-empty");
    for (const auto& ball : balls) require_same_dim(ball.dim(), n, "ball family");
}

std::optional<std::pair<std::size_t, std::size_t>> find_disjoint_pair(const BallFamily& f, double tol)
{
    for (std::size_t i = 0; i < f.balls.size(); ++i)
        for (std::size_t j = i + 1; j < f.balls.size(); ++j)
            if (!balls_intersect(f.balls[i], f.balls[j], tol)) return std::make_pair(i, j);
    return std::nullopt;
}

std::pair<BallFamily, Similarity> normalize_family(const BallFamily& f)
{
    const auto smallest = std::min_element(f.balls.begin(), f.balls.end(),
                                           [](const Ball& a, const Ball& b) { return a.radius < b.radius; });
    Similarity sim{smallest->radius, smallest->center};
    std::vector<Ball> out;
    out.reserve(f.balls.size());
    for (const auto& b : f.balls) out.emplace_back(sim.invert(b.center), b.radius / sim.scale);
    return {BallFamily(f.dimension, std::move(out)), std::move(sim)};
}

double cap_overlap_radius(double r, int n)
{
    if (n < 2) throw DomainError("cap_overlap_radius: n must be at least 2");
    if (!(r >= 2.0)) throw DomainError("cap_overlap_radius: r must be at least 2");
    if (std::isinf(r)) return std::acos(0.5);
    return std::acos((2.0 * r + 5.0) / (4.0 * (r + 1.0)));
}

int scale_count(double lambda, double threshold)
{
    if (!(lambda > 1.0)) throw DomainError("scale_count: lambda must exceed 1");
    // The relative guard resolves lambda^t == threshold (e.g. n = 2, t = 2)
    // in favour of "not greater", as exact arithmetic would.
    int t = 0;
    double p = 1.0;
    while (!(p > threshold * (1.0 + 1e-12))) {
        p *= lambda;
        ++t;
    }
    return t;
}

std::vector<Vector> pierce_large(int n, const PiercingConfig& config)
{
    const auto res = resolve(n, config);
    const Cover cover = greedy_cover(n, cap_overlap_radius(res.threshold, n), config.seed, config.cover);
    std::vector<Vector> out;
    out.reserve(cover.centers.size());
    for (const auto& c : cover.centers) out.push_back(c.vec() * 2.0);
    return out;
}

std::vector<Vector> cover_points_by_balls(const std::vector<Vector>& points, double radius, std::uint64_t seed)
{
    if (points.empty()) throw DomainError("cover_points_by_balls: no points");
    if (!(radius > 0.0)) throw DomainError("cover_points_by_balls: radius must be positive");
    const std::size_t count = points.size();
    std::vector<bool> covered(count, false);
    std::vector<double> nearest(count, std::numeric_limits<double>::infinity());
    std::vector<Vector> centers;
    std::size_t remaining = count;
    Rng rng(seed);
    std::size_t target = rng.index(count);

    while (remaining > 0) {
        const Vector& t = points[target];
        std::vector<Vector> candidates{t};
        for (std::size_t q = 0; q < count; ++q)
            if (!covered[q] && q != target && distance(t, points[q]) <= 2.0 * radius)
                candidates.push_back((t + points[q]) * 0.5);

        std::size_t best = 0;
        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            std::size_t gain = 0;
            for (std::size_t q = 0; q < count; ++q)
                if (!covered[q] && distance(candidates[c], points[q]) <= radius) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        // The target itself always qualifies, so gain >= 1.
        const Vector center = candidates[best];
        for (std::size_t q = 0; q < count; ++q) {
            const double d = distance(center, points[q]);
            nearest[q] = std::min(nearest[q], d);
            if (!covered[q] && d <= radius) {
                covered[q] = true;
                --remaining;
            }
        }
        centers.push_back(center);

        double far = -1.0;
        for (std::size_t q = 0; q < count; ++q) {
            if (!covered[q] && nearest[q] > far) {
                far = nearest[q];
                target = q;
            }
        }
    }
    return centers;
}

RefinedCover refine_ball_cover(const Vector& center, double r2)
{
    if (!(r2 > 0.0)) throw DomainError("refine_ball_cover: radius must be positive");
    const int n = center.dim();
    const double step = r2 / std::sqrt(static_cast<double>(n));
    RefinedCover out{{}, r2 * std::sqrt(1.0 - 1.0 / n)};
    out.centers.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.centers.push_back(center + Vector::basis(n, i, step));
        out.centers.push_back(center - Vector::basis(n, i, step));
    }
    return out;
}

PiercingSet pierce(const BallFamily& f, const PiercingConfig& config)
{
    const int n = f.dimension;
    const auto res = resolve(n, config);
    if (const auto pair = find_disjoint_pair(f, config.tol))
        throw PreconditionError("family is not pairwise intersecting: balls " + std::to_string(pair->first) +
                                " and " + std::to_string(pair->second) + " are disjoint");

    PiercingSet out{n, {}, {}, Similarity{1.0, Vector::zero(n)}, {}, false, std::nullopt};
    auto& acc = out.accounting;
    acc.lambda = res.lambda;
    acc.large_threshold = res.threshold;
    acc.cap_radius = cap_overlap_radius(res.threshold, n);
    acc.t = scale_count(res.lambda, res.threshold);

    if (f.balls.size() == 1) {
        out.points.push_back(f.balls.front().center);
        out.sources.push_back(-1);
        acc.total = 1;
        out.verified = true;
        return out;
    }

    auto [normal, sim] = normalize_family(f);
    out.transform = sim;

    std::vector<Vector> local;
    for (const auto& b : normal.balls)
        if (b.radius >= res.threshold) ++acc.large_balls;
    if (acc.large_balls > 0) {
        PiercingConfig layer = config;
        layer.seed = derive_seed(config.seed, 0);
        for (auto& p : pierce_large(n, layer)) {
            local.push_back(std::move(p));
            out.sources.push_back(0);
        }
        acc.sphere_layer = local.size();
    }

    std::vector<double> powers{1.0};
    for (int k = 1; k <= acc.t; ++k) powers.push_back(powers.back() * res.lambda);

    for (int k = 1; k <= acc.t; ++k) {
        const double lo = powers[static_cast<std::size_t>(k - 1)];
        const double hi = powers[static_cast<std::size_t>(k)];
        std::vector<Vector> centers;
        for (const auto& b : normal.balls)
            if (b.radius < res.threshold && b.radius >= lo && b.radius < hi) centers.push_back(b.center);
        if (centers.empty()) continue;

        const auto cover = cover_points_by_balls(centers, hi, derive_seed(config.seed, static_cast<std::uint64_t>(k)));
        ScaleClass sc{k, lo, hi, centers.size(), cover.size(), 0};
        for (const auto& c : cover) {
            for (auto& p : refine_ball_cover(c, hi).centers) {
                local.push_back(std::move(p));
                out.sources.push_back(k);
                ++sc.points;
            }
        }
        acc.scales.push_back(sc);
    }

    out.points.reserve(local.size());
    for (const auto& p : local) out.points.push_back(sim.apply(p));
    acc.total = out.points.size();

    const auto check = verify_piercing(f, out.points, config.tol);
    out.verified = check.ok;
    out.unpierced = check.unpierced;
    if (!check.ok && config.strict)
        throw VerificationError("piercing set misses ball " + std::to_string(*check.unpierced));
    return out;
}

PiercingCheck verify_piercing(const BallFamily& f, const std::vector<Vector>& points, double tol)
{
    for (const auto& p : points) require_same_dim(p.dim(), f.dimension, "verify_piercing");
    for (std::size_t i = 0; i < f.balls.size(); ++i) {
        const bool hit = std::any_of(points.begin(), points.end(),
                                     [&](const Vector& p) { return point_in_ball(p, f.balls[i], tol); });
        if (!hit) return {false, i};
    }
    return {true, std::nullopt};
}

} // namespace spiky
