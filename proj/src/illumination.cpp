#include "spiky/illumination.hpp"

#include "spiky/error.hpp"
#include "spiky/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace spiky {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
// Smallest weight t counted as a strictly positive dependency.
constexpr double kHullTol = 1e-10;

double spike_radius(const Vector& x)
{
    const double r = x.norm();
    if (!(r > 1.0)) throw DomainError("vertex must lie outside the unit ball");
    return std::acos(1.0 / r);
}

void check_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha < kHalfPi)) throw DomainError("alpha must lie in (0, pi/2)");
}

// Rank of the directions (as rows) by Gaussian elimination with partial pivoting.
int rank_of(std::span<const UnitVector> dirs, int n)
{
    std::vector<std::vector<double>> m;
    m.reserve(dirs.size());
    for (const auto& d : dirs) m.push_back(d.vec().raw());
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        for (std::size_t r = piv; r < m.size(); ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-10) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const auto& p = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
            const double f = m[r][col] / p[col];
            for (int c = col; c < n; ++c) m[r][c] -= f * p[c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

SpikyBall::SpikyBall(int n, std::vector<Vector> v, double vertex_tol) : dimension(n), vertices(std::move(v))
{
    if (n < 2) throw DimensionMismatch("spiky ball dimension must be at least 2");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        require_same_dim(vertices[i].dim(), n, "spiky ball vertex");
        if (!(vertices[i].norm() >= 1.0 + vertex_tol))
            throw DomainError("spiky ball vertex " + std::to_string(i) + " is not outside the unit ball");
    }
}

CapBodyCheck is_cap_body(const SpikyBall& s, double tol)
{
    std::vector<UnitVector> axes;
    std::vector<double> radii;
    for (const auto& x : s.vertices) {
        axes.push_back(UnitVector::normalized(x));
        radii.push_back(spike_radius(x));
    }
    for (std::size_t i = 0; i < axes.size(); ++i)
        for (std::size_t j = i + 1; j < axes.size(); ++j)
            if (angular_distance(axes[i], axes[j]) < radii[i] + radii[j] - tol) return {false, std::make_pair(i, j)};
    return {true, std::nullopt};
}

CapBody::CapBody(SpikyBall s, double tol) : s_(std::move(s))
{
    const auto check = is_cap_body(s_, tol);
    if (!check.ok)
        throw PreconditionError("not a cap body: caps of vertices " + std::to_string(check.violating->first) +
                                " and " + std::to_string(check.violating->second) + " overlap");
}

SphericalCap base_cap(const Vector& x)
{
    return SphericalCap(UnitVector::normalized(x), spike_radius(x), true);
}

SphericalCap illumination_cap(const Vector& x)
{
    return SphericalCap(-UnitVector::normalized(x), kHalfPi - spike_radius(x), false);
}

bool positive_hull_full(std::span<const UnitVector> directions)
{
    if (directions.empty()) throw DomainError("positive_hull_full: empty direction set");
    const int n = directions.front().dim();
    for (const auto& d : directions) require_same_dim(d.dim(), n, "positive_hull_full");
    const std::size_t m = directions.size();
    if (m < static_cast<std::size_t>(n) + 1) return false;
    if (rank_of(directions, n) < n) return false;

    // Full iff some strictly positive combination of the y_j vanishes. With
    // lambda_j = t + mu_j: maximize t subject to sum lambda_j y_j = 0 and
    // sum lambda_j = 1. The feasible set is a bounded polytope, unlike the
    // dual form with u free, which lets the tableau grow without bound.
    // Columns: t, mu (m).
    const std::size_t dim = static_cast<std::size_t>(n);
    lp::Matrix A(dim + 1, m + 1);
    std::vector<double> b(dim + 1, 0.0);
    std::vector<double> c(m + 1, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            A(i, 0) += directions[j][i];
            A(i, 1 + j) = directions[j][i];
        }
        A(dim, 1 + j) = 1.0;
    }
    A(dim, 0) = static_cast<double>(m);
    b[dim] = 1.0;
    c[0] = -1.0;
    const auto res = lp::solve(A, b, c);
    // Infeasible: the origin is not even in the convex hull.
    if (res.status == lp::Status::infeasible) return false;
    if (res.status != lp::Status::optimal) throw VerificationError("positive_hull_full: LP did not reach an optimum");
    return -res.objective > kHullTol;
}

bool positive_hull_full(const DirectionSet& d)
{
    return positive_hull_full(std::span<const UnitVector>(d.directions));
}

IlluminationCheck verifies_illumination(const SpikyBall& s, const DirectionSet& d, double tol)
{
    for (const auto& u : d.directions) require_same_dim(u.dim(), s.dimension, "verifies_illumination");
    IlluminationCheck out{false, false, std::nullopt};
    out.positive_hull = !d.directions.empty() && positive_hull_full(d);
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        const auto cap = illumination_cap(s.vertices[i]);
        const bool lit = std::any_of(d.directions.begin(), d.directions.end(),
                                     [&](const UnitVector& u) { return cap_contains(cap, u, tol); });
        if (!lit) {
            out.unilluminated = i;
            break;
        }
    }
    out.ok = out.positive_hull && !out.unilluminated;
    return out;
}

bool is_far_vertex(const Vector& x, double alpha)
{
    return x.norm() * std::cos(alpha) >= 1.0 - 1e-12;
}

Cover illumination_cover(int n, double alpha, std::uint64_t seed, const IlluminationParams& params)
{
    check_alpha(alpha);
    const double theta = kHalfPi - alpha - params.cover_margin;
    if (!(theta > 0.0)) throw DomainError("illumination cover radius is not positive");
    return greedy_cover(n, theta, seed, params.cover);
}

IlluminationResult illuminate_spiky_ball(const SpikyBall& s, double alpha, const Cover& u2,
                                         const IlluminationParams& params)
{
    check_alpha(alpha);
    require_same_dim(u2.dimension, s.dimension, "illumination cover");
    if (!(u2.angular_radius < kHalfPi - alpha))
        throw DomainError("U2 cover radius must be below pi/2 - alpha");

    IlluminationResult out{DirectionSet{s.dimension, {}, {}}, alpha, 0, u2.centers.size(), {}};
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (!is_far_vertex(s.vertices[i], alpha)) continue;
        out.directions.add(-UnitVector::normalized(s.vertices[i]), {DirectionSource::Kind::vertex, i});
        ++out.far_vertices;
    }
    for (std::size_t j = 0; j < u2.centers.size(); ++j)
        out.directions.add(u2.centers[j], {DirectionSource::Kind::cover, j});

    out.check = verifies_illumination(s, out.directions, params.tol);
    const auto& check = out.check;
    if (!check.ok && params.strict) {
        if (!check.positive_hull) throw VerificationError("illumination directions do not positively span");
        throw VerificationError("vertex " + std::to_string(*check.unilluminated) + " is not illuminated");
    }
    return out;
}

IlluminationResult illuminate_cap_body(const CapBody& k, double alpha, const Cover& u2,
                                       const IlluminationParams& params)
{
    return illuminate_spiky_ball(k.spiky(), alpha, u2, params);
}

IlluminationResult illuminate_cap_body(const CapBody& k, double alpha, std::uint64_t seed,
                                       const IlluminationParams& params)
{
    return illuminate_cap_body(k, alpha, illumination_cover(k.dimension(), alpha, seed, params), params);
}

IlluminationResult illuminate_cap_body_sweep(const CapBody& k, std::span<const double> alphas, std::uint64_t seed,
                                             const IlluminationParams& params)
{
    if (alphas.empty()) throw DomainError("alpha sweep needs at least one value");
    std::optional<IlluminationResult> best;
    for (double a : alphas) {
        auto r = illuminate_cap_body(k, a, seed, params);
        if (!best || r.directions.directions.size() < best->directions.directions.size()) best = std::move(r);
    }
    return std::move(*best);
}

bool u1_separation_check(const SpikyBall& s, double alpha, double tol)
{
    check_alpha(alpha);
    std::vector<UnitVector> u1;
    for (const auto& x : s.vertices)
        if (is_far_vertex(x, alpha)) u1.push_back(-UnitVector::normalized(x));
    for (std::size_t i = 0; i < u1.size(); ++i)
        for (std::size_t j = i + 1; j < u1.size(); ++j)
            if (angular_distance(u1[i], u1[j]) < 2.0 * alpha - tol) return false;
    return true;
}

} // namespace spiky
