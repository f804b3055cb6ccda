#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace spiky::oracle {

namespace {

// A separate generator from the library's Rng so the oracles share no code
// with the code under test.
std::vector<double> gaussian_direction(std::mt19937_64& g, int n)
{
    std::normal_distribution<double> nd;
    std::vector<double> v(static_cast<std::size_t>(n));
    double s = 0.0;
    do {
        s = 0.0;
        for (auto& x : v) {
            x = nd(g);
            s += x * x;
        }
    } while (s < 1e-300);
    s = std::sqrt(s);
    for (auto& x : v) x /= s;
    return v;
}

double raw_dot(const std::vector<double>& a, const Vector& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double angle(const Vector& a, const Vector& b)
{
    double d = 0.0;
    for (int i = 0; i < a.dim(); ++i) d += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    d /= a.norm() * b.norm();
    return std::acos(std::clamp(d, -1.0, 1.0));
}

} // namespace

HullEstimate mc_positive_hull(const std::vector<UnitVector>& dirs, std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 g(seed);
    const int n = dirs.front().dim();
    auto height = [&](const std::vector<double>& u) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& y : dirs) best = std::max(best, raw_dot(u, y.vec()));
        return best;
    };

    // Keep the lowest few samples as seeds for a local search; thin uncovered
    // cones are otherwise easy to miss in higher dimensions.
    constexpr std::size_t kSeeds = 16;
    std::vector<std::pair<double, std::vector<double>>> low;
    for (std::size_t s = 0; s < samples; ++s) {
        auto u = gaussian_direction(g, n);
        const double h = height(u);
        if (low.size() < kSeeds || h < low.back().first) {
            low.emplace_back(h, std::move(u));
            std::sort(low.begin(), low.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            if (low.size() > kSeeds) low.pop_back();
        }
    }

    double worst = low.front().first;
    std::normal_distribution<double> nd;
    for (auto& [h, u] : low) {
        double step = 0.3;
        int misses = 0;
        while (step > 1e-6) {
            std::vector<double> v(u);
            double norm = 0.0;
            for (auto& x : v) {
                x += step * nd(g);
                norm += x * x;
            }
            norm = std::sqrt(norm);
            for (auto& x : v) x /= norm;
            const double hv = height(v);
            if (hv < h) {
                h = hv;
                u = std::move(v);
                misses = 0;
            } else if (++misses == 20) {
                step *= 0.5;
                misses = 0;
            }
        }
        worst = std::min(worst, h);
    }
    return {worst > 0.0, std::abs(worst)};
}

std::size_t brute_multiplicity(const std::vector<UnitVector>& pts, const UnitVector& u)
{
    std::size_t c = 0;
    const Vector neg = u.vec() * -1.0;
    for (const auto& p : pts)
        if (angle(neg, p.vec()) < std::numbers::pi / 3) ++c;
    return c;
}

double min_pairwise_angle(const std::vector<UnitVector>& pts)
{
    double m = std::numbers::pi;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) m = std::min(m, angle(pts[i].vec(), pts[j].vec()));
    return m;
}

double circle_max_gap(const std::vector<UnitVector>& pts)
{
    std::vector<double> a;
    for (const auto& p : pts) {
        double t = std::atan2(p[1], p[0]);
        if (t < 0) t += 2 * std::numbers::pi;
        a.push_back(t);
    }
    std::sort(a.begin(), a.end());
    double gap = a.front() + 2 * std::numbers::pi - a.back();
    for (std::size_t i = 1; i < a.size(); ++i) gap = std::max(gap, a[i] - a[i - 1]);
    return gap;
}

double uncovered_fraction(const std::vector<UnitVector>& centers, double theta, std::size_t samples,
                          std::uint64_t seed, double tol)
{
    std::mt19937_64 g(seed);
    const int n = centers.front().dim();
    std::size_t miss = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto u = gaussian_direction(g, n);
        Vector uv(u);
        bool hit = false;
        for (const auto& c : centers) {
            if (angle(uv, c.vec()) <= theta + tol) {
                hit = true;
                break;
            }
        }
        if (!hit) ++miss;
    }
    return static_cast<double>(miss) / static_cast<double>(samples);
}

BallFamily random_intersecting_family(int n, std::size_t count, double max_ratio, std::uint64_t seed)
{
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double box = 2.0 + unit(g) * 2.0;
    std::vector<Ball> balls;
    std::size_t attempts = 0;
    while (balls.size() < count && attempts < 200 * count) {
        ++attempts;
        const double r = std::exp(unit(g) * std::log(max_ratio));
        std::vector<double> c(static_cast<std::size_t>(n));
        for (auto& x : c) x = (2.0 * unit(g) - 1.0) * box * (1.0 + r / 4.0);
        Ball b(Vector(c), r);
        bool ok = true;
        for (const auto& o : balls) {
            if (distance(o.center, b.center) > o.radius + b.radius) {
                ok = false;
                break;
            }
        }
        if (ok) balls.push_back(std::move(b));
    }
    return BallFamily(n, std::move(balls));
}

std::vector<Vector> random_cap_body(const Packing& axes, std::size_t max_vertices, std::uint64_t seed)
{
    std::mt19937_64 g(seed);
    std::vector<std::size_t> idx(axes.centers.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), g);
    std::uniform_int_distribution<std::size_t> pick(1, std::min(max_vertices, idx.size()));
    idx.resize(pick(g));

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Vector> out;
    for (std::size_t a : idx) {
        double d = std::numbers::pi;
        for (std::size_t b : idx)
            if (a != b) d = std::min(d, angle(axes.centers[a].vec(), axes.centers[b].vec()));
        const double cap = std::min(d / 2.0, 1.4);
        // Strictly inside (0, cap] and never at the degenerate end.
        const double rho = cap * (0.05 + 0.95 * unit(g));
        out.push_back(axes.centers[a].vec() * (1.0 / std::cos(rho)));
    }
    return out;
}

bool caps_disjoint(const std::vector<Vector>& vertices, double tol)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const double ri = std::acos(1.0 / vertices[i].norm());
            const double rj = std::acos(1.0 / vertices[j].norm());
            if (angle(vertices[i], vertices[j]) < ri + rj - tol) return false;
        }
    }
    return true;
}

} // namespace spiky::oracle
