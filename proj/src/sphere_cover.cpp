#include "spiky/sphere_cover.hpp"

#include "spiky/error.hpp"
#include "spiky/lp.hpp"
#include "spiky/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace spiky {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dimension(int n)
{
    if (n < 2) throw DomainError("sphere dimension n must be at least 2");
}

UnitVector unit_from(std::span<const double> p)
{
    return UnitVector::normalized(Vector(std::vector<double>(p.begin(), p.end())));
}

std::vector<double> flatten(const std::vector<UnitVector>& pts, int n)
{
    std::vector<double> flat;
    flat.reserve(pts.size() * static_cast<std::size_t>(n));
    for (const auto& p : pts) flat.insert(flat.end(), p.vec().raw().begin(), p.vec().raw().end());
    return flat;
}

// Largest dot product of p with any of the flat centers.
double max_dot(std::span<const double> p, const std::vector<double>& centers, int n)
{
    const std::size_t dim = static_cast<std::size_t>(n);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t off = 0; off < centers.size(); off += dim) {
        double s = 0.0;
        for (std::size_t i = 0; i < dim; ++i) s += p[i] * centers[off + i];
        best = std::max(best, s);
    }
    return best;
}

std::vector<UnitVector> circle_points(std::size_t k, double offset)
{
    std::vector<UnitVector> pts;
    pts.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double phi = offset + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(k);
        pts.push_back(UnitVector::normalized(Vector{std::cos(phi), std::sin(phi)}));
    }
    return pts;
}

// Exact coverage test on S^1: half the largest gap between consecutive
// centers must not exceed theta.
CoverCertificate circle_certificate(const Cover& cover, double tol)
{
    CoverCertificate cert;
    cert.method = CertificateMethod::net;
    cert.resolution = 0.0;
    std::vector<double> angles;
    for (const auto& c : cover.centers) angles.push_back(std::atan2(c[1], c[0]));
    std::sort(angles.begin(), angles.end());
    double gap = angles.empty() ? 2.0 * kPi : 0.0;
    double gap_start = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const double next = i + 1 < angles.size() ? angles[i + 1] : angles.front() + 2.0 * kPi;
        if (next - angles[i] > gap) {
            gap = next - angles[i];
            gap_start = angles[i];
        }
    }
    cert.samples = cover.centers.size();
    cert.margin = cover.angular_radius - gap / 2.0;
    cert.passed = cert.margin >= -tol;
    if (!cert.passed) {
        const double mid = gap_start + gap / 2.0;
        cert.witness = UnitVector::normalized(Vector{std::cos(mid), std::sin(mid)});
    }
    return cert;
}

void enumerate_level(int n, int level, std::vector<double>& out)
{
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    const std::size_t dim = static_cast<std::size_t>(n);
    // Depth-first over coordinates; the last coordinate absorbs the remainder.
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == dim) {
            for (int sign : {1, -1}) {
                if (remaining == 0 && sign < 0) continue;
                k[i] = sign * remaining;
                double norm2 = 0.0;
                for (int v : k) norm2 += static_cast<double>(v) * v;
                const double inv = 1.0 / std::sqrt(norm2);
                for (int v : k) out.push_back(v * inv);
            }
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            for (int sign : {1, -1}) {
                if (a == 0 && sign < 0) continue;
                k[i] = sign * a;
                self(self, i + 1, remaining - a);
            }
        }
    };
    rec(rec, 0, level);
}

// Deepest vertex of {z : c.z <= 1 for all centers c} in the direction y,
// returned as a unit vector. When y is outside the cone of the centers the
// region is unbounded and a recession direction is returned instead.
std::optional<std::vector<double>> deepen(std::span<const double> y, const std::vector<double>& centers, int n)
{
    const std::size_t dim = static_cast<std::size_t>(n);
    const std::size_t k = centers.size() / dim;
    lp::Matrix A(dim, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim; ++i) A(i, j) = centers[j * dim + i];
    std::vector<double> b(y.begin(), y.end());
    std::vector<double> cost(k, 1.0);
    const auto res = lp::solve(A, b, cost);
    if (res.status == lp::Status::unbounded) return std::nullopt;
    std::vector<double> v = res.duals;
    double norm2 = 0.0;
    for (double x : v) norm2 += x * x;
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) return std::nullopt;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

} // namespace

double net_resolution(int n, int level)
{
    const int a = n / 2;
    return 2.0 * std::atan(std::sqrt(static_cast<double>(a) * (n - a)) / (2.0 * level));
}

int net_level_for(int n, double delta)
{
    require_dimension(n);
    if (!(delta > 0.0)) throw DomainError("net resolution must be positive");
    const int a = n / 2;
    const double need = std::sqrt(static_cast<double>(a) * (n - a)) / (2.0 * std::tan(std::min(delta, 3.0) / 2.0));
    return std::max(1, static_cast<int>(std::ceil(need)));
}

double net_size(int n, int level)
{
    // sum_j 2^j C(n, j) C(level - 1, j - 1)
    double total = 0.0;
    for (int j = 1; j <= std::min(n, level); ++j) {
        double cn = 1.0;
        for (int i = 0; i < j; ++i) cn = cn * (n - i) / (i + 1);
        double cm = 1.0;
        for (int i = 0; i < j - 1; ++i) cm = cm * (level - 1 - i) / (i + 1);
        total += std::ldexp(cn * cm, j);
    }
    return total;
}

SphereNet build_net(int n, int level)
{
    require_dimension(n);
    if (level < 1) throw DomainError("net level must be positive");
    SphereNet net;
    net.dimension = n;
    net.level = level;
    net.resolution = net_resolution(n, level);
    net.coords.reserve(static_cast<std::size_t>(net_size(n, level)) * static_cast<std::size_t>(n));
    enumerate_level(n, level, net.coords);
    return net;
}

void rotate_points(std::vector<double>& coords, int n, std::uint64_t seed)
{
    const std::size_t dim = static_cast<std::size_t>(n);
    Rng rng(seed);
    // Gram-Schmidt on Gaussian rows gives a Haar-distributed orthogonal matrix.
    std::vector<double> q(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (;;) {
            for (std::size_t c = 0; c < dim; ++c) q[r * dim + c] = rng.normal();
            for (std::size_t p = 0; p < r; ++p) {
                double d = 0.0;
                for (std::size_t c = 0; c < dim; ++c) d += q[r * dim + c] * q[p * dim + c];
                for (std::size_t c = 0; c < dim; ++c) q[r * dim + c] -= d * q[p * dim + c];
            }
            double nrm = 0.0;
            for (std::size_t c = 0; c < dim; ++c) nrm += q[r * dim + c] * q[r * dim + c];
            if (nrm > 1e-12) {
                nrm = std::sqrt(nrm);
                for (std::size_t c = 0; c < dim; ++c) q[r * dim + c] /= nrm;
                break;
            }
        }
    }
    std::vector<double> tmp(dim);
    for (std::size_t off = 0; off < coords.size(); off += dim) {
        double norm2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < dim; ++c) s += q[r * dim + c] * coords[off + c];
            tmp[r] = s;
            norm2 += s * s;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < dim; ++r) coords[off + r] = tmp[r] * inv;
    }
}

Cover greedy_cover(int n, double theta, std::uint64_t seed, const CoverParams& params)
{
    require_dimension(n);
    if (!(theta > 0.0 && theta < kPi / 2)) throw DomainError("greedy_cover: theta must lie in (0, pi/2)");

    Cover cover{n, theta, {}};
    if (n == 2) {
        const auto k = static_cast<std::size_t>(std::ceil(kPi / theta - 1e-9));
        Rng rng(derive_seed(seed, 0));
        cover.centers = circle_points(std::max<std::size_t>(k, 2), 2.0 * kPi * rng.uniform());
        return cover;
    }

    const double build_delta = params.build_resolution > 0.0 ? params.build_resolution : theta / 5.0;
    const double certify_delta = params.certify_resolution > 0.0 ? params.certify_resolution : theta / 5.0;
    const int level = net_level_for(n, build_delta);
    if (net_size(n, level) > static_cast<double>(params.max_candidates))
        throw ResourceLimitError("greedy_cover: candidate net of " + std::to_string(net_size(n, level)) +
                                 " points exceeds the configured limit");
    const int certify_level = net_level_for(n, certify_delta);
    const double radius = theta - net_resolution(n, level) - net_resolution(n, certify_level);
    if (!(radius > 0.0)) throw DomainError("greedy_cover: net resolutions leave no covering radius");

    SphereNet net = build_net(n, level);
    rotate_points(net.coords, n, derive_seed(seed, 1));
    const std::size_t count = net.size();
    const double cos_r = std::cos(radius);

    // closest[i] = largest dot product of candidate i with a chosen center.
    std::vector<double> closest(count, -std::numeric_limits<double>::infinity());
    Rng rng(derive_seed(seed, 2));
    std::size_t pick = rng.index(count);
    std::vector<double> flat;
    for (;;) {
        const auto c = net.point(pick);
        flat.insert(flat.end(), c.begin(), c.end());
        for (std::size_t i = 0; i < count; ++i) closest[i] = std::max(closest[i], dot(c, net.point(i)));
        pick = static_cast<std::size_t>(std::min_element(closest.begin(), closest.end()) - closest.begin());
        if (closest[pick] >= cos_r) break;
    }
    for (std::size_t off = 0; off < flat.size(); off += static_cast<std::size_t>(n))
        cover.centers.push_back(unit_from({flat.data() + off, static_cast<std::size_t>(n)}));

    const auto cert = verify_cover(cover, CertificateMethod::net, net_resolution(n, certify_level));
    if (!cert.passed) throw VerificationError("greedy_cover: constructed cover failed its net certificate");
    return cover;
}

Packing maximal_packing(int n, double theta, std::uint64_t seed, const PackingParams& params)
{
    require_dimension(n);
    if (!(theta > 0.0 && theta < kPi)) throw DomainError("maximal_packing: theta must lie in (0, pi)");

    Packing packing{n, theta, {}};
    if (n == 2) {
        const auto k = static_cast<std::size_t>(std::floor(2.0 * kPi / theta + 1e-9));
        Rng rng(derive_seed(seed, 0));
        packing.centers = circle_points(std::max<std::size_t>(k, 2), 2.0 * kPi * rng.uniform());
        return packing;
    }

    const std::size_t dim = static_cast<std::size_t>(n);
    const double cos_t = std::cos(theta);
    // Accepting dot <= cos(theta) + slack keeps separations >= theta up to rounding.
    const double accept = cos_t + 1e-12;
    std::vector<double> centers;
    auto add = [&](std::span<const double> p) {
        if (centers.size() / dim >= params.max_points)
            throw ResourceLimitError("maximal_packing: point limit reached");
        centers.insert(centers.end(), p.begin(), p.end());
    };

    // Farthest-point phase over an antipodally closed candidate cloud.
    {
        Rng rng(derive_seed(seed, 1));
        std::vector<double> cand;
        cand.reserve(2 * params.candidates * dim);
        for (std::size_t i = 0; i < params.candidates; ++i) {
            const auto u = rng.unit_vector(n);
            cand.insert(cand.end(), u.begin(), u.end());
            for (double x : u) cand.push_back(-x);
        }
        const std::size_t count = cand.size() / dim;
        if (count > 0) {
            std::vector<double> closest(count, -std::numeric_limits<double>::infinity());
            std::size_t pick = 0;
            for (;;) {
                const std::span<const double> c{cand.data() + pick * dim, dim};
                add(c);
                for (std::size_t i = 0; i < count; ++i)
                    closest[i] = std::max(closest[i], dot(c, std::span<const double>{cand.data() + i * dim, dim}));
                pick = static_cast<std::size_t>(std::min_element(closest.begin(), closest.end()) - closest.begin());
                if (closest[pick] > accept) break;
            }
        } else {
            add(Rng(derive_seed(seed, 1)).unit_vector(n));
        }
    }

    // Hole search: an uncovered sample is pushed to the deepest vertex of its
    // Voronoi region; covered samples also probe the vertex in their
    // direction, which finds shallow holes of negligible area.
    Rng rng(derive_seed(seed, 2));
    std::size_t idle = 0;
    while (idle < params.saturation_window) {
        const auto y = rng.unit_vector(n);
        const double y_dot = max_dot(y, centers, n);
        const auto vertex = deepen(y, centers, n);
        if (vertex && max_dot(*vertex, centers, n) <= accept) {
            add(*vertex);
            idle = 0;
        } else if (y_dot <= accept) {
            add(y);
            idle = 0;
        } else {
            ++idle;
        }
    }

    for (std::size_t off = 0; off < centers.size(); off += dim)
        packing.centers.push_back(unit_from({centers.data() + off, dim}));
    return packing;
}

CoverCertificate verify_cover(const Cover& cover, CertificateMethod method, double resolution_or_samples,
                              std::uint64_t seed, double tol, std::size_t max_net_points)
{
    const int n = cover.dimension;
    require_dimension(n);
    for (const auto& c : cover.centers) require_same_dim(c.dim(), n, "verify_cover");
    const double theta = cover.angular_radius;
    const std::vector<double> flat = flatten(cover.centers, n);

    if (method == CertificateMethod::net) {
        if (!(resolution_or_samples > 0.0) || resolution_or_samples >= theta)
            throw DomainError("verify_cover: net resolution must lie in (0, theta)");
        if (n == 2) return circle_certificate(cover, tol);
        const int level = net_level_for(n, resolution_or_samples);
        if (net_size(n, level) > static_cast<double>(max_net_points))
            throw ResourceLimitError("verify_cover: certification net too large");
        const SphereNet net = build_net(n, level);
        CoverCertificate cert;
        cert.method = CertificateMethod::net;
        cert.resolution = net.resolution;
        cert.samples = net.size();
        const double inner = theta - net.resolution;
        const double cos_inner = std::cos(inner);
        double worst = std::numeric_limits<double>::infinity();
        std::size_t worst_index = 0;
        for (std::size_t i = 0; i < net.size(); ++i) {
            const double d = flat.empty() ? -1.0 : max_dot(net.point(i), flat, n);
            if (d < worst) {
                worst = d;
                worst_index = i;
            }
        }
        cert.margin = inner - clamped_acos(worst);
        cert.passed = worst >= cos_inner - tol;
        if (!cert.passed) cert.witness = unit_from(net.point(worst_index));
        return cert;
    }

    if (!(resolution_or_samples >= 1.0)) throw DomainError("verify_cover: need at least one sample");
    const auto k = static_cast<std::size_t>(resolution_or_samples);
    CoverCertificate cert;
    cert.method = CertificateMethod::sampled;
    cert.samples = k;
    Rng rng(seed);
    const double cos_t = std::cos(theta);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        const auto p = rng.unit_vector(n);
        const double d = flat.empty() ? -1.0 : max_dot(p, flat, n);
        if (d < worst) worst = d;
        if (d < cos_t - tol && !cert.witness) cert.witness = unit_from(p);
    }
    cert.margin = theta - clamped_acos(worst);
    cert.passed = !cert.witness.has_value();
    cert.confidence_bound = 3.0 / static_cast<double>(k);
    return cert;
}

double covering_size_estimate(int n, double theta)
{
    if (!(theta > 0.0 && theta < kPi / 2))
        throw DomainError("covering_size_estimate: theta must lie in (0, pi/2)");
    return std::pow(1.0 / std::sin(theta), n);
}

} // namespace spiky
