#include "spiky/lowerbound.hpp"

#include "spiky/error.hpp"
#include "spiky/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spiky {

namespace {

constexpr double kThird = std::numbers::pi / 3;

bool in_window(const UnitVector& a, const UnitVector& b, double tol)
{
    const double d = angular_distance(a, b);
    return d >= kThird - tol && d <= 2.0 * kThird + tol;
}

std::string pair_text(std::size_t i, std::size_t j)
{
    return std::to_string(i) + " and " + std::to_string(j);
}

} // namespace

double predicted_separated_size(int n, double epsilon)
{
    return std::pow(1.0 / std::sin(kThird + epsilon), n);
}

SeparatedSet construct_separated_set(int n, std::size_t target, std::uint64_t seed, const SeparatedSetParams& params)
{
    if (n < 3) throw DomainError("construct_separated_set: n must be at least 3");
    if (target == 0) throw DomainError("construct_separated_set: target must be positive");
    if (!(params.epsilon >= 0.0 && params.epsilon < std::numbers::pi / 6))
        throw DomainError("construct_separated_set: epsilon must lie in [0, pi/6)");

    SeparatedSet out{n, {}, params.epsilon, false, 0};
    Rng rng(seed);
    while (out.points.size() < target && out.draws < params.max_draws) {
        ++out.draws;
        UnitVector u(Vector(rng.unit_vector(n)));
        bool ok = true;
        for (const auto& p : out.points) {
            if (!in_window(u, p, 0.0)) {
                ok = false;
                break;
            }
        }
        if (ok) out.points.push_back(std::move(u));
    }
    out.reached_target = out.points.size() == target;
    return out;
}

void validate_separated(const SeparatedSet& x, double tol)
{
    for (const auto& p : x.points) require_same_dim(p.dim(), x.dimension, "separated set");
    for (std::size_t i = 0; i < x.points.size(); ++i)
        for (std::size_t j = i + 1; j < x.points.size(); ++j)
            if (!in_window(x.points[i], x.points[j], tol))
                throw PreconditionError("separated set: points " + pair_text(i, j) + " leave [pi/3, 2pi/3]");
}

void validate_symmetric(const SymmetricSeparatedSet& y, double tol)
{
    for (const auto& p : y.points) require_same_dim(p.dim(), y.dimension, "symmetric set");
    for (std::size_t i = 0; i < y.points.size(); ++i) {
        const UnitVector neg = -y.points[i];
        bool found = false;
        for (const auto& q : y.points) {
            if (q == neg) {
                found = true;
                break;
            }
        }
        if (!found) throw PreconditionError("symmetric set: negation of point " + std::to_string(i) + " missing");
        for (std::size_t j = i + 1; j < y.points.size(); ++j)
            if (angular_distance(y.points[i], y.points[j]) < kThird - tol)
                throw PreconditionError("symmetric set: points " + pair_text(i, j) + " closer than pi/3");
    }
}

SymmetricSeparatedSet symmetrize(const SeparatedSet& x)
{
    validate_separated(x);
    SymmetricSeparatedSet y{x.dimension, {}};
    y.points.reserve(2 * x.points.size());
    for (const auto& p : x.points) y.points.push_back(p);
    for (const auto& p : x.points) y.points.push_back(-p);
    validate_symmetric(y);
    return y;
}

CapBody build_lower_bound_body(const SymmetricSeparatedSet& y)
{
    const double scale = 2.0 / std::sqrt(3.0);
    std::vector<Vector> vertices;
    vertices.reserve(y.points.size());
    for (const auto& p : y.points) vertices.push_back(p.vec() * scale);
    SpikyBall s(y.dimension, std::move(vertices));
    const auto check = is_cap_body(s);
    if (!check.ok)
        throw std::logic_error("lower-bound body is not a cap body: vertices " +
                               pair_text(check.violating->first, check.violating->second));
    return CapBody(std::move(s));
}

std::size_t illumination_multiplicity(const SymmetricSeparatedSet& y, const UnitVector& u)
{
    require_same_dim(u.dim(), y.dimension, "illumination_multiplicity");
    const SphericalCap cap(-u, kThird, false);
    std::size_t count = 0;
    for (const auto& p : y.points)
        if (cap_contains(cap, p, 0.0)) ++count;
    return count;
}

MultiplicityReport multiplicity_report(const SymmetricSeparatedSet& y, std::size_t samples, std::uint64_t seed)
{
    if (samples == 0) throw DomainError("multiplicity_report: samples must be at least 1");
    MultiplicityReport r;
    r.set_size = y.points.size();
    r.samples = samples;
    r.histogram.assign(y.points.size() + 1, 0);
    Rng rng(seed);
    double total = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        UnitVector u(Vector(rng.unit_vector(y.dimension)));
        const std::size_t m = illumination_multiplicity(y, u);
        ++r.histogram[m];
        total += static_cast<double>(m);
        if (!r.argmax || m > r.max) {
            r.max = m;
            r.argmax = u;
        }
    }
    r.mean = total / static_cast<double>(samples);
    if (r.max > 0) r.witness = static_cast<double>(r.set_size) / static_cast<double>(r.max);
    return r;
}

} // namespace spiky
