#include "spiky/random.hpp"

#include <cmath>
#include <numbers>

namespace spiky {

std::uint64_t Rng::index(std::uint64_t bound)
{
    // Rejection keeps the result unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t v = engine_();
        if (v < limit) return v % bound;
    }
}

double Rng::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

std::vector<double> Rng::unit_vector(int n)
{
    std::vector<double> v(static_cast<std::size_t>(n));
    for (;;) {
        double norm2 = 0.0;
        for (auto& x : v) {
            x = normal();
            norm2 += x * x;
        }
        if (norm2 > 1e-24) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& x : v) x *= inv;
            return v;
        }
    }
}

std::vector<double> Rng::in_unit_ball(int n)
{
    auto v = unit_vector(n);
    const double r = std::pow(uniform(), 1.0 / n);
    for (auto& x : v) x *= r;
    return v;
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream)
{
    std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace spiky
