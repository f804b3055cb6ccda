#include "spiky/bounds.hpp"

#include "spiky/error.hpp"

#include <cmath>
#include <numbers>

namespace spiky::bounds {

namespace {

double xlog2x(double x)
{
    return x == 0.0 ? 0.0 : x * std::log2(x);
}

constexpr int kMaxBisections = 200;

} // namespace

double kl_exponent(double theta)
{
    if (!(theta > 0.0 && theta <= std::numbers::pi / 2))
        throw DomainError("kl_exponent: theta must lie in (0, pi/2]");
    const double s = std::sin(theta);
    const double plus = (1.0 + s) / (2.0 * s);
    const double minus = (1.0 - s) / (2.0 * s);
    return xlog2x(plus) - xlog2x(minus);
}

double covering_exponent(double theta)
{
    if (!(theta > 0.0 && theta < std::numbers::pi / 2))
        throw DomainError("covering_exponent: theta must lie in (0, pi/2)");
    return -std::log2(std::cos(theta));
}

double solve_alpha(double tol)
{
    if (!(tol > 0.0)) throw DomainError("solve_alpha: tolerance must be positive");
    // f(x) - g(x) is +inf at 0+ and -1/2 at pi/4, strictly decreasing between.
    double lo = 0.0;
    double hi = std::numbers::pi / 4;
    for (int i = 0; i < kMaxBisections && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (kl_exponent(2.0 * mid) - covering_exponent(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ExponentReport exponent_report(int table_points)
{
    ExponentReport r;
    r.alpha_star = solve_alpha();
    r.bound_base = 1.0 / std::cos(r.alpha_star);
    r.gallai_upper = std::sqrt(1.5);
    r.gallai_lower = 2.0 / std::sqrt(3.0);
    for (int i = 1; i <= table_points; ++i) {
        const double x = std::numbers::pi / 4 * i / (table_points + 1);
        r.table.push_back({x, kl_exponent(2.0 * x), covering_exponent(x)});
    }
    return r;
}

} // namespace spiky::bounds
