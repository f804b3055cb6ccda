#pragma once

#include <vector>

namespace spiky::bounds {

// Kabatjanskii-Levenstein exponent: asymptotic upper bound on
// (1/n) log2 M(n, theta) for 0 < theta <= pi/2, with 0 log 0 := 0.
double kl_exponent(double theta);

// -log2 cos(theta): asymptotic (1/n) log2 N(n, pi/2 - theta).
double covering_exponent(double theta);

// Root in (0, pi/4) of kl_exponent(2x) = covering_exponent(x), by bisection.
double solve_alpha(double tol = 1e-12);

struct ExponentSample {
    double theta;
    double kl;
    double cover;
};

struct ExponentReport {
    double alpha_star;
    double bound_base;   // 1 / cos(alpha_star)
    double gallai_upper; // sqrt(3/2)
    double gallai_lower; // 2 / sqrt(3)
    std::vector<ExponentSample> table;
};

ExponentReport exponent_report(int table_points = 9);

} // namespace spiky::bounds
