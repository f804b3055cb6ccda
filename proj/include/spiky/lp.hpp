#pragma once

#include <cstddef>
#include <vector>

namespace spiky::lp {

// Row-major dense matrix.
struct Matrix {
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::size_t rows;
    std::size_t cols;
    std::vector<double> data;
};

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    double objective = 0.0;
    // Primal point (optimal only).
    std::vector<double> x;
    // optimal:    multipliers y with y.A_j <= c_j for every column, y.b = objective.
    // infeasible: Farkas certificate y with y.A_j <= 0 for every column, y.b > 0.
    std::vector<double> duals;
    // unbounded:  d >= 0 with A d = 0 and c.d < 0.
    std::vector<double> ray;
    std::size_t pivots = 0;
};

// min c.x  s.t.  A x = b, x >= 0.
//
// Two-phase tableau simplex with Bland's rule, so degenerate problems
// terminate. Columns of A that are already unit columns with b_i >= 0 seed
// the starting basis; artificials cover the remaining rows.
Result solve(const Matrix& A, const std::vector<double>& b, const std::vector<double>& c,
             double eps = 1e-10);

} // namespace spiky::lp
