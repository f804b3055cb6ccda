#include "spiky/lp.hpp"

#include "spiky/error.hpp"

#include <cmath>
#include <algorithm>
#include <limits>

namespace spiky::lp {

namespace {

class Tableau {
public:
    Tableau(const Matrix& A, const std::vector<double>& b, double eps)
        : m_(A.rows), k_(A.cols), width_(A.cols + A.rows + 1), eps_(eps), t_(m_ * width_, 0.0),
          sign_(m_, 1.0), basis_(m_)
    {
        for (std::size_t r = 0; r < m_; ++r) {
            sign_[r] = b[r] < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < k_; ++j) at(r, j) = sign_[r] * A(r, j);
            at(r, k_ + r) = 1.0;
            rhs(r) = sign_[r] * b[r];
            basis_[r] = k_ + r;
        }
        crash_basis();
    }

    double& at(std::size_t r, std::size_t j) { return t_[r * width_ + j]; }
    double at(std::size_t r, std::size_t j) const { return t_[r * width_ + j]; }
    double& rhs(std::size_t r) { return t_[r * width_ + width_ - 1]; }
    double rhs(std::size_t r) const { return t_[r * width_ + width_ - 1]; }

    bool is_artificial(std::size_t j) const { return j >= k_; }

    // Runs Bland's rule against the given column costs (size k_ + m_).
    // Returns the entering column when unbounded, npos when optimal.
    std::size_t optimize(const std::vector<double>& cost, std::size_t& pivots)
    {
        const std::size_t limit = 100 * (m_ + k_) + 1000;
        for (std::size_t iter = 0; iter < limit; ++iter) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < k_; ++j) {
                if (in_basis(j)) continue;
                if (reduced_cost(cost, j) < -eps_) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) return npos;

            std::size_t leave = npos;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m_; ++r) {
                const double a = at(r, enter);
                if (a <= eps_) continue;
                const double ratio = rhs(r) / a;
                if (leave == npos || ratio < best - eps_) {
                    best = ratio;
                    leave = r;
                } else if (std::abs(ratio - best) <= eps_ && basis_[r] < basis_[leave]) {
                    best = std::min(best, ratio);
                    leave = r;
                }
            }
            if (leave == npos) return enter;
            pivot(leave, enter);
            ++pivots;
        }
        throw ResourceLimitError("simplex iteration limit reached");
    }

    double reduced_cost(const std::vector<double>& cost, std::size_t j) const
    {
        double d = cost[j];
        for (std::size_t r = 0; r < m_; ++r) d -= cost[basis_[r]] * at(r, j);
        return d;
    }

    double objective(const std::vector<double>& cost) const
    {
        double z = 0.0;
        for (std::size_t r = 0; r < m_; ++r) z += cost[basis_[r]] * rhs(r);
        return z;
    }

    // y = c_B B^{-1}, mapped back through the row sign flips.
    std::vector<double> multipliers(const std::vector<double>& cost) const
    {
        std::vector<double> y(m_, 0.0);
        for (std::size_t col = 0; col < m_; ++col) {
            double s = 0.0;
            for (std::size_t r = 0; r < m_; ++r) s += cost[basis_[r]] * at(r, k_ + col);
            y[col] = s * sign_[col];
        }
        return y;
    }

    // Pivots zero-level artificials out of the basis where possible.
    void drive_out_artificials()
    {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[r])) continue;
            std::size_t best = npos;
            double mag = eps_;
            for (std::size_t j = 0; j < k_; ++j) {
                if (in_basis(j)) continue;
                if (std::abs(at(r, j)) > mag) {
                    mag = std::abs(at(r, j));
                    best = j;
                }
            }
            if (best != npos) pivot(r, best);
        }
    }

    std::vector<double> primal() const
    {
        std::vector<double> x(k_, 0.0);
        for (std::size_t r = 0; r < m_; ++r)
            if (!is_artificial(basis_[r])) x[basis_[r]] = rhs(r);
        return x;
    }

    std::vector<double> ray(std::size_t enter) const
    {
        std::vector<double> d(k_, 0.0);
        d[enter] = 1.0;
        for (std::size_t r = 0; r < m_; ++r)
            if (!is_artificial(basis_[r])) d[basis_[r]] = -at(r, enter);
        return d;
    }

    bool has_artificial_basis() const
    {
        for (std::size_t r = 0; r < m_; ++r)
            if (is_artificial(basis_[r])) return true;
        return false;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    bool in_basis(std::size_t j) const
    {
        for (std::size_t b : basis_)
            if (b == j) return true;
        return false;
    }

    // Uses an existing unit column as the starting basic variable of its row.
    void crash_basis()
    {
        for (std::size_t j = 0; j < k_; ++j) {
            std::size_t row = npos;
            bool unit = true;
            for (std::size_t r = 0; r < m_ && unit; ++r) {
                const double a = at(r, j);
                if (a == 0.0) continue;
                if (a == 1.0 && row == npos)
                    row = r;
                else
                    unit = false;
            }
            if (unit && row != npos && is_artificial(basis_[row])) basis_[row] = j;
        }
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const double p = at(row, col);
        for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row) continue;
            const double f = at(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < width_; ++j) at(r, j) -= f * at(row, j);
            at(r, col) = 0.0;
        }
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t k_;
    std::size_t width_;
    double eps_;
    std::vector<double> t_;
    std::vector<double> sign_;
    std::vector<std::size_t> basis_;
};

} // namespace

Result solve(const Matrix& A, const std::vector<double>& b, const std::vector<double>& c, double eps)
{
    if (b.size() != A.rows || c.size() != A.cols)
        throw DimensionMismatch("lp::solve: inconsistent problem dimensions");

    const std::size_t m = A.rows;
    const std::size_t k = A.cols;
    Tableau tab(A, b, eps);
    Result res;

    if (tab.has_artificial_basis()) {
        std::vector<double> phase1(k + m, 0.0);
        for (std::size_t r = 0; r < m; ++r) phase1[k + r] = 1.0;
        tab.optimize(phase1, res.pivots);
        double scale = 1.0;
        for (double v : b) scale = std::max(scale, std::abs(v));
        if (tab.objective(phase1) > eps * scale * static_cast<double>(m + 1) * 10.0) {
            res.status = Status::infeasible;
            res.objective = tab.objective(phase1);
            res.duals = tab.multipliers(phase1);
            return res;
        }
        tab.drive_out_artificials();
    }

    std::vector<double> phase2(k + m, 0.0);
    for (std::size_t j = 0; j < k; ++j) phase2[j] = c[j];
    const std::size_t enter = tab.optimize(phase2, res.pivots);
    if (enter != Tableau::npos) {
        res.status = Status::unbounded;
        res.ray = tab.ray(enter);
        return res;
    }
    res.status = Status::optimal;
    res.objective = tab.objective(phase2);
    res.x = tab.primal();
    res.duals = tab.multipliers(phase2);
    return res;
}

} // namespace spiky::lp
