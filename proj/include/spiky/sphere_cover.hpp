#pragma once

#include "spiky/geometry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace spiky {

// Closed caps of a common angular radius whose centers (are meant to) cover
// S^{n-1}. Outputs of greedy_cover are upper witnesses for N(n, theta).
struct Cover {
    int dimension;
    double angular_radius;
    std::vector<UnitVector> centers;
};

// Centers with pairwise angular distance >= separation; outputs of
// maximal_packing are lower witnesses for M(n, theta).
struct Packing {
    int dimension;
    double separation;
    std::vector<UnitVector> centers;
};

enum class CertificateMethod { net, sampled };

struct CoverCertificate {
    CertificateMethod method = CertificateMethod::net;
    // net: angular resolution delta of the net actually used (0 for the exact
    // arc check on the circle). sampled: unused.
    double resolution = 0.0;
    // sampled: number of uniform points tested. net: number of net points.
    std::size_t samples = 0;
    // Slack of the worst test point; negative when some point fails.
    double margin = 0.0;
    bool passed = false;
    // sampled: rule-of-three 95% bound on the uncovered area fraction.
    double confidence_bound = 0.0;
    std::optional<UnitVector> witness;
};

struct CoverParams {
    // Angular resolution of the candidate net; 0 selects angular_radius / 5.
    double build_resolution = 0.0;
    // Resolution of the net the result is certified against; 0 selects
    // angular_radius / 5.
    double certify_resolution = 0.0;
    std::size_t max_candidates = 2'000'000;
};

struct PackingParams {
    // Uniform candidates (each also contributes its antipode) for the
    // farthest-point phase.
    std::size_t candidates = 20'000;
    // Hole search stops after this many consecutive probes add nothing.
    std::size_t saturation_window = 20'000;
    std::size_t max_points = 20'000;
};

// Seeded farthest-point greedy on a rotated lattice net; the result always
// carries a passing net certificate. n = 2 uses the optimal ceil(pi/theta)
// equally spaced arcs.
Cover greedy_cover(int n, double theta, std::uint64_t seed, const CoverParams& params = {});

// Greedy theta-separated set, saturated against farthest-point candidates and
// then by hole search (deep holes located by a small LP). n = 2 returns the
// optimal floor(2 pi / theta) equally spaced points.
Packing maximal_packing(int n, double theta, std::uint64_t seed, const PackingParams& params = {});

// net: passes iff every point of a delta-net lies within theta - delta of a
// center (on the circle the arc gaps are checked exactly instead).
// sampled: passes iff all `resolution_or_samples` uniform points are covered.
CoverCertificate verify_cover(const Cover& cover, CertificateMethod method, double resolution_or_samples,
                              std::uint64_t seed = 0, double tol = kDefaultTol,
                              std::size_t max_net_points = 5'000'000);

// Leading-order (1/sin theta)^n.
double covering_size_estimate(int n, double theta);

// Lattice net on S^{n-1}: all integer points k with |k|_1 = level, projected
// radially. Its angular covering radius is at most
// 2 atan( sqrt(a (n - a)) / (2 level) ), a = floor(n / 2).
struct SphereNet {
    int dimension = 0;
    int level = 0;
    double resolution = 0.0;
    std::vector<double> coords; // flat, dimension entries per point

    std::size_t size() const { return coords.size() / static_cast<std::size_t>(dimension); }
    std::span<const double> point(std::size_t i) const
    {
        return {coords.data() + i * static_cast<std::size_t>(dimension), static_cast<std::size_t>(dimension)};
    }
};

double net_resolution(int n, int level);
int net_level_for(int n, double delta);
double net_size(int n, int level);
SphereNet build_net(int n, int level);

// Seeded uniformly random rotation, applied in place to a flat point array.
void rotate_points(std::vector<double>& coords, int n, std::uint64_t seed);

} // namespace spiky
