#pragma once

#include "spiky/geometry.hpp"
#include "spiky/illumination.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace spiky {

// Unit vectors with pairwise angular distances in [pi/3, 2pi/3].
struct SeparatedSet {
    int dimension;
    std::vector<UnitVector> points;
    double epsilon = 0.0;
    bool reached_target = false;
    std::size_t draws = 0;
};

// Negation-closed set with pairwise angular distances >= pi/3.
struct SymmetricSeparatedSet {
    int dimension;
    std::vector<UnitVector> points;
};

struct SeparatedSetParams {
    // Only affects the predicted size (1/sin(pi/3 + epsilon))^n; acceptance
    // always uses [pi/3, 2pi/3]. Must lie in [0, pi/6).
    double epsilon = 0.0;
    std::size_t max_draws = 200000;
};

// Seeded rejection sampling. Stops at target or after max_draws draws; the
// flag reached_target records which.
SeparatedSet construct_separated_set(int n, std::size_t target, std::uint64_t seed,
                                     const SeparatedSetParams& params = {});

double predicted_separated_size(int n, double epsilon);

// Throws PreconditionError if a pair violates the window.
void validate_separated(const SeparatedSet& x, double tol = kDefaultTol);
void validate_symmetric(const SymmetricSeparatedSet& y, double tol = kDefaultTol);

// X u -X.
SymmetricSeparatedSet symmetrize(const SeparatedSet& x);

// Sp[(2/sqrt 3) y_i]; the caps C[y_i, pi/6] are pairwise disjoint.
CapBody build_lower_bound_body(const SymmetricSeparatedSet& y);

// Number of y_i with angular_distance(-u, y_i) < pi/3, i.e. the vertices
// illuminated by u.
std::size_t illumination_multiplicity(const SymmetricSeparatedSet& y, const UnitVector& u);

struct MultiplicityReport {
    std::size_t set_size = 0;
    std::size_t samples = 0;
    std::size_t max = 0;
    double mean = 0.0;
    std::vector<std::size_t> histogram; // histogram[m] = samples with multiplicity m
    std::optional<double> witness;      // set_size / max
    std::optional<UnitVector> argmax;
};

MultiplicityReport multiplicity_report(const SymmetricSeparatedSet& y, std::size_t samples, std::uint64_t seed);

} // namespace spiky
