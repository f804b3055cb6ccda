#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace spiky {

// Seeded generator with distributions written out by hand so that a given
// seed produces the same stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, bound).
    std::uint64_t index(std::uint64_t bound);

    double normal();

    // Uniform point on S^{n-1} as a raw coordinate array.
    std::vector<double> unit_vector(int n);

    // Uniform point in the closed unit ball B^n.
    std::vector<double> in_unit_ball(int n);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Child seed for an independent sub-stream (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

} // namespace spiky
