#pragma once

#include "spiky/geometry.hpp"
#include "spiky/sphere_cover.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spiky {

inline constexpr double kVertexTol = 1e-9;

// Sp[x_1, ..., x_m]: union of conv(B^n u {x_i}); every vertex satisfies
// |x_i| >= 1 + vertex_tol.
struct SpikyBall {
    SpikyBall(int n, std::vector<Vector> v, double vertex_tol = kVertexTol);

    int dimension;
    std::vector<Vector> vertices;

    friend bool operator==(const SpikyBall&, const SpikyBall&) = default;
};

struct CapBodyCheck {
    bool ok;
    std::optional<std::pair<std::size_t, std::size_t>> violating;
};

// Open associated caps pairwise disjoint: for i != j the axis separation is at
// least the sum of the two cap radii (tangency allowed).
CapBodyCheck is_cap_body(const SpikyBall& s, double tol = kDefaultTol);

// A spiky ball that passed is_cap_body, i.e. a convex one.
class CapBody {
public:
    // Throws PreconditionError naming the first overlapping pair.
    explicit CapBody(SpikyBall s, double tol = kDefaultTol);

    const SpikyBall& spiky() const { return s_; }
    int dimension() const { return s_.dimension; }
    const std::vector<Vector>& vertices() const { return s_.vertices; }

private:
    SpikyBall s_;
};

struct DirectionSource {
    enum class Kind { vertex, cover, given };
    Kind kind = Kind::given;
    std::size_t index = 0;
};

struct DirectionSet {
    int dimension;
    std::vector<UnitVector> directions;
    std::vector<DirectionSource> sources;

    void add(UnitVector u, DirectionSource src)
    {
        directions.push_back(std::move(u));
        sources.push_back(src);
    }
};

// C[x/|x|, arccos(1/|x|)], the base of the spike at x.
SphericalCap base_cap(const Vector& x);

// C(-x/|x|, pi/2 - arccos(1/|x|)): every direction in it illuminates vertex x.
SphericalCap illumination_cap(const Vector& x);

// Positive hull of the directions equals E^n, i.e. no nonzero u has
// y_j.u <= 0 for all j. Decided as rank n plus a strictly positive linear
// dependency (the origin interior to the convex hull), via the LP
//   max t  s.t.  sum lambda_j y_j = 0,  sum lambda_j = 1,  lambda_j >= t.
bool positive_hull_full(std::span<const UnitVector> directions);
bool positive_hull_full(const DirectionSet& d);

struct IlluminationCheck {
    bool ok;
    bool positive_hull;
    std::optional<std::size_t> unilluminated;
};

// Sufficient condition for illumination: full positive hull, and every
// vertex's illumination cap (open, tolerance-exclusive) holds a direction.
IlluminationCheck verifies_illumination(const SpikyBall& s, const DirectionSet& d, double tol = kDefaultTol);

struct IlluminationParams {
    // The U2 cover uses caps of radius pi/2 - alpha - cover_margin, so the
    // open illumination caps of near vertices contain a center with room to
    // spare.
    double cover_margin = 1e-6;
    CoverParams cover;
    double tol = kDefaultTol;
    // When false a failed certificate is recorded in the result instead of
    // thrown.
    bool strict = true;
};

struct IlluminationResult {
    DirectionSet directions;
    double alpha;
    std::size_t far_vertices; // |U1|
    std::size_t cover_size;   // |U2|
    IlluminationCheck check;
};

// |x| >= 1/cos(alpha), with a relative slack of 1e-12 so that boundary
// vertices such as sqrt(2) e_1 at alpha = pi/4 land in U1.
bool is_far_vertex(const Vector& x, double alpha);

// U1 = {-x/|x| : x far}, U2 = centers of a certified cover of angular radius
// pi/2 - alpha. Throws VerificationError when the result fails
// verifies_illumination.
IlluminationResult illuminate_cap_body(const CapBody& k, double alpha, std::uint64_t seed,
                                       const IlluminationParams& params = {});

// Same construction with a caller-supplied U2 cover, whose angular radius must
// be below pi/2 - alpha.
IlluminationResult illuminate_cap_body(const CapBody& k, double alpha, const Cover& u2,
                                       const IlluminationParams& params = {});

// Runs the construction on a raw spiky ball. Only the final certificate
// decides success.
IlluminationResult illuminate_spiky_ball(const SpikyBall& s, double alpha, const Cover& u2,
                                         const IlluminationParams& params = {});

// Evaluates each alpha and keeps the smallest certified direction set.
IlluminationResult illuminate_cap_body_sweep(const CapBody& k, std::span<const double> alphas, std::uint64_t seed,
                                             const IlluminationParams& params = {});

// Builds the U2 cover for the given alpha.
Cover illumination_cover(int n, double alpha, std::uint64_t seed, const IlluminationParams& params = {});

// Antipodal axes of the far vertices are pairwise >= 2 alpha - tol apart.
bool u1_separation_check(const SpikyBall& s, double alpha, double tol = kDefaultTol);

} // namespace spiky
