#include "spiky/geometry.hpp"

#include "spiky/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace spiky {

namespace {

void validate_coords(const std::vector<double>& c)
{
    if (c.size() < 2)
        throw DimensionMismatch("vector dimension must be at least 2, got " + std::to_string(c.size()));
    for (double x : c)
        if (!std::isfinite(x)) throw DomainError("vector has a non-finite coordinate");
}

} // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords))
{
    validate_coords(coords_);
}

Vector::Vector(std::initializer_list<double> coords) : coords_(coords)
{
    validate_coords(coords_);
}

Vector Vector::zero(int n)
{
    return Vector(std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

Vector Vector::basis(int n, int i, double scale)
{
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c.at(static_cast<std::size_t>(i)) = scale;
    return Vector(std::move(c));
}

double Vector::norm2() const
{
    return dot(coords(), coords());
}

double Vector::norm() const
{
    return std::sqrt(norm2());
}

Vector& Vector::operator+=(const Vector& o)
{
    require_same_dim(dim(), o.dim(), "vector addition");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
    require_same_dim(dim(), o.dim(), "vector subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Vector& Vector::operator*=(double s)
{
    for (auto& x : coords_) x *= s;
    return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator-(Vector a) { return a *= -1.0; }
Vector operator*(Vector a, double s) { return a *= s; }
Vector operator*(double s, Vector a) { return a *= s; }

double dot(const Vector& a, const Vector& b)
{
    require_same_dim(a.dim(), b.dim(), "dot product");
    return dot(a.coords(), b.coords());
}

double distance(const Vector& a, const Vector& b)
{
    require_same_dim(a.dim(), b.dim(), "distance");
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

UnitVector::UnitVector(Vector v, double tol) : v_(std::move(v))
{
    if (std::abs(v_.norm() - 1.0) > tol)
        throw DomainError("unit vector has norm " + std::to_string(v_.norm()));
}

UnitVector UnitVector::normalized(const Vector& v)
{
    const double n = v.norm();
    if (!(n > 0.0)) throw DomainError("cannot normalize the zero vector");
    return UnitVector(v * (1.0 / n), Trusted{});
}

UnitVector UnitVector::operator-() const
{
    return UnitVector(-v_, Trusted{});
}

Ball::Ball(Vector c, double r) : center(std::move(c)), radius(r)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("ball radius must be positive and finite");
}

SphericalCap::SphericalCap(UnitVector a, double angle, bool is_closed, double sphere_r)
    : axis(std::move(a)), angular_radius(angle), closed(is_closed), sphere_radius(sphere_r)
{
    if (!(angular_radius > 0.0 && angular_radius < std::numbers::pi))
        throw DomainError("cap angular radius must lie in (0, pi)");
    if (!(sphere_radius > 0.0)) throw DomainError("cap sphere radius must be positive");
}

void require_same_dim(int a, int b, const char* what)
{
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double clamped_acos(double c)
{
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double angular_distance(const UnitVector& u, const UnitVector& v)
{
    require_same_dim(u.dim(), v.dim(), "angular_distance");
    return clamped_acos(dot(u.vec().coords(), v.vec().coords()));
}

bool cap_contains(const SphericalCap& cap, const UnitVector& p, double tol)
{
    require_same_dim(cap.dim(), p.dim(), "cap_contains");
    const double c = dot(cap.axis.vec().coords(), p.vec().coords());
    const double threshold = std::cos(cap.angular_radius);
    return cap.closed ? c >= threshold - tol : c > threshold + tol;
}

bool balls_intersect(const Ball& a, const Ball& b, double tol)
{
    require_same_dim(a.dim(), b.dim(), "balls_intersect");
    return distance(a.center, b.center) <= a.radius + b.radius + tol;
}

bool point_in_ball(const Vector& p, const Ball& b, double tol)
{
    require_same_dim(p.dim(), b.dim(), "point_in_ball");
    return distance(p, b.center) <= b.radius + tol;
}

} // namespace spiky
