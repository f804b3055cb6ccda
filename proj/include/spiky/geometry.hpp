#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spiky {

// Global comparison tolerance used when callers do not pass one.
inline constexpr double kDefaultTol = 1e-9;
// Allowed deviation of a UnitVector's norm from 1.
inline constexpr double kUnitTol = 1e-12;

// A point of E^n, n >= 2, with finite coordinates.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<double> coords);
    Vector(std::initializer_list<double> coords);

    static Vector zero(int n);
    static Vector basis(int n, int i, double scale = 1.0);

    int dim() const { return static_cast<int>(coords_.size()); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const { return coords_; }
    const std::vector<double>& raw() const { return coords_; }

    double norm() const;
    double norm2() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(double s);

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<double> coords_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(Vector a, double s);
Vector operator*(double s, Vector a);

double dot(const Vector& a, const Vector& b);
double distance(const Vector& a, const Vector& b);

// A point of S^{n-1}.
class UnitVector {
public:
    // Throws DomainError unless | |v| - 1 | <= tol.
    explicit UnitVector(Vector v, double tol = kUnitTol);

    // v / |v|; throws DomainError for the zero vector.
    static UnitVector normalized(const Vector& v);

    int dim() const { return v_.dim(); }
    double operator[](std::size_t i) const { return v_[i]; }
    const Vector& vec() const { return v_; }
    operator const Vector&() const { return v_; }

    UnitVector operator-() const;

    friend bool operator==(const UnitVector&, const UnitVector&) = default;

private:
    struct Trusted {};
    UnitVector(Vector v, Trusted) : v_(std::move(v)) {}
    Vector v_;
};

// Closed ball {p : |p - center| <= radius}.
struct Ball {
    Ball(Vector c, double r);

    int dim() const { return center.dim(); }

    Vector center;
    double radius;

    friend bool operator==(const Ball&, const Ball&) = default;
};

// Spherical cap C(axis, angle) (open) or C[axis, angle] (closed) on the
// sphere of radius sphere_radius. Membership tests take unit vectors; callers
// scale by sphere_radius themselves.
struct SphericalCap {
    SphericalCap(UnitVector a, double angle, bool is_closed, double sphere_r = 1.0);

    int dim() const { return axis.dim(); }

    UnitVector axis;
    double angular_radius;
    bool closed;
    double sphere_radius;
};

void require_same_dim(int a, int b, const char* what);

// arccos of the clamped dot product, in [0, pi].
double angular_distance(const UnitVector& u, const UnitVector& v);

// Closed caps accept x.p >= cos(a) - tol; open caps require x.p > cos(a) + tol.
bool cap_contains(const SphericalCap& cap, const UnitVector& p, double tol = kDefaultTol);

bool balls_intersect(const Ball& a, const Ball& b, double tol = kDefaultTol);

bool point_in_ball(const Vector& p, const Ball& b, double tol = kDefaultTol);

// Raw helpers over contiguous coordinate arrays, used by the inner loops.
double dot(std::span<const double> a, std::span<const double> b);
double clamped_acos(double c);

} // namespace spiky
