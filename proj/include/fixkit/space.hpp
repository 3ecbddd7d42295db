#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fixkit {

/// Point of R^n. Always has dim >= 1 and finite coordinates.
class Vector {
public:
    Vector(std::initializer_list<double> coords);
    explicit Vector(std::vector<double> coords);

    static Vector zeros(std::size_t dim);

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<double> coords_;
};

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(double a, const Vector& x);

double inner(const Vector& x, const Vector& y);
double norm(const Vector& x);
double distance(const Vector& x, const Vector& y);

/// (1-t)*x + t*y coordinatewise, t in [0,1].
Vector convex_combination(const Vector& x, const Vector& y, double t);

/// Closed convex subset of R^n: a coordinate box, a ball or the whole space.
class Domain {
public:
    enum class Kind { Box, Ball, WholeSpace };

    static Domain box(std::vector<double> lo, std::vector<double> hi);
    static Domain interval(double lo, double hi) { return box({lo}, {hi}); }
    static Domain ball(Vector center, double radius);
    /// `scale` multiplies the standard Gaussian used for random sampling.
    static Domain whole_space(std::size_t dim, double scale = 1.0);

    Kind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return dim_; }
    bool bounded() const noexcept { return kind_ != Kind::WholeSpace; }

    const std::vector<double>& lo() const noexcept { return lo_; }
    const std::vector<double>& hi() const noexcept { return hi_; }
    const std::vector<double>& center() const noexcept { return lo_; }
    double radius() const noexcept { return radius_; }
    double scale() const noexcept { return scale_; }

    /// Exact membership test, no tolerance.
    bool contains(const Vector& x) const;

private:
    Domain(Kind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

    Kind kind_;
    std::size_t dim_;
    std::vector<double> lo_;  // box lower bounds, or ball center
    std::vector<double> hi_;
    double radius_ = 0.0;
    double scale_ = 1.0;
};

/// Uniform grid over a box including both endpoints of every axis.
/// Ordering is lexicographic with axis 0 varying slowest.
std::vector<Vector> grid_sample(const Domain& d, std::size_t points_per_axis);

std::vector<Vector> random_sample(const Domain& d, std::size_t count, std::uint64_t seed);

}  // namespace fixkit
