#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace plcwt {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
};

/// Rotation matrix action of the transform's rotation parameter:
/// (t1, t2) -> (cos(th) t1 + sin(th) t2, -sin(th) t1 + cos(th) t2).
inline Vec2 rotate_point(const Vec2& t, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * t.x + s * t.y, -s * t.x + c * t.y};
}

struct Rotation {
    double theta = 0.0;
    Vec2 apply(const Vec2& t) const { return rotate_point(t, theta); }
    Rotation inverse() const { return {-theta}; }
};

// Pairwise (cascade) summation: deterministic and accurate for the long
// quadrature reductions used throughout.
double pairwise_sum(std::span<const double> v);
Complex pairwise_sum(std::span<const Complex> v);

// Runs fn(i) for i in [0, n). Worker count comes from PLCWT_THREADS
// (default: hardware concurrency). Each index is processed exactly once;
// callers must write to disjoint slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);
int worker_count();

}  // namespace plcwt
