#pragma once

#include <cmath>
#include <ostream>

#include <boost/multiprecision/gmp.hpp>

namespace fourvertex {

/// Exact rational scalar used by the exact kernel. Expression templates are
/// disabled so that generic code can use `auto` freely.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
struct Vec3T {
    T x{};
    T y{};
    T z{};

    Vec3T() = default;
    Vec3T(T x_, T y_, T z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    Vec3T operator+(const Vec3T& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3T operator-(const Vec3T& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3T operator-() const { return {-x, -y, -z}; }
    Vec3T operator*(const T& s) const { return {x * s, y * s, z * s}; }
    Vec3T operator/(const T& s) const { return {x / s, y / s, z / s}; }
    Vec3T& operator+=(const Vec3T& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3T& operator-=(const Vec3T& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }

    bool operator==(const Vec3T& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3T& o) const { return !(*this == o); }
};

template <class T>
Vec3T<T> operator*(const T& s, const Vec3T<T>& v) {
    return v * s;
}

using Vec3 = Vec3T<double>;
using Vec3Q = Vec3T<Rational>;

template <class T>
T dot(const Vec3T<T>& a, const Vec3T<T>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T>
bool is_zero(const Vec3T<T>& v) {
    return v.x == 0 && v.y == 0 && v.z == 0;
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Angle in radians between two nonzero vectors, stable near 0 and pi.
inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

inline Vec3Q to_rational(const Vec3& v) { return {Rational(v.x), Rational(v.y), Rational(v.z)}; }

inline Vec3 to_double(const Vec3Q& v) {
    return {v.x.convert_to<double>(), v.y.convert_to<double>(), v.z.convert_to<double>()};
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Vec3T<T>& v) {
    return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

}  // namespace fourvertex
