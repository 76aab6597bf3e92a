#pragma once

// Independent reference computations used to derive expected values. None of
// these route through the library's orientation kernel.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "fourvertex/harness.h"
#include "fourvertex/polygons.h"

namespace testsupport {

using fourvertex::Rational;
using fourvertex::SphericalPolygon;
using fourvertex::Vec3;
using fourvertex::Vec3Q;

inline const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
inline const double kHalfSqrt2 = std::sqrt(2.0) / 2.0;

inline std::vector<Vec3> tetrahedral() {
    const double s = kInvSqrt3;
    return {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
}

inline std::vector<Vec3> example1() {
    const double h = kHalfSqrt2;
    return {{h, 0, h}, {0, h, h}, {-h, 0, h}, {0, -h, h}};
}

inline std::vector<Vec3> equator_square() { return {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}}; }

/// Leibniz expansion over all six permutations.
inline double leibniz_det(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double m[3][3] = {{a.x, a.y, a.z}, {b.x, b.y, b.z}, {c.x, c.y, c.z}};
    constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    constexpr int parity[6] = {1, 1, 1, -1, -1, -1};
    double s = 0;
    for (int p = 0; p < 6; ++p) s += parity[p] * m[0][perms[p][0]] * m[1][perms[p][1]] * m[2][perms[p][2]];
    return s;
}

inline int leibniz_sign(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double d = leibniz_det(a, b, c);
    return d > 1e-10 ? 1 : (d < -1e-10 ? -1 : 0);
}

/// Sign changes of eps_i = sign det(u_i, u_{i+1}, u_{i+2}) via leibniz_det.
inline int oracle_sign_changes(const std::vector<Vec3>& u) {
    const std::size_t n = u.size();
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = leibniz_sign(u[i], u[(i + 1) % n], u[(i + 2) % n]);
    int changes = 0;
    for (std::size_t i = 0; i < n; ++i) changes += e[i] != e[(i + 1) % n] ? 1 : 0;
    return changes;
}

/// Whether all points fit in one closed hemisphere, decided by a dense scan
/// of candidate normals refined around the best one. Only used where the
/// answer has a clear margin.
inline bool scan_hemisphere(const std::vector<Vec3>& u, double margin = 1e-6) {
    const int steps = 400;
    for (int i = 0; i <= steps; ++i) {
        const double theta = std::numbers::pi * i / steps;
        for (int j = 0; j < 2 * steps; ++j) {
            const double phi = std::numbers::pi * j / steps;
            const Vec3 h{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
            bool all = true;
            for (const auto& v : u) all = all && (h.x * v.x + h.y * v.y + h.z * v.z) >= margin;
            if (all) return true;
        }
    }
    return false;
}

/// Signed area of the spherical triangle (a, b, c), positive when det > 0.
inline double signed_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double num = leibniz_det(a, b, c);
    const double den = 1.0 + (a.x * b.x + a.y * b.y + a.z * b.z) + (b.x * c.x + b.y * c.y + b.z * c.z) +
                       (c.x * a.x + c.y * a.y + c.z * a.z);
    return 2.0 * std::atan2(num, den);
}

/// Left-region area by a signed fan from pole p, reduced into [0, 4 pi).
inline double fan_area(const std::vector<Vec3>& u, const Vec3& p) {
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += signed_triangle_area(p, u[i], u[(i + 1) % u.size()]);
    const double four_pi = 4 * std::numbers::pi;
    s = std::fmod(s, four_pi);
    if (s < 0) s += four_pi;
    return s;
}

/// Region (1 = left of the directed edges) containing point x, by counting
/// crossings of the minor arc from x to a reference point just left of edge 0.
inline int region_by_crossings(const std::vector<Vec3>& u, const Vec3& x) {
    using fourvertex::cross;
    using fourvertex::normalized;
    const Vec3 mid = normalized(u[0] + u[1]);
    const Vec3 ref = normalized(mid + normalized(cross(u[0], u[1])) * 1e-4);
    int crossings = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (fourvertex::harness::oracle_arc_intersection(x, ref, u[i], u[(i + 1) % u.size()])) ++crossings;
    }
    return crossings % 2 == 0 ? 1 : 2;
}

/// Rotation about a unit axis.
inline Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
    using fourvertex::cross;
    using fourvertex::dot;
    return v * std::cos(angle) + cross(axis, v) * std::sin(angle) + axis * (dot(axis, v) * (1 - std::cos(angle)));
}

inline std::vector<Vec3> rotate_all(const std::vector<Vec3>& pts, const Vec3& axis, double angle) {
    std::vector<Vec3> out;
    for (const auto& p : pts) out.push_back(rotate(p, axis, angle));
    return out;
}

inline Vec3 lat_lon(double lat_deg, double lon_deg) {
    const double la = lat_deg * std::numbers::pi / 180.0;
    const double lo = lon_deg * std::numbers::pi / 180.0;
    return {std::cos(la) * std::cos(lo), std::cos(la) * std::sin(lo), std::sin(la)};
}

}  // namespace testsupport
