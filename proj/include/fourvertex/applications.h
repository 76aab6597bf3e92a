#pragma once

#include <utility>
#include <vector>

#include "fourvertex/polygons.h"

namespace fourvertex {

/// area1 is the region to the left of the directed edges u_i -> u_{i+1}.
struct RegionAreas {
    double area1 = 0;
    double area2 = 0;
};

/// Signed exterior angle at vertex i, positive for a left turn.
double turning_angle(const SphericalPolygon& q, std::size_t i, const Tolerances& tol = kDefaultTolerances);

/// Gauss-Bonnet: area of the left region = 2 pi - sum of turning angles.
RegionAreas region_areas(const SphericalPolygon& q, const Tolerances& tol = kDefaultTolerances);

/// A polygon lying on one great circle is simple iff it winds around that
/// circle exactly once, always in the same direction.
bool planar_is_simple(const SphericalPolygon& q, const Tolerances& tol = kDefaultTolerances);

template <class T>
bool is_centrally_symmetric(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    const std::size_t n = q.size();
    if (n % 2 != 0) return false;
    const auto m = static_cast<std::ptrdiff_t>(n / 2);
    for (std::ptrdiff_t i = 0; i < m; ++i) {
        if (!antipodal(q[i], q[i + m], tol.vertex_match)) return false;
    }
    return true;
}

/// Exactly on one great circle.
bool is_planar_exact(const SphericalPolygonQ& q);

struct TennisBallReport {
    bool planar = false;
    bool balanced = false;
    RegionAreas areas;
    bool equal_area = false;
    /// Equal area decided by exact symmetry (central symmetry or planarity)
    /// rather than by the floating-point area band.
    bool equal_area_exact = false;
    int inflections = 0;
    bool theorem_holds = false;
};

TennisBallReport tennis_ball_check(const SphericalPolygon& q, const Tolerances& tol = kDefaultTolerances);
TennisBallReport tennis_ball_check(const SphericalPolygonQ& q, const Tolerances& tol = kDefaultTolerances);

struct MobiusReport {
    bool planar = false;
    int inflections = 0;
    std::vector<std::size_t> inflection_edges;
    std::vector<std::pair<std::size_t, std::size_t>> paired;
    bool pairing_holds = false;
    bool directions_opposite = false;
    bool theorem_holds = false;
};

MobiusReport mobius_check(const SphericalPolygon& q, const Tolerances& tol = kDefaultTolerances);

}  // namespace fourvertex
