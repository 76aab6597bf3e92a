#pragma once

#include <array>
#include <utility>
#include <vector>

#include "fourvertex/polygons.h"

namespace fourvertex {

/// Whether the minor arcs a-b and c-d share a point, decided from the four
/// orientation signs s[a,b,c], s[b,c,d], s[a,b,d], s[a,c,d]. The arcs cross
/// iff the first and fourth agree, the second and third agree, and the two
/// pairs differ. An endpoint of one arc antipodal to an endpoint of the other
/// cannot lie on a common point of two minor arcs unless both arcs lie on the
/// same great circle, which is degenerate, except when one arc is the
/// antipodal image of the other: a minor arc never holds a point and its
/// antipode.
template <class T>
bool minor_arcs_cross(const Vec3T<T>& a, const Vec3T<T>& b, const Vec3T<T>& c, const Vec3T<T>& d,
                      const Tolerances& tol = kDefaultTolerances) {
    const double vm = tol.vertex_match;
    if ((antipodal(a, c, vm) && antipodal(b, d, vm)) || (antipodal(a, d, vm) && antipodal(b, c, vm))) return false;
    const std::array<std::pair<const Vec3T<T>*, const Vec3T<T>*>, 4> pairs{
        {{&a, &c}, {&a, &d}, {&b, &c}, {&b, &d}}};
    for (const auto& [x, y] : pairs) {
        if (!antipodal(*x, *y, tol.vertex_match)) continue;
        const Vec3T<T>& other1 = x == &a ? b : a;
        const Vec3T<T>& other2 = y == &c ? d : c;
        if (orientation(*x, other1, other2, tol) == Sign::Zero) {
            fail(ErrorCode::DegenerateSign, "arcs lie on a common great circle");
        }
        return false;
    }

    std::array<Sign, 4> s{orientation(a, b, c, tol), orientation(b, c, d, tol), orientation(a, b, d, tol),
                          orientation(a, c, d, tol)};
    for (Sign v : s) {
        if (v == Sign::Zero) fail(ErrorCode::DegenerateSign, "arc endpoints are collinear");
    }
    using mutation::Mutant;
    switch (mutation::active()) {
        case Mutant::ArcTerm0: s[0] = -s[0]; break;
        case Mutant::ArcTerm1: s[1] = -s[1]; break;
        case Mutant::ArcTerm2: s[2] = -s[2]; break;
        case Mutant::ArcTerm3: s[3] = -s[3]; break;
        default: break;
    }
    const bool pairs_differ = mutation::is_active(Mutant::ArcRelation) ? s[0] == s[2] : s[0] != s[2];
    return s[0] == s[1] && s[2] == s[3] && pairs_differ;
}

inline bool edges_adjacent(std::size_t i, std::size_t j, std::size_t n) {
    return i == j || cyc(static_cast<std::ptrdiff_t>(i) + 1, n) == j || cyc(static_cast<std::ptrdiff_t>(j) + 1, n) == i;
}

/// Whether edge i (u_i to u_{i+1}) meets edge j. Edges must be non-adjacent.
template <class T>
bool arcs_intersect(const SphericalPolygonT<T>& q, std::size_t i, std::size_t j,
                    const Tolerances& tol = kDefaultTolerances) {
    const std::size_t n = q.size();
    if (i >= n || j >= n) fail(ErrorCode::PreconditionViolated, "edge index out of range");
    if (edges_adjacent(i, j, n)) fail(ErrorCode::PreconditionViolated, "edges share a vertex");
    const auto a = static_cast<std::ptrdiff_t>(i);
    const auto b = static_cast<std::ptrdiff_t>(j);
    return minor_arcs_cross(q[a], q[a + 1], q[b], q[b + 1], tol);
}

template <class T>
bool is_simple(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (edges_adjacent(i, j, n)) continue;
            if (arcs_intersect(q, i, j, tol)) return false;
        }
    }
    return true;
}

/// Q - u_i: drop vertex i and bridge u_{i-1} to u_{i+1} by a minor arc.
template <class T>
SphericalPolygonT<T> delete_vertex(const SphericalPolygonT<T>& q, std::size_t i,
                                   const Tolerances& tol = kDefaultTolerances) {
    if (q.size() < 4) fail(ErrorCode::TooFewPoints, "deletion needs n >= 4");
    if (i >= q.size()) fail(ErrorCode::PreconditionViolated, "vertex index out of range");
    const auto k = static_cast<std::ptrdiff_t>(i);
    if (parallel(q[k - 1], q[k + 1], tol.degeneracy)) {
        fail(ErrorCode::AntipodalBridge, "neighbours of vertex " + std::to_string(i + 1) + " are equal or antipodal");
    }
    std::vector<Vec3T<T>> out;
    out.reserve(q.size() - 1);
    for (std::size_t m = 0; m < q.size(); ++m) {
        if (m != i) out.push_back(q.vertices()[m]);
    }
    return SphericalPolygonT<T>(std::move(out), tol);
}

/// Indices i whose deletion keeps the polygon simple.
template <class T>
std::vector<std::size_t> good_vertices(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (is_simple(delete_vertex(q, i, tol), tol)) out.push_back(i);
    }
    return out;
}

/// Triangulation of the sphere whose vertices are the polygon's vertices and
/// whose edges include every polygon edge. Region 1 lies to the left of the
/// directed edges u_i -> u_{i+1}, region 2 to the right.
struct SphericalTriangulation {
    std::vector<std::array<std::size_t, 3>> triangles;
    std::vector<int> region;
    std::vector<std::pair<std::size_t, std::size_t>> chords;
};

/// Area of the spherical triangle with unit vertices a, b, c.
double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

/// Greedy chord insertion in (ascending source, ascending target) order,
/// then face extraction from the planar embedding.
SphericalTriangulation triangulate_regions(const SphericalPolygon& q, const Tolerances& tol = kDefaultTolerances);

struct DualGraphReport {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t leaves = 0;
    bool connected = false;
    bool is_tree() const { return connected && edges + 1 == nodes; }
};

/// Dual graph of one region: triangles adjacent across a chord are linked.
DualGraphReport dual_graph(const SphericalTriangulation& t, int region);

/// For every leaf triangle of a region's dual tree, the triangle vertex not on
/// its single chord.
std::vector<std::size_t> ear_vertices(const SphericalTriangulation& t, int region);

}  // namespace fourvertex
