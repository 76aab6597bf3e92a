#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fourvertex/predicates.h"

namespace fourvertex {

/// Cyclic index: wraps any signed offset into [0, n).
inline std::size_t cyc(std::ptrdiff_t i, std::size_t n) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

/// Closed polygon in R^3. Vertices are stored once; indices are taken mod n.
template <class T>
class SpacePolygonT {
public:
    explicit SpacePolygonT(std::vector<Vec3T<T>> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.size() < 4) {
            fail(ErrorCode::TooFewPoints, "a space polygon needs at least 4 vertices");
        }
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if constexpr (std::is_same_v<T, double>) {
                if (!is_finite(vertices_[i])) fail(ErrorCode::InvalidInput, "non-finite vertex");
            }
            if (vertices_[i] == vertices_[cyc(i + 1, size())]) {
                fail(ErrorCode::DegenerateEdge, "consecutive vertices coincide at index " + std::to_string(i));
            }
        }
    }

    std::size_t size() const { return vertices_.size(); }
    const Vec3T<T>& operator[](std::ptrdiff_t i) const { return vertices_[cyc(i, size())]; }
    const std::vector<Vec3T<T>>& vertices() const { return vertices_; }

    /// Edge e_i = v_{i+1} - v_i.
    Vec3T<T> edge(std::ptrdiff_t i) const { return (*this)[i + 1] - (*this)[i]; }

private:
    std::vector<Vec3T<T>> vertices_;
};

/// Closed polygon on the unit sphere whose edges are minor great-circle arcs.
///
/// With T = double every vertex is unit length (renormalized on construction
/// when within Tolerances::norm). With T = Rational vertices are nonzero
/// directions; every predicate of the exact kernel is invariant under positive
/// rescaling, so exact unit length is not required.
template <class T>
class SphericalPolygonT {
public:
    explicit SphericalPolygonT(std::vector<Vec3T<T>> vertices, const Tolerances& tol = kDefaultTolerances)
        : vertices_(std::move(vertices)) {
        if (vertices_.size() < 3) {
            fail(ErrorCode::TooFewPoints, "a spherical polygon needs at least 3 vertices");
        }
        for (auto& v : vertices_) {
            if constexpr (std::is_same_v<T, double>) {
                if (!is_finite(v)) fail(ErrorCode::InvalidInput, "non-finite vertex");
                const double len = norm(v);
                if (std::abs(len - 1.0) > tol.norm) {
                    fail(ErrorCode::InvalidInput, "vertex is not unit length (|v| = " + std::to_string(len) + ")");
                }
                v = v / len;
            } else {
                if (is_zero(v)) fail(ErrorCode::InvalidInput, "zero direction");
            }
        }
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (parallel(vertices_[i], vertices_[cyc(i + 1, size())], tol.degeneracy)) {
                fail(ErrorCode::AntipodalConsecutive,
                     "consecutive vertices equal or antipodal at index " + std::to_string(i));
            }
        }
    }

    std::size_t size() const { return vertices_.size(); }
    const Vec3T<T>& operator[](std::ptrdiff_t i) const { return vertices_[cyc(i, size())]; }
    const std::vector<Vec3T<T>>& vertices() const { return vertices_; }

private:
    std::vector<Vec3T<T>> vertices_;
};

using SpacePolygon = SpacePolygonT<double>;
using SpacePolygonQ = SpacePolygonT<Rational>;
using SphericalPolygon = SphericalPolygonT<double>;
using SphericalPolygonQ = SphericalPolygonT<Rational>;

inline SphericalPolygonQ to_rational(const SphericalPolygon& q) {
    std::vector<Vec3Q> out;
    out.reserve(q.size());
    for (const auto& v : q.vertices()) out.push_back(to_rational(v));
    return SphericalPolygonQ(std::move(out));
}

inline SpacePolygonQ to_rational(const SpacePolygon& p) {
    std::vector<Vec3Q> out;
    out.reserve(p.size());
    for (const auto& v : p.vertices()) out.push_back(to_rational(v));
    return SpacePolygonQ(std::move(out));
}

/// Cyclic sequence eps_i = sign det[u_i, u_{i+1}, u_{i+2}].
struct EpsilonSequence {
    std::vector<Sign> signs;
    std::string source;

    std::size_t size() const { return signs.size(); }
    bool has_zero() const {
        for (Sign s : signs) {
            if (s == Sign::Zero) return true;
        }
        return false;
    }
    bool all_zero() const {
        for (Sign s : signs) {
            if (s != Sign::Zero) return false;
        }
        return true;
    }
    std::string to_string() const {
        std::string out;
        for (Sign s : signs) out.push_back(sign_char(s));
        return out;
    }
};

/// Unit edge directions u_i = (v_{i+1} - v_i) / |v_{i+1} - v_i|. The exact
/// variant keeps the unnormalized edge vectors as directions.
template <class T>
SphericalPolygonT<T> tangent_indicatrix(const SpacePolygonT<T>& p, const Tolerances& tol = kDefaultTolerances) {
    std::vector<Vec3T<T>> dirs;
    dirs.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec3T<T> e = p.edge(static_cast<std::ptrdiff_t>(i));
        if (is_zero(e)) fail(ErrorCode::DegenerateEdge, "zero-length edge " + std::to_string(i));
        if constexpr (std::is_same_v<T, double>) {
            dirs.push_back(normalized(e));
        } else {
            dirs.push_back(e);
        }
    }
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        if (antipodal(dirs[i], dirs[cyc(i + 1, dirs.size())], tol.vertex_match)) {
            fail(ErrorCode::AntipodalConsecutive, "edge " + std::to_string(i) + " reverses the next one");
        }
    }
    return SphericalPolygonT<T>(std::move(dirs), tol);
}

/// True iff no 4 vertices of P are coplanar (exhaustive over all quadruples).
template <class T>
bool is_generic(const SpacePolygonT<T>& p, const Tolerances& tol = kDefaultTolerances) {
    const std::size_t n = p.size();
    const auto& v = p.vertices();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const Vec3T<T> ab = v[b] - v[a];
            for (std::size_t c = b + 1; c < n; ++c) {
                const Vec3T<T> ac = v[c] - v[a];
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (orientation(ab, ac, v[d] - v[a], tol) == Sign::Zero) return false;
                }
            }
        }
    }
    return true;
}

template <class T>
EpsilonSequence epsilon_sequence(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances,
                                 bool allow_zero = false) {
    EpsilonSequence e;
    e.source = "spherical polygon, n=" + std::to_string(q.size());
    e.signs.reserve(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        const Sign s = orientation(q[k], q[k + 1], q[k + 2], tol);
        if (s == Sign::Zero && !allow_zero) {
            fail(ErrorCode::DegenerateTriple, "vertices " + std::to_string(i + 1) + ".." +
                                                  std::to_string(cyc(k + 2, q.size()) + 1) + " are collinear");
        }
        e.signs.push_back(s);
    }
    return e;
}

/// Number of cyclically adjacent opposite-sign pairs. A sequence of all Zero
/// entries is a planar polygon, for which every edge counts.
int count_sign_changes(const EpsilonSequence& e);

/// Per-edge inflection flags: flag i is set iff u_{i-1} and u_{i+2} lie on
/// different sides of span{u_i, u_{i+1}}.
template <class T>
std::vector<bool> inflection_flags(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    std::vector<bool> flags(q.size(), false);
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        try {
            flags[i] = !same_side(q[k - 1], q[k + 2], q[k], q[k + 1], tol);
        } catch (const GeometryError&) {
            fail(ErrorCode::DegenerateTriple, "collinear consecutive triple next to edge " + std::to_string(i + 1));
        }
    }
    return flags;
}

/// Indices i of the inflection edges {u_i, u_{i+1}} (zero-based).
template <class T>
std::vector<std::size_t> spherical_inflections(const SphericalPolygonT<T>& q,
                                               const Tolerances& tol = kDefaultTolerances) {
    const auto flags = inflection_flags(q, tol);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i]) out.push_back(i);
    }
    return out;
}

/// Indices i of the flattenings {v_i, v_{i+1}, v_{i+2}} (zero-based): v_{i-1}
/// and v_{i+3} lie strictly on the same side of the plane through the triple.
template <class T>
std::vector<std::size_t> flattenings(const SpacePolygonT<T>& p, const Tolerances& tol = kDefaultTolerances) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        const Vec3T<T>& o = p[k];
        const Vec3T<T> a = p[k + 1] - o;
        const Vec3T<T> b = p[k + 2] - o;
        bool same = false;
        try {
            same = same_side(p[k - 1] - o, p[k + 3] - o, a, b, tol);
        } catch (const GeometryError&) {
            fail(ErrorCode::NotGeneric, "side test degenerates at triple " + std::to_string(i + 1));
        }
        if (same) out.push_back(i);
    }
    return out;
}

/// Whether any three of the points are collinear on the sphere (coplanar
/// with the origin). With skip_antipodal, triples containing an antipodal
/// pair are ignored; such triples are forced in centrally symmetric sets.
template <class T>
bool has_collinear_triple(const std::vector<Vec3T<T>>& pts, const Tolerances& tol = kDefaultTolerances,
                          bool skip_antipodal = false) {
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (skip_antipodal && antipodal(pts[a], pts[b], tol.vertex_match)) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (skip_antipodal && (antipodal(pts[a], pts[c], tol.vertex_match) ||
                                       antipodal(pts[b], pts[c], tol.vertex_match))) {
                    continue;
                }
                if (orientation(pts[a], pts[b], pts[c], tol) == Sign::Zero) return true;
            }
        }
    }
    return false;
}

template <class T>
bool has_consecutive_collinear(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        if (orientation(q[k], q[k + 1], q[k + 2], tol) == Sign::Zero) return true;
    }
    return false;
}

/// All vertices within Tolerances::planar (angular) of one great circle.
bool is_planar(const SphericalPolygon& q, const Tolerances& tol = kDefaultTolerances);

struct PerturbOptions {
    std::uint64_t seed = 0;
    double magnitude = 1e-6;
    int max_retries = 64;
};

/// Moves every vertex by at most `magnitude` radians so that no three vertices
/// are collinear while simplicity, balance and every consecutive-triple sign
/// are preserved. Deterministic for a given seed.
SphericalPolygon perturb_to_general_position(const SphericalPolygon& q, const PerturbOptions& opts = {},
                                             const Tolerances& tol = kDefaultTolerances);

}  // namespace fourvertex
