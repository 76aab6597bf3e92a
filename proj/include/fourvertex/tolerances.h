#pragma once

namespace fourvertex {

/// Numeric bands that operationalize genericity in floating point. The exact
/// (Rational) kernel ignores all of them.
struct Tolerances {
    /// Raw 3x3 determinant magnitude below which an orientation is Zero.
    double degeneracy = 1e-10;
    /// Allowed | |v| - 1 | for a point of the sphere.
    double norm = 1e-9;
    /// Open-cone membership requires every coefficient above this.
    double coefficient = 1e-9;
    /// Max |sum(coeff * generator) - target| for a cone certificate.
    double reconstruction = 1e-9;
    /// Max |sum(lambda_i u_i)| relative to sum(lambda_i) for lift weights.
    double closure = 1e-9;
    /// Max angle (radians) between a vertex and its round-tripped image.
    double roundtrip = 1e-8;
    /// Area identities (steradians).
    double area = 1e-8;
    /// |area1 - area2| at or below this counts as equal-area.
    double equal_area = 1e-8;
    /// Angular distance from a great circle that still counts as planar.
    double planar = 1e-9;
    /// Max |u + v| for u, v to count as antipodal (or |u - v| for equal).
    double vertex_match = 1e-9;
};

inline const Tolerances kDefaultTolerances{};

}  // namespace fourvertex
