#pragma once

#include <algorithm>
#include <cmath>

#include "fourvertex/errors.h"
#include "fourvertex/mutation.h"
#include "fourvertex/tolerances.h"
#include "fourvertex/vec3.h"

namespace fourvertex {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline char sign_char(Sign s) {
    switch (s) {
        case Sign::Positive: return '+';
        case Sign::Negative: return '-';
        case Sign::Zero: break;
    }
    return '0';
}

// Scalar policy. The double overloads honor a tolerance band; the Rational
// overloads are exact and ignore it.

inline Sign sign_of(double v, double tol) {
    if (v > tol) return Sign::Positive;
    if (v < -tol) return Sign::Negative;
    return Sign::Zero;
}

inline Sign sign_of(const Rational& v, double /*tol*/) {
    const int s = v.sign();
    return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
}

inline bool exceeds(double v, double tol) { return v > tol; }
inline bool exceeds(const Rational& v, double /*tol*/) { return v.sign() > 0; }

inline bool negligible(double v, double tol) { return std::abs(v) <= tol; }
inline bool negligible(const Rational& v, double /*tol*/) { return v.sign() == 0; }

inline double magnitude(double v) { return std::abs(v); }
inline Rational magnitude(const Rational& v) { return boost::multiprecision::abs(v); }

/// True when u and v are equal or antipodal directions (cross product vanishes).
inline bool parallel(const Vec3& u, const Vec3& v, double tol) {
    return norm(cross(u, v)) <= tol * std::max(1.0, norm(u) * norm(v));
}
inline bool parallel(const Vec3Q& u, const Vec3Q& v, double /*tol*/) { return is_zero(cross(u, v)); }

/// v = -u as directions.
inline bool antipodal(const Vec3& u, const Vec3& v, double tol) { return norm(u + v) <= tol; }
inline bool antipodal(const Vec3Q& u, const Vec3Q& v, double /*tol*/) {
    return is_zero(cross(u, v)) && dot(u, v).sign() < 0;
}

/// 3x3 determinant with rows a, b, c.
template <class T>
T det3(const Vec3T<T>& a, const Vec3T<T>& b, const Vec3T<T>& c) {
    T t0 = a.x * (b.y * c.z - b.z * c.y);
    T t1 = a.y * (b.z * c.x - b.x * c.z);
    T t2 = a.z * (b.x * c.y - b.y * c.x);
    using mutation::Mutant;
    switch (mutation::active()) {
        case Mutant::DetCofactor0: t0 = -t0; break;
        case Mutant::DetCofactor1: t1 = -t1; break;
        case Mutant::DetCofactor2: t2 = -t2; break;
        default: break;
    }
    return t0 + t1 + t2;
}

template <class T>
Sign orientation(const Vec3T<T>& a, const Vec3T<T>& b, const Vec3T<T>& c,
                 const Tolerances& tol = kDefaultTolerances) {
    const Sign s = sign_of(det3(a, b, c), tol.degeneracy);
    return mutation::is_active(mutation::Mutant::OrientationMirror) ? -s : s;
}

/// Orientation of double inputs decided in exact rational arithmetic.
inline Sign orientation_exact(const Vec3& a, const Vec3& b, const Vec3& c) {
    return orientation(to_rational(a), to_rational(b), to_rational(c));
}

/// Whether p and q lie strictly on the same side of the plane span{plane_a, plane_b}.
template <class T>
bool same_side(const Vec3T<T>& p, const Vec3T<T>& q, const Vec3T<T>& plane_a,
               const Vec3T<T>& plane_b, const Tolerances& tol = kDefaultTolerances) {
    const Sign sp = orientation(plane_a, plane_b, p, tol);
    const Sign sq = orientation(plane_a, plane_b, q, tol);
    if (sp == Sign::Zero || sq == Sign::Zero) {
        fail(ErrorCode::DegenerateInput, "point lies on the separating plane");
    }
    const bool same = sp == sq;
    return mutation::is_active(mutation::Mutant::SameSideInverted) ? !same : same;
}

}  // namespace fourvertex
