#include "fourvertex/applications.h"

#include <cmath>
#include <numbers>

#include "fourvertex/cones.h"
#include "fourvertex/simplicity.h"

namespace fourvertex {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 plane_normal(const SphericalPolygon& q) {
    const auto& u = q.vertices();
    Vec3 best{0, 0, 0};
    for (std::size_t k = 1; k < u.size(); ++k) {
        const Vec3 c = cross(u[0], u[k]);
        if (norm(c) > norm(best)) best = c;
    }
    return normalized(best);
}

SphericalPolygon approximate(const SphericalPolygonQ& q) {
    std::vector<Vec3> pts;
    for (const auto& v : q.vertices()) pts.push_back(normalized(to_double(v)));
    return SphericalPolygon(std::move(pts));
}

int sign_changes(const SphericalPolygonT<double>& q, const Tolerances& tol) {
    return count_sign_changes(epsilon_sequence(q, tol));
}

}  // namespace

double turning_angle(const SphericalPolygon& q, std::size_t i, const Tolerances& tol) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    const Vec3& a = q[k - 1];
    const Vec3& b = q[k];
    const Vec3& c = q[k + 1];
    const Vec3 t_in = cross(cross(a, b), b);
    const Vec3 t_out = cross(cross(b, c), b);
    const double tau = std::atan2(dot(b, cross(t_in, t_out)), dot(t_in, t_out));
    if (kPi - std::abs(tau) <= tol.degeneracy) {
        fail(ErrorCode::DegenerateAngle, "polygon doubles back at vertex " + std::to_string(i + 1));
    }
    return tau;
}

RegionAreas region_areas(const SphericalPolygon& q, const Tolerances& tol) {
    if (is_planar(q, tol)) {
        if (!planar_is_simple(q, tol)) fail(ErrorCode::NotSimple, "planar polygon winds more than once");
    } else if (!is_simple(q, tol)) {
        fail(ErrorCode::NotSimple, "polygon has a self-intersection");
    }
    double total = 0;
    for (std::size_t i = 0; i < q.size(); ++i) total += turning_angle(q, i, tol);
    RegionAreas r;
    r.area1 = 2 * kPi - total;
    r.area2 = 4 * kPi - r.area1;
    return r;
}

bool planar_is_simple(const SphericalPolygon& q, const Tolerances& /*tol*/) {
    const Vec3 h = plane_normal(q);
    const Vec3 e1 = normalized(q[0] - h * dot(q[0], h));
    const Vec3 e2 = cross(h, e1);
    auto angle = [&](const Vec3& v) { return std::atan2(dot(v, e2), dot(v, e1)); };
    double sum = 0;
    int positive = 0;
    int negative = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        double step = angle(q[k + 1]) - angle(q[k]);
        if (step > kPi) step -= 2 * kPi;
        if (step < -kPi) step += 2 * kPi;
        (step > 0 ? positive : negative) += 1;
        sum += step;
    }
    if (positive != 0 && negative != 0) return false;
    return std::abs(std::abs(sum) - 2 * kPi) < 1e-6;
}

bool is_planar_exact(const SphericalPolygonQ& q) {
    const auto& u = q.vertices();
    Vec3Q h{0, 0, 0};
    for (std::size_t k = 1; k < u.size() && is_zero(h); ++k) h = cross(u[0], u[k]);
    for (const auto& v : u) {
        if (dot(h, v) != 0) return false;
    }
    return true;
}

TennisBallReport tennis_ball_check(const SphericalPolygon& q, const Tolerances& tol) {
    TennisBallReport r;
    r.planar = is_planar(q, tol);
    r.areas = region_areas(q, tol);
    if (r.planar) {
        r.balanced = true;
        r.inflections = static_cast<int>(q.size());
    } else {
        r.balanced = balanced_unchecked(q.vertices(), tol);
        r.inflections = sign_changes(q, tol);
    }
    r.equal_area = std::abs(r.areas.area1 - r.areas.area2) <= tol.equal_area;
    r.theorem_holds = !r.equal_area || r.inflections >= 4;
    return r;
}

TennisBallReport tennis_ball_check(const SphericalPolygonQ& q, const Tolerances& tol) {
    const SphericalPolygon approx = approximate(q);
    TennisBallReport r;
    r.planar = is_planar_exact(q);
    r.areas = region_areas(approx, tol);
    if (r.planar) {
        r.balanced = true;
        r.inflections = static_cast<int>(q.size());
        r.equal_area_exact = true;
    } else {
        if (!is_simple(q, tol)) fail(ErrorCode::NotSimple, "polygon has a self-intersection");
        r.balanced = balanced_unchecked(q.vertices(), tol);
        r.inflections = count_sign_changes(epsilon_sequence(q, tol));
        r.equal_area_exact = is_centrally_symmetric(q, tol);
    }
    r.equal_area = r.equal_area_exact || std::abs(r.areas.area1 - r.areas.area2) <= tol.equal_area;
    r.theorem_holds = !r.equal_area || r.inflections >= 4;
    return r;
}

MobiusReport mobius_check(const SphericalPolygon& q, const Tolerances& tol) {
    const std::size_t n = q.size();
    if (n % 2 != 0) fail(ErrorCode::NotCentrallySymmetric, "odd vertex count");
    if (n < 6) fail(ErrorCode::TooFewPoints, "needs at least 6 vertices");
    if (!is_centrally_symmetric(q, tol)) fail(ErrorCode::NotCentrallySymmetric, "u_{i+m} != -u_i");
    const std::size_t m = n / 2;

    MobiusReport r;
    r.planar = is_planar(q, tol);
    if (r.planar) {
        if (!planar_is_simple(q, tol)) fail(ErrorCode::NotSimple, "planar polygon winds more than once");
        r.inflections = static_cast<int>(n);
        for (std::size_t i = 0; i < n; ++i) r.inflection_edges.push_back(i);
        for (std::size_t i = 0; i < m; ++i) r.paired.emplace_back(i, i + m);
        r.pairing_holds = true;
        r.directions_opposite = true;
    } else {
        if (!is_simple(q, tol)) fail(ErrorCode::NotSimple, "polygon has a self-intersection");
        const auto flags = inflection_flags(q, tol);
        const auto eps = epsilon_sequence(q, tol);
        r.pairing_holds = true;
        r.directions_opposite = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (flags[i]) {
                r.inflection_edges.push_back(i);
                ++r.inflections;
            }
            if (flags[i] != flags[(i + m) % n]) r.pairing_holds = false;
            if (eps.signs[(i + m) % n] != -eps.signs[i]) r.directions_opposite = false;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (flags[i] && flags[i + m]) r.paired.emplace_back(i, i + m);
        }
    }
    r.theorem_holds = r.inflections >= 6 && r.pairing_holds && r.directions_opposite;
    return r;
}

}  // namespace fourvertex
