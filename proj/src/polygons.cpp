#include <cmath>
#include <random>

#include "fourvertex/cones.h"
#include "fourvertex/polygons.h"
#include "fourvertex/simplicity.h"

namespace fourvertex {

int count_sign_changes(const EpsilonSequence& e) {
    if (e.all_zero()) return static_cast<int>(e.size());
    if (e.has_zero()) fail(ErrorCode::DegenerateSequence, "sequence mixes zero and nonzero signs");
    int changes = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.signs[i] != e.signs[cyc(static_cast<std::ptrdiff_t>(i) + 1, e.size())]) ++changes;
    }
    return changes;
}

bool is_planar(const SphericalPolygon& q, const Tolerances& tol) {
    const auto& u = q.vertices();
    Vec3 best{0, 0, 0};
    for (std::size_t k = 1; k < u.size(); ++k) {
        const Vec3 c = cross(u[0], u[k]);
        if (norm(c) > norm(best)) best = c;
    }
    if (norm(best) == 0.0) return true;
    const Vec3 h = normalized(best);
    for (const auto& v : u) {
        if (std::abs(dot(h, v)) > std::sin(tol.planar)) return false;
    }
    return true;
}

namespace {

Vec3 nudge(const Vec3& v, double max_angle, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vec3 t{0, 0, 0};
    while (norm(t) < 1e-12) {
        const Vec3 g{gauss(rng), gauss(rng), gauss(rng)};
        t = g - v * dot(g, v);
    }
    const double theta = max_angle * unit(rng);
    return normalized(v * std::cos(theta) + normalized(t) * std::sin(theta));
}

bool keeps_structure(const SphericalPolygon& q, const SphericalPolygon& p, bool q_balanced,
                     const std::vector<Sign>& q_signs, const Tolerances& tol) {
    if (has_collinear_triple(p.vertices(), tol)) return false;
    const auto p_signs = epsilon_sequence(p, tol).signs;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q_signs[i] != Sign::Zero && q_signs[i] != p_signs[i]) return false;
    }
    if (!is_simple(p, tol)) return false;
    return balanced_unchecked(p.vertices(), tol) == q_balanced;
}

}  // namespace

SphericalPolygon perturb_to_general_position(const SphericalPolygon& q, const PerturbOptions& opts,
                                             const Tolerances& tol) {
    if (has_consecutive_collinear(q, tol)) {
        fail(ErrorCode::ConsecutiveCollinear, "three consecutive vertices are collinear");
    }
    const bool q_balanced = balanced_unchecked(q.vertices(), tol);
    const auto q_signs = epsilon_sequence(q, tol, true).signs;
    std::mt19937_64 rng(opts.seed);
    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        std::vector<Vec3> moved;
        moved.reserve(q.size());
        for (const auto& v : q.vertices()) moved.push_back(opts.magnitude > 0 ? nudge(v, opts.magnitude, rng) : v);
        try {
            SphericalPolygon p(std::move(moved), tol);
            if (keeps_structure(q, p, q_balanced, q_signs, tol)) return p;
        } catch (const GeometryError&) {
        }
    }
    fail(ErrorCode::PerturbationFailed, "no admissible perturbation after " + std::to_string(opts.max_retries) + " tries");
}

}  // namespace fourvertex
