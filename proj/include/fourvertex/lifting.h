#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "fourvertex/cones.h"
#include "fourvertex/simplicity.h"

namespace fourvertex {

/// Positive edge lengths lambda_i with sum lambda_i u_i = 0, scaled so that
/// the largest is 1. peel_order lists the vertices removed before the base
/// quadruple was solved, in removal order.
template <class T>
struct LiftWeightsT {
    std::vector<T> lambdas;
    std::vector<std::size_t> peel_order;
};

using LiftWeights = LiftWeightsT<double>;
using LiftWeightsQ = LiftWeightsT<Rational>;

struct LiftOptions {
    /// Only peel vertices that are also good, so every intermediate polygon
    /// stays simple (requires a simple input).
    bool preserve_simplicity = false;
};

template <class T>
Vec3T<T> weighted_sum(const std::vector<Vec3T<T>>& u, const std::vector<T>& lambdas) {
    Vec3T<T> s{T(0), T(0), T(0)};
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * lambdas[i];
    return s;
}

/// |sum lambda_i u_i| / sum lambda_i (zero or exactly representable in exact mode).
inline double closure_residual(const std::vector<Vec3>& u, const std::vector<double>& lambdas) {
    double total = 0;
    for (double l : lambdas) total += l;
    return norm(weighted_sum(u, lambdas)) / total;
}

inline double closure_residual(const std::vector<Vec3Q>& u, const std::vector<Rational>& lambdas) {
    const Vec3Q s = weighted_sum(u, lambdas);
    return is_zero(s) ? 0.0 : norm(to_double(s));
}

namespace detail {

template <class T>
void require_liftable(const SphericalPolygonT<T>& q, const Tolerances& tol) {
    if (q.size() < 4) fail(ErrorCode::TooFewPoints, "lifting needs n >= 4");
    if (closed_hemisphere_witness(q.vertices(), tol)) {
        fail(ErrorCode::NotBalanced, "vertices lie in a closed hemisphere, no closed lift exists");
    }
    if (has_collinear_triple(q.vertices(), tol)) {
        fail(ErrorCode::GeneralPositionViolated, "three vertices lie on one great circle");
    }
}

template <class T>
SphericalPolygonT<T> sub_polygon(const SphericalPolygonT<T>& q, const std::vector<std::size_t>& ids,
                                 const Tolerances& tol) {
    std::vector<Vec3T<T>> pts;
    pts.reserve(ids.size());
    for (std::size_t id : ids) pts.push_back(q.vertices()[id]);
    return SphericalPolygonT<T>(std::move(pts), tol);
}

}  // namespace detail

template <class T>
LiftWeightsT<T> lift_weights(const SphericalPolygonT<T>& q, const LiftOptions& opts = {},
                             const Tolerances& tol = kDefaultTolerances) {
    detail::require_liftable(q, tol);
    const auto& u = q.vertices();
    const std::size_t n = q.size();

    std::vector<std::size_t> alive(n);
    for (std::size_t i = 0; i < n; ++i) alive[i] = i;
    LiftWeightsT<T> out;
    while (alive.size() > 4) {
        const auto current = detail::sub_polygon(q, alive, tol);
        const auto nonessential = nonessential_vertices(current, tol);
        std::vector<std::size_t> good;
        if (opts.preserve_simplicity) good = good_vertices(current, tol);
        std::size_t pick = alive.size();
        for (std::size_t k : nonessential) {
            if (!opts.preserve_simplicity || std::binary_search(good.begin(), good.end(), k)) {
                pick = k;
                break;
            }
        }
        if (pick == alive.size()) fail(ErrorCode::NoEligibleVertex, "no vertex can be peeled");
        out.peel_order.push_back(alive[pick]);
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pick));
    }

    std::vector<T> lambda(n, T(0));
    const auto base = cone_membership(-u[alive[0]], {u[alive[1]], u[alive[2]], u[alive[3]]}, tol);
    if (!base) fail(ErrorCode::NumericalBreakdown, "base quadruple is not in balanced position");
    lambda[alive[0]] = 1;
    for (int k = 0; k < 3; ++k) lambda[alive[k + 1]] = base->coefficients[k];

    for (auto it = out.peel_order.rbegin(); it != out.peel_order.rend(); ++it) {
        const std::size_t p = *it;
        std::vector<Vec3T<T>> rest;
        for (std::size_t id : alive) rest.push_back(u[id]);
        const auto cert = caratheodory_cone(Vec3T<T>(-u[p]), rest, tol);
        lambda[p] += 1;
        for (std::size_t k = 0; k < cert.indices.size(); ++k) lambda[alive[cert.indices[k]]] += cert.coefficients[k];
        alive.insert(std::upper_bound(alive.begin(), alive.end(), p), p);
    }

    // Conditioning: every vertex also receives its own closure vector from the
    // triple whose cone holds -u_i with the smallest largest coefficient.
    const T scale = *std::max_element(lambda.begin(), lambda.end());
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<ConeCertificateT<T>> best;
        std::array<std::size_t, 3> best_ids{};
        T best_max(0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                for (std::size_t c = b + 1; c < n; ++c) {
                    if (a == i || b == i || c == i) continue;
                    auto cert = cone_membership(Vec3T<T>(-u[i]), {u[a], u[b], u[c]}, tol);
                    if (!cert) continue;
                    const T largest = *std::max_element(cert->coefficients.begin(), cert->coefficients.end());
                    if (!best || largest < best_max) {
                        best = std::move(cert);
                        best_ids = {a, b, c};
                        best_max = largest;
                    }
                }
            }
        }
        if (!best) continue;
        lambda[i] += scale;
        for (int k = 0; k < 3; ++k) lambda[best_ids[k]] += scale * best->coefficients[k];
    }

    const T top = *std::max_element(lambda.begin(), lambda.end());
    for (auto& l : lambda) {
        l /= top;
        if (!exceeds(l, 0.0)) fail(ErrorCode::NumericalBreakdown, "non-positive lift weight");
    }
    const double residual = closure_residual(u, lambda);
    if (residual > tol.closure) {
        fail(ErrorCode::ClosureResidualExceeded, "closure residual " + std::to_string(residual));
    }
    out.lambdas = std::move(lambda);
    return out;
}

/// v_0 = base, v_{i+1} = v_i + lambda_i u_i. The closing edge is implied by
/// the closure of the weights.
template <class T>
SpacePolygonT<T> lift_with(const SphericalPolygonT<T>& q, const LiftWeightsT<T>& w, const Vec3T<T>& base,
                           const Tolerances& tol = kDefaultTolerances) {
    std::vector<Vec3T<T>> v;
    v.reserve(q.size());
    v.push_back(base);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) v.push_back(v.back() + q.vertices()[i] * w.lambdas[i]);
    SpacePolygonT<T> p(std::move(v));
    if constexpr (std::is_same_v<T, double>) {
        const auto back = tangent_indicatrix(p, tol);
        for (std::size_t i = 0; i < q.size(); ++i) {
            const double err = angle_between(back.vertices()[i], q.vertices()[i]);
            if (err > tol.roundtrip) {
                fail(ErrorCode::ClosureResidualExceeded,
                     "edge " + std::to_string(i + 1) + " misses its direction by " + std::to_string(err));
            }
        }
    } else {
        const auto back = tangent_indicatrix(p, tol);
        for (std::size_t i = 0; i < q.size(); ++i) {
            const auto& a = back.vertices()[i];
            const auto& b = q.vertices()[i];
            if (!is_zero(cross(a, b)) || dot(a, b).sign() <= 0) {
                fail(ErrorCode::ClosureResidualExceeded, "edge " + std::to_string(i + 1) + " changed direction");
            }
        }
    }
    return p;
}

template <class T>
SpacePolygonT<T> lift(const SphericalPolygonT<T>& q, const Vec3T<T>& base, const LiftOptions& opts = {},
                      const Tolerances& tol = kDefaultTolerances) {
    return lift_with(q, lift_weights(q, opts, tol), base, tol);
}

}  // namespace fourvertex
