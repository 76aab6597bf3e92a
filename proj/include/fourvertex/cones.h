#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fourvertex/polygons.h"

namespace fourvertex {

/// Nonnegative combination of at most three generators reproducing `target`.
template <class T>
struct ConeCertificateT {
    std::vector<std::size_t> indices;
    std::vector<T> coefficients;
    Vec3T<T> target;
};

using ConeCertificate = ConeCertificateT<double>;
using ConeCertificateQ = ConeCertificateT<Rational>;

/// Normal of a closed hemisphere {x : <normal, x> >= 0}. The double variant
/// is unit length; the exact variant is an unnormalized direction.
template <class T>
struct HemisphereWitnessT {
    Vec3T<T> normal;
    bool closed = true;
};

using HemisphereWitness = HemisphereWitnessT<double>;

namespace detail {

inline bool nonnegative_dot(const Vec3& h, const Vec3& u, double tol) { return dot(h, u) >= -tol; }
inline bool nonnegative_dot(const Vec3Q& h, const Vec3Q& u, double /*tol*/) { return dot(h, u).sign() >= 0; }

inline Vec3 candidate_normal(const Vec3& c) { return normalized(c); }
inline Vec3Q candidate_normal(const Vec3Q& c) { return c; }

template <class T>
std::vector<Vec3T<T>> without(const std::vector<Vec3T<T>>& pts, std::size_t skip) {
    std::vector<Vec3T<T>> out;
    out.reserve(pts.size() - 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i != skip) out.push_back(pts[i]);
    }
    return out;
}

}  // namespace detail

template <class T>
bool is_hemisphere_witness(const Vec3T<T>& h, const std::vector<Vec3T<T>>& pts,
                           const Tolerances& tol = kDefaultTolerances) {
    for (const auto& u : pts) {
        if (!detail::nonnegative_dot(h, u, tol.degeneracy)) return false;
    }
    return true;
}

/// Finds a closed hemisphere containing every point, by enumerating the
/// candidate normals +-u_i and +-(u_i x u_j). Exhaustive for point sets in
/// general position; a set that is merely antipodal pairs is DegenerateInput.
template <class T>
std::optional<HemisphereWitnessT<T>> closed_hemisphere_witness(const std::vector<Vec3T<T>>& pts,
                                                               const Tolerances& tol = kDefaultTolerances) {
    if (pts.empty()) fail(ErrorCode::DegenerateInput, "empty point set");
    for (const auto& u : pts) {
        for (const Vec3T<T>& h : {u, -u}) {
            if (is_hemisphere_witness(h, pts, tol)) return HemisphereWitnessT<T>{detail::candidate_normal(h), true};
        }
    }
    bool any_pair_candidate = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (parallel(pts[i], pts[j], tol.degeneracy)) continue;
            any_pair_candidate = true;
            const Vec3T<T> c = detail::candidate_normal(cross(pts[i], pts[j]));
            for (const Vec3T<T>& h : {c, -c}) {
                if (is_hemisphere_witness(h, pts, tol)) return HemisphereWitnessT<T>{h, true};
            }
        }
    }
    if (!any_pair_candidate && pts.size() > 1) {
        fail(ErrorCode::DegenerateInput, "all points are pairwise equal or antipodal");
    }
    return std::nullopt;
}

/// Balanced = not contained in any closed hemisphere. Skips the general
/// position check; callers that loop over subsets validate once up front.
template <class T>
bool balanced_unchecked(const std::vector<Vec3T<T>>& pts, const Tolerances& tol = kDefaultTolerances) {
    return !closed_hemisphere_witness(pts, tol).has_value();
}

template <class T>
bool is_balanced(const std::vector<Vec3T<T>>& pts, const Tolerances& tol = kDefaultTolerances) {
    if (pts.size() < 4) fail(ErrorCode::TooFewPoints, "balance needs at least 4 points");
    if (has_collinear_triple(pts, tol)) fail(ErrorCode::CollinearTriple, "three points lie on one great circle");
    return balanced_unchecked(pts, tol);
}

template <class T>
bool is_balanced(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    return is_balanced(q.vertices(), tol);
}

/// Coefficients of target in the basis (g0, g1, g2) by Cramer's rule.
template <class T>
std::array<T, 3> solve_in_basis(const Vec3T<T>& target, const Vec3T<T>& g0, const Vec3T<T>& g1,
                                const Vec3T<T>& g2, const Tolerances& tol = kDefaultTolerances) {
    const T d = det3(g0, g1, g2);
    if (sign_of(d, tol.degeneracy) == Sign::Zero) {
        fail(ErrorCode::SingularGenerators, "cone generators are linearly dependent");
    }
    return {det3(target, g1, g2) / d, det3(g0, target, g2) / d, det3(g0, g1, target) / d};
}

/// Open-cone membership: a certificate iff every coefficient exceeds
/// Tolerances::coefficient. Indices refer to the generator order (0, 1, 2).
template <class T>
std::optional<ConeCertificateT<T>> cone_membership(const Vec3T<T>& target, const std::array<Vec3T<T>, 3>& gens,
                                                   const Tolerances& tol = kDefaultTolerances) {
    const auto lambda = solve_in_basis(target, gens[0], gens[1], gens[2], tol);
    for (const auto& l : lambda) {
        if (!exceeds(l, tol.coefficient)) return std::nullopt;
    }
    return ConeCertificateT<T>{{0, 1, 2}, {lambda[0], lambda[1], lambda[2]}, target};
}

/// s[1,2,3] = s[1,3,4] = -s[1,2,4] = -s[2,3,4].
template <class T>
bool four_point_characterization(const Vec3T<T>& u1, const Vec3T<T>& u2, const Vec3T<T>& u3, const Vec3T<T>& u4,
                                 const Tolerances& tol = kDefaultTolerances) {
    const Sign s123 = orientation(u1, u2, u3, tol);
    const Sign s134 = orientation(u1, u3, u4, tol);
    const Sign s124 = orientation(u1, u2, u4, tol);
    const Sign s234 = orientation(u2, u3, u4, tol);
    if (s123 == Sign::Zero || s134 == Sign::Zero || s124 == Sign::Zero || s234 == Sign::Zero) {
        fail(ErrorCode::CollinearTriple, "three of the four points lie on one great circle");
    }
    return s123 == s134 && s134 == -s124 && s124 == s234;
}

/// Balance decided through cones alone: every -u_i must lie in the open cone
/// of some triple of the other points. Independent of the hemisphere search.
template <class T>
bool balanced_by_cones(const std::vector<Vec3T<T>>& pts, const Tolerances& tol = kDefaultTolerances) {
    const std::size_t n = pts.size();
    if (n < 4) fail(ErrorCode::TooFewPoints, "balance needs at least 4 points");
    for (std::size_t i = 0; i < n; ++i) {
        bool covered = false;
        for (std::size_t a = 0; a < n && !covered; ++a) {
            if (a == i) continue;
            for (std::size_t b = a + 1; b < n && !covered; ++b) {
                if (b == i) continue;
                for (std::size_t c = b + 1; c < n && !covered; ++c) {
                    if (c == i) continue;
                    covered = cone_membership(-pts[i], {pts[a], pts[b], pts[c]}, tol).has_value();
                }
            }
        }
        if (!covered) return false;
    }
    return true;
}

namespace detail {

inline double abs_value(double v) { return std::abs(v); }
inline Rational abs_value(const Rational& v) { return boost::multiprecision::abs(v); }

/// A nonzero alpha with sum alpha_k * columns[support[k]] = 0, or empty when
/// the selected columns are linearly independent. Works in any dimension.
template <class T>
std::vector<T> null_vector(const std::vector<std::vector<T>>& columns, const std::vector<std::size_t>& support) {
    const std::size_t m = support.size();
    if (m == 0) return {};
    const std::size_t d = columns[support[0]].size();
    std::vector<std::vector<T>> a(d, std::vector<T>(m));
    T scale = 0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < m; ++k) {
            a[r][k] = columns[support[k]][r];
            if (abs_value(a[r][k]) > scale) scale = abs_value(a[r][k]);
        }
    }
    const double rank_tol = std::is_same_v<T, double> ? 1e-12 : 0.0;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < d; ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < d; ++r) {
            if (abs_value(a[r][col]) > abs_value(a[best][col])) best = r;
        }
        if (negligible(a[best][col], rank_tol * static_cast<double>(scale))) continue;
        std::swap(a[row], a[best]);
        const T p = a[row][col];
        for (auto& x : a[row]) x /= p;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const T f = a[r][col];
            for (std::size_t k = 0; k < m; ++k) a[r][k] -= f * a[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() == m) return {};
    std::size_t free_col = 0;
    for (std::size_t k = 0, pc = 0; k < m; ++k) {
        if (pc < pivot_col.size() && pivot_col[pc] == k) {
            ++pc;
            continue;
        }
        free_col = k;
        break;
    }
    std::vector<T> alpha(m, T(0));
    alpha[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) alpha[pivot_col[r]] = -a[r][free_col];
    return alpha;
}

/// The conical Caratheodory reduction: while the support is linearly
/// dependent, walk along a dependence until one coefficient reaches zero.
/// Ties for the blocking index go to the smallest index.
template <class T>
std::vector<T> conic_reduce(const std::vector<std::vector<T>>& columns, std::vector<T> lambda) {
    for (;;) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i] > 0) support.push_back(i);
        }
        std::vector<T> alpha = null_vector(columns, support);
        if (alpha.empty()) return lambda;

        T alpha_max = 0;
        for (const auto& x : alpha) {
            if (abs_value(x) > alpha_max) alpha_max = abs_value(x);
        }
        const double pos_tol = std::is_same_v<T, double> ? 1e-14 * static_cast<double>(alpha_max) : 0.0;
        bool any_positive = false;
        for (const auto& x : alpha) any_positive = any_positive || exceeds(x, pos_tol);
        if (!any_positive) {
            for (auto& x : alpha) x = -x;
        }

        std::size_t best = support.size();
        T best_ratio = 0;
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (!exceeds(alpha[k], pos_tol)) continue;
            const T ratio = lambda[support[k]] / alpha[k];
            if (best == support.size() || ratio < best_ratio) {
                best = k;
                best_ratio = ratio;
            }
        }
        if (best == support.size()) {
            fail(ErrorCode::NumericalBreakdown, "dependence with no usable positive entry");
        }
        for (std::size_t k = 0; k < support.size(); ++k) {
            T& l = lambda[support[k]];
            l -= best_ratio * alpha[k];
            if (l < 0) l = 0;
        }
        lambda[support[best]] = 0;
    }
}

template <class T>
Vec3T<T> combine(const std::vector<Vec3T<T>>& pts, const std::vector<std::size_t>& idx, const std::vector<T>& coeff) {
    Vec3T<T> s{T(0), T(0), T(0)};
    for (std::size_t k = 0; k < idx.size(); ++k) s += pts[idx[k]] * coeff[k];
    return s;
}

inline bool reconstructs(const Vec3& got, const Vec3& want, double tol) {
    return norm(got - want) <= tol * std::max(1.0, norm(want));
}
inline bool reconstructs(const Vec3Q& got, const Vec3Q& want, double /*tol*/) { return got == want; }

}  // namespace detail

/// Reduces a nonnegative combination `initial` (one coefficient per point)
/// of `pts` that equals `target` to one supported on at most three linearly
/// independent points.
template <class T>
ConeCertificateT<T> caratheodory_cone(const Vec3T<T>& target, const std::vector<Vec3T<T>>& pts,
                                      const std::vector<T>& initial, const Tolerances& tol = kDefaultTolerances) {
    if (initial.size() != pts.size()) fail(ErrorCode::NoInitialCombination, "one coefficient per point expected");
    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        all[i] = i;
        if (initial[i] < 0) fail(ErrorCode::NoInitialCombination, "initial combination has a negative coefficient");
    }
    if (!detail::reconstructs(detail::combine(pts, all, initial), target, tol.reconstruction)) {
        fail(ErrorCode::NoInitialCombination, "initial combination does not reproduce the target");
    }
    std::vector<std::vector<T>> columns;
    columns.reserve(pts.size());
    for (const auto& p : pts) columns.push_back({p.x, p.y, p.z});

    const std::vector<T> reduced = detail::conic_reduce(columns, initial);
    ConeCertificateT<T> cert;
    cert.target = target;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (reduced[i] > 0) {
            cert.indices.push_back(i);
            cert.coefficients.push_back(reduced[i]);
        }
    }
    if (cert.indices.size() > 3 ||
        !detail::reconstructs(detail::combine(pts, cert.indices, cert.coefficients), target, tol.reconstruction)) {
        fail(ErrorCode::NumericalBreakdown, "reduced combination drifted from the target");
    }
    return cert;
}

/// First quadruple (lexicographic) in balanced position, if any.
template <class T>
std::optional<std::array<std::size_t, 4>> find_balanced_quadruple(const std::vector<Vec3T<T>>& pts,
                                                                  const Tolerances& tol = kDefaultTolerances) {
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                for (std::size_t d = c + 1; d < n; ++d) {
                    try {
                        if (four_point_characterization(pts[a], pts[b], pts[c], pts[d], tol)) {
                            return std::array<std::size_t, 4>{a, b, c, d};
                        }
                    } catch (const GeometryError&) {
                    }
                }
            }
        }
    }
    return std::nullopt;
}

/// Caratheodory without a supplied combination: locate a balanced quadruple
/// and express the target in one of the four closed cones its triples span.
template <class T>
ConeCertificateT<T> caratheodory_cone(const Vec3T<T>& target, const std::vector<Vec3T<T>>& pts,
                                      const Tolerances& tol = kDefaultTolerances) {
    const auto quad = find_balanced_quadruple(pts, tol);
    if (!quad) fail(ErrorCode::NoInitialCombination, "no balanced quadruple among the points");
    const auto& q = *quad;
    constexpr std::array<std::array<int, 3>, 4> kTriples{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    for (const auto& t : kTriples) {
        const std::array<std::size_t, 3> idx{q[t[0]], q[t[1]], q[t[2]]};
        const auto lambda = solve_in_basis(target, pts[idx[0]], pts[idx[1]], pts[idx[2]], tol);
        bool closed = true;
        for (const auto& l : lambda) closed = closed && (l >= 0 || negligible(l, tol.coefficient));
        if (!closed) continue;
        std::vector<T> initial(pts.size(), T(0));
        for (int k = 0; k < 3; ++k) initial[idx[k]] = lambda[k] < 0 ? T(0) : lambda[k];
        return caratheodory_cone(target, pts, initial, tol);
    }
    fail(ErrorCode::NumericalBreakdown, "target escaped all four cones of a balanced quadruple");
}

/// Indices i for which the points without u_i are still balanced.
template <class T>
std::vector<std::size_t> nonessential_vertices(const std::vector<Vec3T<T>>& pts,
                                               const Tolerances& tol = kDefaultTolerances) {
    if (pts.size() < 5) fail(ErrorCode::TooFewPoints, "nonessential vertices need n >= 5");
    if (!is_balanced(pts, tol)) fail(ErrorCode::NotBalanced, "point set lies in a closed hemisphere");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (balanced_unchecked(detail::without(pts, i), tol)) out.push_back(i);
    }
    return out;
}

template <class T>
std::vector<std::size_t> nonessential_vertices(const SphericalPolygonT<T>& q,
                                               const Tolerances& tol = kDefaultTolerances) {
    return nonessential_vertices(q.vertices(), tol);
}

}  // namespace fourvertex
