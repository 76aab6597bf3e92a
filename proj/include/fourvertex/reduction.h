#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fourvertex/cones.h"
#include "fourvertex/serialize.h"
#include "fourvertex/simplicity.h"

namespace fourvertex {

struct ReductionStep {
    std::size_t deleted = 0;  // index in the input polygon
    std::size_t position = 0; // index in the polygon it was deleted from
    int before = 0;
    int after = 0;
    int delta() const { return before - after; }
};

template <class T>
struct ReductionTraceT {
    std::vector<ReductionStep> steps;
    std::vector<std::size_t> terminal_ids;  // input indices of the final four vertices
    std::vector<Vec3T<T>> terminal;
    EpsilonSequence terminal_epsilon;
    int initial_inflections = 0;
};

using ReductionTrace = ReductionTraceT<double>;
using ReductionTraceQ = ReductionTraceT<Rational>;

struct ReductionOptions {
    enum class Selection { SmallestIndex, Random };
    Selection selection = Selection::SmallestIndex;
    std::uint64_t seed = 0;
};

namespace detail {

template <class T>
[[noreturn]] void report_violation(ErrorCode code, const std::string& what, const SphericalPolygonT<T>& q) {
    throw FindingError(code, what, polygon_json(q));
}

}  // namespace detail

/// Inflection count from the sign sequence, cross-checked against the
/// per-edge side test. The two must agree on every edge.
template <class T>
int inflection_count(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    const auto eps = epsilon_sequence(q, tol);
    const auto flags = inflection_flags(q, tol);
    int by_flags = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const bool change = eps.signs[cyc(static_cast<std::ptrdiff_t>(i) - 1, q.size())] != eps.signs[i];
        if (change != flags[i]) {
            detail::report_violation(ErrorCode::TraceInvariantViolation,
                                     "side test and sign sequence disagree at edge " + std::to_string(i + 1), q);
        }
        by_flags += flags[i] ? 1 : 0;
    }
    return by_flags;
}

/// Vertices that are both good and nonessential.
template <class T>
std::vector<std::size_t> eligible_vertices(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    if (q.size() < 5) fail(ErrorCode::PreconditionViolated, "reduction step needs n >= 5");
    const auto good = good_vertices(q, tol);
    const auto ness = nonessential_vertices(q, tol);
    std::vector<std::size_t> out;
    std::set_intersection(good.begin(), good.end(), ness.begin(), ness.end(), std::back_inserter(out));
    return out;
}

template <class T>
std::size_t pick_reduction_vertex(const SphericalPolygonT<T>& q, const Tolerances& tol = kDefaultTolerances) {
    const auto eligible = eligible_vertices(q, tol);
    if (eligible.empty()) {
        detail::report_violation(ErrorCode::NoEligibleVertex, "no vertex is both good and nonessential", q);
    }
    return eligible.front();
}

template <class T>
int deletion_delta(const SphericalPolygonT<T>& q, std::size_t i, const Tolerances& tol = kDefaultTolerances) {
    return inflection_count(q, tol) - inflection_count(delete_vertex(q, i, tol), tol);
}

template <class T>
ReductionTraceT<T> reduce_to_base(const SphericalPolygonT<T>& input, const ReductionOptions& opts = {},
                                  const Tolerances& tol = kDefaultTolerances) {
    if (input.size() < 4) fail(ErrorCode::TooFewPoints, "reduction needs n >= 4");
    if (has_collinear_triple(input.vertices(), tol)) {
        fail(ErrorCode::GeneralPositionViolated, "three vertices lie on one great circle");
    }
    if (!is_simple(input, tol)) fail(ErrorCode::NotSimple, "polygon has a self-intersection");
    if (!balanced_unchecked(input.vertices(), tol)) fail(ErrorCode::NotBalanced, "vertices lie in a closed hemisphere");

    std::mt19937_64 rng(opts.seed);
    ReductionTraceT<T> trace;
    std::vector<std::size_t> ids(input.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    SphericalPolygonT<T> q = input;
    int count = inflection_count(q, tol);
    trace.initial_inflections = count;

    while (q.size() > 4) {
        const auto eligible = eligible_vertices(q, tol);
        if (eligible.empty()) {
            detail::report_violation(ErrorCode::NoEligibleVertex, "no vertex is both good and nonessential", q);
        }
        std::size_t pick = eligible.front();
        if (opts.selection == ReductionOptions::Selection::Random) {
            pick = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
        }
        const auto before_flags = inflection_flags(q, tol);
        SphericalPolygonT<T> next = delete_vertex(q, pick, tol);
        const int after = inflection_count(next, tol);
        const auto after_flags = inflection_flags(next, tol);
        ReductionStep step{ids[pick], pick, count, after};

        auto violated = [&](const std::string& what) {
            detail::report_violation(ErrorCode::TraceInvariantViolation,
                                     "deleting vertex " + std::to_string(ids[pick] + 1) + ": " + what, q);
        };
        const int d = step.delta();
        if (d != 0 && d != 2 && d != 4) violated("inflection delta " + std::to_string(d));
        if (after % 2 != 0) violated("odd inflection count");
        if (!is_simple(next, tol)) violated("result is not simple");
        if (!balanced_unchecked(next.vertices(), tol)) violated("result is not balanced");
        const std::size_t n = q.size();
        for (std::size_t e = 0; e < n; ++e) {
            const auto off = static_cast<std::ptrdiff_t>(e) - static_cast<std::ptrdiff_t>(pick);
            const std::size_t rel = cyc(off, n);
            if (rel == 0 || rel == n - 1 || rel == n - 2 || rel == 1) continue;
            const std::size_t mapped = e < pick ? e : e - 1;
            if (before_flags[e] != after_flags[mapped]) violated("inflection status changed far from the deletion");
        }

        trace.steps.push_back(step);
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(pick));
        q = std::move(next);
        count = after;
    }

    trace.terminal_ids = ids;
    trace.terminal = q.vertices();
    trace.terminal_epsilon = epsilon_sequence(q, tol);
    if (count_sign_changes(trace.terminal_epsilon) != 4 || count != 4 ||
        !four_point_characterization(q[0], q[1], q[2], q[3], tol)) {
        detail::report_violation(ErrorCode::TraceInvariantViolation, "terminal quadruple lacks 4 sign changes", q);
    }
    return trace;
}

}  // namespace fourvertex
