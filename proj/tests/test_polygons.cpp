#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "fourvertex/cones.h"
#include "fourvertex/harness.h"
#include "fourvertex/polygons.h"
#include "fourvertex/simplicity.h"
#include "test_support.h"

using namespace fourvertex;
using testsupport::leibniz_det;

namespace {

SpacePolygon tetrahedral_cycle() {
    std::vector<Vec3> v{{0, 0, 0}};
    const auto t = testsupport::tetrahedral();
    for (int i = 0; i < 3; ++i) v.push_back(v.back() + t[static_cast<std::size_t>(i)]);
    return SpacePolygon(v);
}

SpacePolygon closed_helix() {
    std::vector<Vec3> v;
    for (int t = 0; t < 8; ++t) v.push_back({std::cos(t), std::sin(t), static_cast<double>(t)});
    return SpacePolygon(v);
}

// Flattening indices from raw Leibniz determinants.
std::vector<std::size_t> oracle_flattenings(const std::vector<Vec3>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& o = v[i];
        const Vec3 a = v[(i + 1) % n] - o;
        const Vec3 b = v[(i + 2) % n] - o;
        const double s1 = leibniz_det(a, b, v[(i + n - 1) % n] - o);
        const double s2 = leibniz_det(a, b, v[(i + 3) % n] - o);
        if ((s1 > 0) == (s2 > 0)) out.push_back(i);
    }
    return out;
}

EpsilonSequence seq(const std::string& s) {
    EpsilonSequence e;
    for (char c : s) e.signs.push_back(c == '+' ? Sign::Positive : (c == '-' ? Sign::Negative : Sign::Zero));
    return e;
}

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.code();
    }
    return static_cast<ErrorCode>(-1);
}

}  // namespace

TEST(TangentIndicatrix, UnitSquareGivesAxes) {
    const SpacePolygon p({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    const auto q = tangent_indicatrix(p);
    const auto want = testsupport::equator_square();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(norm(q.vertices()[i] - want[i]), 0.0, 1e-15);
}

TEST(TangentIndicatrix, TetrahedralCycleGivesTetrahedralDirections) {
    const auto q = tangent_indicatrix(tetrahedral_cycle());
    const auto t = testsupport::tetrahedral();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(norm(q.vertices()[i] - t[i]), 0.0, 1e-14);
}

TEST(TangentIndicatrix, TranslationScaleRotation) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec3> v;
        for (int i = 0; i < 7; ++i) v.push_back({g(rng), g(rng), g(rng)});
        const SpacePolygon p(v);
        const auto q = tangent_indicatrix(p);
        const Vec3 c{g(rng), g(rng), g(rng)};
        const double s = std::exp(g(rng));
        const Vec3 axis = harness::random_unit(rng);
        const double angle = g(rng);
        std::vector<Vec3> moved, rotated;
        for (const auto& x : v) {
            moved.push_back(x * s + c);
            rotated.push_back(testsupport::rotate(x, axis, angle));
        }
        const auto qm = tangent_indicatrix(SpacePolygon(moved));
        const auto qr = tangent_indicatrix(SpacePolygon(rotated));
        for (std::size_t i = 0; i < q.size(); ++i) {
            EXPECT_LT(norm(qm.vertices()[i] - q.vertices()[i]), 1e-12);
            EXPECT_LT(norm(qr.vertices()[i] - testsupport::rotate(q.vertices()[i], axis, angle)), 1e-12);
        }
    }
}

TEST(TangentIndicatrix, Errors) {
    EXPECT_EQ(code_of([] { SpacePolygon({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}}); }), ErrorCode::DegenerateEdge);
    EXPECT_EQ(code_of([] { tangent_indicatrix(SpacePolygon({{0, 0, 0}, {1, 0, 0}, {0.5, 0, 0}, {0, 1, 0}})); }),
              ErrorCode::AntipodalConsecutive);
    EXPECT_EQ(code_of([] { SpacePolygon({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}); }), ErrorCode::TooFewPoints);
}

TEST(SphericalPolygonType, RejectsNonUnitAndAntipodalNeighbours) {
    EXPECT_EQ(code_of([] { SphericalPolygon({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { SphericalPolygon({{1, 0, 0}, {-1, 0, 0}, {0, 0, 1}}); }), ErrorCode::AntipodalConsecutive);
    const SphericalPolygon q({{1 + 1e-12, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_DOUBLE_EQ(norm(q.vertices()[0]), 1.0);
}

TEST(IsGeneric, Examples) {
    EXPECT_FALSE(is_generic(SpacePolygon({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}})));
    const auto p = tetrahedral_cycle();
    const auto& v = p.vertices();
    EXPECT_GT(std::abs(leibniz_det(v[1] - v[0], v[2] - v[0], v[3] - v[0])), 0.1);
    EXPECT_TRUE(is_generic(p));
    // Prism: two parallel triangles; a side face has four coplanar vertices.
    const SpacePolygon prism({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 1}, {1, 0, 1}, {0, 0, 1}});
    EXPECT_FALSE(is_generic(prism));
}

TEST(EpsilonSequence, QuarterCapAllPositive) {
    const SphericalPolygon q(testsupport::example1());
    EXPECT_EQ(epsilon_sequence(q).to_string(), "++++");
}

TEST(EpsilonSequence, TetrahedralAlternates) {
    const auto t = testsupport::tetrahedral();
    std::string oracle;
    for (std::size_t i = 0; i < 4; ++i) oracle.push_back(leibniz_det(t[i], t[(i + 1) % 4], t[(i + 2) % 4]) > 0 ? '+' : '-');
    EXPECT_EQ(oracle, "+-+-");
    EXPECT_EQ(epsilon_sequence(SphericalPolygon(t)).to_string(), oracle);
}

TEST(EpsilonSequence, GreatCircleIsDegenerate) {
    const SphericalPolygon q(testsupport::equator_square());
    EXPECT_EQ(code_of([&] { epsilon_sequence(q); }), ErrorCode::DegenerateTriple);
    const auto e = epsilon_sequence(q, kDefaultTolerances, true);
    EXPECT_TRUE(e.all_zero());
    EXPECT_EQ(count_sign_changes(e), 4);
    EXPECT_TRUE(is_planar(q));
}

TEST(CountSignChanges, Examples) {
    EXPECT_EQ(count_sign_changes(seq("++++")), 0);
    EXPECT_EQ(count_sign_changes(seq("+-+-")), 4);
    EXPECT_EQ(count_sign_changes(seq("++--+-")), 4);
    EXPECT_EQ(code_of([] { count_sign_changes(seq("++0-")); }), ErrorCode::DegenerateSequence);
}

TEST(SphericalInflections, Examples) {
    EXPECT_TRUE(spherical_inflections(SphericalPolygon(testsupport::example1())).empty());
    const auto all = spherical_inflections(SphericalPolygon(testsupport::tetrahedral()));
    EXPECT_EQ(all, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(SphericalInflections, MatchSignChangesAndSurviveRotationAndAntipode) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pts = harness::random_unit_points(rng, 4 + trial % 9);
        std::unique_ptr<SphericalPolygon> q;
        try {
            q = std::make_unique<SphericalPolygon>(pts);
            epsilon_sequence(*q);
        } catch (const GeometryError&) {
            continue;
        }
        const auto infl = spherical_inflections(*q);
        const int changes = count_sign_changes(epsilon_sequence(*q));
        EXPECT_EQ(static_cast<int>(infl.size()), changes);
        EXPECT_EQ(changes % 2, 0);
        EXPECT_EQ(changes, testsupport::oracle_sign_changes(pts));
        // Edge i is an inflection iff eps_{i-1} != eps_i.
        const auto e = epsilon_sequence(*q);
        for (std::size_t i = 0; i < q->size(); ++i) {
            const bool change = e.signs[cyc(static_cast<std::ptrdiff_t>(i) - 1, q->size())] != e.signs[i];
            EXPECT_EQ(change, std::find(infl.begin(), infl.end(), i) != infl.end());
        }
        const Vec3 axis = harness::random_unit(rng);
        EXPECT_EQ(spherical_inflections(SphericalPolygon(testsupport::rotate_all(pts, axis, 1.234))), infl);
        std::vector<Vec3> neg;
        for (const auto& p : pts) neg.push_back(-p);
        const SphericalPolygon qn(neg);
        const auto en = epsilon_sequence(qn);
        for (std::size_t i = 0; i < q->size(); ++i) EXPECT_EQ(en.signs[i], -e.signs[i]);
        EXPECT_EQ(spherical_inflections(qn), infl);
    }
}

TEST(Flattenings, TetrahedralCycleHasFour) {
    const auto p = tetrahedral_cycle();
    EXPECT_EQ(oracle_flattenings(p.vertices()).size(), 4u);
    EXPECT_EQ(flattenings(p).size(), 4u);
}

TEST(Flattenings, ClosedHelixSample) {
    // The closing edge from t = 7 back to t = 0 breaks the constant torsion
    // sign; the oracle finds flattenings at 0, 5, 6, 7.
    const auto p = closed_helix();
    const auto want = oracle_flattenings(p.vertices());
    EXPECT_EQ(want, (std::vector<std::size_t>{0, 5, 6, 7}));
    EXPECT_TRUE(is_generic(p));
    EXPECT_EQ(flattenings(p), want);
    EXPECT_EQ(spherical_inflections(tangent_indicatrix(p)), want);
}

TEST(Flattenings, TranslationInvariant) {
    const auto p = closed_helix();
    std::vector<Vec3> moved;
    for (const auto& v : p.vertices()) moved.push_back(v + Vec3{3, -2, 10});
    EXPECT_EQ(flattenings(SpacePolygon(moved)), flattenings(p));
}

TEST(Flattenings, MatchIndicatrixInflectionsOnRandomGenericPolygons) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Vec3> v;
        for (int i = 0; i < 5 + trial % 8; ++i) v.push_back({g(rng), g(rng), g(rng)});
        const SpacePolygon p(v);
        if (!is_generic(p)) continue;
        const auto f = flattenings(p);
        EXPECT_EQ(f, oracle_flattenings(v));
        EXPECT_EQ(f, spherical_inflections(tangent_indicatrix(p)));
        EXPECT_EQ(static_cast<int>(f.size()), count_sign_changes(epsilon_sequence(tangent_indicatrix(p))));
        ++checked;
    }
    EXPECT_GT(checked, 250);
}

TEST(Flattenings, CoplanarNeighbourIsNotGeneric) {
    const SpacePolygon p({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0.5, 0.5, 1}});
    EXPECT_EQ(code_of([&] { flattenings(p); }), ErrorCode::NotGeneric);
}

TEST(Perturb, GeneralPositionKeepsSigns) {
    harness::GeneratorConfig c;
    c.seed = 21;
    const auto q = harness::gen_balanced_simple(c, 8);
    const auto p = perturb_to_general_position(q, {3, 1e-6, 64});
    EXPECT_EQ(epsilon_sequence(p).to_string(), epsilon_sequence(q).to_string());
    for (std::size_t i = 0; i < q.size(); ++i) EXPECT_LE(angle_between(p.vertices()[i], q.vertices()[i]), 1e-6);
    // Deterministic for a given seed.
    const auto again = perturb_to_general_position(q, {3, 1e-6, 64});
    EXPECT_EQ(again.vertices(), p.vertices());
}

TEST(Perturb, RemovesNonConsecutiveCollinearTriple) {
    // Put u5 on the great circle through u1 and u2 of a simple polygon.
    bool built = false;
    for (std::uint64_t seed = 1; seed < 200 && !built; ++seed) {
        harness::GeneratorConfig c;
        c.seed = seed;
        auto pts = harness::gen_balanced_simple(c, 6).vertices();
        const Vec3 nrm = normalized(cross(pts[0], pts[1]));
        pts[4] = normalized(pts[4] - nrm * dot(pts[4], nrm));
        SphericalPolygon q(pts);
        if (has_consecutive_collinear(q) || !harness::oracle_is_simple(q)) continue;
        ASSERT_TRUE(has_collinear_triple(q.vertices()));
        built = true;
        const auto before = spherical_inflections(q);
        const auto p = perturb_to_general_position(q, {7, 1e-6, 64});
        EXPECT_FALSE(has_collinear_triple(p.vertices()));
        EXPECT_TRUE(is_simple(p));
        EXPECT_EQ(spherical_inflections(p), before);
        EXPECT_EQ(code_of([&] { perturb_to_general_position(q, {7, 0.0, 64}); }), ErrorCode::PerturbationFailed);
    }
    EXPECT_TRUE(built);
}

TEST(Perturb, ZeroMagnitudeOnGeneralPositionIsIdentity) {
    harness::GeneratorConfig c;
    c.seed = 4;
    const auto q = harness::gen_balanced_simple(c, 7);
    EXPECT_EQ(perturb_to_general_position(q, {1, 0.0, 64}).vertices(), q.vertices());
}

TEST(Perturb, ConsecutiveCollinearRejected) {
    EXPECT_EQ(code_of([&] { perturb_to_general_position(SphericalPolygon({{1, 0, 0}, testsupport::lat_lon(0, 80),
                                                                          testsupport::lat_lon(0, 170), {0, 0, 1}})); }),
              ErrorCode::ConsecutiveCollinear);
}
