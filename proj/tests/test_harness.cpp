#include <gtest/gtest.h>

#include <filesystem>
#include <numbers>

#include "fourvertex/applications.h"
#include "fourvertex/cones.h"
#include "fourvertex/harness.h"
#include "fourvertex/io.h"
#include "test_support.h"

using namespace fourvertex;
using namespace fourvertex::harness;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const GeometryError& e) {
        return e.code();
    }
    return static_cast<ErrorCode>(-1);
}

GeneratorConfig config(std::uint64_t seed) {
    GeneratorConfig c;
    c.seed = seed;
    return c;
}

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("fourvertex_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST(Config, ValidationAndModes) {
    GeneratorConfig c;
    c.n_min = 3;
    EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::InvalidInput);
    c.n_min = 8;
    c.n_max = 6;
    EXPECT_EQ(code_of([&] { c.validate(); }), ErrorCode::InvalidInput);
    for (auto m : {GeneratorMode::SphericalSimpleBalanced, GeneratorMode::SpaceGenericSegre,
                   GeneratorMode::CentrallySymmetric, GeneratorMode::AdversarialNearDegenerate}) {
        GeneratorMode parsed = GeneratorMode::SphericalSimpleBalanced;
        ASSERT_TRUE(parse_mode(mode_name(m), parsed));
        EXPECT_EQ(parsed, m);
    }
    GeneratorMode unused;
    EXPECT_FALSE(parse_mode("tetrahedral", unused));
}

TEST(Config, DrawSizeInRange) {
    GeneratorConfig c;
    c.n_min = 6;
    c.n_max = 9;
    std::set<int> seen;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const int n = draw_size(c.with_seed(s));
        EXPECT_GE(n, 6);
        EXPECT_LE(n, 9);
        seen.insert(n);
    }
    EXPECT_EQ(seen.size(), 4u);
}

TEST(Generators, Deterministic) {
    EXPECT_EQ(gen_balanced_simple(config(5), 9).vertices(), gen_balanced_simple(config(5), 9).vertices());
    EXPECT_NE(gen_balanced_simple(config(5), 9).vertices(), gen_balanced_simple(config(6), 9).vertices());
    EXPECT_EQ(gen_segre_space_polygon(config(3), 7).vertices(), gen_segre_space_polygon(config(3), 7).vertices());
    EXPECT_EQ(io::to_json(gen_rational_balanced(config(4), 6)), io::to_json(gen_rational_balanced(config(4), 6)));
}

TEST(Generators, BalancedSimpleGeneralPosition) {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const auto q = gen_balanced_simple(config(s), 4 + static_cast<int>(s % 12));
        EXPECT_FALSE(has_collinear_triple(q.vertices()));
        EXPECT_FALSE(testsupport::scan_hemisphere(q.vertices(), 0.0));
        EXPECT_TRUE(oracle_is_simple(q));
    }
}

TEST(Generators, SegreSpacePolygons) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto p = gen_segre_space_polygon(config(s), 6 + static_cast<int>(s % 8));
        EXPECT_TRUE(is_generic(p));
        const auto ind = tangent_indicatrix(p);
        EXPECT_TRUE(oracle_is_simple(ind));
        EXPECT_FALSE(testsupport::scan_hemisphere(ind.vertices(), 0.0));
    }
}

TEST(Generators, SymmetricGreatCircleEqualArea) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const int n = 6 + 2 * static_cast<int>(s % 7);
        const auto cs = gen_centrally_symmetric(config(s), n);
        ASSERT_EQ(cs.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cs.size() / 2; ++i) {
            EXPECT_LE(norm(cs.vertices()[i] + cs.vertices()[i + cs.size() / 2]), 1e-15);
        }
        EXPECT_FALSE(is_planar(cs));
        EXPECT_TRUE(oracle_is_simple(cs));
        const auto gc = gen_great_circle(config(s), n - 1);
        EXPECT_TRUE(is_planar(gc));
        EXPECT_TRUE(planar_is_simple(gc));
        const auto ea = gen_equal_area_graph(config(s), n + 1);
        EXPECT_TRUE(oracle_is_simple(ea));
        EXPECT_NEAR(testsupport::fan_area(ea.vertices(), Vec3{0, 0, 1}), 2 * std::numbers::pi, 1e-9);
    }
    EXPECT_EQ(code_of([] { gen_centrally_symmetric(config(1), 7); }), ErrorCode::InvalidInput);
}

TEST(Generators, RationalPointsAreExactlyUnit) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto q = gen_rational_balanced(config(s), 5 + static_cast<int>(s % 6));
        for (const auto& v : q.vertices()) EXPECT_EQ(dot(v, v), Rational(1));
        EXPECT_TRUE(balanced_unchecked(q.vertices()));
    }
}

TEST(Generators, NearDegenerateQuadruple) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto u = gen_near_degenerate_quadruple(config(s), 1e-9);
        EXPECT_LE(std::abs(testsupport::leibniz_det(u[0], u[1], u[2])), 1e-9);
    }
}

TEST(Oracle, ArcIntersectionCases) {
    const Vec3 a{1, 0, 0}, b{0, 1, 0};
    EXPECT_TRUE(oracle_arc_intersection(a, b, normalized(Vec3{1, 1, -1}), normalized(Vec3{1, 1, 1})));
    EXPECT_FALSE(oracle_arc_intersection(a, b, normalized(Vec3{-1, -1, -1}), normalized(Vec3{-1, -1, 1})));
    EXPECT_FALSE(oracle_arc_intersection(a, b, normalized(Vec3{1, -1, -1}), normalized(Vec3{1, -1, 1})));
    EXPECT_FALSE(oracle_arc_intersection(a, b, Vec3{-1, 0, 0}, Vec3{0, -1, 0}));
    EXPECT_TRUE(oracle_arc_intersection(a, b, normalized(Vec3{1, 1, 0}), Vec3{-1, 0, 0}));
}

TEST(Findings, JsonRoundTrip) {
    Finding f{"mobius", 42, io::to_json(gen_centrally_symmetric(config(2), 8)), "inflections = 2", "claim holds"};
    const auto back = Finding::from_json(f.to_json());
    EXPECT_EQ(back.claim, f.claim);
    EXPECT_EQ(back.seed, f.seed);
    EXPECT_EQ(back.instance, f.instance);
    EXPECT_EQ(back.observed, f.observed);
    EXPECT_EQ(code_of([] { Finding::from_json(nlohmann::json{{"seed", 1}}); }), ErrorCode::InvalidInput);
}

TEST(Certify, CleanRunHasNoFindings) {
    CertifyOptions opts;
    opts.trials = 6;
    opts.findings_dir = "";
    const auto report = certify_all(config(1), opts);
    EXPECT_TRUE(report.ok());
    ASSERT_EQ(report.claims.size(), 9u);
    for (const auto& [claim, t] : report.claims) {
        EXPECT_EQ(t.trials, 6) << claim;
        EXPECT_EQ(t.passes + t.skipped, 6) << claim;
        EXPECT_GE(t.passes, 5) << claim;
    }
    EXPECT_TRUE(report.to_json().at("ok").get<bool>());
}

TEST(Certify, AdversarialRunHasNoFindings) {
    GeneratorConfig c = config(1);
    c.mode = GeneratorMode::AdversarialNearDegenerate;
    CertifyOptions opts;
    opts.trials = 300;
    opts.findings_dir = "";
    const auto report = certify_all(c, opts);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.claims.size(), 2u);
    EXPECT_GT(report.claims.at("arc-exact").passes, 0);
}

TEST(Certify, MutantProducesReplayableFindings) {
    const auto dir = scratch_dir("mutant_findings");
    CertifyOptions opts;
    opts.trials = 20;
    opts.findings_dir = dir.string();
    std::vector<Finding> findings;
    {
        mutation::ScopedMutant m(mutation::Mutant::DetCofactor1);
        findings = certify_all(config(1), opts).findings;
        ASSERT_FALSE(findings.empty());
        for (const auto& f : findings) EXPECT_TRUE(replay(f)) << f.claim << " " << f.seed;
    }
    const auto& first = findings.front();
    const auto path = dir / first.claim / (std::to_string(first.seed) + ".json");
    ASSERT_TRUE(std::filesystem::exists(path));
    const auto stored = Finding::from_json(io::read_file(path.string()));
    EXPECT_EQ(stored.instance, first.instance);
    for (const auto& f : findings) EXPECT_FALSE(replay(f)) << f.claim << " " << f.seed;
    std::filesystem::remove_all(dir);
}

TEST(Certify, UnknownClaim) {
    EXPECT_EQ(code_of([] { check_claim("no-such-claim", nlohmann::json::object()); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { make_instance("no-such-claim", config(1)); }), ErrorCode::InvalidInput);
    EXPECT_EQ(claim_ids().size(), 11u);
}
