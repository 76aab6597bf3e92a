#include "fourvertex/harness.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "fourvertex/applications.h"
#include "fourvertex/cones.h"
#include "fourvertex/io.h"
#include "fourvertex/lifting.h"
#include "fourvertex/reduction.h"
#include "fourvertex/simplicity.h"

namespace fourvertex::harness {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec3 on_sphere(double lat, double lon) {
    return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

// Repeatedly reverses the path between two crossing minor arcs. Each
// reversal shortens the closed geodesic path, so the loop terminates.
std::optional<std::vector<Vec3>> uncross(std::vector<Vec3> p, const Tolerances& tol) {
    const std::size_t n = p.size();
    const std::size_t cap = 50 * n * n;
    for (std::size_t iter = 0; iter < cap; ++iter) {
        bool crossed = false;
        for (std::size_t i = 0; i < n && !crossed; ++i) {
            for (std::size_t j = i + 2; j < n && !crossed; ++j) {
                if (edges_adjacent(i, j, n)) continue;
                try {
                    if (minor_arcs_cross(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n], tol)) {
                        std::reverse(p.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                     p.begin() + static_cast<std::ptrdiff_t>(j + 1));
                        crossed = true;
                    }
                } catch (const GeometryError&) {
                    return std::nullopt;
                }
            }
        }
        if (!crossed) return p;
    }
    return std::nullopt;
}

// Sorted angles in [0, span) whose cyclic gaps (closing gap measured to
// span_total) lie strictly between min_gap and max_gap.
std::optional<std::vector<double>> spaced_angles(std::mt19937_64& rng, int n, double span, double span_total,
                                                 double min_gap, double max_gap) {
    std::vector<double> a(static_cast<std::size_t>(n));
    for (auto& x : a) x = uniform(rng, 0.0, span);
    std::sort(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double gap = i + 1 < a.size() ? a[i + 1] - a[i] : a.front() + span_total - a.back();
        if (gap <= min_gap || gap >= max_gap) return std::nullopt;
    }
    return a;
}

Vec3Q rational_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-24, 24);
    std::uniform_int_distribution<int> den(1, 12);
    const Rational p(num(rng), den(rng));
    const Rational q(num(rng), den(rng));
    const Rational s = p * p + q * q;
    const Rational d = s + 1;
    Vec3Q v{2 * p / d, 2 * q / d, (s - 1) / d};
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) v = -v;
    return v;
}

}  // namespace

std::string_view mode_name(GeneratorMode m) {
    switch (m) {
        case GeneratorMode::SphericalSimpleBalanced: return "spherical_simple_balanced";
        case GeneratorMode::SpaceGenericSegre: return "space_generic_segre";
        case GeneratorMode::CentrallySymmetric: return "centrally_symmetric";
        case GeneratorMode::AdversarialNearDegenerate: return "adversarial_near_degenerate";
    }
    return "unknown";
}

bool parse_mode(std::string_view text, GeneratorMode& out) {
    for (auto m : {GeneratorMode::SphericalSimpleBalanced, GeneratorMode::SpaceGenericSegre,
                   GeneratorMode::CentrallySymmetric, GeneratorMode::AdversarialNearDegenerate}) {
        if (text == mode_name(m)) {
            out = m;
            return true;
        }
    }
    return false;
}

void GeneratorConfig::validate() const {
    if (n_min < 4) fail(ErrorCode::InvalidInput, "n_min must be at least 4");
    if (n_max < n_min) fail(ErrorCode::InvalidInput, "n_max must not be below n_min");
    if (attempts < 1) fail(ErrorCode::InvalidInput, "attempts must be positive");
}

GeneratorConfig GeneratorConfig::with_seed(std::uint64_t s) const {
    GeneratorConfig c = *this;
    c.seed = s;
    return c;
}

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    for (;;) {
        const Vec3 g{gauss(rng), gauss(rng), gauss(rng)};
        const double len = norm(g);
        if (len > 1e-9) return g / len;
    }
}

std::vector<Vec3> random_unit_points(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vec3> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_unit(rng));
    return out;
}

int draw_size(const GeneratorConfig& c) {
    c.validate();
    auto rng = stream(c.seed, 1);
    return std::uniform_int_distribution<int>(c.n_min, c.n_max)(rng);
}

SphericalPolygon gen_balanced(const GeneratorConfig& c, int n) {
    c.validate();
    auto rng = stream(c.seed, 2);
    for (int a = 0; a < c.attempts; ++a) {
        auto pts = random_unit_points(rng, static_cast<std::size_t>(n));
        if (has_collinear_triple(pts, c.tol) || !balanced_unchecked(pts, c.tol)) continue;
        return SphericalPolygon(std::move(pts), c.tol);
    }
    fail(ErrorCode::GenerationExhausted, "no balanced point set within the attempt budget");
}

SphericalPolygon gen_balanced_simple(const GeneratorConfig& c, int n) {
    c.validate();
    auto rng = stream(c.seed, 3);
    for (int a = 0; a < c.attempts; ++a) {
        auto pts = random_unit_points(rng, static_cast<std::size_t>(n));
        if (has_collinear_triple(pts, c.tol) || !balanced_unchecked(pts, c.tol)) continue;
        auto ordered = uncross(std::move(pts), c.tol);
        if (!ordered) continue;
        try {
            SphericalPolygon q(std::move(*ordered), c.tol);
            if (is_simple(q, c.tol)) return q;
        } catch (const GeometryError&) {
        }
    }
    fail(ErrorCode::GenerationExhausted, "no balanced simple polygon within the attempt budget");
}

SphericalPolygon gen_balanced_simple(const GeneratorConfig& c) { return gen_balanced_simple(c, draw_size(c)); }

SpacePolygon gen_segre_space_polygon(const GeneratorConfig& c, int n) {
    c.validate();
    auto rng = stream(c.seed, 4);
    for (int a = 0; a < c.attempts; ++a) {
        const auto q = gen_balanced_simple(c.with_seed(c.seed * 7919 + static_cast<std::uint64_t>(a)), n);
        std::normal_distribution<double> gauss(0.0, 3.0);
        const Vec3 base{gauss(rng), gauss(rng), gauss(rng)};
        try {
            SpacePolygon p = lift(q, base, {}, c.tol);
            if (is_generic(p, c.tol) && is_simple(tangent_indicatrix(p, c.tol), c.tol)) return p;
        } catch (const GeometryError&) {
        }
    }
    fail(ErrorCode::GenerationExhausted, "no generic Segre polygon within the attempt budget");
}

SpacePolygon gen_segre_space_polygon(const GeneratorConfig& c) { return gen_segre_space_polygon(c, draw_size(c)); }

SphericalPolygon gen_centrally_symmetric(const GeneratorConfig& c, int n) {
    c.validate();
    if (n % 2 != 0 || n < 6) fail(ErrorCode::InvalidInput, "centrally symmetric polygons need even n >= 6");
    const int m = n / 2;
    auto rng = stream(c.seed, 5);
    for (int a = 0; a < c.attempts; ++a) {
        const auto lons = spaced_angles(rng, m, kPi, kPi, 0.02, kPi);
        if (!lons) continue;
        std::vector<Vec3> pts;
        for (double lon : *lons) pts.push_back(on_sphere(uniform(rng, -1.0, 1.0), lon));
        for (int k = 0; k < m; ++k) pts.push_back(-pts[static_cast<std::size_t>(k)]);
        try {
            SphericalPolygon q(std::move(pts), c.tol);
            if (is_planar(q, c.tol) || has_collinear_triple(q.vertices(), c.tol, true)) continue;
            if (is_simple(q, c.tol)) return q;
        } catch (const GeometryError&) {
        }
    }
    fail(ErrorCode::GenerationExhausted, "no centrally symmetric polygon within the attempt budget");
}

SphericalPolygon gen_great_circle(const GeneratorConfig& c, int n) {
    c.validate();
    auto rng = stream(c.seed, 6);
    for (int a = 0; a < c.attempts; ++a) {
        const auto angles = spaced_angles(rng, n, 2 * kPi, 2 * kPi, 0.02, kPi - 0.02);
        if (!angles) continue;
        const Vec3 e1 = random_unit(rng);
        const Vec3 e2 = normalized(cross(e1, random_unit(rng)));
        const double dir = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        std::vector<Vec3> pts;
        for (double t : *angles) pts.push_back(normalized(e1 * std::cos(dir * t) + e2 * std::sin(dir * t)));
        try {
            return SphericalPolygon(std::move(pts), c.tol);
        } catch (const GeometryError&) {
        }
    }
    fail(ErrorCode::GenerationExhausted, "no great-circle polygon within the attempt budget");
}

SphericalPolygon gen_equal_area_graph(const GeneratorConfig& c, int n) {
    c.validate();
    auto rng = stream(c.seed, 7);
    for (int a = 0; a < c.attempts; ++a) {
        const auto lons = spaced_angles(rng, n, 2 * kPi, 2 * kPi, 0.05, kPi - 0.05);
        if (!lons) continue;
        std::vector<double> lats;
        for (int k = 0; k < n; ++k) lats.push_back(uniform(rng, -0.6, 0.6));
        auto build = [&](double shift) {
            std::vector<Vec3> pts;
            for (int k = 0; k < n; ++k) {
                pts.push_back(on_sphere(lats[static_cast<std::size_t>(k)] + shift, (*lons)[static_cast<std::size_t>(k)]));
            }
            return SphericalPolygon(std::move(pts), c.tol);
        };
        try {
            auto excess = [&](double shift) { return region_areas(build(shift), c.tol).area1 - 2 * kPi; };
            double lo = -0.8;
            double hi = 0.8;
            double f_lo = excess(lo);
            if (f_lo * excess(hi) > 0) continue;
            for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double f_mid = excess(mid);
                if ((f_mid > 0) == (f_lo > 0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            SphericalPolygon q = build(0.5 * (lo + hi));
            const auto areas = region_areas(q, c.tol);
            if (std::abs(areas.area1 - areas.area2) > 1e-12) continue;
            if (has_collinear_triple(q.vertices(), c.tol)) continue;
            return q;
        } catch (const GeometryError&) {
        }
    }
    fail(ErrorCode::GenerationExhausted, "no equal-area graph polygon within the attempt budget");
}

SphericalPolygonQ gen_rational_balanced(const GeneratorConfig& c, int n) {
    c.validate();
    auto rng = stream(c.seed, 8);
    for (int a = 0; a < c.attempts; ++a) {
        std::vector<Vec3Q> pts;
        for (int k = 0; k < n; ++k) pts.push_back(rational_unit(rng));
        if (has_collinear_triple(pts, c.tol) || !balanced_unchecked(pts, c.tol)) continue;
        return SphericalPolygonQ(std::move(pts), c.tol);
    }
    fail(ErrorCode::GenerationExhausted, "no rational balanced set within the attempt budget");
}

std::vector<Vec3> gen_near_degenerate_quadruple(const GeneratorConfig& c, double offset) {
    auto rng = stream(c.seed, 9);
    const Vec3 a = random_unit(rng);
    Vec3 b = random_unit(rng);
    while (parallel(a, b, 1e-3)) b = random_unit(rng);
    const Vec3 normal = normalized(cross(a, b));
    const double s = uniform(rng, 0.1, 1.0);
    const double t = uniform(rng, 0.1, 1.0);
    const double lift_by = offset * uniform(rng, 0.0, 1.0) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const Vec3 mid = normalized(normalized(a * s + b * t) + normal * lift_by);
    return {a, b, mid, random_unit(rng)};
}

bool oracle_arc_intersection(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
    const Vec3 n1 = cross(a1, a2);
    const Vec3 n2 = cross(b1, b2);
    const Vec3 line = cross(normalized(n1), normalized(n2));
    const double span_a = angle_between(a1, a2);
    const double span_b = angle_between(b1, b2);
    auto on_arc = [](const Vec3& x, const Vec3& p, const Vec3& q, double span) {
        return angle_between(p, x) + angle_between(x, q) - span <= 1e-12;
    };
    if (norm(line) < 1e-12) {
        // Arcs on one great circle meet iff an endpoint of one lies on the other.
        return on_arc(b1, a1, a2, span_a) || on_arc(b2, a1, a2, span_a) || on_arc(a1, b1, b2, span_b) ||
               on_arc(a2, b1, b2, span_b);
    }
    const Vec3 d = normalized(line);
    for (const Vec3& x : {d, -d}) {
        if (on_arc(x, a1, a2, span_a) && on_arc(x, b1, b2, span_b)) return true;
    }
    return false;
}

bool oracle_is_simple(const SphericalPolygon& q) {
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (edges_adjacent(i, j, n)) continue;
            const auto a = static_cast<std::ptrdiff_t>(i);
            const auto b = static_cast<std::ptrdiff_t>(j);
            if (oracle_arc_intersection(q[a], q[a + 1], q[b], q[b + 1])) return false;
        }
    }
    return true;
}

// ---- certification ----

json Finding::to_json() const {
    return json{{"claim", claim}, {"seed", seed}, {"instance", instance}, {"observed", observed}, {"required", required}};
}

Finding Finding::from_json(const json& doc) {
    Finding f;
    try {
        f.claim = doc.at("claim").get<std::string>();
        f.seed = doc.at("seed").get<std::uint64_t>();
        f.instance = doc.at("instance");
        f.observed = doc.value("observed", "");
        f.required = doc.value("required", "");
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("malformed finding: ") + e.what());
    }
    return f;
}

json CertifyReport::to_json() const {
    json claims_doc = json::object();
    for (const auto& [id, t] : claims) {
        claims_doc[id] = {{"trials", t.trials}, {"passes", t.passes}, {"skipped", t.skipped}, {"violations", t.violations}};
    }
    json f = json::array();
    for (const auto& x : findings) f.push_back({{"claim", x.claim}, {"seed", x.seed}, {"observed", x.observed}});
    return json{{"claims", claims_doc}, {"findings", f}, {"ok", ok()}};
}

namespace {

const std::vector<std::string> kStandardClaims{"balance-equivalence", "nonessential-bound", "good-vertex-bound",
                                               "main-theorem",        "lift-roundtrip",     "arc-oracle",
                                               "segre-transfer",      "tennis-ball",        "mobius"};
const std::vector<std::string> kAdversarialClaims{"orientation-band", "arc-exact"};

int clamp_size(const GeneratorConfig& c, int lo, int hi) {
    return std::clamp(draw_size(c), lo, std::max(lo, hi));
}

json points_doc(const std::vector<Vec3>& pts) {
    json verts = json::array();
    for (const auto& v : pts) verts.push_back(io::vec_json(v));
    return json{{"kind", "spherical"}, {"vertices", verts}};
}

std::vector<Vec3> points_of(const json& instance) {
    std::vector<Vec3> out;
    for (const auto& v : instance.at("vertices")) {
        out.push_back({io::parse_double(v[0]), io::parse_double(v[1]), io::parse_double(v[2])});
    }
    return out;
}

std::string count_text(const char* what, std::size_t v) { return std::string(what) + " = " + std::to_string(v); }

std::optional<std::string> check_balance_equivalence(const std::vector<Vec3>& u, const Tolerances& tol) {
    if (has_collinear_triple(u, tol)) fail(ErrorCode::CollinearTriple, "quadruple not in general position");
    const bool balanced = balanced_unchecked(u, tol);
    const bool characterization = four_point_characterization(u[0], u[1], u[2], u[3], tol);
    const bool cone = cone_membership(-u[0], {u[1], u[2], u[3]}, tol).has_value();
    const SphericalPolygon q(u, tol);
    const bool four_changes = count_sign_changes(epsilon_sequence(q, tol)) == 4;
    if (balanced != characterization || balanced != cone || balanced != four_changes) {
        return "hemisphere " + std::to_string(balanced) + ", signs " + std::to_string(characterization) + ", cone " +
               std::to_string(cone) + ", four changes " + std::to_string(four_changes);
    }
    if (balanced && !is_simple(q, tol)) return std::string("balanced quadruple is not simple");
    return std::nullopt;
}

std::optional<std::string> check_tennis(const SphericalPolygon& q, const Tolerances& tol) {
    const auto r = tennis_ball_check(q, tol);
    if (!r.theorem_holds) return "equal-area polygon with " + std::to_string(r.inflections) + " inflections";
    if (!r.planar && is_centrally_symmetric(q, tol)) {
        if (!r.balanced) return std::string("centrally symmetric polygon is not balanced");
        if (!r.equal_area) return std::string("centrally symmetric polygon has unequal areas");
    }
    if (!r.planar && r.balanced) {
        const auto tri = triangulate_regions(q, tol);
        double a1 = 0;
        for (std::size_t f = 0; f < tri.triangles.size(); ++f) {
            const auto& t = tri.triangles[f];
            if (tri.region[f] == 1) a1 += spherical_triangle_area(q[t[0]], q[t[1]], q[t[2]]);
        }
        if (std::abs(a1 - r.areas.area1) > tol.area) {
            return "triangulated area " + std::to_string(a1) + " vs " + std::to_string(r.areas.area1);
        }
    }
    return std::nullopt;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> all = [] {
        auto v = kStandardClaims;
        v.insert(v.end(), kAdversarialClaims.begin(), kAdversarialClaims.end());
        return v;
    }();
    return all;
}

json make_instance(const std::string& claim, const GeneratorConfig& c) {
    if (claim == "balance-equivalence" || claim == "arc-oracle") {
        auto rng = stream(c.seed, 10);
        return points_doc(random_unit_points(rng, 4));
    }
    if (claim == "nonessential-bound") return io::to_json(gen_balanced(c, clamp_size(c, 5, c.n_max)));
    if (claim == "lift-roundtrip") return io::to_json(gen_balanced(c, draw_size(c)));
    if (claim == "good-vertex-bound" || claim == "main-theorem") return io::to_json(gen_balanced_simple(c));
    if (claim == "segre-transfer") return io::to_json(gen_segre_space_polygon(c));
    if (claim == "tennis-ball") {
        const int n = draw_size(c);
        switch (c.seed % 3) {
            case 0: return io::to_json(gen_centrally_symmetric(c, std::max(6, n + n % 2)));
            case 1: return io::to_json(gen_great_circle(c, n));
            default: return io::to_json(gen_equal_area_graph(c, n));
        }
    }
    if (claim == "mobius") {
        const int n = clamp_size(c, 6, c.n_max);
        return io::to_json(gen_centrally_symmetric(c, n + n % 2));
    }
    if (claim == "orientation-band" || claim == "arc-exact") {
        auto rng = stream(c.seed, 11);
        const double offset = std::pow(10.0, uniform(rng, -13.0, -7.0));
        return points_doc(gen_near_degenerate_quadruple(c, offset));
    }
    fail(ErrorCode::InvalidInput, "unknown claim '" + claim + "'");
}

std::optional<std::string> check_claim(const std::string& claim, const json& instance, const Tolerances& tol) {
    if (claim == "balance-equivalence") return check_balance_equivalence(points_of(instance), tol);
    if (claim == "arc-oracle") {
        const auto u = points_of(instance);
        const bool criterion = minor_arcs_cross(u[0], u[1], u[2], u[3], tol);
        const bool oracle = oracle_arc_intersection(u[0], u[1], u[2], u[3]);
        if (criterion != oracle) return "criterion " + std::to_string(criterion) + ", oracle " + std::to_string(oracle);
        return std::nullopt;
    }
    if (claim == "nonessential-bound") {
        const auto q = io::spherical_from_json(instance, tol);
        const auto x = nonessential_vertices(q, tol);
        if (x.size() + 3 < q.size()) return count_text("nonessential", x.size()) + ", n = " + std::to_string(q.size());
        return std::nullopt;
    }
    if (claim == "good-vertex-bound") {
        const auto q = io::spherical_from_json(instance, tol);
        const auto good = good_vertices(q, tol);
        if (good.size() < 4) return count_text("good", good.size());
        const auto tri = triangulate_regions(q, tol);
        for (int region : {1, 2}) {
            const auto d = dual_graph(tri, region);
            if (!d.is_tree() || d.leaves < 2) {
                return "region " + std::to_string(region) + " dual graph is not a tree with two leaves";
            }
            for (std::size_t e : ear_vertices(tri, region)) {
                if (!std::binary_search(good.begin(), good.end(), e)) return "ear vertex " + std::to_string(e + 1) + " is bad";
            }
        }
        return std::nullopt;
    }
    if (claim == "main-theorem") {
        const auto q = io::spherical_from_json(instance, tol);
        const int changes = count_sign_changes(epsilon_sequence(q, tol));
        if (changes < 4 || changes % 2 != 0) return "sign changes = " + std::to_string(changes);
        try {
            reduce_to_base(q, {}, tol);
        } catch (const FindingError& e) {
            return std::string(e.what());
        }
        return std::nullopt;
    }
    if (claim == "lift-roundtrip") {
        const auto q = io::spherical_from_json(instance, tol);
        try {
            const auto w = lift_weights(q, {}, tol);
            lift_with(q, w, Vec3{0.5, -1.0, 2.0}, tol);
        } catch (const GeometryError& e) {
            if (e.code() == ErrorCode::ClosureResidualExceeded || e.code() == ErrorCode::NumericalBreakdown ||
                e.code() == ErrorCode::NoEligibleVertex) {
                return std::string(e.what());
            }
            throw;
        }
        return std::nullopt;
    }
    if (claim == "segre-transfer") {
        const auto p = io::space_from_json(instance);
        if (!is_generic(p, tol)) fail(ErrorCode::NotGeneric, "space polygon is not generic");
        const auto f = flattenings(p, tol);
        const auto ind = spherical_inflections(tangent_indicatrix(p, tol), tol);
        if (f.size() < 4 || f.size() != ind.size()) {
            return count_text("flattenings", f.size()) + ", " + count_text("inflections", ind.size());
        }
        return std::nullopt;
    }
    if (claim == "tennis-ball") return check_tennis(io::spherical_from_json(instance, tol), tol);
    if (claim == "mobius") {
        const auto r = mobius_check(io::spherical_from_json(instance, tol), tol);
        if (!r.theorem_holds) {
            return "inflections = " + std::to_string(r.inflections) + ", pairing " + std::to_string(r.pairing_holds) +
                   ", opposite " + std::to_string(r.directions_opposite);
        }
        return std::nullopt;
    }
    if (claim == "orientation-band") {
        const auto u = points_of(instance);
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = a + 1; b < 4; ++b) {
                for (std::size_t c = b + 1; c < 4; ++c) {
                    const Sign s = orientation(u[a], u[b], u[c], tol);
                    if (s != Sign::Zero && s != orientation_exact(u[a], u[b], u[c])) {
                        return "floating sign disagrees with exact sign on triple " + std::to_string(a + 1) +
                               std::to_string(b + 1) + std::to_string(c + 1);
                    }
                }
            }
        }
        return std::nullopt;
    }
    if (claim == "arc-exact") {
        const auto u = points_of(instance);
        bool floating = false;
        try {
            floating = minor_arcs_cross(u[0], u[1], u[2], u[3], tol);
        } catch (const GeometryError&) {
            return std::nullopt;
        }
        const bool exact = minor_arcs_cross(to_rational(u[0]), to_rational(u[1]), to_rational(u[2]), to_rational(u[3]));
        if (floating != exact) return "floating " + std::to_string(floating) + ", exact " + std::to_string(exact);
        return std::nullopt;
    }
    fail(ErrorCode::InvalidInput, "unknown claim '" + claim + "'");
}

CertifyReport certify_all(const GeneratorConfig& config, const CertifyOptions& opts) {
    config.validate();
    const auto& claims =
        config.mode == GeneratorMode::AdversarialNearDegenerate ? kAdversarialClaims : kStandardClaims;
    CertifyReport report;
    for (const auto& claim : claims) {
        ClaimTally& tally = report.claims[claim];
        for (int t = 0; t < opts.trials; ++t) {
            const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(t);
            ++tally.trials;
            json instance;
            try {
                instance = make_instance(claim, config.with_seed(seed));
            } catch (const GeometryError&) {
                ++tally.skipped;
                continue;
            }
            std::optional<std::string> violation;
            try {
                violation = check_claim(claim, instance, config.tol);
            } catch (const FindingError& e) {
                violation = e.what();
            } catch (const GeometryError& e) {
                if (e.error_class() == ErrorClass::Violation) {
                    violation = e.what();
                } else {
                    ++tally.skipped;
                    continue;
                }
            }
            if (!violation) {
                ++tally.passes;
                continue;
            }
            ++tally.violations;
            Finding f{claim, seed, instance, *violation, "claim holds"};
            if (!opts.findings_dir.empty()) {
                const auto dir = std::filesystem::path(opts.findings_dir) / claim;
                std::filesystem::create_directories(dir);
                io::write_file((dir / (std::to_string(seed) + ".json")).string(), f.to_json().dump(2));
            }
            report.findings.push_back(std::move(f));
        }
    }
    return report;
}

bool replay(const Finding& f, const Tolerances& tol) {
    try {
        return check_claim(f.claim, f.instance, tol).has_value();
    } catch (const FindingError&) {
        return true;
    } catch (const GeometryError& e) {
        return e.error_class() == ErrorClass::Violation;
    }
}

}  // namespace fourvertex::harness
