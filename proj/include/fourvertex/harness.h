#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fourvertex/polygons.h"

namespace fourvertex::harness {

enum class GeneratorMode { SphericalSimpleBalanced, SpaceGenericSegre, CentrallySymmetric, AdversarialNearDegenerate };

std::string_view mode_name(GeneratorMode m);
bool parse_mode(std::string_view text, GeneratorMode& out);

struct GeneratorConfig {
    std::uint64_t seed = 1;
    int n_min = 4;
    int n_max = 12;
    int attempts = 2000;
    GeneratorMode mode = GeneratorMode::SphericalSimpleBalanced;
    Tolerances tol = kDefaultTolerances;

    void validate() const;
    /// The same config with another seed.
    GeneratorConfig with_seed(std::uint64_t s) const;
};

Vec3 random_unit(std::mt19937_64& rng);
std::vector<Vec3> random_unit_points(std::mt19937_64& rng, std::size_t n);

/// Vertex count drawn from [n_min, n_max] with the config's seed.
int draw_size(const GeneratorConfig& c);

/// Balanced point set in general position, in random order (not necessarily simple).
SphericalPolygon gen_balanced(const GeneratorConfig& c, int n);

/// Balanced, simple, general position. Random points are ordered by a
/// random permutation followed by 2-opt uncrossing of minor arcs.
SphericalPolygon gen_balanced_simple(const GeneratorConfig& c, int n);
SphericalPolygon gen_balanced_simple(const GeneratorConfig& c);

/// lift(gen_balanced_simple(c)) from a random base, checked generic.
SpacePolygon gen_segre_space_polygon(const GeneratorConfig& c, int n);
SpacePolygon gen_segre_space_polygon(const GeneratorConfig& c);

/// n = 2m vertices with increasing longitude over half a turn followed by
/// their antipodes; simple, nonplanar, no collinear triple beyond those
/// forced by antipodal pairs.
SphericalPolygon gen_centrally_symmetric(const GeneratorConfig& c, int n);

/// n points in increasing order around a random great circle.
SphericalPolygon gen_great_circle(const GeneratorConfig& c, int n);

/// Longitude-graph polygon whose latitudes are shifted so the two regions
/// have equal area (not centrally symmetric in general).
SphericalPolygon gen_equal_area_graph(const GeneratorConfig& c, int n);

/// Balanced point set with exact rational coordinates on the unit sphere.
SphericalPolygonQ gen_rational_balanced(const GeneratorConfig& c, int n);

/// Four points where three are within `offset` of a common great circle.
std::vector<Vec3> gen_near_degenerate_quadruple(const GeneratorConfig& c, double offset);

/// Minor arcs a1a2 and b1b2 share a point, decided from the line where
/// their planes meet and arc-length bounds (endpoint containment when both
/// lie on one great circle). Independent of orientation signs.
bool oracle_arc_intersection(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2);

/// Edge-pair simplicity decided with oracle_arc_intersection.
bool oracle_is_simple(const SphericalPolygon& q);

// ---- certification ----

struct Finding {
    std::string claim;
    std::uint64_t seed = 0;
    nlohmann::json instance;
    std::string observed;
    std::string required;

    nlohmann::json to_json() const;
    static Finding from_json(const nlohmann::json& doc);
};

struct ClaimTally {
    int trials = 0;
    int passes = 0;
    int skipped = 0;
    int violations = 0;
};

struct CertifyReport {
    std::map<std::string, ClaimTally> claims;
    std::vector<Finding> findings;
    bool ok() const { return findings.empty(); }
    nlohmann::json to_json() const;
};

struct CertifyOptions {
    int trials = 100;
    std::string findings_dir = "findings";  // empty: do not write files
};

/// Claim ids understood by run_claim and replay.
const std::vector<std::string>& claim_ids();

/// Generates the instance for `claim` at trial seed `seed`.
nlohmann::json make_instance(const std::string& claim, const GeneratorConfig& c);

/// Checks `claim` on a serialized instance. Returns a description of the
/// violation, or nothing when the claim holds. Degenerate instances raise
/// GeometryError.
std::optional<std::string> check_claim(const std::string& claim, const nlohmann::json& instance,
                                       const Tolerances& tol = kDefaultTolerances);

/// Runs every claim for opts.trials seeds starting at config.seed.
CertifyReport certify_all(const GeneratorConfig& config, const CertifyOptions& opts = {});

/// Re-runs a finding's claim on its stored instance; true iff it still fails.
bool replay(const Finding& f, const Tolerances& tol = kDefaultTolerances);

}  // namespace fourvertex::harness
