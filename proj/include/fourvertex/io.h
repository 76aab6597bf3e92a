#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fourvertex/applications.h"
#include "fourvertex/lifting.h"
#include "fourvertex/reduction.h"
#include "fourvertex/serialize.h"
#include "fourvertex/simplicity.h"

namespace fourvertex::io {

using nlohmann::json;

/// A number in polygon JSON: a JSON number, a decimal string ("-0.125",
/// "3e-4") or an exact fraction string ("-7/3").
double parse_double(const json& value);
Rational parse_rational(const json& value);

json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// "spherical" or "space"; InvalidInput for anything else.
std::string polygon_kind(const json& doc);

SphericalPolygon spherical_from_json(const json& doc, const Tolerances& tol = kDefaultTolerances);
SphericalPolygonQ spherical_exact_from_json(const json& doc, const Tolerances& tol = kDefaultTolerances);
SpacePolygon space_from_json(const json& doc);
SpacePolygonQ space_exact_from_json(const json& doc);

json to_json(const SphericalPolygon& q);
json to_json(const SphericalPolygonQ& q);
json to_json(const SpacePolygon& p);
json to_json(const SpacePolygonQ& p);

std::string rational_text(const Rational& r);
json vec_json(const Vec3& v);
json vec_json(const Vec3Q& v);

json epsilon_json(const EpsilonSequence& e);
json trace_to_json(const ReductionTrace& t);
json trace_to_json(const ReductionTraceQ& t);
json triangulation_to_json(const SphericalTriangulation& t);
json areas_to_json(const RegionAreas& a);
json tennis_ball_to_json(const TennisBallReport& r);
json mobius_to_json(const MobiusReport& r);

/// One polyline of `samples` points along each minor-arc edge.
std::vector<std::vector<Vec3>> arc_polylines(const SphericalPolygon& q, int samples = 33);
json plot_json(const SphericalPolygon& q, int samples = 33);

/// One-based index list.
json indices_json(const std::vector<std::size_t>& zero_based);

}  // namespace fourvertex::io
