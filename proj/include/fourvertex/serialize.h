#pragma once

#include <string>

#include "fourvertex/polygons.h"

namespace fourvertex {

/// Polygon JSON text. Doubles are written with round-trip precision; exact
/// coordinates are written as "p/q" strings.
std::string polygon_json(const SphericalPolygon& q);
std::string polygon_json(const SphericalPolygonQ& q);
std::string polygon_json(const SpacePolygon& p);
std::string polygon_json(const SpacePolygonQ& p);

}  // namespace fourvertex
