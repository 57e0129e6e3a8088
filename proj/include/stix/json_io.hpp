#pragma once

#include <iosfwd>
#include <utility>

#include <json.hpp>

#include "stix/altgrid.hpp"
#include "stix/coverage.hpp"
#include "stix/field.hpp"
#include "stix/polytope.hpp"

// JSON forms used by the CLI and the fixture files. Exact values always travel
// as canonical "p/q" strings; any decimal field in a document is derived output
// for human eyes and is never read back.

namespace stix {

using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json vec_to_json(const RatVec& v);
RatVec vec_from_json(const Json& j);

Json polytope_to_json(const HPoly& h, const VPoly& v);
std::pair<HPoly, VPoly> polytope_from_json(const Json& j);

Json diagonal_config_to_json(const DiagonalConfig& cfg);

/// Parses and validates a diagonal configuration: entries +-1 with last +1,
/// all directions distinct, exactly 2^(n-1) of them, offsets matching.
DiagonalConfig diagonal_config_from_json(const Json& j);

Json offset_family_to_json(const OffsetFamily& fam);

/// Document skeleton shared by all CLI commands.
Json manifest(const std::string& command, Json parameters);

/// Wavefront OBJ for a 3-dimensional cell: exact vertices printed as doubles,
/// one polygon per facet, outward orientation. Throws DomainError unless the
/// chart dimension is 3.
void write_obj(std::ostream& os, const HPoly& h, const VPoly& v);

}  // namespace stix
