#pragma once

#include <string>

#include <json.hpp>

#include "multitile/discrete.hpp"
#include "multitile/geometry.hpp"
#include "multitile/lattice.hpp"
#include "multitile/reports.hpp"

namespace multitile {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted

// {"dim": d, "basis": [[...], ...]} with basis[i] the i-th basis vector;
// entries are integers or "p/q" strings.
json to_json(const IntegerLattice& L);
json to_json(const RationalLattice& L);
IntegerLattice integer_lattice_from_json(const json& j);
RationalLattice rational_lattice_from_json(const json& j);

// {"dim": d, "points": [[...], ...]}
json to_json(const FinitePointSet& F);
FinitePointSet point_set_from_json(const json& j);

// {"vertices": [["p/q", "r/s"], ...]}, counterclockwise
json to_json(const RationalPolygon& P);
RationalPolygon polygon_from_json(const json& j);

json to_json(const TilingVerdict& v);
json to_json(const SpectralReport& r);
json to_json(const MinkowskiReport& r);
json to_json(const VdcReport& r);
json to_json(const ZetaReport& r);
json to_json(const DualCosetRep& r);

Rat rational_from_json(const json& j);  // integer or "p/q" string
json rational_to_json(const Rat& q);

// FNV-1a over the canonical dump; stable across runs
std::string digest(const json& j);

}  // namespace multitile
