#pragma once

#include "spiky/geometry.hpp"
#include "spiky/illumination.hpp"
#include "spiky/piercing.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spiky::io {

using json = nlohmann::ordered_json;

// Direction artifacts: cover centers, packing centers or illumination
// directions. provenance is empty or one tag per direction ("vertex:3",
// "cover:0", ...).
struct DirectionSetFile {
    int dimension;
    std::vector<UnitVector> directions;
    std::vector<std::string> provenance;
    std::optional<double> angular_radius; // cover artifacts
    std::optional<double> separation;     // packing artifacts

    friend bool operator==(const DirectionSetFile&, const DirectionSetFile&) = default;
};

struct PointSetFile {
    int dimension;
    std::vector<Vector> points;
    std::vector<int> provenance;

    friend bool operator==(const PointSetFile&, const PointSetFile&) = default;
};

using Artifact = std::variant<BallFamily, SpikyBall, DirectionSetFile, PointSetFile>;

// Tolerance on |d| - 1 for parsed directions.
inline constexpr double kParseUnitTol = 1e-9;

// Throws ParseError on malformed JSON, an unknown "kind", wrong lengths or a
// violated file invariant.
Artifact parse_artifact(const std::string& text);
Artifact read_artifact(const std::string& path);

json to_json(const BallFamily& f);
json to_json(const SpikyBall& s);
json to_json(const DirectionSetFile& d);
json to_json(const PointSetFile& p);
json to_json(const Artifact& a);

// Compact-free, two-space indented JSON; floating-point numbers use 17
// significant digits so doubles round-trip exactly.
std::string dump(const json& j);

std::string serialize(const Artifact& a);

// Writes to a sibling temporary file and renames it over path.
void write_atomic(const std::string& path, const std::string& content);

std::string tag(const DirectionSource& s);
DirectionSetFile to_file(const DirectionSet& d);

} // namespace spiky::io
