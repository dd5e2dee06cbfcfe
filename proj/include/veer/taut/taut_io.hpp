#pragma once

#include "veer/taut/fiber.hpp"
#include "veer/taut/triangulation.hpp"

#include <json.hpp>

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace veer::taut {

/// Triangulation text format, one record per line:
///   tet <id> nbr <t0 t1 t2 t3> perm <p0 p1 p2 p3> coor <IIOO> pi <01/23>
///   edge <id> degree <d> [color <L|R>]
///   face <id> weight <p/q>
/// Each perm is the vertex map of that face's gluing as four digits.
struct TriangulationFile {
  TautTriangulation3 tri;
  std::optional<std::vector<Color>> colors;
  std::optional<FiberCycle> fiber;
};

std::string write_triangulation(const TriangulationFile& f);
/// Strict; throws ParseError with the line number. Edge lines are checked
/// against the degrees computed from the gluings.
TriangulationFile parse_triangulation(std::istream& in);
TriangulationFile parse_triangulation_string(const std::string& text);

nlohmann::json triangulation_to_json(const TriangulationFile& f);
/// Throws ParseError (line 0) on malformed input.
TriangulationFile triangulation_from_json(const nlohmann::json& j);

}  // namespace veer::taut
