#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "minkpair/dc/pl_function.hpp"
#include "minkpair/planar/vpolygon.hpp"
#include "minkpair/spatial/vpolytope3.hpp"

namespace minkpair {

struct SceneSet {
  std::string name;
  int dim = 2;
  std::vector<std::vector<Rational>> points;
  /// Generators of the recession cone; empty for a bounded set.
  std::vector<std::vector<Rational>> cone;

  friend bool operator==(const SceneSet&, const SceneSet&) = default;
};

struct SceneFunction {
  std::string name;
  Rational lower, upper;
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;

  friend bool operator==(const SceneFunction&, const SceneFunction&) = default;
};

/// Named sets and functions read from a JSON scene file. All numbers are
/// rational strings such as "-3/2".
struct Scene {
  std::vector<SceneSet> sets;
  std::vector<SceneFunction> functions;

  /// Throw Error for unknown names.
  const SceneSet& set(const std::string& name) const;
  const SceneFunction& function(const std::string& name) const;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Throws Error on malformed JSON, bad rationals, wrong arity or duplicate names.
Scene parse_scene(const std::string& text);
Scene load_scene(const std::filesystem::path& path);
nlohmann::json scene_to_json(const Scene& scene);

nlohmann::json to_json(const SceneSet& set);
nlohmann::json to_json(const SceneFunction& fn);
nlohmann::json to_json(const Point2& p);
nlohmann::json to_json(const Point3& p);

Cone2 to_cone2(const SceneSet& set);
Cone3 to_cone3(const SceneSet& set);
VPolygon to_polygon(const SceneSet& set);
VPolytope3 to_polytope(const SceneSet& set);
PLConvexFn to_function(const SceneFunction& fn);

/// Scene entries for computed objects; points are the canonical vertices.
SceneSet from_polygon(const std::string& name, const VPolygon& a);
SceneSet from_polytope(const std::string& name, const VPolytope3& p);
SceneFunction from_function(const std::string& name, const PLConvexFn& f);

}  // namespace minkpair
