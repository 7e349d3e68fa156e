#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minkpair/cli/scene.hpp"

namespace minkpair {

struct Viewport {
  double xmin = -5, ymin = -5, xmax = 5, ymax = 5;
};

struct RenderOptions {
  /// Computed from the sets when absent.
  std::optional<Viewport> viewport;
  /// Viewing direction for spatial sets; required when any set is 3D.
  std::optional<Point3> projection;
};

/// SVG 1.1 drawing of the given sets. Coordinates are decimal
/// approximations; output bytes depend only on the inputs.
/// Throws Error on an empty selection or a 3D set without projection.
std::string render_svg(const std::vector<SceneSet>& sets, const RenderOptions& options);

}  // namespace minkpair
