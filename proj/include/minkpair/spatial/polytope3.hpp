#pragma once

#include <span>
#include <utility>
#include <vector>

#include "minkpair/feasibility.hpp"
#include "minkpair/vec.hpp"

namespace minkpair {

struct Facet3 {
  /// Primitive outward normal.
  Direction3 normal;
  /// Vertex indices counterclockwise seen from outside.
  std::vector<std::size_t> cycle;
};

/// A face of the hull given by its vertex indices (sorted).
struct Face3 {
  std::vector<std::size_t> vertices;
};

/// Exact convex hull of finitely many points in space. Lower-dimensional
/// hulls (point, segment, flat polygon) are represented with dimension()
/// below 3; they have no facets, and a flat polygon stores its boundary cycle.
class Polytope3 {
 public:
  /// Vertices sorted lexicographically; exactly the extreme points.
  const std::vector<Point3>& vertices() const { return vertices_; }
  int dimension() const { return dimension_; }
  /// Facets of a full-dimensional hull.
  const std::vector<Facet3>& facets() const { return facets_; }
  /// Edges as index pairs (i < j), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// Boundary cycle of a flat polygon (dimension 2), empty otherwise.
  const std::vector<std::size_t>& flat_cycle() const { return flat_cycle_; }
  const std::vector<std::vector<std::size_t>>& neighbors() const { return neighbors_; }

  /// Every nonempty face: vertices, edges, then facets (or the whole
  /// polytope when it is not full-dimensional).
  std::vector<Face3> faces() const;

  /// Constraints on u describing the relative interior of the normal cone
  /// of `face`: u is orthogonal to the face and strictly prefers each face
  /// vertex over every adjacent vertex outside the face.
  std::vector<HomogeneousConstraint> normal_cone_relint(const Face3& face) const;

  friend Polytope3 hull3(std::span<const Point3> points);

 private:
  void finish_edges();

  int dimension_ = 0;
  std::vector<Point3> vertices_;
  std::vector<Facet3> facets_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::size_t> flat_cycle_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

/// Throws Error on empty input.
Polytope3 hull3(std::span<const Point3> points);

}  // namespace minkpair
