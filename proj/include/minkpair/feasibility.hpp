#pragma once

#include <span>
#include <vector>

#include "minkpair/rational.hpp"
#include "minkpair/vec.hpp"

namespace minkpair {

enum class Relation { Less, LessEqual, Equal };

/// Homogeneous linear constraint  <coefficients, x>  (<, <=, =)  0.
struct HomogeneousConstraint {
  std::vector<Integer> coefficients;
  Relation relation = Relation::Less;
};

HomogeneousConstraint constraint(const Direction3& a, Relation r);
HomogeneousConstraint constraint(const Point3& a, Relation r);
HomogeneousConstraint constraint(const Direction2& a, Relation r);
HomogeneousConstraint constraint(const Point2& a, Relation r);

/// True iff some nonzero x in R^dimension satisfies every constraint.
///
/// Decided exactly: equalities are substituted away, then the remaining
/// inequalities are eliminated variable by variable (Fourier-Motzkin with
/// strictness tracking). Intended for dimension <= 3.
bool cone_strictly_feasible(std::span<const HomogeneousConstraint> constraints,
                            std::size_t dimension);

}  // namespace minkpair
