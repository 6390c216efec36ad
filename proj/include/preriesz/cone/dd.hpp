#pragma once

#include <vector>

#include "preriesz/exact/subspace.hpp"

namespace preriesz {

// V-description of {x : a.x >= 0 for all rows a}: the cone equals
// lineality + pos(rays). Rays are extremal modulo the lineality space,
// projected onto its orthogonal complement, primitive and lex-sorted.
struct DDResult {
  std::vector<QVector> rays;
  Subspace lineality{0};
};

DDResult dd_from_inequalities(int dim, const std::vector<QVector>& normals);

}  // namespace preriesz
