#pragma once

#include <string>
#include <vector>

#include "rap/polytope.hpp"

namespace rap::catalog {

/** Names of the shipped models, sorted:
 *  ideal-24-cell, ideal-octahedron, right-angled-dodecahedron,
 *  triangular-bipyramid. */
std::vector<std::string> list();

/** Build a catalog entry.  Every entry validates, carries explicit cusp
 *  pairings at each ideal vertex, and passes every realizability screen.
 *  Throws domain_error on an unknown name. */
CombinatorialPolytope build(const std::string& name);

/** The 3-cube incidence model: 6 facets, 8 finite vertices.  Valid as a
 *  lattice but no finite-volume right-angled 3-polytope has so few 2-faces,
 *  so the twelve-face screen flags it.  Not listed; negative control for
 *  screen tests. */
CombinatorialPolytope build_cube_fixture();

} // namespace rap::catalog
