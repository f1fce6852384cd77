#pragma once

#include <string>

#include "rap/polytope.hpp"

namespace rap {

struct GluingMap; // gluing.hpp

/** Parse the JSON polytope format:
 *
 *    {
 *      "dim": 3,
 *      "facet_count": 8,
 *      "vertices": [ {"id": "x+", "type": "ideal", "facets": [0,1,2,3]}, ... ],
 *      "pairings": { "x+": [[0,3],[1,2]], ... }          (optional)
 *    }
 *
 *  Unknown keys are rejected at every level; so are wrong types, duplicate
 *  ids, out-of-range facet indices and malformed pairs.  Throws io_error or
 *  structural_error. */
CombinatorialPolytope parse_polytope(const std::string& text);

/** Serialize in the same format, byte-stable: fixed key order, facet sets
 *  ascending, pairing keys in vertex order, two-space indent, trailing
 *  newline.  parse_polytope(serialize_polytope(p)) == p. */
std::string serialize_polytope(const CombinatorialPolytope& p);

/** Sidecar record of what doubling did to each facet and vertex, in the
 *  same JSON dialect as the polytope format. */
std::string serialize_gluing_map(const GluingMap& m);

} // namespace rap
