#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rap/polytope.hpp"

namespace rap {

// Orthogonal doubling: reflect the polytope through the hyperplane of one
// facet h and take the union.  Because all dihedral angles are right, the
// union is again a right-angled polytope and its combinatorics follow from
// the incidence data alone:
//
//   facet fates    h itself is removed; a facet adjacent to h fuses with its
//                  mirror image into one facet; every other facet, the
//                  tangent ones included, survives as an original/mirror pair.
//   vertex fates   a finite vertex on h lands in the interior of an edge and
//                  is dropped; an ideal vertex on h is identified with its
//                  mirror image and keeps its id; a vertex off h is
//                  duplicated.

enum class FacetFate { removed, merged, kept_pair };

struct FacetFateRecord {
    FacetFate fate = FacetFate::removed;
    int new_index = -1;    // merged image, or the original of a kept pair
    int mirror_index = -1; // mirror of a kept pair
};

enum class VertexFate { dropped, identified, duplicated };

struct VertexFateRecord {
    VertexFate fate = VertexFate::dropped;
    std::string id;        // the input vertex
    std::string mirror_id; // duplicated only
};

struct GluingMap {
    int glued_facet = -1;
    std::vector<FacetFateRecord> facet_fate;  // indexed by input facet
    std::vector<VertexFateRecord> vertex_fate; // parallel to input vertex list
};

struct DoubleResult {
    CombinatorialPolytope polytope;
    GluingMap map;
};

/** Double the polytope along facet h.  Pre: p valid, 0 <= h < facet_count.
 *  Post: the result passes validate and matches predict_counts(p, h).
 *  Throws gluing_error when two output vertices would share a facet set;
 *  no realizable input can reach that branch. */
DoubleResult double_along(const CombinatorialPolytope& p, int h);

struct PredictedCounts {
    std::int64_t facets = 0;
    std::int64_t v_fin = 0;
    std::int64_t v_inf = 0;
};

/** Count laws for doubling along h, straight from the fate table: with m
 *  facets adjacent to h, f_h finite and i_h ideal vertices on h,
 *
 *    facets' = 2(facets - 1) - m
 *    v_fin'  = 2(v_fin - f_h)
 *    v_inf'  = i_h + 2(v_inf - i_h)
 */
PredictedCounts predict_counts(const CombinatorialPolytope& p, int h);

struct ReductionStep {
    int facet = -1;        // facet glued at this step (index in that step's input)
    int common_before = 0; // |F(u) and F(v)| before the doubling
    int common_after = 0;  // always common_before - 1
    int dim_before = 0;    // dim of the minimal common face before
    int dim_after = 0;     // after; dim == dim(p) means no common facet is left
};

struct ReductionTrace {
    std::string u;
    std::string v;
    int target_dim = 4;
    std::vector<ReductionStep> steps;
    CombinatorialPolytope final;
};

/** Picks the facet to glue along at each reduction round from the current
 *  common facet set (nonempty, ascending, indices of that round's polytope).
 *  Must return a member of the set. */
using FacetChooser = std::function<int(const FacetSet& common)>;

/** Separate two ideal vertices by repeated doubling.  Each round glues along
 *  a facet common to u and v, by default the smallest-index one; both
 *  vertices sit on it, so both are identified, keep their ids, and lose
 *  exactly that one common facet.  Stops when the common set is empty or the
 *  minimal common face has dimension >= target_dim.  Pre: p valid, u != v,
 *  both ideal. */
ReductionTrace reduce_ideal_pair(const CombinatorialPolytope& p, const std::string& u,
                                 const std::string& v, int target_dim = 4,
                                 const FacetChooser& choose = {});

} // namespace rap
