#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rap/numeric.hpp"
#include "rap/polytope.hpp"

namespace rap {

struct Violation {
    std::string rule;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

/** Total validation outcome.  Every rule is evaluated and every breach is
 *  collected; nothing stops at the first failure. */
struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    /// Rule names in evaluation order, for per-rule reporting.
    static const std::vector<std::string>& rule_names();
    /// Human summary, one line per rule plus one per violation.
    std::string summary() const;
};

/** Check the combinatorial rules a vertex-facet incidence lattice must obey
 *  to model a finite-volume right-angled polytope:
 *
 *    vertex-degree        finite vertices on dim facets, ideal on 2(dim-1)
 *    distinct-facet-sets  no two vertices share a facet set
 *    cusp-pairing         each ideal vertex carries a perfect matching of
 *                         its facets; paired facets meet only at the cusp,
 *                         unpaired ones share at least two vertices
 *    facet-adjacency      no two facets share exactly one finite vertex
 *    facet-coverage       every facet index carries at least one vertex
 *    edge                 every derived 1-face has two endpoints and lies
 *                         in exactly dim-1 facets
 *    face-connectivity    each derived face of dimension >= 2 is connected
 *                         in its vertex-edge graph
 *    degree-sum           in dimension 3, 2 a_1 = 3 v_fin + 4 v_inf
 *
 *  Pre: check_structure passes (throws structural_error otherwise). */
ValidationReport validate(const CombinatorialPolytope& p);

/** Recover the cusp pairings from incidence alone: at an ideal vertex v the
 *  partner of a facet H is the unique other facet through v sharing no
 *  second vertex with H.  Returns one pairing per ideal vertex.  Throws
 *  when some facet has no partner or several, i.e. when the cusp link is
 *  not a parallelepiped. */
std::map<std::string, CuspPairing> derive_cusp_pairing(const CombinatorialPolytope& p);

/** Supplied pairings where present, derived where absent. */
std::map<std::string, CuspPairing> effective_pairings(const CombinatorialPolytope& p);

/** All k-faces, 1 <= k <= dim-1, as admissible facet subsets: a k-face
 *  through a vertex v is a choice of dim-k facets through v, with at most
 *  one facet from each cusp pair when v is ideal.  Subsets are deduplicated
 *  across vertices and returned in lexicographic facet-set order, each with
 *  all of its generating vertices.  Pre: p valid. */
std::vector<Face> enumerate_faces(const CombinatorialPolytope& p, int k);

/** Exact face counts a_0..a_{dim-1} plus the vertex type split. */
FaceVector face_vector(const CombinatorialPolytope& p);

/** Average number of l-faces per k-face, exact.  Pre: 0 <= l < k <= dim-1
 *  and at least one k-face exists. */
Rational avg_incidence(const CombinatorialPolytope& p, int k, int l);

/** Smallest face containing both vertices: the face cut out by the facets
 *  common to u and v.  Empty optional when they share no facet, i.e. the
 *  whole polytope is the only face containing both.  The result never
 *  contains a cusp pair of either endpoint.  Pre: p valid, u != v. */
std::optional<Face> minimal_common_face(const CombinatorialPolytope& p, const std::string& u,
                                        const std::string& v);

/** The face f as a polytope in its own dimension m = f.dim >= 2.  Its
 *  facets are the (m-1)-faces of p containing f, indexed in lexicographic
 *  facet-set order; vertex ids and types carry over, and cusp pairings
 *  restrict to the pairs not consumed by f.  Pre: p valid, f a face of p
 *  with dim >= 2.  Post: the result passes validate. */
CombinatorialPolytope induced_polytope(const CombinatorialPolytope& p, const Face& f);

} // namespace rap
