#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rap/errors.hpp"

namespace rap {

/** A vertex of a finite-volume right-angled polytope is either an ordinary
 *  (finite) vertex or an ideal one on the sphere at infinity.  In dimension
 *  n a finite vertex lies on exactly n facets and its link is a simplex; an
 *  ideal vertex lies on exactly 2(n-1) facets and its link is a
 *  parallelepiped. */
enum class VertexType { finite, ideal };

/** Facet subset, kept sorted and duplicate-free.  Facets are identified by
 *  index 0..facet_count-1. */
using FacetSet = std::vector<int>;

/** Perfect matching on the facets through one ideal vertex.  Opposite sides
 *  of the cusp link pair up; paired facets are tangent, meeting only at the
 *  cusp itself.  Pairs are stored (lo, hi) and sorted. */
using CuspPairing = std::vector<std::pair<int, int>>;

struct VertexRecord {
    std::string id;
    VertexType type = VertexType::finite;
    FacetSet facets;

    bool operator==(const VertexRecord&) const = default;
};

/** Vertex-facet incidence model of a polytope.  Faces are not stored; they
 *  are derived on demand from the incidence data (see face_lattice.hpp).
 *
 *  Invariants for a well-formed value: dim >= 2, facet_count >= dim + 1,
 *  vertex ids nonempty and distinct, facet entries in range and canonical.
 *  check_structure enforces these; the combinatorial rules on top of them
 *  are the business of validate(). */
struct CombinatorialPolytope {
    int dim = 0;
    int facet_count = 0;
    std::vector<VertexRecord> vertices;
    /// Cusp pairings keyed by vertex id.  Optional: derived when absent.
    std::map<std::string, CuspPairing> pairings;

    bool operator==(const CombinatorialPolytope&) const = default;

    /// Index of the vertex with the given id, or -1.
    int vertex_index(const std::string& id) const;

    /// Ascending indices of the vertices incident to facet f.
    std::vector<int> vertices_on_facet(int f) const;

    std::int64_t count(VertexType t) const;
};

/** A derived k-face, 1 <= k <= dim-1: the set of dim-k facets it lies in,
 *  plus the indices (into the vertex list) of the vertices generating it. */
struct Face {
    FacetSet facets;
    int dim = 0;
    std::vector<int> vertices;

    bool operator==(const Face&) const = default;
};

/** Face counts a_0..a_{dim-1} plus the finite/ideal vertex split. */
struct FaceVector {
    std::vector<std::int64_t> a;
    std::int64_t v_fin = 0;
    std::int64_t v_inf = 0;

    bool operator==(const FaceVector&) const = default;
};

// ---- facet set helpers ------------------------------------------------

/// Sort and deduplicate in place.
void canonicalize(FacetSet& s);

bool facet_member(const FacetSet& s, int f);

FacetSet facet_intersection(const FacetSet& a, const FacetSet& b);

/// True when sub is contained in sup (both canonical).
bool facet_subset(const FacetSet& sub, const FacetSet& sup);

/** Throw structural_error unless the value satisfies the well-formedness
 *  invariants listed on CombinatorialPolytope. */
void check_structure(const CombinatorialPolytope& p);

} // namespace rap
