#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rap/bounds.hpp"
#include "rap/numeric.hpp"
#include "rap/polytope.hpp"

namespace rap {

/** A 3-face with at most one ideal vertex and fewer than twelve 2-faces.
 *  No right-angled polytope of finite volume contains one.  An empty
 *  face set stands for the polytope itself (the 3-dimensional case). */
struct NonakaFinding {
    FacetSet face;
    std::int64_t v_inf = 0;
    std::int64_t a2 = 0;
};

/** Apply the twelve-face floor to every 3-face (to the polytope itself when
 *  dim == 3).  Empty result: no 3-face is flagged.  Pre: p valid, dim >= 3. */
std::vector<NonakaFinding> nonaka_screen(const CombinatorialPolytope& p);

/** An incidence pair breaking the strict average bound. */
struct NkViolation {
    int k = 0;
    int l = 0;
    Rational average;
    Rational bound;
};

/** Check a_k^l < nk_bound(dim, k, l) for every pair 1 <= l < k <=
 *  ceil(dim/2); include_l0 widens to l = 0, where the (1, 0) pair is always
 *  tight and therefore reported for any input.  Pre: p valid. */
std::vector<NkViolation> nk_screen(const CombinatorialPolytope& p, bool include_l0 = false);

struct ScreenFinding {
    std::string rule;
    std::string detail;
};

/** Combined non-realizability report.  An empty report only means no rule
 *  fired; it is never a certificate that the lattice is realizable. */
struct ScreenReport {
    std::vector<ScreenFinding> findings;

    bool excluded() const { return !findings.empty(); }
    std::string summary() const;
};

/** Run every exclusion rule and report all that fire:
 *
 *    dimension-limit         dim >= 13
 *    compact-dimension-limit dim >= 5 with no ideal vertex
 *    ideal-dimension-limit   dim >= 7 with no finite vertex
 *    finite-vertex-parity    dim == 3 with odd v_fin
 *    nonaka                  some 3-face fails the twelve-face floor
 *    nikulin-khovanskii      some average incidence meets its bound
 *    facet-minimum           fewer facets than the cascade allows
 *    ideal-vertex-minimum    fewer ideal vertices than the cascade allows
 *    finite-vertex-minimum   fewer finite vertices than the cascade allows
 *
 *  The cascade rules read the supplied table (and its config seeds for
 *  dimensions below the first row).  Pre: p valid. */
ScreenReport realizability_screen(const CombinatorialPolytope& p,
                                  const bounds::CascadeTable& table);

} // namespace rap
