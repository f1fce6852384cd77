#include "rap/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rap/errors.hpp"

namespace rap {

int CombinatorialPolytope::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<int> CombinatorialPolytope::vertices_on_facet(int f) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (facet_member(vertices[i].facets, f)) out.push_back(static_cast<int>(i));
    return out;
}

std::int64_t CombinatorialPolytope::count(VertexType t) const {
    std::int64_t n = 0;
    for (const auto& v : vertices)
        if (v.type == t) ++n;
    return n;
}

void canonicalize(FacetSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool facet_member(const FacetSet& s, int f) {
    return std::binary_search(s.begin(), s.end(), f);
}

FacetSet facet_intersection(const FacetSet& a, const FacetSet& b) {
    FacetSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool facet_subset(const FacetSet& sub, const FacetSet& sup) {
    return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

void check_structure(const CombinatorialPolytope& p) {
    std::ostringstream err;
    if (p.dim < 2) {
        err << "dim " << p.dim << " is below 2";
        throw structural_error(err.str());
    }
    if (p.facet_count < p.dim + 1) {
        err << "facet_count " << p.facet_count << " is below dim + 1 = " << (p.dim + 1);
        throw structural_error(err.str());
    }
    std::set<std::string> seen;
    for (const auto& v : p.vertices) {
        if (v.id.empty()) throw structural_error("empty vertex id");
        if (!seen.insert(v.id).second) {
            err << "duplicate vertex id \"" << v.id << "\"";
            throw structural_error(err.str());
        }
        if (!std::is_sorted(v.facets.begin(), v.facets.end()) ||
            std::adjacent_find(v.facets.begin(), v.facets.end()) != v.facets.end()) {
            err << "vertex \"" << v.id << "\": facet list not sorted and duplicate-free";
            throw structural_error(err.str());
        }
        for (int f : v.facets) {
            if (f < 0 || f >= p.facet_count) {
                err << "vertex \"" << v.id << "\": facet index " << f << " out of range 0.."
                    << (p.facet_count - 1);
                throw structural_error(err.str());
            }
        }
    }
    for (const auto& [id, pairing] : p.pairings) {
        int vi = p.vertex_index(id);
        if (vi < 0) {
            err << "pairing keyed by unknown vertex \"" << id << "\"";
            throw structural_error(err.str());
        }
        for (const auto& [a, b] : pairing) {
            if (a < 0 || a >= p.facet_count || b < 0 || b >= p.facet_count || a == b) {
                err << "pairing at vertex \"" << id << "\": bad facet pair (" << a << ", " << b
                    << ")";
                throw structural_error(err.str());
            }
        }
    }
}

} // namespace rap
