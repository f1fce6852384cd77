#include "rap/screens.hpp"

#include <sstream>

#include "rap/errors.hpp"
#include "rap/face_lattice.hpp"

namespace rap {

namespace {

std::string facet_set_str(const FacetSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ", ";
        os << s[i];
    }
    os << '}';
    return os.str();
}

} // namespace

std::vector<NonakaFinding> nonaka_screen(const CombinatorialPolytope& p) {
    if (p.dim < 3)
        throw domain_error("nonaka screen needs dimension >= 3, got " + std::to_string(p.dim));

    std::vector<NonakaFinding> out;
    if (p.dim == 3) {
        // The polytope is its own 3-face.
        std::int64_t vi = p.count(VertexType::ideal);
        if (vi <= 1 && p.facet_count < 12)
            out.push_back({{}, vi, p.facet_count});
        return out;
    }

    auto threes = enumerate_faces(p, 3);
    auto twos = enumerate_faces(p, 2);
    for (const auto& f : threes) {
        std::int64_t vi = 0;
        for (int v : f.vertices)
            if (p.vertices[v].type == VertexType::ideal) ++vi;
        if (vi > 1) continue;
        // 2-faces of f are exactly the 2-faces of p lying inside it.
        std::int64_t a2 = 0;
        for (const auto& g : twos)
            if (facet_subset(f.facets, g.facets)) ++a2;
        if (a2 < 12) out.push_back({f.facets, vi, a2});
    }
    return out;
}

std::vector<NkViolation> nk_screen(const CombinatorialPolytope& p, bool include_l0) {
    const int n = p.dim;
    const int kmax = (n + 1) / 2; // ceil(n/2)
    const int lmin = include_l0 ? 0 : 1;
    std::vector<NkViolation> out;
    for (int k = lmin + 1; k <= kmax; ++k) {
        if (k < 1 || k > n - 1) continue;
        for (int l = lmin; l < k; ++l) {
            Rational avg = avg_incidence(p, k, l);
            Rational bound = bounds::nk_bound(n, k, l);
            if (avg >= bound) out.push_back({k, l, avg, bound});
        }
    }
    return out;
}

std::string ScreenReport::summary() const {
    if (findings.empty()) return "no exclusion rule fired";
    std::ostringstream os;
    for (std::size_t i = 0; i < findings.size(); ++i) {
        if (i) os << '\n';
        os << findings[i].rule << ": " << findings[i].detail;
    }
    return os.str();
}

ScreenReport realizability_screen(const CombinatorialPolytope& p,
                                  const bounds::CascadeTable& table) {
    ScreenReport rep;
    auto add = [&](const char* rule, std::string detail) {
        rep.findings.push_back({rule, std::move(detail)});
    };

    const int n = p.dim;
    const std::int64_t v_fin = p.count(VertexType::finite);
    const std::int64_t v_inf = p.count(VertexType::ideal);

    if (n >= 13)
        add("dimension-limit",
            "dimension " + std::to_string(n) + " exceeds the finite-volume maximum 12");
    if (n >= 5 && v_inf == 0)
        add("compact-dimension-limit",
            "no ideal vertices in dimension " + std::to_string(n) +
                " (compact polytopes stop at dimension 4)");
    if (n >= 7 && v_fin == 0)
        add("ideal-dimension-limit",
            "no finite vertices in dimension " + std::to_string(n) +
                " (all-ideal polytopes stop at dimension 6)");
    if (n == 3 && v_fin % 2 != 0)
        add("finite-vertex-parity",
            std::to_string(v_fin) + " finite vertices in dimension 3; the count must be even");

    if (n >= 3) {
        auto hits = nonaka_screen(p);
        if (!hits.empty()) {
            const auto& h = hits.front();
            std::ostringstream os;
            if (h.face.empty()) {
                os << "only " << h.a2 << " 2-faces with " << h.v_inf
                   << " ideal vertices; a 3-polytope with at most one cusp needs twelve";
            } else {
                os << hits.size() << " 3-face" << (hits.size() == 1 ? "" : "s")
                   << " below the twelve-face floor; first: facets " << facet_set_str(h.face)
                   << " with a_2 = " << h.a2 << ", v_inf = " << h.v_inf;
            }
            add("nonaka", os.str());
        }
    }

    {
        auto hits = nk_screen(p);
        if (!hits.empty()) {
            const auto& h = hits.front();
            std::ostringstream os;
            if (hits.size() > 1) os << hits.size() << " incidence pairs at or above bound; first: ";
            os << "a_" << h.k << "^" << h.l << " = " << h.average.str()
               << " >= " << h.bound.str();
            add("nikulin-khovanskii", os.str());
        }
    }

    // Cascade floors.  Dimension 4 has no table row; its facet floor comes
    // from the configured nu seed for dimension 3.
    const bounds::DimensionRow* row = table.find(n);
    std::optional<BigInt> a_floor;
    if (row) {
        a_floor = row->a_min;
    } else if (n == 4) {
        auto it = table.config.nu_bases.find(3);
        if (it != table.config.nu_bases.end()) a_floor = it->second + 1;
    }
    if (a_floor && BigInt(p.facet_count) < *a_floor)
        add("facet-minimum", "facet count " + std::to_string(p.facet_count) +
                                 " below the dimension-" + std::to_string(n) + " minimum " +
                                 a_floor->str());
    if (row && BigInt(v_inf) < row->v_inf_min)
        add("ideal-vertex-minimum", std::to_string(v_inf) + " ideal vertices, below the dimension-" +
                                        std::to_string(n) + " minimum " + row->v_inf_min.str());
    if (row && row->v_fin_min && BigInt(v_fin) < *row->v_fin_min)
        add("finite-vertex-minimum",
            std::to_string(v_fin) + " finite vertices, below the dimension-" + std::to_string(n) +
                " minimum " + row->v_fin_min->str());

    return rep;
}

} // namespace rap
