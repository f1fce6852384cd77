#include "rap/gluing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "rap/errors.hpp"
#include "rap/face_lattice.hpp"

namespace rap {

namespace {

// Ascending vertex indices per facet.
std::vector<std::vector<int>> facet_members(const CombinatorialPolytope& p) {
    std::vector<std::vector<int>> m(p.facet_count);
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (int f : p.vertices[i].facets) m[f].push_back(static_cast<int>(i));
    return m;
}

int shared_count(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    int c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            ++c, ++i, ++j;
    }
    return c;
}

std::pair<int, int> norm_pair(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

int partner_of(const CuspPairing& pairs, int h) {
    for (const auto& [x, y] : pairs) {
        if (x == h) return y;
        if (y == h) return x;
    }
    return -1;
}

} // namespace

PredictedCounts predict_counts(const CombinatorialPolytope& p, int h) {
    if (h < 0 || h >= p.facet_count)
        throw domain_error("facet index " + std::to_string(h) + " out of range 0.." +
                           std::to_string(p.facet_count - 1));
    const auto members = facet_members(p);
    std::int64_t m = 0;
    for (int g = 0; g < p.facet_count; ++g)
        if (g != h && shared_count(members[g], members[h]) >= 2) ++m;
    std::int64_t f_h = 0, i_h = 0;
    for (int i : members[h])
        (p.vertices[i].type == VertexType::finite ? f_h : i_h) += 1;
    PredictedCounts c;
    c.facets = 2 * (static_cast<std::int64_t>(p.facet_count) - 1) - m;
    c.v_fin = 2 * (p.count(VertexType::finite) - f_h);
    c.v_inf = i_h + 2 * (p.count(VertexType::ideal) - i_h);
    return c;
}

DoubleResult double_along(const CombinatorialPolytope& p, int h) {
    if (h < 0 || h >= p.facet_count)
        throw domain_error("facet index " + std::to_string(h) + " out of range 0.." +
                           std::to_string(p.facet_count - 1));

    const auto members = facet_members(p);

    // Facet fates.  Adjacent means sharing at least two vertices with h;
    // sharing exactly one vertex is tangency at a cusp, which survives as a
    // pair, like the disjoint facets.
    GluingMap map;
    map.glued_facet = h;
    map.facet_fate.assign(p.facet_count, FacetFateRecord{});
    int next = 0;
    for (int g = 0; g < p.facet_count; ++g) {
        if (g == h) continue;
        auto& r = map.facet_fate[g];
        r.fate = shared_count(members[g], members[h]) >= 2 ? FacetFate::merged
                                                           : FacetFate::kept_pair;
        r.new_index = next++;
    }
    for (int g = 0; g < p.facet_count; ++g) {
        if (g == h || map.facet_fate[g].fate != FacetFate::kept_pair) continue;
        map.facet_fate[g].mirror_index = next++;
    }

    auto orig_image = [&](int g) { return map.facet_fate[g].new_index; };
    auto mirror_image = [&](int g) {
        const auto& r = map.facet_fate[g];
        return r.fate == FacetFate::merged ? r.new_index : r.mirror_index;
    };
    auto map_pairing = [&](const CuspPairing& pairs, auto&& image) {
        CuspPairing out;
        out.reserve(pairs.size());
        for (const auto& [x, y] : pairs) out.push_back(norm_pair(image(x), image(y)));
        std::sort(out.begin(), out.end());
        return out;
    };

    const auto pairings = effective_pairings(p);

    CombinatorialPolytope out;
    out.dim = p.dim;
    out.facet_count = next;
    map.vertex_fate.assign(p.vertices.size(), VertexFateRecord{});
    std::set<std::string> used;

    // Pass 1: vertices on h (dropped or identified) and the originals of the
    // off-h vertices, in input order.
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const auto& v = p.vertices[i];
        auto& fate = map.vertex_fate[i];
        fate.id = v.id;
        if (!facet_member(v.facets, h)) {
            fate.fate = VertexFate::duplicated;
            FacetSet nf;
            nf.reserve(v.facets.size());
            for (int g : v.facets) nf.push_back(orig_image(g));
            canonicalize(nf);
            out.vertices.push_back({v.id, v.type, std::move(nf)});
            if (v.type == VertexType::ideal)
                out.pairings[v.id] = map_pairing(pairings.at(v.id), orig_image);
            used.insert(v.id);
            continue;
        }
        if (v.type == VertexType::finite) {
            // Lands on an edge midpoint of the double: not a vertex there.
            fate.fate = VertexFate::dropped;
            continue;
        }
        // Ideal vertex on the glued facet: the two copies meet in one cusp.
        fate.fate = VertexFate::identified;
        const CuspPairing& pr = pairings.at(v.id);
        const int t = partner_of(pr, h);
        if (t < 0)
            throw structural_error("cusp pairing at \"" + v.id + "\" does not cover facet " +
                                   std::to_string(h));
        FacetSet nf;
        nf.reserve(v.facets.size());
        CuspPairing np;
        np.reserve(pr.size());
        for (int g : v.facets) {
            if (g == h) continue;
            nf.push_back(orig_image(g));
            if (g == t) nf.push_back(mirror_image(g));
        }
        canonicalize(nf);
        for (const auto& [x, y] : pr) {
            if (x == h || y == h)
                np.push_back(norm_pair(orig_image(t), mirror_image(t)));
            else
                np.push_back(norm_pair(orig_image(x), orig_image(y)));
        }
        std::sort(np.begin(), np.end());
        out.vertices.push_back({v.id, VertexType::ideal, std::move(nf)});
        out.pairings[v.id] = std::move(np);
        used.insert(v.id);
    }

    // Pass 2: mirrors of the off-h vertices, same order.  Mirror ids append
    // stars until free, so repeated doublings stay collision free.
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        auto& fate = map.vertex_fate[i];
        if (fate.fate != VertexFate::duplicated) continue;
        const auto& v = p.vertices[i];
        std::string mid = v.id + "*";
        while (used.count(mid)) mid += "*";
        used.insert(mid);
        fate.mirror_id = mid;
        FacetSet nf;
        nf.reserve(v.facets.size());
        for (int g : v.facets) nf.push_back(mirror_image(g));
        canonicalize(nf);
        if (v.type == VertexType::ideal)
            out.pairings[mid] = map_pairing(pairings.at(v.id), mirror_image);
        out.vertices.push_back({std::move(mid), v.type, std::move(nf)});
    }

    // Two output vertices with one facet set make the double combinatorially
    // impossible, which certifies the input bounds no finite-volume polytope.
    std::map<FacetSet, const std::string*> seen;
    for (const auto& w : out.vertices) {
        auto [it, fresh] = seen.emplace(w.facets, &w.id);
        if (!fresh)
            throw gluing_error("doubling along facet " + std::to_string(h) +
                               " degenerates: vertices \"" + *it->second + "\" and \"" + w.id +
                               "\" would share one facet set, so the input is not realizable");
    }

    check_structure(out);
    return {std::move(out), std::move(map)};
}

ReductionTrace reduce_ideal_pair(const CombinatorialPolytope& p, const std::string& u,
                                 const std::string& v, int target_dim,
                                 const FacetChooser& choose) {
    if (u == v) throw domain_error("need two distinct ideal vertices, got \"" + u + "\" twice");
    for (const auto* id : {&u, &v}) {
        int i = p.vertex_index(*id);
        if (i < 0) throw domain_error("no vertex \"" + *id + "\"");
        if (p.vertices[i].type != VertexType::ideal)
            throw domain_error("vertex \"" + *id + "\" is finite, not ideal");
    }
    if (target_dim < 1)
        throw domain_error("target dimension must be positive, got " + std::to_string(target_dim));

    ReductionTrace trace;
    trace.u = u;
    trace.v = v;
    trace.target_dim = target_dim;
    trace.final = p;

    for (;;) {
        const auto& cur = trace.final;
        FacetSet common = facet_intersection(cur.vertices[cur.vertex_index(u)].facets,
                                             cur.vertices[cur.vertex_index(v)].facets);
        if (common.empty() || cur.dim - static_cast<int>(common.size()) >= target_dim) break;

        ReductionStep step;
        step.facet = choose ? choose(common) : common.front();
        if (!facet_member(common, step.facet))
            throw domain_error("facet chooser returned " + std::to_string(step.facet) +
                               ", which is not common to \"" + u + "\" and \"" + v + "\"");
        step.common_before = static_cast<int>(common.size());
        step.dim_before = cur.dim - step.common_before;

        // Both cusps sit on the glued facet, so both are identified and keep
        // their ids; the common set loses exactly the glued facet.
        CombinatorialPolytope next = double_along(cur, step.facet).polytope;
        FacetSet after = facet_intersection(next.vertices[next.vertex_index(u)].facets,
                                            next.vertices[next.vertex_index(v)].facets);
        step.common_after = static_cast<int>(after.size());
        step.dim_after = next.dim - step.common_after;
        if (step.common_after >= step.common_before)
            throw gluing_error("reduction stalled: gluing along facet " +
                               std::to_string(step.facet) + " left " +
                               std::to_string(step.common_after) +
                               " common facets, so the input is not realizable");
        trace.steps.push_back(step);
        trace.final = std::move(next);
    }
    return trace;
}

} // namespace rap
