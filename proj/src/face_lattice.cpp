#include "rap/face_lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "rap/errors.hpp"

namespace rap {

namespace {

//======================================================================
// shared machinery
//======================================================================

std::vector<std::vector<int>> facet_vertex_lists(const CombinatorialPolytope& p) {
    std::vector<std::vector<int>> out(p.facet_count);
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi)
        for (int f : p.vertices[vi].facets) out[f].push_back(static_cast<int>(vi));
    return out;
}

// vertices incident to both facets, ascending
std::vector<int> shared_vertices(const std::vector<std::vector<int>>& fv, int a, int b) {
    std::vector<int> out;
    std::set_intersection(fv[a].begin(), fv[a].end(), fv[b].begin(), fv[b].end(),
                          std::back_inserter(out));
    return out;
}

struct PairingProblem {
    std::string vertex;
    std::string detail;
};

// Partner search at one ideal vertex: H pairs with the unique other incident
// facet sharing no vertex but the cusp itself.
CuspPairing derive_at_vertex(const CombinatorialPolytope& p,
                             const std::vector<std::vector<int>>& fv, int vi,
                             std::vector<PairingProblem>* problems) {
    const auto& v = p.vertices[vi];
    CuspPairing pairing;
    std::map<int, int> partner;
    bool ok = true;
    for (int h : v.facets) {
        std::vector<int> candidates;
        for (int g : v.facets) {
            if (g == h) continue;
            auto w = shared_vertices(fv, h, g);
            if (w.size() == 1 && w[0] == vi) candidates.push_back(g);
        }
        if (candidates.size() != 1) {
            ok = false;
            if (problems) {
                std::ostringstream os;
                os << "cusp link is not a parallelepiped at vertex \"" << v.id << "\": facet " << h
                   << " has " << candidates.size() << " tangent partners, expected 1";
                problems->push_back({v.id, os.str()});
            }
            continue;
        }
        partner[h] = candidates[0];
    }
    if (ok) {
        for (auto [h, g] : partner) {
            if (partner.count(g) == 0 || partner[g] != h) {
                ok = false;
                if (problems) {
                    std::ostringstream os;
                    os << "tangency at vertex \"" << v.id << "\" is not symmetric between facets "
                       << h << " and " << g;
                    problems->push_back({v.id, os.str()});
                }
                break;
            }
            if (h < g) pairing.emplace_back(h, g);
        }
    }
    if (!ok) return {};
    std::sort(pairing.begin(), pairing.end());
    return pairing;
}

std::map<std::string, CuspPairing> derive_all(const CombinatorialPolytope& p,
                                              std::vector<PairingProblem>* problems) {
    auto fv = facet_vertex_lists(p);
    std::map<std::string, CuspPairing> out;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        if (p.vertices[vi].type != VertexType::ideal) continue;
        auto pairing = derive_at_vertex(p, fv, static_cast<int>(vi), problems);
        if (!pairing.empty() || p.vertices[vi].facets.empty())
            out[p.vertices[vi].id] = std::move(pairing);
    }
    return out;
}

// partner facet lookup per vertex index; vertices without a pairing have no
// exclusions (used by validate to keep going on broken cusps)
using PartnerLookup = std::vector<std::map<int, int>>;

PartnerLookup partner_lookup(const CombinatorialPolytope& p,
                             const std::map<std::string, CuspPairing>& pairings) {
    PartnerLookup out(p.vertices.size());
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        auto it = pairings.find(p.vertices[vi].id);
        if (it == pairings.end()) continue;
        for (auto [a, b] : it->second) {
            out[vi][a] = b;
            out[vi][b] = a;
        }
    }
    return out;
}

bool contains_pair(const FacetSet& s, const std::map<int, int>& partner) {
    for (int f : s) {
        auto it = partner.find(f);
        if (it != partner.end() && it->second > f && facet_member(s, it->second)) return true;
    }
    return false;
}

// admissible subsets of one vertex's facet list: at most one facet per pair
void combinations(const FacetSet& fs, std::size_t need, const std::map<int, int>& partner,
                  std::size_t start, FacetSet& cur, const std::function<void(const FacetSet&)>& sink) {
    if (cur.size() == need) {
        sink(cur);
        return;
    }
    for (std::size_t i = start; i + (need - cur.size()) <= fs.size(); ++i) {
        int f = fs[i];
        auto it = partner.find(f);
        if (it != partner.end() &&
            std::find(cur.begin(), cur.end(), it->second) != cur.end())
            continue; // would close a cusp pair
        cur.push_back(f);
        combinations(fs, need, partner, i + 1, cur, sink);
        cur.pop_back();
    }
}

std::vector<Face> enumerate_impl(const CombinatorialPolytope& p, int k,
                                 const PartnerLookup& partners) {
    const std::size_t need = static_cast<std::size_t>(p.dim - k);
    std::map<FacetSet, std::vector<int>> acc;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        const auto& fs = p.vertices[vi].facets;
        if (fs.size() < need) continue;
        FacetSet cur;
        combinations(fs, need, partners[vi], 0, cur,
                     [&](const FacetSet& s) { acc[s].push_back(static_cast<int>(vi)); });
    }
    std::vector<Face> out;
    out.reserve(acc.size());
    for (auto& [s, verts] : acc) out.push_back(Face{s, k, std::move(verts)});
    return out;
}

bool admissible_at(const FacetSet& s, const FacetSet& vertex_facets,
                   const std::map<int, int>& partner) {
    return facet_subset(s, vertex_facets) && !contains_pair(s, partner);
}

} // namespace

//======================================================================
// pairings
//======================================================================

std::map<std::string, CuspPairing> derive_cusp_pairing(const CombinatorialPolytope& p) {
    std::vector<PairingProblem> problems;
    auto out = derive_all(p, &problems);
    if (!problems.empty()) throw error(problems.front().detail);
    return out;
}

std::map<std::string, CuspPairing> effective_pairings(const CombinatorialPolytope& p) {
    bool all_supplied = true;
    for (const auto& v : p.vertices)
        if (v.type == VertexType::ideal && !p.pairings.count(v.id)) all_supplied = false;
    if (all_supplied) return p.pairings;
    auto derived = derive_cusp_pairing(p);
    for (const auto& [id, pairing] : p.pairings) derived[id] = pairing; // supplied wins
    return derived;
}

//======================================================================
// face enumeration and statistics
//======================================================================

std::vector<Face> enumerate_faces(const CombinatorialPolytope& p, int k) {
    if (k < 1 || k > p.dim - 1) {
        std::ostringstream os;
        os << "face dimension " << k << " outside 1.." << (p.dim - 1);
        throw domain_error(os.str());
    }
    return enumerate_impl(p, k, partner_lookup(p, effective_pairings(p)));
}

FaceVector face_vector(const CombinatorialPolytope& p) {
    FaceVector fv;
    fv.a.resize(p.dim);
    fv.a[0] = static_cast<std::int64_t>(p.vertices.size());
    auto partners = partner_lookup(p, effective_pairings(p));
    for (int k = 1; k < p.dim; ++k)
        fv.a[k] = static_cast<std::int64_t>(enumerate_impl(p, k, partners).size());
    fv.v_fin = p.count(VertexType::finite);
    fv.v_inf = p.count(VertexType::ideal);
    return fv;
}

Rational avg_incidence(const CombinatorialPolytope& p, int k, int l) {
    if (!(0 <= l && l < k && k <= p.dim - 1)) {
        std::ostringstream os;
        os << "incidence pair (" << k << ", " << l << ") outside 0 <= l < k <= " << (p.dim - 1);
        throw domain_error(os.str());
    }
    auto partners = partner_lookup(p, effective_pairings(p));
    auto faces_k = enumerate_impl(p, k, partners);
    if (faces_k.empty()) {
        std::ostringstream os;
        os << "average undefined: no " << k << "-faces";
        throw domain_error(os.str());
    }
    BigInt total = 0;
    if (l == 0) {
        for (const auto& f : faces_k) total += static_cast<std::int64_t>(f.vertices.size());
    } else {
        auto faces_l = enumerate_impl(p, l, partners);
        for (const auto& f : faces_k)
            for (const auto& g : faces_l)
                if (facet_subset(f.facets, g.facets)) ++total;
    }
    return Rational(total, BigInt(faces_k.size()));
}

std::optional<Face> minimal_common_face(const CombinatorialPolytope& p, const std::string& u,
                                        const std::string& v) {
    int ui = p.vertex_index(u), vi = p.vertex_index(v);
    if (ui < 0) throw domain_error("unknown vertex \"" + u + "\"");
    if (vi < 0) throw domain_error("unknown vertex \"" + v + "\"");
    if (ui == vi) throw domain_error("vertices must be distinct");
    FacetSet s = facet_intersection(p.vertices[ui].facets, p.vertices[vi].facets);
    if (s.empty()) return std::nullopt; // only the whole polytope contains both
    auto partners = partner_lookup(p, effective_pairings(p));
    Face f;
    f.facets = s;
    f.dim = p.dim - static_cast<int>(s.size());
    for (std::size_t wi = 0; wi < p.vertices.size(); ++wi)
        if (admissible_at(s, p.vertices[wi].facets, partners[wi]))
            f.vertices.push_back(static_cast<int>(wi));
    return f;
}

//======================================================================
// induced polytope on a face
//======================================================================

CombinatorialPolytope induced_polytope(const CombinatorialPolytope& p, const Face& f) {
    if (f.dim < 2) {
        std::ostringstream os;
        os << "induced polytope needs a face of dimension >= 2, got " << f.dim;
        throw domain_error(os.str());
    }
    auto pairings = effective_pairings(p);
    auto partners = partner_lookup(p, pairings);
    auto faces_sub = enumerate_impl(p, f.dim - 1, partners);

    // facets of the induced polytope: the (m-1)-faces containing f, indexed
    // in lexicographic facet-set order
    std::map<FacetSet, int> new_idx;
    std::vector<const Face*> sub;
    for (const auto& g : faces_sub) {
        if (!facet_subset(f.facets, g.facets)) continue;
        new_idx[g.facets] = static_cast<int>(sub.size());
        sub.push_back(&g);
    }

    CombinatorialPolytope out;
    out.dim = f.dim;
    out.facet_count = static_cast<int>(sub.size());
    for (int vi : f.vertices) {
        const auto& v = p.vertices[vi];
        VertexRecord nv;
        nv.id = v.id;
        nv.type = v.type;
        for (std::size_t gi = 0; gi < sub.size(); ++gi)
            if (std::binary_search(sub[gi]->vertices.begin(), sub[gi]->vertices.end(), vi))
                nv.facets.push_back(static_cast<int>(gi));
        out.vertices.push_back(std::move(nv));

        if (v.type != VertexType::ideal) continue;
        // pairs untouched by f survive; each maps through S -> S + {facet}
        CuspPairing np;
        auto it = pairings.find(v.id);
        if (it == pairings.end()) continue;
        for (auto [a, b] : it->second) {
            if (facet_member(f.facets, a) || facet_member(f.facets, b)) continue;
            FacetSet sa = f.facets, sb = f.facets;
            sa.push_back(a);
            sb.push_back(b);
            canonicalize(sa);
            canonicalize(sb);
            auto ia = new_idx.find(sa), ib = new_idx.find(sb);
            if (ia == new_idx.end() || ib == new_idx.end())
                throw error("induced polytope: face data inconsistent at vertex \"" + v.id + "\"");
            np.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
        }
        std::sort(np.begin(), np.end());
        out.pairings[v.id] = std::move(np);
    }
    return out;
}

//======================================================================
// validation
//======================================================================

const std::vector<std::string>& ValidationReport::rule_names() {
    static const std::vector<std::string> names = {
        "vertex-degree",  "distinct-facet-sets", "cusp-pairing", "facet-adjacency",
        "facet-coverage", "edge",                "face-connectivity", "degree-sum"};
    return names;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& rule : rule_names()) {
        std::size_t hits = 0;
        for (const auto& v : violations)
            if (v.rule == rule) ++hits;
        os << rule << ": " << (hits == 0 ? "pass" : "FAIL") << "\n";
        for (const auto& v : violations)
            if (v.rule == rule) os << "  " << v.detail << "\n";
    }
    return os.str();
}

ValidationReport validate(const CombinatorialPolytope& p) {
    check_structure(p);
    ValidationReport report;
    auto& out = report.violations;
    const int n = p.dim;
    auto fv = facet_vertex_lists(p);

    // vertex-degree
    for (const auto& v : p.vertices) {
        const std::size_t expected =
            v.type == VertexType::finite ? static_cast<std::size_t>(n)
                                         : static_cast<std::size_t>(2 * (n - 1));
        if (v.facets.size() != expected) {
            std::ostringstream os;
            os << "vertex \"" << v.id << "\" ("
               << (v.type == VertexType::finite ? "finite" : "ideal") << "): " << v.facets.size()
               << " facets, expected " << expected;
            out.push_back({"vertex-degree", os.str()});
        }
    }

    // distinct-facet-sets
    {
        std::map<FacetSet, std::vector<std::string>> groups;
        for (const auto& v : p.vertices) groups[v.facets].push_back(v.id);
        for (const auto& [s, ids] : groups) {
            if (ids.size() < 2) continue;
            std::ostringstream os;
            os << "vertices";
            for (const auto& id : ids) os << " \"" << id << "\"";
            os << " share one facet set";
            out.push_back({"distinct-facet-sets", os.str()});
        }
    }

    // cusp-pairing: derive everywhere, check supplied where present
    std::vector<PairingProblem> problems;
    auto derived = derive_all(p, &problems);
    for (const auto& pr : problems) out.push_back({"cusp-pairing", pr.detail});
    for (const auto& v : p.vertices) {
        auto sup = p.pairings.find(v.id);
        if (sup == p.pairings.end()) continue;
        if (v.type != VertexType::ideal) {
            out.push_back({"cusp-pairing", "pairing supplied for finite vertex \"" + v.id + "\""});
            continue;
        }
        // perfect matching on the incident facets
        FacetSet covered;
        for (auto [a, b] : sup->second) {
            covered.push_back(a);
            covered.push_back(b);
        }
        std::sort(covered.begin(), covered.end());
        bool dup = std::adjacent_find(covered.begin(), covered.end()) != covered.end();
        if (dup || covered != v.facets) {
            out.push_back({"cusp-pairing", "pairing at vertex \"" + v.id +
                                               "\" is not a perfect matching on its facets"});
        } else {
            for (auto [a, b] : sup->second) {
                auto w = shared_vertices(fv, a, b);
                if (w.size() != 1 || p.vertices[w[0]].id != v.id) {
                    std::ostringstream os;
                    os << "facets " << a << " and " << b << " are paired at vertex \"" << v.id
                       << "\" but share " << w.size() << " vertices, expected exactly the cusp";
                    out.push_back({"cusp-pairing", os.str()});
                }
            }
            auto der = derived.find(v.id);
            if (der != derived.end() && !der->second.empty() && der->second != sup->second) {
                out.push_back({"cusp-pairing", "supplied pairing at vertex \"" + v.id +
                                                   "\" disagrees with the derived one"});
            }
        }
    }
    // unpaired facets through an ideal vertex must span a face: at least two
    // shared vertices
    {
        auto best = derived;
        for (const auto& [id, pairing] : p.pairings) best[id] = pairing;
        for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
            const auto& v = p.vertices[vi];
            if (v.type != VertexType::ideal) continue;
            auto it = best.find(v.id);
            if (it == best.end() || it->second.empty()) continue;
            std::map<int, int> partner;
            for (auto [a, b] : it->second) {
                partner[a] = b;
                partner[b] = a;
            }
            for (std::size_t i = 0; i < v.facets.size(); ++i) {
                for (std::size_t j = i + 1; j < v.facets.size(); ++j) {
                    int a = v.facets[i], b = v.facets[j];
                    auto pa = partner.find(a);
                    if (pa != partner.end() && pa->second == b) continue;
                    auto w = shared_vertices(fv, a, b);
                    if (w.size() < 2) {
                        std::ostringstream os;
                        os << "facets " << a << " and " << b << " through vertex \"" << v.id
                           << "\" are unpaired but share only " << w.size() << " vertex";
                        out.push_back({"cusp-pairing", os.str()});
                    }
                }
            }
        }
    }

    // facet-adjacency: one shared finite vertex is impossible, a finite
    // simple vertex forces a shared face
    for (int a = 0; a < p.facet_count; ++a) {
        for (int b = a + 1; b < p.facet_count; ++b) {
            auto w = shared_vertices(fv, a, b);
            if (w.size() == 1 && p.vertices[w[0]].type == VertexType::finite) {
                std::ostringstream os;
                os << "facets " << a << " and " << b << " share exactly one finite vertex \""
                   << p.vertices[w[0]].id << "\"";
                out.push_back({"facet-adjacency", os.str()});
            }
        }
    }

    // facet-coverage
    for (int f = 0; f < p.facet_count; ++f) {
        if (fv[f].empty()) {
            std::ostringstream os;
            os << "facet " << f << " has no incident vertex";
            out.push_back({"facet-coverage", os.str()});
        }
    }

    // derived faces, tolerant of broken cusps
    auto best = derived;
    for (const auto& [id, pairing] : p.pairings) best[id] = pairing;
    auto partners = partner_lookup(p, best);

    // edge rule
    std::vector<Face> edges;
    if (n >= 2) edges = enumerate_impl(p, 1, partners);
    for (const auto& e : edges) {
        if (e.vertices.size() != 2) {
            std::ostringstream os;
            os << "1-face {";
            for (std::size_t i = 0; i < e.facets.size(); ++i)
                os << (i ? "," : "") << e.facets[i];
            os << "} has " << e.vertices.size() << " incident vertices, expected 2";
            out.push_back({"edge", os.str()});
            continue;
        }
        auto common = facet_intersection(p.vertices[e.vertices[0]].facets,
                                         p.vertices[e.vertices[1]].facets);
        if (common != e.facets) {
            std::ostringstream os;
            os << "edge between \"" << p.vertices[e.vertices[0]].id << "\" and \""
               << p.vertices[e.vertices[1]].id << "\" lies in " << common.size()
               << " facets, expected " << (n - 1);
            out.push_back({"edge", os.str()});
        }
    }

    // face-connectivity for dimensions 2..n-1
    for (int k = 2; k <= n - 1; ++k) {
        for (const auto& face : enumerate_impl(p, k, partners)) {
            if (face.vertices.size() < 2) continue; // degenerate; degree rules flag the cause
            std::map<int, int> local;
            for (std::size_t i = 0; i < face.vertices.size(); ++i)
                local[face.vertices[i]] = static_cast<int>(i);
            std::vector<std::vector<int>> adj(face.vertices.size());
            for (const auto& e : edges) {
                if (e.vertices.size() != 2 || !facet_subset(face.facets, e.facets)) continue;
                auto a = local.find(e.vertices[0]), b = local.find(e.vertices[1]);
                if (a == local.end() || b == local.end()) continue;
                adj[a->second].push_back(b->second);
                adj[b->second].push_back(a->second);
            }
            std::vector<bool> seen(face.vertices.size(), false);
            std::queue<int> q;
            q.push(0);
            seen[0] = true;
            std::size_t reached = 1;
            while (!q.empty()) {
                int cur = q.front();
                q.pop();
                for (int nb : adj[cur])
                    if (!seen[nb]) {
                        seen[nb] = true;
                        ++reached;
                        q.push(nb);
                    }
            }
            if (reached != face.vertices.size()) {
                std::ostringstream os;
                os << k << "-face {";
                for (std::size_t i = 0; i < face.facets.size(); ++i)
                    os << (i ? "," : "") << face.facets[i];
                os << "} is disconnected in its vertex-edge graph";
                out.push_back({"face-connectivity", os.str()});
            }
        }
    }

    // degree-sum identity, 3-dimensional only: every finite vertex carries 3
    // edge-ends and every ideal vertex 4
    if (n == 3) {
        std::int64_t a1 = 0;
        for (const auto& e : edges)
            if (e.vertices.size() == 2) ++a1;
        std::int64_t vfin = p.count(VertexType::finite);
        std::int64_t vinf = p.count(VertexType::ideal);
        if (2 * a1 != 3 * vfin + 4 * vinf) {
            std::ostringstream os;
            os << "2 a_1 = " << 2 * a1 << " but 3 v_fin + 4 v_inf = " << (3 * vfin + 4 * vinf);
            out.push_back({"degree-sum", os.str()});
        }
    }

    return report;
}

} // namespace rap
