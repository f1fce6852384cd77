#include "rap/catalog.hpp"

#include <algorithm>
#include <array>

#include "rap/errors.hpp"

namespace rap::catalog {

namespace {

std::pair<int, int> norm_pair(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

void add_pairing(CombinatorialPolytope& p, const std::string& id,
                 std::initializer_list<std::pair<int, int>> pairs) {
    CuspPairing cp;
    for (auto [a, b] : pairs) cp.push_back(norm_pair(a, b));
    std::sort(cp.begin(), cp.end());
    p.pairings[id] = std::move(cp);
}

// ---- ideal octahedron -------------------------------------------------
//
// Facets are the sign octants (s_x, s_y, s_z), indexed by the three sign
// bits; vertices are the six axis cusps.  The cusp partner of an octant
// flips the two signs away from the axis, so the pair touches only there.

CombinatorialPolytope octahedron() {
    // octant (s_x, s_y, s_z) -> index 4 s_x + 2 s_y + s_z, sign bit 1 = minus
    CombinatorialPolytope p;
    p.dim = 3;
    p.facet_count = 8;
    const char axes[3] = {'x', 'y', 'z'};
    for (int axis = 0; axis < 3; ++axis) {
        for (int s = 0; s < 2; ++s) {
            std::string id{s ? '-' : '+'};
            id += axes[axis];
            FacetSet fs;
            for (int g = 0; g < 8; ++g) {
                int bit = (g >> (2 - axis)) & 1;
                if (bit == s) fs.push_back(g);
            }
            p.vertices.push_back({id, VertexType::ideal, std::move(fs)});
        }
    }
    auto flip_others = [&](int g, int axis) {
        for (int other = 0; other < 3; ++other)
            if (other != axis) g ^= 1 << (2 - other);
        return g;
    };
    for (int axis = 0; axis < 3; ++axis) {
        for (int s = 0; s < 2; ++s) {
            const auto& v = p.vertices[2 * axis + s];
            CuspPairing cp;
            for (int g : v.facets) {
                int t = flip_others(g, axis);
                if (g < t) cp.push_back({g, t});
            }
            std::sort(cp.begin(), cp.end());
            p.pairings[v.id] = std::move(cp);
        }
    }
    return p;
}

// ---- right-angled dodecahedron ----------------------------------------
//
// Compact, so no pairings.  Facets: top 0, upper ring 1..5, lower ring
// 6..10, bottom 11.  The four vertex bands follow the usual pentagonal
// antiprism pattern of the two rings.

CombinatorialPolytope dodecahedron() {
    CombinatorialPolytope p;
    p.dim = 3;
    p.facet_count = 12;
    auto U = [](int i) { return 1 + (i + 5) % 5; };
    auto L = [](int i) { return 6 + (i + 5) % 5; };
    auto add = [&](const std::string& id, int a, int b, int c) {
        FacetSet fs{a, b, c};
        canonicalize(fs);
        p.vertices.push_back({id, VertexType::finite, std::move(fs)});
    };
    for (int i = 0; i < 5; ++i) add("t" + std::to_string(i), 0, U(i), U(i + 1));
    for (int i = 0; i < 5; ++i) add("u" + std::to_string(i), U(i), U(i + 1), L(i + 1));
    for (int i = 0; i < 5; ++i) add("l" + std::to_string(i), U(i), L(i), L(i + 1));
    for (int i = 0; i < 5; ++i) add("b" + std::to_string(i), 11, L(i), L(i + 1));
    return p;
}

// ---- triangular bipyramid ---------------------------------------------
//
// Two finite apexes u, w over an ideal triangle v1 v2 v3.  Upper facets
// 0..2 and lower facets 3..5 follow the equator edges (v_e, v_{e+1}).  At
// each cusp the partner of an upper facet is the lower facet on the
// opposite equator edge, the only other facet meeting it just there.

CombinatorialPolytope bipyramid() {
    CombinatorialPolytope p;
    p.dim = 3;
    p.facet_count = 6;
    p.vertices.push_back({"u", VertexType::finite, {0, 1, 2}});
    p.vertices.push_back({"w", VertexType::finite, {3, 4, 5}});
    // equator edge e joins v_{e+1} and v_{e+2} (ids are 1-based)
    p.vertices.push_back({"v1", VertexType::ideal, {0, 2, 3, 5}});
    p.vertices.push_back({"v2", VertexType::ideal, {0, 1, 3, 4}});
    p.vertices.push_back({"v3", VertexType::ideal, {1, 2, 4, 5}});
    add_pairing(p, "v1", {{0, 5}, {2, 3}});
    add_pairing(p, "v2", {{0, 4}, {1, 3}});
    add_pairing(p, "v3", {{1, 5}, {2, 4}});
    return p;
}

// ---- ideal 24-cell ----------------------------------------------------
//
// Facet centers: the eight +-e_k at indices 2k (+) and 2k+1 (-), then the
// sixteen half-integer points (+-1/2, .., +-1/2) at 8 + sign bits.  The
// cusps are the coordinate pairs (+-e_i +- e_j); such a cusp lies on an
// axis facet when the sign matches and on a half-integer facet when both
// of its supported coordinates match.  The cube link pairs the two axis
// facets with each other and pairs half-integer facets across a flip of
// both free coordinates.

CombinatorialPolytope cell24() {
    auto axis = [](int k, int neg) { return 2 * k + neg; };
    auto half = [](const std::array<int, 4>& neg) {
        return 8 + neg[0] + 2 * neg[1] + 4 * neg[2] + 8 * neg[3];
    };
    CombinatorialPolytope p;
    p.dim = 4;
    p.facet_count = 24;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            int ko = -1, lo = -1; // the two zero coordinates
            for (int c = 0; c < 4; ++c)
                if (c != i && c != j) (ko < 0 ? ko : lo) = c;
            for (int si = 0; si < 2; ++si) {
                for (int sj = 0; sj < 2; ++sj) {
                    std::string id{si ? '-' : '+'};
                    id += std::to_string(i);
                    id += sj ? '-' : '+';
                    id += std::to_string(j);

                    FacetSet fs{axis(i, si), axis(j, sj)};
                    std::array<int, 4> combo{}; // half facets by free-coordinate bits
                    for (int bk = 0; bk < 2; ++bk) {
                        for (int bl = 0; bl < 2; ++bl) {
                            std::array<int, 4> neg{};
                            neg[i] = si;
                            neg[j] = sj;
                            neg[ko] = bk;
                            neg[lo] = bl;
                            combo[2 * bk + bl] = half(neg);
                            fs.push_back(half(neg));
                        }
                    }
                    canonicalize(fs);
                    p.vertices.push_back({id, VertexType::ideal, std::move(fs)});
                    add_pairing(p, id,
                                {{axis(i, si), axis(j, sj)},
                                 {combo[0], combo[3]},   // (+,+) with (-,-)
                                 {combo[1], combo[2]}}); // (+,-) with (-,+)
                }
            }
        }
    }
    return p;
}

} // namespace

std::vector<std::string> list() {
    return {"ideal-24-cell", "ideal-octahedron", "right-angled-dodecahedron",
            "triangular-bipyramid"};
}

CombinatorialPolytope build(const std::string& name) {
    if (name == "ideal-24-cell") return cell24();
    if (name == "ideal-octahedron") return octahedron();
    if (name == "right-angled-dodecahedron") return dodecahedron();
    if (name == "triangular-bipyramid") return bipyramid();
    throw domain_error("unknown catalog entry \"" + name + "\"");
}

CombinatorialPolytope build_cube_fixture() {
    CombinatorialPolytope p;
    p.dim = 3;
    p.facet_count = 6;
    for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy)
            for (int sz = 0; sz < 2; ++sz) {
                std::string id;
                id += sx ? '-' : '+';
                id += sy ? '-' : '+';
                id += sz ? '-' : '+';
                FacetSet fs{sx, 2 + sy, 4 + sz};
                canonicalize(fs);
                p.vertices.push_back({id, VertexType::finite, std::move(fs)});
            }
    return p;
}

} // namespace rap::catalog
