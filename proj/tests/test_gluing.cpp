#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "synthetic.hpp"

#include "rap/catalog.hpp"
#include "rap/face_lattice.hpp"
#include "rap/gluing.hpp"

using namespace rap;

namespace {

struct Expected {
    std::int64_t facets;
    std::int64_t v_fin;
    std::int64_t v_inf;
};

Expected expected_double(const std::string& name) {
    if (name == "ideal-octahedron") return {11, 0, 9};
    if (name == "right-angled-dodecahedron") return {17, 30, 0};
    if (name == "triangular-bipyramid") return {7, 2, 4};
    return {38, 0, 42}; // ideal-24-cell
}

} // namespace

TEST_CASE("doubling laws hold along every facet of every entry") {
    for (const auto& name : catalog::list()) {
        CAPTURE(name);
        auto p = catalog::build(name);
        auto want = expected_double(name);
        for (int h = 0; h < p.facet_count; ++h) {
            CAPTURE(h);
            auto pc = predict_counts(p, h);
            auto res = double_along(p, h);
            const auto& q = res.polytope;
            auto fv = face_vector(q);
            CHECK(q.facet_count == want.facets);
            CHECK(fv.v_fin == want.v_fin);
            CHECK(fv.v_inf == want.v_inf);
            CHECK(pc.facets == q.facet_count);
            CHECK(pc.v_fin == fv.v_fin);
            CHECK(pc.v_inf == fv.v_inf);
            auto rep = validate(q);
            INFO(rep.summary());
            CHECK(rep.valid());
            if (q.dim == 3) CHECK(2 * fv.a[1] == 3 * fv.v_fin + 4 * fv.v_inf);
        }
    }
}

TEST_CASE("doubling records exact fates on the bipyramid") {
    auto p = catalog::build("triangular-bipyramid");
    auto [q, map] = double_along(p, 0);

    CHECK(map.glued_facet == 0);
    REQUIRE(map.facet_fate.size() == 6);
    CHECK(map.facet_fate[0].fate == FacetFate::removed);
    // facets 1,2,3 touch facet 0 in at least two vertices; 4,5 only at a cusp
    for (int g : {1, 2, 3}) CHECK(map.facet_fate[g].fate == FacetFate::merged);
    for (int g : {4, 5}) CHECK(map.facet_fate[g].fate == FacetFate::kept_pair);
    CHECK(map.facet_fate[1].new_index == 0);
    CHECK(map.facet_fate[2].new_index == 1);
    CHECK(map.facet_fate[3].new_index == 2);
    CHECK(map.facet_fate[4].new_index == 3);
    CHECK(map.facet_fate[5].new_index == 4);
    CHECK(map.facet_fate[4].mirror_index == 5);
    CHECK(map.facet_fate[5].mirror_index == 6);

    REQUIRE(map.vertex_fate.size() == 5);
    CHECK(map.vertex_fate[0].fate == VertexFate::dropped);    // u on facet 0
    CHECK(map.vertex_fate[1].fate == VertexFate::duplicated); // w
    CHECK(map.vertex_fate[1].mirror_id == "w*");
    CHECK(map.vertex_fate[2].fate == VertexFate::identified); // v1
    CHECK(map.vertex_fate[3].fate == VertexFate::identified); // v2
    CHECK(map.vertex_fate[4].fate == VertexFate::duplicated); // v3

    const auto& v1 = q.vertices[q.vertex_index("v1")];
    CHECK(v1.facets == FacetSet{1, 2, 4, 6}); // both copies of its partner 5
    CHECK(q.pairings.at("v1") == CuspPairing{{1, 2}, {4, 6}});
    const auto& v2 = q.vertices[q.vertex_index("v2")];
    CHECK(v2.facets == FacetSet{0, 2, 3, 5});
    CHECK(q.pairings.at("v2") == CuspPairing{{0, 2}, {3, 5}});
    CHECK(q.vertices[q.vertex_index("w")].facets == FacetSet{2, 3, 4});
    CHECK(q.vertices[q.vertex_index("w*")].facets == FacetSet{2, 5, 6});
}

TEST_CASE("doubling a simplex degenerates") {
    auto tet = synthetic::tetrahedron();
    CHECK(validate(tet).valid());
    for (int h = 0; h < 4; ++h) {
        CAPTURE(h);
        CHECK_THROWS_AS(double_along(tet, h), gluing_error);
    }
    CHECK_THROWS_WITH_AS(double_along(tet, 0),
                         doctest::Contains("not realizable"), gluing_error);
    CHECK_THROWS_AS(double_along(synthetic::simplex(4), 2), gluing_error);
}

TEST_CASE("facet index out of range") {
    auto p = catalog::build("ideal-octahedron");
    CHECK_THROWS_AS(double_along(p, 8), domain_error);
    CHECK_THROWS_AS(double_along(p, -1), domain_error);
    CHECK_THROWS_AS(predict_counts(p, 8), domain_error);
}

TEST_CASE("mirror ids stay unique under hostile inputs and repetition") {
    auto cube = catalog::build_cube_fixture();
    // vertices 4 and 5 sit off facet 0, so both get mirrored on doubling
    cube.vertices[4].id = "a";
    cube.vertices[5].id = "a*"; // collides with the would-be mirror of "a"
    auto q = double_along(cube, 0).polytope;
    std::set<std::string> ids;
    for (const auto& v : q.vertices) ids.insert(v.id);
    CHECK(ids.size() == q.vertices.size());
    CHECK(ids.count("a**"));  // mirror of "a*" probed past the taken "a*"
    CHECK(ids.count("a***")); // and the next mirror probed past that

    // repeated doubling keeps ids unique and the count law intact
    auto cur = catalog::build("ideal-octahedron");
    for (int round = 0; round < 3; ++round) {
        cur = double_along(cur, 0).polytope;
        std::set<std::string> seen;
        for (const auto& v : cur.vertices) seen.insert(v.id);
        CHECK(seen.size() == cur.vertices.size());
        CHECK(validate(cur).valid());
    }
}

TEST_CASE("doubling the cube gives the cube") {
    auto cube = catalog::build_cube_fixture();
    auto q = double_along(cube, 0).polytope;
    CHECK(q.facet_count == 6);
    CHECK(q.count(VertexType::finite) == 8);
    CHECK(validate(q).valid());
}

TEST_CASE("reduction reaches the target in the documented step counts") {
    auto oct = catalog::build("ideal-octahedron");
    auto tr = reduce_ideal_pair(oct, "+x", "+y");
    CHECK(tr.steps.size() == 2);
    CHECK(tr.steps[0].common_before == 2);
    CHECK(tr.steps[0].common_after == 1);
    CHECK(tr.steps[1].common_before == 1);
    CHECK(tr.steps[1].common_after == 0);
    CHECK(tr.steps[1].dim_after == tr.final.dim);
    CHECK(validate(tr.final).valid());
    CHECK(facet_intersection(tr.final.vertices[tr.final.vertex_index("+x")].facets,
                             tr.final.vertices[tr.final.vertex_index("+y")].facets)
              .empty());

    CHECK(reduce_ideal_pair(oct, "+x", "-x").steps.empty());

    auto c24 = catalog::build("ideal-24-cell");
    CHECK(reduce_ideal_pair(c24, "+0+1", "+0-1").steps.size() == 1);
    CHECK(reduce_ideal_pair(c24, "+0+1", "+2+3").steps.size() == 1);
    CHECK(reduce_ideal_pair(c24, "+0+1", "-0-1").steps.empty());
    // edge-adjacent cusps share three facets
    auto tr3 = reduce_ideal_pair(c24, "+0+1", "+0+2", 4);
    CHECK(tr3.steps.size() == 3);
    CHECK(validate(tr3.final).valid());

    // a target below the current common-face dimension asks for nothing
    CHECK(reduce_ideal_pair(c24, "+0+1", "+0-1", 3).steps.empty());
}

TEST_CASE("reduction argument errors") {
    auto oct = catalog::build("ideal-octahedron");
    CHECK_THROWS_AS(reduce_ideal_pair(oct, "+x", "+x"), domain_error);
    CHECK_THROWS_AS(reduce_ideal_pair(oct, "+x", "nope"), domain_error);
    auto dod = catalog::build("right-angled-dodecahedron");
    CHECK_THROWS_AS(reduce_ideal_pair(dod, "t0", "t1"), domain_error);
    CHECK_THROWS_AS(reduce_ideal_pair(oct, "+x", "+y", 0), domain_error);
}

TEST_CASE("every reduction step removes exactly one common facet") {
    auto check_pairs = [](const CombinatorialPolytope& p, std::size_t stride) {
        std::vector<std::string> cusps;
        for (const auto& v : p.vertices)
            if (v.type == VertexType::ideal) cusps.push_back(v.id);
        std::size_t checked = 0;
        for (std::size_t i = 0; i < cusps.size(); ++i) {
            for (std::size_t j = i + 1; j < cusps.size(); j += stride) {
                auto tr = reduce_ideal_pair(p, cusps[i], cusps[j]);
                int prev = tr.steps.empty() ? 0 : tr.steps.front().common_before;
                for (const auto& s : tr.steps) {
                    CHECK(s.common_before == prev);
                    CHECK(s.common_after == s.common_before - 1);
                    CHECK(s.dim_before == tr.final.dim - s.common_before);
                    CHECK(s.dim_after == tr.final.dim - s.common_after);
                    prev = s.common_after;
                }
                if (!tr.steps.empty()) {
                    CHECK((tr.steps.back().common_after == 0 ||
                           tr.steps.back().dim_after >= tr.target_dim));
                }
                ++checked;
            }
        }
        return checked;
    };

    // all cusp pairs of every entry
    for (const auto& name : catalog::list()) {
        CAPTURE(name);
        check_pairs(catalog::build(name), 1);
    }
    // once-doubled variants: everything for the small entries, a strided
    // sample for the 24-cell's doubles
    for (const auto& name : catalog::list()) {
        CAPTURE(name);
        auto p = catalog::build(name);
        bool has_cusps = face_vector(p).v_inf > 0;
        for (int h = 0; h < p.facet_count; ++h) {
            auto q = double_along(p, h).polytope;
            std::size_t checked = check_pairs(q, p.dim <= 3 ? 1 : 7);
            if (has_cusps) CHECK(checked > 0); // compact entries double to compact
        }
    }
}

TEST_CASE("the gluing facet at each round is a caller choice") {
    auto oct = catalog::build("ideal-octahedron");
    auto tr = reduce_ideal_pair(oct, "+x", "+y", 4,
                                [](const FacetSet& common) { return common.back(); });
    REQUIRE(tr.steps.size() == 2);
    CHECK(tr.steps[0].facet == 1); // common {0,1}, greatest first
    CHECK(validate(tr.final).valid());

    // the default is the smallest index
    auto a = reduce_ideal_pair(oct, "+x", "+y");
    auto b = reduce_ideal_pair(oct, "+x", "+y", 4,
                               [](const FacetSet& common) { return common.front(); });
    CHECK(a.steps.size() == 2);
    CHECK(a.steps[0].facet == 0);
    CHECK(a.final == b.final);

    // a chooser stepping outside the common set is rejected
    CHECK_THROWS_AS(reduce_ideal_pair(oct, "+x", "+y", 4, [](const FacetSet&) { return 7; }),
                    domain_error);
}
