#include <string>
#include <vector>

#include "doctest.h"
#include "rap/bounds.hpp"
#include "rap/catalog.hpp"
#include "rap/errors.hpp"
#include "rap/screens.hpp"

#include "synthetic.hpp"

using namespace rap;

namespace {

const bounds::CascadeTable& default_table() {
    static const bounds::CascadeTable t =
        bounds::cascade_finite(bounds::BoundsConfig{}, bounds::cascade_ideal(bounds::BoundsConfig{}));
    return t;
}

bool has_rule(const ScreenReport& rep, const std::string& rule) {
    for (const auto& f : rep.findings)
        if (f.rule == rule) return true;
    return false;
}

// dim-3 lattice with a vertex on every facet pair: 2 * C(f,2) incidences
// over f 2-faces pushes the edge-per-face average to f - 1
CombinatorialPolytope pair_cloud(int f) {
    CombinatorialPolytope p;
    p.dim = 3;
    p.facet_count = f;
    for (int g = 0; g < f; ++g)
        for (int h = g + 1; h < f; ++h)
            p.vertices.push_back(
                {"p" + std::to_string(g) + "_" + std::to_string(h), VertexType::finite, {g, h}});
    return p;
}

} // namespace

//======================================================================
// the cusp-count screen on 3-faces
//======================================================================

TEST_CASE("cube fails the twelve-face floor, dodecahedron sits on it") {
    auto hits = nonaka_screen(catalog::build_cube_fixture());
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].face.empty()); // the polytope itself
    CHECK(hits[0].v_inf == 0);
    CHECK(hits[0].a2 == 6);

    CHECK(nonaka_screen(catalog::build("right-angled-dodecahedron")).empty()); // a_2 = 12
}

TEST_CASE("enough cusps exempt a 3-face") {
    CHECK(nonaka_screen(catalog::build("ideal-octahedron")).empty());    // v_inf = 6
    CHECK(nonaka_screen(catalog::build("triangular-bipyramid")).empty()); // v_inf = 3
    // every 3-face of the 24-cell is an ideal octahedron
    CHECK(nonaka_screen(catalog::build("ideal-24-cell")).empty());
}

TEST_CASE("the screen needs dimension 3") {
    CombinatorialPolytope tri;
    tri.dim = 2;
    tri.facet_count = 3;
    tri.vertices = {{"a", VertexType::finite, {0, 1}},
                    {"b", VertexType::finite, {1, 2}},
                    {"c", VertexType::finite, {0, 2}}};
    CHECK_THROWS_AS(nonaka_screen(tri), domain_error);
}

//======================================================================
// the incidence-average screen
//======================================================================

TEST_CASE("catalog entries stay below every incidence bound") {
    for (const auto& name : catalog::list()) {
        CAPTURE(name);
        CHECK(nk_screen(catalog::build(name)).empty());
    }
}

TEST_CASE("a dense pair cloud crosses the edge-average bound") {
    auto hits = nk_screen(pair_cloud(8));
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].k == 2);
    CHECK(hits[0].l == 1);
    CHECK(hits[0].average == Rational(7)); // 2 * 28 incidences / 8 faces
    CHECK(hits[0].bound == Rational(6));
    CHECK(nk_screen(pair_cloud(6)).empty()); // average 5 stays under
}

TEST_CASE("the degenerate l = 0 pair fires on everything when asked for") {
    auto p = catalog::build("ideal-octahedron");
    CHECK(nk_screen(p).empty());
    auto hits = nk_screen(p, true);
    REQUIRE(!hits.empty());
    CHECK(hits[0].k == 1);
    CHECK(hits[0].l == 0);
    CHECK(hits[0].average == Rational(2)); // every edge has two ends
    CHECK(hits[0].bound == Rational(2));
}

//======================================================================
// the combined report
//======================================================================

TEST_CASE("no rule fires on the catalog entries") {
    for (const auto& name : catalog::list()) {
        CAPTURE(name);
        auto rep = realizability_screen(catalog::build(name), default_table());
        CHECK_FALSE(rep.excluded());
        CHECK(rep.findings.empty());
        CHECK(rep.summary() == "no exclusion rule fired");
    }
}

TEST_CASE("the cube is excluded by the twelve-face floor alone") {
    auto rep = realizability_screen(catalog::build_cube_fixture(), default_table());
    CHECK(rep.excluded());
    REQUIRE(rep.findings.size() == 1);
    CHECK(rep.findings[0].rule == "nonaka");
    CHECK(rep.findings[0].detail ==
          "only 6 2-faces with 0 ideal vertices; a 3-polytope with at most one cusp needs twelve");
}

TEST_CASE("dimension caps fire by vertex type") {
    auto rep13 = realizability_screen(synthetic::simplex(13), default_table());
    CHECK(has_rule(rep13, "dimension-limit"));

    auto rep5 = realizability_screen(synthetic::simplex(5), default_table());
    CHECK(has_rule(rep5, "compact-dimension-limit"));
    CHECK(has_rule(rep5, "facet-minimum"));        // 6 facets, floor is 16
    CHECK(has_rule(rep5, "ideal-vertex-minimum")); // 0 cusps, floor is 3
    CHECK(has_rule(rep5, "nonaka"));               // tetrahedral 3-faces
    CHECK(rep5.findings.size() == 4);

    auto rep7 = realizability_screen(synthetic::lone_cusp(7), default_table());
    CHECK(has_rule(rep7, "ideal-dimension-limit"));
    CHECK(has_rule(rep7, "facet-minimum"));
    CHECK(has_rule(rep7, "ideal-vertex-minimum"));  // 1 cusp, floor is 35
    CHECK(has_rule(rep7, "finite-vertex-minimum")); // 0, floor is 4
}

TEST_CASE("the odd finite count in dimension 3 is flagged") {
    auto rep = realizability_screen(synthetic::odd_triple(), default_table());
    CHECK(has_rule(rep, "finite-vertex-parity"));
}

TEST_CASE("dimension 4 gets its facet floor from the seed below") {
    auto rep = realizability_screen(synthetic::simplex(4), default_table());
    CHECK(has_rule(rep, "facet-minimum")); // 5 facets, floor is 10 = 9 + 1
    bool saw = false;
    for (const auto& f : rep.findings)
        if (f.rule == "facet-minimum" && f.detail.find("minimum 10") != std::string::npos)
            saw = true;
    CHECK(saw);
}

TEST_CASE("the incidence screen feeds the combined report") {
    auto rep = realizability_screen(pair_cloud(8), default_table());
    CHECK(has_rule(rep, "nikulin-khovanskii"));
    bool saw = false;
    for (const auto& f : rep.findings)
        if (f.rule == "nikulin-khovanskii" && f.detail == "a_2^1 = 7 >= 6") saw = true;
    CHECK(saw);
}
