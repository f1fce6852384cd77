#include <string>
#include <vector>

#include "doctest.h"
#include "rap/catalog.hpp"
#include "rap/errors.hpp"
#include "rap/face_lattice.hpp"
#include "rap/io.hpp"
#include "rap/polytope.hpp"

using namespace rap;

TEST_CASE("the catalog lists exactly the four reference polytopes, sorted") {
    auto names = catalog::list();
    const std::vector<std::string> expect = {
        "ideal-24-cell",
        "ideal-octahedron",
        "right-angled-dodecahedron",
        "triangular-bipyramid",
    };
    CHECK(names == expect);
    CHECK(catalog::list() == names); // stable across calls
}

TEST_CASE("every catalog entry builds to its advertised shape") {
    struct Row {
        const char* name;
        int dim;
        int facets;
        int v_fin;
        int v_inf;
    };
    const std::vector<Row> rows = {
        {"ideal-24-cell", 4, 24, 0, 24},
        {"ideal-octahedron", 3, 8, 0, 6},
        {"right-angled-dodecahedron", 3, 12, 20, 0},
        {"triangular-bipyramid", 3, 6, 2, 3},
    };
    for (const auto& r : rows) {
        CAPTURE(r.name);
        auto p = catalog::build(r.name);
        CHECK(p.dim == r.dim);
        CHECK(p.facet_count == r.facets);
        CHECK((int)p.vertices.size() == r.v_fin + r.v_inf);
        int fin = 0, inf = 0;
        for (const auto& v : p.vertices) (v.type == VertexType::finite ? fin : inf)++;
        CHECK(fin == r.v_fin);
        CHECK(inf == r.v_inf);
        CHECK(validate(p).valid());
    }
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(catalog::build("icosahedron"), domain_error);
    CHECK_THROWS_AS(catalog::build(""), domain_error);
    CHECK_THROWS_AS(catalog::build("Ideal-Octahedron"), domain_error); // names are exact
}

TEST_CASE("builders are deterministic") {
    for (const auto& name : catalog::list()) {
        CAPTURE(name);
        auto a = catalog::build(name);
        auto b = catalog::build(name);
        CHECK(serialize_polytope(a) == serialize_polytope(b));
    }
}

TEST_CASE("the cube fixture is a valid compact 3-polytope outside the listing") {
    auto cube = catalog::build_cube_fixture();
    CHECK(cube.dim == 3);
    CHECK(cube.facet_count == 6);
    CHECK(cube.vertices.size() == 8);
    for (const auto& v : cube.vertices) CHECK(v.type == VertexType::finite);
    CHECK(validate(cube).valid());
    for (const auto& name : catalog::list()) CHECK(name != "cube");
}
