#include <doctest.h>

#include "polyforge/complex.hpp"
#include "polyforge/errors.hpp"
#include "polyforge/fixtures.hpp"
#include "polyforge/lattice.hpp"

#include <algorithm>
#include <set>

using namespace polyforge;

namespace {

long flags_of(const FaceLattice& L) {
    LatticeInfo info = build_info(L);
    return build_flags(L, info).count();
}

bool check_named(const ValidationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c.pass;
    return false;
}

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("cube validates with 48 flags") {
    ValidationReport r = validate(hypercube_lattice(3));
    CHECK(r.ok());
    CHECK(r.flag_count == 48);
}

TEST_CASE("pentagon validates with 10 flags") {
    ValidationReport r = validate(polygon_lattice(5));
    CHECK(r.ok());
    CHECK(r.flag_count == 10);
}

TEST_CASE("point and segment and digon validate") {
    CHECK(validate(point_lattice()).ok());
    CHECK(validate(segment_lattice()).ok());
    CHECK(validate(polygon_lattice(2)).ok());
}

TEST_CASE("simplex and crosspolytope fixtures validate") {
    for (int d = 2; d <= 4; ++d) CHECK(validate(simplex_lattice(d)).ok());
    for (int d = 2; d <= 4; ++d) CHECK(validate(crosspolytope_lattice(d)).ok());
    CHECK(flags_of(simplex_lattice(3)) == 24);
    CHECK(flags_of(crosspolytope_lattice(3)) == 48);
}

TEST_CASE("deleted cover breaks the diamond at a vertex-facet pair") {
    FaceLattice cube = hypercube_lattice(3);
    // Remove one edge from one square's cover list.
    bool removed = false;
    for (auto& f : cube.faces) {
        if (f.rank == 2 && !removed) {
            f.covers.pop_back();
            removed = true;
        }
    }
    REQUIRE(removed);
    ValidationReport r = validate(cube);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(check_named(r, "diamond"));
    // The reported witness pair is a (vertex, facet) interval.
    for (const auto& c : r.checks) {
        if (c.name == "diamond") {
            CHECK(c.detail.find("ranks (0,2)") != std::string::npos);
        }
    }
}

TEST_CASE("unresolved cover id is a structural error") {
    FaceLattice L = polygon_lattice(3);
    L.faces[2].covers.push_back(99);
    CHECK_THROWS_AS(validate(L), ValidationError);
}

TEST_CASE("flag adjacency on the tetrahedron") {
    FaceLattice t = simplex_lattice(3);
    LatticeInfo info = build_info(t);
    FlagSystem fs = build_flags(t, info);
    CHECK(fs.count() == 24);
    for (long i = 0; i < fs.count(); ++i) {
        CHECK(fs.adjacent[i].size() == 3);
        for (int r = 0; r < 3; ++r) {
            long j = fs.adjacent[i][r];
            CHECK(j != i);
            CHECK(fs.adjacent[j][r] == i); // involution
        }
    }
}

TEST_CASE("pentagon adjacencies are perfect matchings") {
    FaceLattice p = polygon_lattice(5);
    LatticeInfo info = build_info(p);
    FlagSystem fs = build_flags(p, info);
    CHECK(fs.count() == 10);
    for (int r = 0; r < 2; ++r) {
        std::set<long> seen;
        for (long i = 0; i < fs.count(); ++i) {
            long j = fs.adjacent[i][r];
            CHECK(j != i);
            CHECK(fs.adjacent[j][r] == i);
            seen.insert(i);
            seen.insert(j);
        }
        CHECK(seen.size() == 10);
    }
}

TEST_CASE("cube 0-adjacency is fixed-point-free") {
    FaceLattice c = hypercube_lattice(3);
    LatticeInfo info = build_info(c);
    FlagSystem fs = build_flags(c, info);
    CHECK(fs.count() == 48);
    for (long i = 0; i < fs.count(); ++i) CHECK(fs.adjacent[i][0] != i);
}

TEST_CASE("barycentric subdivision of the cube") {
    CellComplex cx = barycentric_subdivision(hypercube_lattice(3));
    CHECK(cx.vertices.size() == 26);
    CHECK(cx.cells_of_dim(2).size() == 48);
}

TEST_CASE("barycentric subdivision of the tetrahedron") {
    CellComplex cx = barycentric_subdivision(simplex_lattice(3));
    CHECK(cx.vertices.size() == 14);
    CHECK(cx.cells_of_dim(2).size() == 24);
}

TEST_CASE("barycentric subdivision of the triangle is a hexagon circuit") {
    CellComplex cx = barycentric_subdivision(simplex_lattice(2));
    CHECK(cx.vertices.size() == 6);
    CHECK(cx.cells_of_dim(1).size() == 6);
    // Each vertex lies on exactly two chambers (edges).
    for (size_t v = 0; v < cx.vertices.size(); ++v)
        CHECK(chamber_count_through(cx, static_cast<int>(v)) == 2);
}

TEST_CASE("subdivision rejects rank 0") {
    CHECK_THROWS_AS(barycentric_subdivision(point_lattice()), ValidationError);
}

TEST_CASE("chamber count equals flag count") {
    for (const auto& name : {"cube", "tetrahedron", "pentagon", "octahedron", "4-simplex"}) {
        FaceLattice L = builtin_lattice(name);
        CellComplex cx = barycentric_subdivision(L);
        CHECK(static_cast<long>(cx.cells_of_dim(cx.dim).size()) == flags_of(L));
    }
}

TEST_CASE("chamber type labels are a full transversal") {
    CellComplex cx = barycentric_subdivision(hypercube_lattice(3));
    for (int c : cx.cells_of_dim(2)) {
        std::set<int> labels;
        for (int v : cx.cells[c].vertices) labels.insert(cx.vertices[v].label);
        CHECK(labels == std::set<int>{0, 1, 2});
    }
}

TEST_CASE("subdivision is a pseudomanifold") {
    CellComplex cx = barycentric_subdivision(hypercube_lattice(3));
    for (int e : cx.cells_of_dim(1)) {
        int count = 0;
        for (int c : cx.cells_of_dim(2))
            if (std::binary_search(cx.cells[c].facets.begin(), cx.cells[c].facets.end(), e)) ++count;
        CHECK(count == 2);
    }
}

TEST_CASE("type-0 stars partition the chambers") {
    CellComplex cx = barycentric_subdivision(simplex_lattice(3));
    long total = 0;
    for (size_t v = 0; v < cx.vertices.size(); ++v)
        if (cx.vertices[v].label == 0) total += chamber_count_through(cx, static_cast<int>(v));
    CHECK(total == static_cast<long>(cx.cells_of_dim(2).size()));
}

TEST_CASE("stars and links in the subdivided cube") {
    CellComplex cx = barycentric_subdivision(hypercube_lattice(3));
    int v0 = -1, v1 = -1, v2 = -1;
    for (size_t v = 0; v < cx.vertices.size() && (v0 < 0 || v1 < 0 || v2 < 0); ++v) {
        int t = cx.vertices[v].label;
        if (t == 0 && v0 < 0) v0 = static_cast<int>(v);
        if (t == 1 && v1 < 0) v1 = static_cast<int>(v);
        if (t == 2 && v2 < 0) v2 = static_cast<int>(v);
    }
    CHECK(vertex_star(cx, v0).chamber_ids.size() == 6);
    CHECK(vertex_star(cx, v1).chamber_ids.size() == 4);
    CHECK(vertex_star(cx, v2).chamber_ids.size() == 8);
    CHECK(chamber_count_through(cx, v0) == 6);
    CHECK(chamber_count_through(cx, v1) == 4);
    CHECK(chamber_count_through(cx, v2) == 8);

    // The link of a cube vertex is a 6-edge circuit.
    Subcomplex link = vertex_link(cx, v0);
    int edges = 0;
    std::set<int> link_vertices;
    for (int id : link.cell_ids) {
        if (cx.cells[id].dim == 1) ++edges;
        if (cx.cells[id].dim == 0) link_vertices.insert(cx.cells[id].vertices[0]);
    }
    CHECK(edges == 6);
    CHECK(link_vertices.size() == 6);
    CHECK_THROWS_AS(vertex_star(cx, 9999), ValidationError);
}

TEST_CASE("completion of a subdivision validates") {
    CellComplex cx = barycentric_subdivision(simplex_lattice(3));
    FaceLattice L = complete_polytope(cx);
    CHECK(L.rank == 3);
    CHECK(validate(L).ok());
}

} // TEST_SUITE
