#pragma once

#include "polyforge/complex.hpp"
#include "polyforge/lattice.hpp"

#include <vector>

namespace polyforge {

// A combinatorial Schlegel diagram: a (d-1)-dimensional face-to-face complex
// supported on an outer (d-1)-simplex. The outer simplex itself is not a
// cell; its boundary faces are cells (shared with the inner tiles).
struct SchlegelComplex {
    CellComplex cx;
    std::vector<int> outer_vertices; // the outer simplex; order is meaningful
    int central_cell = -1;           // crosspolytope diagrams: the tile Z
    std::vector<int> fu_cells;       // crosspolytope diagrams: F_{u_i} per i
    int apex_vertex = -1;            // pyramid diagrams: the high-valency vertex
};

// Schlegel diagram of the d-crosspolytope over the all-plus facet. Vertices
// 0..d-1 are the outer vertices u_i; vertices d..2d-1 are the central
// simplex. Tiles are the 2^d - 1 remaining sign vectors.
SchlegelComplex crosspolytope_diagram(int d);

// Admissible apex valencies for the pyramid family at rank d: any m >= 3
// when d = 3 (m-gonal pyramids), m in {d + k(d-2)} when d >= 4 (pyramids
// over iterated vertex truncations of the (d-1)-simplex).
bool pyramid_size_admissible(long m, int d);
long least_admissible_pyramid_size(long at_least, int d);

// Diagram of the pyramid over a simple (d-1)-polytope with m vertices, drawn
// in a simplex facet containing the apex. The apex has valency m; every
// other vertex has valency d. outer_vertices[0] is the apex.
SchlegelComplex pyramid_diagram(long m, int d);

// Face lattice of the cyclic polytope C(v_count, d) via Gale evenness.
FaceLattice cyclic_polytope(int v_count, int d);

// Purely combinatorial Schlegel diagram of a polytope lattice over a simplex
// facet. Vertices are re-indexed 0..V-1 in lattice order; cell.source keeps
// the lattice face id.
SchlegelComplex schlegel_of(const FaceLattice& lattice, int outer_facet);

// Replaces the interior of a top-dimensional simplex cell of the host by the
// tiles of a Schlegel diagram. outer_to_target[i] names the host vertex that
// insert.outer_vertices[i] is identified with; it must be a bijection onto
// the target cell's vertices. Returns the insert -> host id maps; replaced
// host cells are tombstoned.
struct GlueResult {
    std::vector<int> vertex_map;
    std::vector<int> cell_map;
};

GlueResult glue(CellComplex& host, int target_cell, const SchlegelComplex& insert,
                const std::vector<int>& outer_to_target);

// Vertex truncation of a simple polytope at one vertex (combinatorial).
FaceLattice truncate_vertex(const FaceLattice& lattice, int vertex_face);

// Pyramid over a polytope lattice; the apex is the last vertex.
FaceLattice pyramid_over(const FaceLattice& base);

} // namespace polyforge
