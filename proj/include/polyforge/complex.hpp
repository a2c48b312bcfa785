#pragma once

#include "polyforge/lattice.hpp"

#include <vector>

namespace polyforge {

// Provenance of a complex vertex. Subdiv vertices come from faces of a source
// lattice (label = rank, origin = face id); the other kinds mark vertices
// introduced by diagram insertion.
enum class VertexKind { Subdiv, Outer, CrossInner, PyramidInner, PolyInner };

struct ComplexVertex {
    int label = -1;  // type (rank of origin face) or outer-vertex index
    int origin = -1; // source face id / source vertex id, kind-dependent
    VertexKind kind = VertexKind::Subdiv;
};

// A polytopal cell. Vertices are sorted vertex ids; facets are sorted ids of
// the (dim-1)-cells on its boundary.
struct ComplexCell {
    int id = -1;
    int dim = -1;
    std::vector<int> vertices;
    std::vector<int> facets;
    bool alive = true;
    int source = -1; // producer-dependent back-reference
};

// A face-to-face polytopal cell complex with cells of every dimension
// 0..dim. Surgery (glue) tombstones replaced cells; compact() renumbers.
struct CellComplex {
    int dim = 0;
    std::vector<ComplexVertex> vertices;
    std::vector<ComplexCell> cells;
    std::vector<int> vertex_cell; // vertex id -> dim-0 cell id

    int add_vertex(const ComplexVertex& v);
    int add_cell(int dim, std::vector<int> verts, std::vector<int> facets, int source = -1);

    std::vector<int> cells_of_dim(int d) const;      // alive only
    std::vector<int> top_cells() const { return cells_of_dim(dim); }
    long alive_cell_count() const;

    // Vertex valencies in the edge graph (alive 1-cells).
    std::vector<long> valencies() const;

    // Renumbers alive cells densely in (dim, id) order; returns old id -> new
    // id (-1 for dead cells).
    std::vector<int> compact();
};

// Barycentric subdivision of the boundary complex of a lattice: one vertex
// per proper face (typed by rank), one simplex per chain, one chamber per
// flag. Vertices are ordered rank-major; cells sorted by (dim, vertex list).
CellComplex barycentric_subdivision(const FaceLattice& lattice);

// Cells of the closed star of a vertex (all alive cells containing it plus
// their faces) and of its link, with original ids.
struct Subcomplex {
    std::vector<int> cell_ids;
    std::vector<int> chamber_ids; // top-dimensional members
};

Subcomplex vertex_star(const CellComplex& cx, int vertex);
Subcomplex vertex_link(const CellComplex& cx, int vertex);

long chamber_count_through(const CellComplex& cx, int vertex);

// Completes a complex to a rank-(dim+1) face lattice by adjoining least and
// greatest faces. Cell ids map to face ids via +1.
FaceLattice complete_polytope(const CellComplex& cx);

} // namespace polyforge
