#pragma once

#include "polyforge/lattice.hpp"
#include "polyforge/rational.hpp"

#include <string>
#include <vector>

namespace polyforge {

// Combinatorial fixtures. All face ids are dense and rank-major.
FaceLattice simplex_lattice(int d);
FaceLattice hypercube_lattice(int d);
FaceLattice crosspolytope_lattice(int d);
FaceLattice polygon_lattice(int k); // k >= 2 (k = 2 is the digon)
FaceLattice point_lattice();        // rank 0
FaceLattice segment_lattice();      // rank 1

// Exact vertex coordinates for the named built-in polytopes:
// triangle, tetrahedron, 4-simplex, cube, octahedron, pentagon is not
// geometric (use polygon_lattice).
std::vector<RatVec> builtin_points(const std::string& name);
std::vector<std::string> builtin_point_names();

// Built-in lattices by name: triangle, tetrahedron, 4-simplex, cube,
// octahedron, pentagon, square, hexagon.
FaceLattice builtin_lattice(const std::string& name);
std::vector<std::string> builtin_lattice_names();

} // namespace polyforge
