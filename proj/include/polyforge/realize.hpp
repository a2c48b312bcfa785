#pragma once

#include "polyforge/hull.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyforge {

// A convex polytope with exact vertices, its face lattice, and oriented
// facet hyperplanes (interior strictly below). Geometry lives in chart
// coordinates over the affine span; ambient coordinates are recoverable.
struct GeometricPolytope {
    std::vector<RatVec> ambient_points;
    AffineChart chart;
    std::vector<RatVec> points; // chart coordinates
    int dim = 0;
    FaceLattice lattice;
    std::vector<std::vector<int>> face_points;
    std::vector<HullFacet> facets;
};

GeometricPolytope make_polytope(const std::vector<RatVec>& points, const HullOptions& opts = {});

// Hyperplane families of the pulling step: H_F (facet hyperplanes containing
// F) and H_F^- (those meeting F in a nonempty proper face). F is given by
// its point-index set.
std::pair<std::vector<int>, std::vector<int>> hyperplane_sets(const GeometricPolytope& current,
                                                              const std::vector<int>& face_points);

struct RealizeOptions {
    int q_max_exponent = 16; // retry denominators 2, 4, ..., 2^q_max_exponent
    HullOptions hull;
};

// Result of the rank-descending pulling construction: a polytope whose
// boundary complex is combinatorially the barycentric subdivision of the
// input, plus the explicit lattice isomorphism as a certificate.
struct RealizeResult {
    GeometricPolytope realized;
    std::vector<int> point_provenance;          // point index -> face id of the input lattice
    FaceLattice subdivision_lattice;            // completed order complex of the input
    std::vector<std::pair<int, int>> iso;       // realized face id -> subdivision face id
};

RealizeResult pull_realize(const GeometricPolytope& p, const RealizeOptions& opts = {});

// Constructs the isomorphism bd(a) -> b from the vertex provenance map and
// verifies it preserves covers exhaustively. Throws CertificationError with
// a witness pair on mismatch.
std::vector<std::pair<int, int>> equivalence_check(const FaceLattice& a, const FaceLattice& b,
                                                   const std::vector<int>& vertex_map);

// OFF serialization for 3-dimensional realized polytopes; exact rationals
// rendered as decimals with the given precision.
std::string to_off(const GeometricPolytope& p, int precision);

} // namespace polyforge
