#pragma once

#include "polyforge/lattice.hpp"
#include "polyforge/permgroup.hpp"
#include "polyforge/rational.hpp"

#include <vector>

namespace polyforge {

// Deterministic initial vertex in the relative interior of the fundamental
// chamber x_1 > x_2 > ... > x_{n+1} > 0 of the Coxeter complex of the
// n-simplex: coordinates proportional to (2^n, ..., 2, 1). All coordinates
// are distinct, which forces a free orbit under any subgroup of S_{n+1}.
RatVec initial_vertex(int n);

// Orbit of v under the coordinate-permutation action, in element order.
// Requires pairwise-distinct coordinates of v.
std::vector<RatVec> orbit(const PermGroup& group, const RatVec& v);

struct HullOptions {
    int max_points = 60;
    int max_dim = 7;
    bool cross_check = true; // run the brute-force oracle when <= 14 points
};

struct HullFacet {
    std::vector<int> points; // sorted input point indices on the facet
    Hyperplane plane;        // chart coordinates, hull strictly below
};

// Exact convex hull with full face lattice. Every input point must be a
// vertex of the hull; an interior or non-vertex point raises IntegrityError
// (it would contradict simple vertex-transitivity upstream).
struct HullResult {
    AffineChart chart;
    std::vector<RatVec> chart_points;
    int dim = 0;
    std::vector<HullFacet> facets;
    FaceLattice lattice;
    std::vector<std::vector<int>> face_points; // per face id: sorted point indices
    std::vector<int> vertex_point;             // vertex ordinal (face id - 1) -> point index
};

HullResult hull_lattice(const std::vector<RatVec>& points, const HullOptions& opts = {});

// Independent facet oracle: enumerates all d-subsets of the chart points and
// keeps supporting hyperplanes. Returns the sorted facet point sets.
std::vector<std::vector<int>> brute_force_facets(const std::vector<RatVec>& chart_points, int dim);

int dimension(const std::vector<RatVec>& points);

// Orbit polytope Q = conv(orbit of the initial vertex), with the bijection
// between hull vertices and group elements.
struct OrbitPolytope {
    std::vector<RatVec> points;
    int dim = 0;
    HullResult hull;
    std::vector<int> vertex_to_group; // rank-0 face id -> group element index
    std::vector<int> group_to_vertex; // element index -> rank-0 face id
};

OrbitPolytope orbit_polytope(const PermGroup& group, const RatVec& v, const HullOptions& opts = {});

} // namespace polyforge
