#pragma once

#include "polyforge/autgroup.hpp"
#include "polyforge/complex.hpp"
#include "polyforge/diagrams.hpp"
#include "polyforge/hull.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/permgroup.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace polyforge {

// The inductive valency plan: a bound m on every interior-vertex valency,
// per-type pyramid sizes m_i, and the disjoint interval chain
// m < a_{d-1} <= b_{d-1} < ... < a_0 <= b_0.
struct ValencyPlan {
    int d = 0;
    long m = 0;
    std::vector<long> m_by_type;                 // index = type i
    std::vector<std::array<long, 2>> intervals;  // index = type i: [a_i, b_i]
    std::vector<std::array<long, 4>> s_stats;    // per type: s min/max, val_CQ min/max

    void assert_chain() const; // throws IntegrityError if the chain fails
};

struct ForgeOptions {
    bool force_general = false;
    long max_elements = 10080;
    HullOptions hull;
    ValidateOptions validate;
};

struct ConstructionReport {
    std::string branch;
    int d = 0;
    long group_order = 0;
    long chamber_count = 0;
    std::map<std::string, long> counts;
    bool has_plan = false;
    ValencyPlan plan;
    VerificationResult verification;
    double seconds = 0.0; // console only; never serialized
};

struct Construction {
    FaceLattice polytope;
    ConstructionReport report;
    std::vector<std::vector<int>> embedding; // general branch: face perms per element
};

// Rank-3 lattice with automorphism group exactly C_k: a central k-gon in a
// band of chirally split sectors under an outer k-gon cap.
FaceLattice wheel_polyhedron(int k);

// Rank-2 lattice of the k-gon (k = 2 gives the digon).
FaceLattice polygon(int k);

// The refinement of C(Q) with every chamber replaced by a decorated diagram,
// with enough provenance to transport the group action to the result.
struct DecoratedComplex {
    CellComplex cx;             // compacted
    int d = 0;
    long base_star_size = 0;
    std::vector<int> insert_of_chamber;          // pre-compaction chamber cell id -> insert index
    std::vector<std::vector<int>> chamber_glue_cells;   // idem -> insert cell id -> final cell id
    std::vector<std::vector<int>> chamber_glue_verts;   // idem -> insert vertex id -> final vertex id
    std::vector<long> insert_vertex_counts;      // per insert complex
    long cq_vertex_count = 0;                    // C(Q) vertices keep ids 0..n-1
    std::vector<int> cq_vertex_type;             // labels of the C(Q) vertices
    std::vector<long> cq_vertex_s;               // chambers through each C(Q) vertex
    std::vector<long> cq_vertex_val;             // valency within C(Q)
};

ValencyPlan plan_valencies(const CellComplex& cq, int d,
                           const std::vector<FaceLattice>& star_polytopes,
                           const std::vector<int>& star_outer_facets);

DecoratedComplex decorate(const CellComplex& cq, const PermGroup& group, const OrbitPolytope& q,
                          const ValencyPlan& plan);

// complete_polytope lives in complex.hpp; forge re-exports the pipeline.
Construction construct(const PermGroup& group, const ForgeOptions& opts = {});

} // namespace polyforge
