#pragma once

#include <string>
#include <vector>

namespace polyforge {

// One face of a ranked lattice. `covers` lists the ids of the faces this
// face covers (exactly one rank below).
struct Face {
    int id = -1;
    int rank = -2;
    std::vector<int> covers;
};

// A bounded ranked poset intended to satisfy the abstract polytope axioms.
// Face ids are dense 0..n-1 and assigned rank-major by every producer in
// this project, so downstream stages are bit-for-bit reproducible.
struct FaceLattice {
    int rank = -2;
    std::vector<Face> faces;

    int face_count() const { return static_cast<int>(faces.size()); }
};

// Derived adjacency data shared by the validator, the flag machinery and the
// automorphism engine. Read-only view over a lattice.
struct LatticeInfo {
    const FaceLattice* lattice = nullptr;
    int least = -1;
    int greatest = -1;
    std::vector<std::vector<int>> above;       // inverse cover lists, sorted
    std::vector<std::vector<int>> covers;      // sorted copies of Face::covers
    std::vector<std::vector<int>> by_rank;     // index rank+1 -> face ids
    std::vector<std::vector<int>> vertex_sets; // per face: sorted rank-0 face ids

    const std::vector<int>& rank_faces(int rank) const { return by_rank[rank + 1]; }
    bool covers_contains(int face, int covered) const;
};

LatticeInfo build_info(const FaceLattice& lattice);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    long flag_count = 0;

    bool ok() const;
    std::string summary() const;
};

struct ValidateOptions {
    long strong_flag_cap = 5000; // full section sweep below this many flags
    int section_sample = 512;    // deterministic sample size above the cap
};

// Runs the abstract polytope axiom checks: boundedness, gradedness, diamond
// condition, flag length, flag connectivity, and strong flag connectivity on
// sections (full sweep below the cap, deterministic sample above it).
// Structural problems (unresolvable ids) throw ValidationError.
ValidationReport validate(const FaceLattice& lattice, const ValidateOptions& opts = {});

// All flags (maximal chains, listed by their proper faces rank 0..d-1) in
// lexicographic order, with the i-adjacency maps.
struct FlagSystem {
    std::vector<std::vector<int>> flags;
    std::vector<std::vector<int>> adjacent; // [flag][i] -> flag index

    long count() const { return static_cast<long>(flags.size()); }
};

FlagSystem build_flags(const FaceLattice& lattice, const LatticeInfo& info);

} // namespace polyforge
