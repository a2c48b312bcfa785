#pragma once

#include "polyforge/lattice.hpp"
#include "polyforge/permgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyforge {

// The automorphism group of a face lattice. Elements are face permutations
// (rank- and incidence-preserving bijections), sorted lexicographically.
struct AutGroup {
    long order = 0;
    std::vector<std::vector<int>> elements;
    int base_flag = -1;

    int element_order(int index) const;
    std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) const;
};

struct AutOptions {
    bool use_signature_filter = true; // prunes candidate flags by local invariants
};

// Flag-walk engine: a candidate image of the base flag extends to at most one
// automorphism, found by walking the flag graph; accepted iff the induced
// face map is well-defined and bijective.
AutGroup automorphisms(const FaceLattice& lattice, const AutOptions& opts = {});

// Independent oracle: backtracking over rank-preserving face bijections that
// respect covers. Hard face-count cap.
AutGroup brute_force_automorphisms(const FaceLattice& lattice, int max_faces = 40);

// First lattice isomorphism found by backtracking, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FaceLattice& a, const FaceLattice& b,
                                                 int max_faces = 600);

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct VerificationResult {
    long aut_order = 0;
    bool certified = false;
    std::vector<VerificationCheck> checks;
};

// Certifies Gamma(P) = Gamma for the general construction: each embedded
// group element is an automorphism, the embedding is injective, and
// |Aut(P)| = |Gamma|.
VerificationResult verify_construction(const FaceLattice& lattice, const PermGroup& group,
                                       const std::vector<std::vector<int>>& embedding);

// Certifies the special branches: |Aut| = k with a cyclic witness, or
// |Aut| = 2k with a dihedral presentation pair.
VerificationResult verify_special(const FaceLattice& lattice, const GroupClass& cls);

} // namespace polyforge
