#pragma once

#include <string>
#include <vector>

namespace polyforge {

// A permutation of {0..degree-1}, stored as the image sequence.
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[x]; }
    bool operator==(const Permutation& o) const = default;
    bool is_identity() const;

    static Permutation identity(int degree);
    Permutation compose(const Permutation& other) const; // this after other
    Permutation inverse() const;
    int order() const;
    std::string to_cycles() const; // 1-based cycle notation
};

// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4)".
// "()" is the identity. Errors name the offending token.
Permutation parse_permutation(const std::string& text, int degree);

// A finite permutation group with fully enumerated elements. elements[0] is
// always the identity; enumeration order is the breadth-first closure order
// and is deterministic given the generator order.
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    long order() const { return static_cast<long>(elements.size()); }
    int element_index(const Permutation& p) const; // -1 if absent
    int mul(int i, int j) const;                   // index of elements[i] o elements[j]
    int inv(int i) const;
};

PermGroup closure(const std::vector<Permutation>& generators, long max_elements = 10080);

struct GroupClass {
    enum Tag { Trivial, Cyclic, Dihedral, General };
    Tag tag = General;
    long k = 0;          // cyclic(k) / dihedral(k)
    int witness_r = -1;  // element index of the rotation witness
    int witness_s = -1;  // element index of the reflection witness (dihedral)
};

// Recognizes trivial / cyclic(k) / dihedral(k) by brute force over elements;
// everything else is General.
GroupClass classify(const PermGroup& group);

// Left-regular (Cayley) representation of an abstract group given by its
// multiplication table (row times column, identity at index 0).
PermGroup regular_embedding(const std::vector<std::vector<int>>& table);

} // namespace polyforge
