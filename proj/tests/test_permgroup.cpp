#include <doctest.h>

#include "polyforge/errors.hpp"
#include "polyforge/permgroup.hpp"

#include <algorithm>
#include <set>

using namespace polyforge;

namespace {

// Quaternion group multiplication table over {1,-1,i,-i,j,-j,k,-k}.
// Element e = (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k.
std::vector<std::vector<int>> quaternion_table() {
    auto mul = [](int a, int b) {
        int sa = a % 2 == 0 ? 1 : -1;
        int sb = b % 2 == 0 ? 1 : -1;
        int xa = a / 2, xb = b / 2;
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        int x = axis[xa][xb];
        int s = sa * sb * sign[xa][xb];
        return 2 * x + (s == 1 ? 0 : 1);
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return t;
}

} // namespace

TEST_SUITE("permgroup") {

TEST_CASE("parse cycle notation") {
    CHECK(parse_permutation("(1 2)(3 4)", 4).images == std::vector<int>{1, 0, 3, 2});
    CHECK(parse_permutation("()", 3).images == std::vector<int>{0, 1, 2});
    CHECK(parse_permutation("(1 2 3)", 4).images == std::vector<int>{1, 2, 0, 3});

    CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), ParseError); // repeated point
    CHECK_THROWS_AS(parse_permutation("(1 5)", 4), ParseError);      // point beyond degree
    CHECK_THROWS_AS(parse_permutation("(1 2", 4), ParseError);       // unterminated
    CHECK_THROWS_AS(parse_permutation("1 2", 4), ParseError);        // no parens
}

TEST_CASE("cycle round trip") {
    Permutation p = parse_permutation("(1 3 2)(4 5)", 6);
    CHECK(parse_permutation(p.to_cycles(), 6) == p);
    CHECK(Permutation::identity(4).to_cycles() == "()");
}

TEST_CASE("closure orders") {
    auto v4 = closure({parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)});
    CHECK(v4.order() == 4);
    auto c3 = closure({parse_permutation("(1 2 3)", 3)});
    CHECK(c3.order() == 3);
    auto s4 = closure({parse_permutation("(1 2)", 4), parse_permutation("(1 2 3 4)", 4)});
    CHECK(s4.order() == 24);
    CHECK(s4.elements[0].is_identity());
}

TEST_CASE("closure cap") {
    CHECK_THROWS_AS(closure({parse_permutation("(1 2)", 5), parse_permutation("(1 2 3 4 5)", 5)}, 100),
                    ResourceError);
}

TEST_CASE("closure is closed under composition") {
    auto g = closure({parse_permutation("(1 2 3)", 4), parse_permutation("(1 2)(3 4)", 4)});
    CHECK(g.order() == 12); // A4
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j)
            CHECK(g.element_index(g.elements[i].compose(g.elements[j])) >= 0);
}

TEST_CASE("classify cyclic and trivial") {
    auto c5 = closure({parse_permutation("(1 2 3 4 5)", 5)});
    GroupClass cls = classify(c5);
    CHECK(cls.tag == GroupClass::Cyclic);
    CHECK(cls.k == 5);

    auto triv = closure({parse_permutation("()", 3)});
    CHECK(classify(triv).tag == GroupClass::Trivial);
}

TEST_CASE("classify V4 as dihedral(2)") {
    auto v4 = closure({parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)});
    GroupClass cls = classify(v4);
    CHECK(cls.tag == GroupClass::Dihedral);
    CHECK(cls.k == 2);
    // Witness sanity: r and s are involutions with s r s = r^-1.
    const auto& r = v4.elements[cls.witness_r];
    const auto& s = v4.elements[cls.witness_s];
    CHECK(r.order() == 2);
    CHECK(s.order() == 2);
    CHECK(s.compose(r).compose(s) == r.inverse());
}

TEST_CASE("classify D4 and D5") {
    auto d4 = closure({parse_permutation("(1 2 3 4)", 4), parse_permutation("(1 3)", 4)});
    GroupClass c4 = classify(d4);
    CHECK(c4.tag == GroupClass::Dihedral);
    CHECK(c4.k == 4);

    auto d5 = closure({parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(2 5)(3 4)", 5)});
    GroupClass c5 = classify(d5);
    CHECK(c5.tag == GroupClass::Dihedral);
    CHECK(c5.k == 5);
}

TEST_CASE("classify A4 as general") {
    auto a4 = closure({parse_permutation("(1 2 3)", 4), parse_permutation("(1 2)(3 4)", 4)});
    CHECK(a4.order() == 12);

    // Independent oracle: brute-force search for a dihedral presentation
    // (r of order 6, involution s outside <r> with s r s = r^-1) and for an
    // element of order 12. A4 has neither.
    bool has_order12 = false;
    bool has_dihedral_pair = false;
    for (long i = 0; i < a4.order(); ++i) {
        if (a4.elements[i].order() == 12) has_order12 = true;
        if (a4.elements[i].order() != 6) continue;
        for (long j = 0; j < a4.order(); ++j) {
            if (a4.elements[j].order() != 2) continue;
            if (a4.elements[j].compose(a4.elements[i]).compose(a4.elements[j]) ==
                a4.elements[i].inverse())
                has_dihedral_pair = true;
        }
    }
    CHECK_FALSE(has_order12);
    CHECK_FALSE(has_dihedral_pair);
    CHECK(classify(a4).tag == GroupClass::General);
}

TEST_CASE("classify is stable under generator reordering") {
    auto a = closure({parse_permutation("(1 2 3 4)", 4), parse_permutation("(1 3)", 4)});
    auto b = closure({parse_permutation("(1 3)", 4), parse_permutation("(1 2 3 4)", 4)});
    GroupClass ca = classify(a), cb = classify(b);
    CHECK(ca.tag == cb.tag);
    CHECK(ca.k == cb.k);
}

TEST_CASE("regular embedding of C2 and C1") {
    auto c2 = regular_embedding({{0, 1}, {1, 0}});
    CHECK(c2.degree == 2);
    CHECK(c2.order() == 2);
    auto c1 = regular_embedding({{0}});
    CHECK(c1.degree == 1);
    CHECK(c1.order() == 1);
}

TEST_CASE("regular embedding of Q8 is faithful and semiregular") {
    auto q8 = regular_embedding(quaternion_table());
    CHECK(q8.degree == 8);
    CHECK(q8.order() == 8);
    std::set<std::vector<int>> distinct;
    for (const auto& e : q8.elements) distinct.insert(e.images);
    CHECK(distinct.size() == 8);
    for (const auto& e : q8.elements) {
        if (e.is_identity()) continue;
        for (int x = 0; x < 8; ++x) CHECK(e.images[x] != x);
    }
    CHECK(classify(q8).tag == GroupClass::General);
}

TEST_CASE("regular embedding rejects bad tables") {
    CHECK_THROWS_AS(regular_embedding({{0, 1}, {0, 1}}), ValidationError);        // not Latin
    CHECK_THROWS_AS(regular_embedding({{1, 0}, {0, 1}}), ValidationError);        // no identity at 0
    // Latin square with identity that is not associative (order 5 loop).
    std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(regular_embedding(loop), ValidationError);
}

} // TEST_SUITE
