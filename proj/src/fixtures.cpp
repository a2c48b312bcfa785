#include "polyforge/fixtures.hpp"
#include "polyforge/errors.hpp"

#include <algorithm>
#include <map>

namespace polyforge {

namespace {

// Assembles a lattice from faces keyed by arbitrary tokens, assigning dense
// rank-major ids (tokens sorted within each rank).
template <typename Key>
FaceLattice assemble(int rank, const std::map<Key, int>& rank_of,
                     const std::map<Key, std::vector<Key>>& covers_of) {
    std::vector<std::pair<int, Key>> order;
    for (const auto& [key, r] : rank_of) order.push_back({r, key});
    std::sort(order.begin(), order.end());
    std::map<Key, int> id_of;
    for (size_t i = 0; i < order.size(); ++i) id_of[order[i].second] = static_cast<int>(i);

    FaceLattice L;
    L.rank = rank;
    for (size_t i = 0; i < order.size(); ++i) {
        Face f;
        f.id = static_cast<int>(i);
        f.rank = order[i].first;
        auto it = covers_of.find(order[i].second);
        if (it != covers_of.end())
            for (const Key& c : it->second) f.covers.push_back(id_of.at(c));
        std::sort(f.covers.begin(), f.covers.end());
        L.faces.push_back(std::move(f));
    }
    return L;
}

} // namespace

FaceLattice simplex_lattice(int d) {
    if (d < 0) throw ValidationError("simplex_lattice: negative rank");
    // Faces are the vertex subsets of {0..d}; rank = |S| - 1.
    using Key = std::vector<int>;
    std::map<Key, int> rank_of;
    std::map<Key, std::vector<Key>> covers_of;
    int n = d + 1;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Key s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.push_back(i);
        rank_of[s] = static_cast<int>(s.size()) - 1;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Key sub;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop) sub.push_back(s[i]);
            covers_of[s].push_back(sub);
        }
        if (s.size() == 1) covers_of[s] = {Key{}};
    }
    return assemble(d, rank_of, covers_of);
}

FaceLattice hypercube_lattice(int d) {
    if (d < 1) throw ValidationError("hypercube_lattice: rank must be >= 1");
    // Proper faces are words over {0,1,*}; rank = number of stars.
    using Key = std::string;
    std::map<Key, int> rank_of;
    std::map<Key, std::vector<Key>> covers_of;

    std::vector<Key> words;
    Key w(d, '0');
    auto gen = [&](auto&& self, int pos) -> void {
        if (pos == d) { words.push_back(w); return; }
        for (char c : {'0', '1', '*'}) {
            w[pos] = c;
            self(self, pos + 1);
        }
    };
    gen(gen, 0);

    Key empty_key = "empty";
    Key top_key = "~top"; // sorts after all words
    rank_of[empty_key] = -1;
    rank_of[top_key] = d;
    for (const Key& word : words) {
        int stars = static_cast<int>(std::count(word.begin(), word.end(), '*'));
        if (stars == d) continue; // improper; replaced by top_key
        rank_of[word] = stars;
        if (stars == 0) {
            covers_of[word] = {empty_key};
        } else {
            for (int i = 0; i < d; ++i) {
                if (word[i] != '*') continue;
                Key sub = word;
                sub[i] = '0';
                covers_of[word].push_back(sub);
                sub[i] = '1';
                covers_of[word].push_back(sub);
            }
        }
        if (stars == d - 1) covers_of[top_key].push_back(word);
    }
    return assemble(d, rank_of, covers_of);
}

FaceLattice crosspolytope_lattice(int d) {
    if (d < 1) throw ValidationError("crosspolytope_lattice: rank must be >= 1");
    // Proper faces are sign vectors on nonempty axis subsets: words over
    // {+,-,.} with at least one signed axis; rank = signed count - 1.
    using Key = std::string;
    std::map<Key, int> rank_of;
    std::map<Key, std::vector<Key>> covers_of;

    std::vector<Key> words;
    Key w(d, '.');
    auto gen = [&](auto&& self, int pos) -> void {
        if (pos == d) { words.push_back(w); return; }
        for (char c : {'+', '-', '.'}) {
            w[pos] = c;
            self(self, pos + 1);
        }
    };
    gen(gen, 0);

    Key empty_key = "empty";
    Key top_key = "~top";
    rank_of[empty_key] = -1;
    rank_of[top_key] = d;
    for (const Key& word : words) {
        int signed_count = d - static_cast<int>(std::count(word.begin(), word.end(), '.'));
        if (signed_count == 0) continue;
        rank_of[word] = signed_count - 1;
        if (signed_count == 1) {
            covers_of[word] = {empty_key};
        } else {
            for (int i = 0; i < d; ++i) {
                if (word[i] == '.') continue;
                Key sub = word;
                sub[i] = '.';
                covers_of[word].push_back(sub);
            }
        }
        if (signed_count == d) covers_of[top_key].push_back(word);
    }
    return assemble(d, rank_of, covers_of);
}

FaceLattice polygon_lattice(int k) {
    if (k < 2) throw ValidationError("polygon_lattice: need k >= 2");
    FaceLattice L;
    L.rank = 2;
    Face least;
    least.id = 0;
    least.rank = -1;
    L.faces.push_back(least);
    for (int i = 0; i < k; ++i) {
        Face v;
        v.id = 1 + i;
        v.rank = 0;
        v.covers = {0};
        L.faces.push_back(v);
    }
    for (int i = 0; i < k; ++i) {
        Face e;
        e.id = 1 + k + i;
        e.rank = 1;
        e.covers = {1 + i, 1 + (i + 1) % k};
        std::sort(e.covers.begin(), e.covers.end());
        L.faces.push_back(e);
    }
    Face top;
    top.id = 1 + 2 * k;
    top.rank = 2;
    for (int i = 0; i < k; ++i) top.covers.push_back(1 + k + i);
    L.faces.push_back(top);
    return L;
}

FaceLattice point_lattice() {
    FaceLattice L;
    L.rank = 0;
    Face least;
    least.id = 0;
    least.rank = -1;
    Face pt;
    pt.id = 1;
    pt.rank = 0;
    pt.covers = {0};
    L.faces = {least, pt};
    return L;
}

FaceLattice segment_lattice() {
    FaceLattice L;
    L.rank = 1;
    Face least;
    least.id = 0;
    least.rank = -1;
    Face v0;
    v0.id = 1;
    v0.rank = 0;
    v0.covers = {0};
    Face v1;
    v1.id = 2;
    v1.rank = 0;
    v1.covers = {0};
    Face top;
    top.id = 3;
    top.rank = 1;
    top.covers = {1, 2};
    L.faces = {least, v0, v1, top};
    return L;
}

std::vector<RatVec> builtin_points(const std::string& name) {
    auto pts = [](std::vector<std::vector<long>> raw) {
        std::vector<RatVec> out;
        for (const auto& row : raw) {
            RatVec p;
            for (long v : row) p.push_back(Rat(v));
            out.push_back(p);
        }
        return out;
    };
    if (name == "triangle") return pts({{0, 0}, {1, 0}, {0, 1}});
    if (name == "tetrahedron") return pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    if (name == "4-simplex")
        return pts({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    if (name == "cube")
        return pts({{-1, -1, -1},
                    {1, -1, -1},
                    {-1, 1, -1},
                    {1, 1, -1},
                    {-1, -1, 1},
                    {1, -1, 1},
                    {-1, 1, 1},
                    {1, 1, 1}});
    if (name == "octahedron")
        return pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    throw ValidationError("unknown built-in point set: " + name);
}

std::vector<std::string> builtin_point_names() {
    return {"triangle", "tetrahedron", "4-simplex", "cube", "octahedron"};
}

FaceLattice builtin_lattice(const std::string& name) {
    if (name == "triangle") return simplex_lattice(2);
    if (name == "tetrahedron") return simplex_lattice(3);
    if (name == "4-simplex") return simplex_lattice(4);
    if (name == "cube") return hypercube_lattice(3);
    if (name == "octahedron") return crosspolytope_lattice(3);
    if (name == "square") return polygon_lattice(4);
    if (name == "pentagon") return polygon_lattice(5);
    if (name == "hexagon") return polygon_lattice(6);
    if (name == "point") return point_lattice();
    if (name == "segment") return segment_lattice();
    throw ValidationError("unknown built-in lattice: " + name);
}

std::vector<std::string> builtin_lattice_names() {
    return {"triangle", "tetrahedron", "4-simplex", "cube",   "octahedron",
            "square",   "pentagon",    "hexagon",   "point",  "segment"};
}

} // namespace polyforge
