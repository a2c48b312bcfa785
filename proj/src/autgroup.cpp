#include "polyforge/autgroup.hpp"
#include "polyforge/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace polyforge {

int AutGroup::element_order(int index) const {
    const auto& e = elements[index];
    std::vector<int> cur = e;
    int n = 1;
    auto is_id = [](const std::vector<int>& p) {
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] != static_cast<int>(i)) return false;
        return true;
    };
    while (!is_id(cur)) {
        cur = compose(cur, e);
        ++n;
    }
    return n;
}

std::vector<int> AutGroup::compose(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

namespace {

// Local isomorphism invariant per face: (rank, #covers, #covered-by).
std::vector<std::array<int, 3>> face_signatures(const FaceLattice& L, const LatticeInfo& info) {
    std::vector<std::array<int, 3>> sig(L.face_count());
    for (int f = 0; f < L.face_count(); ++f)
        sig[f] = {L.faces[f].rank, static_cast<int>(info.covers[f].size()),
                  static_cast<int>(info.above[f].size())};
    return sig;
}

std::vector<int> flag_signature(const std::vector<int>& flag,
                                const std::vector<std::array<int, 3>>& sig) {
    std::vector<int> s;
    for (int f : flag) {
        s.push_back(sig[f][1]);
        s.push_back(sig[f][2]);
    }
    return s;
}

} // namespace

AutGroup automorphisms(const FaceLattice& lattice, const AutOptions& opts) {
    LatticeInfo info = build_info(lattice);
    FlagSystem fs = build_flags(lattice, info);
    const int d = lattice.rank;
    const long nflags = fs.count();
    const int nfaces = lattice.face_count();

    AutGroup aut;
    if (d == 0) {
        aut.order = 1;
        aut.elements = {{0, 1}};
        aut.base_flag = 0;
        return aut;
    }

    auto sigs = face_signatures(lattice, info);
    std::map<std::vector<int>, std::vector<int>> classes;
    for (long i = 0; i < nflags; ++i) classes[flag_signature(fs.flags[i], sigs)].push_back(i);

    // Base flag from the smallest signature class (fewest candidates).
    long base = 0;
    if (opts.use_signature_filter) {
        size_t best = fs.flags.size() + 1;
        for (const auto& [key, members] : classes) {
            if (members.size() < best) {
                best = members.size();
                base = members[0];
            }
        }
    }
    aut.base_flag = static_cast<int>(base);
    const std::vector<int> base_sig = flag_signature(fs.flags[base], sigs);

    std::vector<long> candidates;
    if (opts.use_signature_filter) {
        candidates = std::vector<long>(classes[base_sig].begin(), classes[base_sig].end());
    } else {
        for (long i = 0; i < nflags; ++i) candidates.push_back(i);
    }

    for (long target : candidates) {
        // Attempt the unique adjacency-respecting extension base -> target.
        std::vector<int> flag_img(nflags, -1);
        std::vector<int> face_img(nfaces, -1);
        face_img[info.least] = info.least;
        face_img[info.greatest] = info.greatest;
        bool ok = true;

        auto assign_faces = [&](long f, long g) {
            for (int r = 0; r < d; ++r) {
                int a = fs.flags[f][r];
                int b = fs.flags[g][r];
                if (face_img[a] == -1) {
                    face_img[a] = b;
                } else if (face_img[a] != b) {
                    return false;
                }
            }
            return true;
        };

        std::queue<long> bfs;
        flag_img[base] = static_cast<int>(target);
        if (!assign_faces(base, target)) continue;
        bfs.push(base);
        while (ok && !bfs.empty()) {
            long f = bfs.front();
            bfs.pop();
            long g = flag_img[f];
            for (int i = 0; i < d; ++i) {
                long fi = fs.adjacent[f][i];
                long gi = fs.adjacent[g][i];
                if (flag_img[fi] == -1) {
                    flag_img[fi] = static_cast<int>(gi);
                    if (!assign_faces(fi, gi)) { ok = false; break; }
                    bfs.push(fi);
                } else if (flag_img[fi] != gi) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        // Well-defined everywhere (flag connectivity covers every proper
        // face) and bijective.
        std::vector<bool> hit(nfaces, false);
        for (int f = 0; f < nfaces && ok; ++f) {
            if (face_img[f] < 0) { ok = false; break; }
            if (hit[face_img[f]]) { ok = false; break; }
            hit[face_img[f]] = true;
        }
        if (ok) aut.elements.push_back(face_img);
    }

    std::sort(aut.elements.begin(), aut.elements.end());
    aut.order = static_cast<long>(aut.elements.size());
    return aut;
}

namespace {

struct BacktrackState {
    const FaceLattice* a;
    const FaceLattice* b;
    const LatticeInfo* ia;
    const LatticeInfo* ib;
    std::vector<std::array<int, 3>> sa, sb;
    std::vector<int> order; // faces of a in assignment order
    std::vector<int> img;
    std::vector<bool> used;
    bool find_all = true;
    std::vector<std::vector<int>> found;

    bool consistent(int f, int g) const {
        if (sa[f] != sb[g]) return false;
        // Covers of f already assigned must map into covers of g, and
        // conversely for faces covering f.
        for (int c : ia->covers[f]) {
            if (img[c] == -1) continue;
            if (!std::binary_search(ib->covers[g].begin(), ib->covers[g].end(), img[c]))
                return false;
        }
        for (int u : ia->above[f]) {
            if (img[u] == -1) continue;
            if (!std::binary_search(ib->covers[img[u]].begin(), ib->covers[img[u]].end(), g))
                return false;
        }
        return true;
    }

    bool rec(size_t idx) {
        if (idx == order.size()) {
            found.push_back(img);
            return !find_all; // stop at first when not collecting all
        }
        int f = order[idx];
        for (int g = 0; g < b->face_count(); ++g) {
            if (used[g] || b->faces[g].rank != a->faces[f].rank) continue;
            if (!consistent(f, g)) continue;
            img[f] = g;
            used[g] = true;
            if (rec(idx + 1)) return true;
            img[f] = -1;
            used[g] = false;
        }
        return false;
    }
};

} // namespace

AutGroup brute_force_automorphisms(const FaceLattice& lattice, int max_faces) {
    if (lattice.face_count() > max_faces)
        throw ResourceError("brute_force_automorphisms: face count " +
                            std::to_string(lattice.face_count()) + " exceeds cap " +
                            std::to_string(max_faces));
    LatticeInfo info = build_info(lattice);
    BacktrackState st;
    st.a = &lattice;
    st.b = &lattice;
    st.ia = &info;
    st.ib = &info;
    st.sa = face_signatures(lattice, info);
    st.sb = st.sa;
    for (int f = 0; f < lattice.face_count(); ++f) st.order.push_back(f);
    st.img.assign(lattice.face_count(), -1);
    st.used.assign(lattice.face_count(), false);
    st.find_all = true;
    st.rec(0);

    AutGroup aut;
    aut.elements = std::move(st.found);
    std::sort(aut.elements.begin(), aut.elements.end());
    aut.order = static_cast<long>(aut.elements.size());
    return aut;
}

std::optional<std::vector<int>> find_isomorphism(const FaceLattice& a, const FaceLattice& b,
                                                 int max_faces) {
    if (a.rank != b.rank || a.face_count() != b.face_count()) return std::nullopt;
    if (a.face_count() > max_faces)
        throw ResourceError("find_isomorphism: face count exceeds cap");
    LatticeInfo ia = build_info(a);
    LatticeInfo ib = build_info(b);
    BacktrackState st;
    st.a = &a;
    st.b = &b;
    st.ia = &ia;
    st.ib = &ib;
    st.sa = face_signatures(a, ia);
    st.sb = face_signatures(b, ib);
    for (int f = 0; f < a.face_count(); ++f) st.order.push_back(f);
    st.img.assign(a.face_count(), -1);
    st.used.assign(b.face_count(), false);
    st.find_all = false;
    st.rec(0);
    if (st.found.empty()) return std::nullopt;
    return st.found[0];
}

namespace {

bool is_lattice_automorphism(const FaceLattice& L, const LatticeInfo& info,
                             const std::vector<int>& perm, std::string& why) {
    int n = L.face_count();
    if (static_cast<int>(perm.size()) != n) {
        why = "wrong length";
        return false;
    }
    std::vector<bool> hit(n, false);
    for (int f = 0; f < n; ++f) {
        int g = perm[f];
        if (g < 0 || g >= n || hit[g]) {
            why = "not a bijection at face " + std::to_string(f);
            return false;
        }
        hit[g] = true;
        if (L.faces[f].rank != L.faces[g].rank) {
            why = "rank not preserved at face " + std::to_string(f);
            return false;
        }
    }
    for (int f = 0; f < n; ++f) {
        std::vector<int> mapped;
        for (int c : info.covers[f]) mapped.push_back(perm[c]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != info.covers[perm[f]]) {
            why = "covers not preserved at face " + std::to_string(f);
            return false;
        }
    }
    return true;
}

} // namespace

VerificationResult verify_construction(const FaceLattice& lattice, const PermGroup& group,
                                       const std::vector<std::vector<int>>& embedding) {
    VerificationResult res;
    LatticeInfo info = build_info(lattice);

    bool all_auto = true;
    std::string witness;
    if (embedding.size() != group.elements.size()) {
        all_auto = false;
        witness = "embedding size mismatch";
    } else {
        for (size_t i = 0; i < embedding.size() && all_auto; ++i) {
            std::string why;
            if (!is_lattice_automorphism(lattice, info, embedding[i], why)) {
                all_auto = false;
                witness = "element " + std::to_string(i) + ": " + why;
            }
        }
    }
    res.checks.push_back({"group_embeds_as_automorphisms", all_auto, witness});

    bool injective = true;
    witness.clear();
    for (size_t i = 0; i < embedding.size() && injective; ++i)
        for (size_t j = i + 1; j < embedding.size(); ++j)
            if (embedding[i] == embedding[j]) {
                injective = false;
                witness = "elements " + std::to_string(i) + " and " + std::to_string(j) +
                          " act identically";
                break;
            }
    res.checks.push_back({"embedding_injective", injective, witness});

    AutGroup aut = automorphisms(lattice);
    res.aut_order = aut.order;
    bool order_match = aut.order == group.order();
    res.checks.push_back({"aut_order_equals_group_order", order_match,
                          order_match ? "" : "aut order " + std::to_string(aut.order) +
                                             " vs group order " + std::to_string(group.order())});

    res.certified = all_auto && injective && order_match;
    return res;
}

VerificationResult verify_special(const FaceLattice& lattice, const GroupClass& cls) {
    VerificationResult res;
    AutGroup aut = automorphisms(lattice);
    res.aut_order = aut.order;

    long expect = 0;
    if (cls.tag == GroupClass::Trivial) expect = 1;
    else if (cls.tag == GroupClass::Cyclic) expect = cls.k;
    else if (cls.tag == GroupClass::Dihedral) expect = 2 * cls.k;
    else throw ValidationError("verify_special: only trivial/cyclic/dihedral branches");

    bool order_ok = aut.order == expect;
    res.checks.push_back({"aut_order_matches", order_ok,
                          order_ok ? "" : "aut order " + std::to_string(aut.order) + " vs expected " +
                                          std::to_string(expect)});

    bool witness_ok = false;
    std::string witness;
    if (cls.tag == GroupClass::Trivial) {
        witness_ok = aut.order == 1;
    } else if (cls.tag == GroupClass::Cyclic) {
        for (long i = 0; i < aut.order; ++i)
            if (aut.element_order(static_cast<int>(i)) == cls.k) {
                witness_ok = true;
                witness = "generator at index " + std::to_string(i);
                break;
            }
        if (!witness_ok) witness = "no element of order " + std::to_string(cls.k);
    } else {
        for (long ri = 0; ri < aut.order && !witness_ok; ++ri) {
            if (aut.element_order(static_cast<int>(ri)) != cls.k) continue;
            std::vector<int> rinv(aut.elements[ri].size());
            for (size_t x = 0; x < rinv.size(); ++x) rinv[aut.elements[ri][x]] = static_cast<int>(x);
            // Powers of r; the reflection witness must lie outside them.
            std::set<std::vector<int>> r_powers;
            {
                std::vector<int> cur(aut.elements[ri].size());
                for (size_t x = 0; x < cur.size(); ++x) cur[x] = static_cast<int>(x);
                for (long t = 0; t < cls.k; ++t) {
                    r_powers.insert(cur);
                    cur = aut.compose(aut.elements[ri], cur);
                }
            }
            for (long si = 0; si < aut.order; ++si) {
                if (aut.element_order(static_cast<int>(si)) != 2) continue;
                if (r_powers.count(aut.elements[si])) continue;
                auto srs = aut.compose(aut.compose(aut.elements[si], aut.elements[ri]),
                                       aut.elements[si]);
                if (srs == rinv) {
                    witness_ok = true;
                    witness = "pair (" + std::to_string(ri) + "," + std::to_string(si) + ")";
                    break;
                }
            }
        }
        if (!witness_ok) witness = "no dihedral presentation pair";
    }
    res.checks.push_back({"group_isomorphism_witness", witness_ok, witness});

    res.certified = order_ok && witness_ok;
    return res;
}

} // namespace polyforge
