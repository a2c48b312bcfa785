#include "polyforge/forge.hpp"
#include "polyforge/errors.hpp"
#include "polyforge/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace polyforge {

FaceLattice polygon(int k) {
    return polygon_lattice(k);
}

FaceLattice wheel_polyhedron(int k) {
    if (k < 3) throw ValidationError("wheel_polyhedron: need k >= 3");
    // Vertices: inner ring a_0..a_{k-1}, outer ring b_0..b_{k-1}, middle ring
    // c_0..c_{k-1}. Each sector holds one triangle and one pentagon; the
    // asymmetric edge c_i -- b_{i+1} breaks every reflection and the
    // inner/outer swap, leaving exactly the k rotations.
    using Key = std::pair<int, int>; // (-1,0) empty, (0,v) vertex, (1,e) edge, (2,f) face, (3,0) top
    std::map<Key, int> rank_of;
    std::map<Key, std::vector<Key>> covers_of;

    auto A = [&](int i) { return Key{0, ((i % k) + k) % k}; };
    auto B = [&](int i) { return Key{0, k + ((i % k) + k) % k}; };
    auto C = [&](int i) { return Key{0, 2 * k + ((i % k) + k) % k}; };

    rank_of[{-1, 0}] = -1;
    rank_of[{3, 0}] = 3;
    for (int i = 0; i < 3 * k; ++i) {
        rank_of[{0, i}] = 0;
        covers_of[{0, i}] = {Key{-1, 0}};
    }
    // Edge tokens: 5 families of k edges.
    auto edge = [&](int family, int i) { return Key{1, family * k + ((i % k) + k) % k}; };
    for (int i = 0; i < k; ++i) {
        covers_of[edge(0, i)] = {A(i), A(i + 1)};     // inner ring
        covers_of[edge(1, i)] = {B(i), B(i + 1)};     // outer ring
        covers_of[edge(2, i)] = {A(i), C(i)};         // spoke
        covers_of[edge(3, i)] = {C(i), B(i)};         // middle to outer
        covers_of[edge(4, i)] = {C(i), B(i + 1)};     // the chiral edge
        for (int fam = 0; fam < 5; ++fam) rank_of[edge(fam, i)] = 1;
    }
    // Faces: inner k-gon, outer k-gon, k triangles, k pentagons.
    rank_of[{2, 0}] = 2; // inner polygon
    rank_of[{2, 1}] = 2; // outer polygon
    for (int i = 0; i < k; ++i) {
        covers_of[{2, 0}].push_back(edge(0, i));
        covers_of[{2, 1}].push_back(edge(1, i));
        Key tri{2, 2 + i};
        rank_of[tri] = 2;
        covers_of[tri] = {edge(3, i), edge(1, i), edge(4, i)};
        Key pent{2, 2 + k + i};
        rank_of[pent] = 2;
        covers_of[pent] = {edge(0, i), edge(2, i + 1), edge(3, i + 1), edge(4, i), edge(2, i)};
    }
    for (int f = 0; f < 2 + 2 * k; ++f) covers_of[{3, 0}].push_back({2, f});

    std::vector<std::pair<int, Key>> order;
    for (const auto& [key, r] : rank_of) order.push_back({r, key});
    std::sort(order.begin(), order.end());
    std::map<Key, int> id_of;
    for (size_t i = 0; i < order.size(); ++i) id_of[order[i].second] = static_cast<int>(i);

    FaceLattice L;
    L.rank = 3;
    for (size_t i = 0; i < order.size(); ++i) {
        Face f;
        f.id = static_cast<int>(i);
        f.rank = order[i].first;
        for (const Key& c : covers_of[order[i].second]) f.covers.push_back(id_of.at(c));
        std::sort(f.covers.begin(), f.covers.end());
        f.covers.erase(std::unique(f.covers.begin(), f.covers.end()), f.covers.end());
        L.faces.push_back(std::move(f));
    }
    return L;
}

void ValencyPlan::assert_chain() const {
    long prev_b = m;
    for (int j = d - 1; j >= 0; --j) {
        long a = intervals[j][0];
        long b = intervals[j][1];
        if (!(prev_b < a))
            throw IntegrityError("valency plan: interval chain fails at type " + std::to_string(j) +
                                 ": " + std::to_string(prev_b) + " !< " + std::to_string(a));
        if (!(a <= b))
            throw IntegrityError("valency plan: empty interval at type " + std::to_string(j));
        prev_b = b;
    }
}

ValencyPlan plan_valencies(const CellComplex& cq, int d,
                           const std::vector<FaceLattice>& star_polytopes,
                           const std::vector<int>& star_outer_facets) {
    ValencyPlan plan;
    plan.d = d;

    // Interior-valency bound m, in closed form from the chosen families:
    // pyramid interiors end at valency d; a vertex y of L ends at val_L(y),
    // plus 2(d-1) more when y lands on the central simplex (d-1 edges to the
    // rest of the crosspolytope diagram and one per pyramid glued next to it).
    long m = d;
    for (size_t i = 0; i < star_polytopes.size(); ++i) {
        LatticeInfo info = build_info(star_polytopes[i]);
        const auto& outer_set = info.vertex_sets[star_outer_facets[i]];
        for (int vf : info.rank_faces(0)) {
            long val = static_cast<long>(info.above[vf].size()); // edges at the vertex
            if (std::binary_search(outer_set.begin(), outer_set.end(), vf)) val += 2 * (d - 1);
            m = std::max(m, val);
        }
    }
    plan.m = m;

    // Per-type statistics over the C(Q) vertices.
    auto val = cq.valencies();
    std::vector<std::vector<std::pair<long, long>>> by_type(d); // (s_x, val_x)
    for (size_t x = 0; x < cq.vertices.size(); ++x) {
        int t = cq.vertices[x].label;
        if (t < 0 || t >= d) throw IntegrityError("plan_valencies: untyped C(Q) vertex");
        by_type[t].push_back({chamber_count_through(cq, static_cast<int>(x)), val[x]});
    }
    plan.s_stats.assign(d, {0, 0, 0, 0});
    for (int t = 0; t < d; ++t) {
        if (by_type[t].empty()) throw IntegrityError("plan_valencies: no vertices of a type");
        long smin = by_type[t][0].first, smax = smin;
        long vmin = by_type[t][0].second, vmax = vmin;
        for (const auto& [s, v] : by_type[t]) {
            smin = std::min(smin, s);
            smax = std::max(smax, s);
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
        plan.s_stats[t] = {smin, smax, vmin, vmax};
    }

    // Inductive choice of m_j, from type d-1 down to 0: the least admissible
    // pyramid size whose minimum resulting valency clears the previous bound.
    plan.m_by_type.assign(d, 0);
    plan.intervals.assign(d, {0, 0});
    long bound = m;
    for (int j = d - 1; j >= 0; --j) {
        long needed = 3;
        for (const auto& [s, v] : by_type[j]) {
            // smallest mj with v + s*mj > bound
            long req = (bound - v) / s + 1;
            needed = std::max(needed, req);
        }
        long mj = least_admissible_pyramid_size(needed, d);
        while (true) {
            long amin = by_type[j][0].second + by_type[j][0].first * mj;
            for (const auto& [s, v] : by_type[j]) amin = std::min(amin, v + s * mj);
            if (amin > bound) break;
            mj = least_admissible_pyramid_size(mj + 1, d);
        }
        long a = by_type[j][0].second + by_type[j][0].first * mj;
        long b = a;
        for (const auto& [s, v] : by_type[j]) {
            a = std::min(a, v + s * mj);
            b = std::max(b, v + s * mj);
        }
        plan.m_by_type[j] = mj;
        plan.intervals[j] = {a, b};
        bound = b;
    }
    plan.assert_chain();
    return plan;
}

namespace {

// The complex R^L for one base-star chamber: crosspolytope diagram, pyramids
// of size m_t glued into F_{u_t}, and the Schlegel diagram of L glued into
// the central tile.
SchlegelComplex build_decoration(int d, const std::vector<long>& m_by_type, const FaceLattice& L,
                                 int outer_facet, long expected_m) {
    SchlegelComplex diag = crosspolytope_diagram(d);
    for (int t = 0; t < d; ++t) {
        SchlegelComplex pyr = pyramid_diagram(m_by_type[t], d);
        const auto& fu = diag.cx.cells[diag.fu_cells[t]];
        std::vector<int> rest;
        for (int v : fu.vertices)
            if (v != t) rest.push_back(v);
        std::vector<int> vmap{t};
        vmap.insert(vmap.end(), rest.begin(), rest.end());
        glue(diag.cx, diag.fu_cells[t], pyr, vmap);
    }
    SchlegelComplex ldiag = schlegel_of(L, outer_facet);
    std::vector<int> z_vertices = diag.cx.cells[diag.central_cell].vertices;
    glue(diag.cx, diag.central_cell, ldiag, z_vertices);

    auto val = diag.cx.valencies();
    for (int t = 0; t < d; ++t) {
        if (val[t] != m_by_type[t] + d - 1)
            throw IntegrityError("decoration: u_" + std::to_string(t) + " valency " +
                                 std::to_string(val[t]) + " != m_t + d - 1 = " +
                                 std::to_string(m_by_type[t] + d - 1));
    }
    for (size_t v = d; v < val.size(); ++v) {
        if (val[v] > expected_m)
            throw IntegrityError("decoration: interior vertex valency " + std::to_string(val[v]) +
                                 " exceeds the bound m = " + std::to_string(expected_m));
    }
    return diag;
}

} // namespace

DecoratedComplex decorate(const CellComplex& cq, const PermGroup& group, const OrbitPolytope& q,
                          const ValencyPlan& plan) {
    const int d = plan.d;
    DecoratedComplex dc;
    dc.d = d;
    dc.cx = cq; // host starts as a copy of C(Q)
    dc.cq_vertex_count = static_cast<long>(cq.vertices.size());
    dc.cq_vertex_type.resize(cq.vertices.size());
    dc.cq_vertex_s.resize(cq.vertices.size());
    dc.cq_vertex_val.resize(cq.vertices.size());
    auto base_val = cq.valencies();
    for (size_t x = 0; x < cq.vertices.size(); ++x) {
        dc.cq_vertex_type[x] = cq.vertices[x].label;
        dc.cq_vertex_s[x] = chamber_count_through(cq, static_cast<int>(x));
        dc.cq_vertex_val[x] = base_val[x];
    }

    // The base vertex: the C(Q) vertex over the identity's orbit point.
    int base_face = q.group_to_vertex[0];
    int base_vertex = -1;
    for (size_t x = 0; x < cq.vertices.size(); ++x)
        if (cq.vertices[x].label == 0 && cq.vertices[x].origin == base_face)
            base_vertex = static_cast<int>(x);
    if (base_vertex < 0) throw IntegrityError("decorate: base vertex not found");

    Subcomplex base_star = vertex_star(cq, base_vertex);
    std::vector<int> base_chambers = base_star.chamber_ids;
    std::sort(base_chambers.begin(), base_chambers.end());
    dc.base_star_size = static_cast<long>(base_chambers.size());
    std::map<int, int> base_index;
    for (size_t i = 0; i < base_chambers.size(); ++i)
        base_index[base_chambers[i]] = static_cast<int>(i);

    // One decoration complex per base-star chamber, pairwise non-isomorphic
    // by vertex count.
    std::vector<SchlegelComplex> inserts;
    for (size_t i = 0; i < base_chambers.size(); ++i) {
        FaceLattice L = cyclic_polytope(d + 2 + static_cast<int>(i), d);
        LatticeInfo linfo = build_info(L);
        int outer = -1;
        const std::vector<int>* best = nullptr;
        for (int f : linfo.rank_faces(d - 1)) {
            if (!best || linfo.vertex_sets[f] < *best) {
                outer = f;
                best = &linfo.vertex_sets[f];
            }
        }
        inserts.push_back(build_decoration(d, plan.m_by_type, L, outer, plan.m));
        dc.insert_vertex_counts.push_back(static_cast<long>(inserts.back().cx.vertices.size()));
    }
    for (size_t i = 0; i < inserts.size(); ++i)
        for (size_t j = i + 1; j < inserts.size(); ++j)
            if (dc.insert_vertex_counts[i] == dc.insert_vertex_counts[j])
                throw IntegrityError("decorate: two decoration complexes share a vertex count");

    // Group action on C(Q) cells, via the action on Q's faces.
    LatticeInfo qinfo = build_info(q.hull.lattice);
    std::map<std::vector<int>, int> qface_of;
    for (int f = 0; f < q.hull.lattice.face_count(); ++f)
        if (q.hull.lattice.faces[f].rank >= 0 && q.hull.lattice.faces[f].rank < q.hull.lattice.rank)
            qface_of[qinfo.vertex_sets[f]] = f;
    std::vector<int> cq_vertex_of_face(q.hull.lattice.face_count(), -1);
    for (size_t x = 0; x < cq.vertices.size(); ++x) cq_vertex_of_face[cq.vertices[x].origin] = static_cast<int>(x);
    std::map<std::vector<int>, int> cq_cell_of;
    for (const auto& c : cq.cells) cq_cell_of[c.vertices] = c.id;

    auto qface_image = [&](int g, int f) {
        std::vector<int> mapped;
        for (int vf : qinfo.vertex_sets[f]) {
            int p = q.vertex_to_group[vf];
            int pi = group.mul(g, p);
            mapped.push_back(q.group_to_vertex[pi]);
        }
        std::sort(mapped.begin(), mapped.end());
        auto it = qface_of.find(mapped);
        if (it == qface_of.end())
            throw IntegrityError("decorate: group element does not act on the hull lattice");
        return it->second;
    };
    auto cq_cell_image = [&](int g, int cell) {
        std::vector<int> mapped;
        for (int v : cq.cells[cell].vertices)
            mapped.push_back(cq_vertex_of_face[qface_image(g, cq.vertices[v].origin)]);
        std::sort(mapped.begin(), mapped.end());
        auto it = cq_cell_of.find(mapped);
        if (it == cq_cell_of.end()) throw IntegrityError("decorate: cell image is not a cell");
        return it->second;
    };

    // Decorate every chamber: the chamber at w = gamma(v) receives the same
    // complex as its base chamber gamma^{-1}(C'), glued type-to-type.
    std::vector<int> chambers;
    for (const auto& c : cq.cells)
        if (c.dim == cq.dim) chambers.push_back(c.id);
    std::sort(chambers.begin(), chambers.end());

    dc.insert_of_chamber.assign(cq.cells.size(), -1);
    dc.chamber_glue_cells.assign(cq.cells.size(), {});
    dc.chamber_glue_verts.assign(cq.cells.size(), {});

    for (int c : chambers) {
        int w = -1;
        for (int v : cq.cells[c].vertices)
            if (cq.vertices[v].label == 0) {
                if (w >= 0) throw IntegrityError("decorate: chamber with two type-0 vertices");
                w = v;
            }
        if (w < 0) throw IntegrityError("decorate: chamber without a type-0 vertex");
        int gamma = q.vertex_to_group[cq.vertices[w].origin];
        int base_chamber = cq_cell_image(group.inv(gamma), c);
        auto it = base_index.find(base_chamber);
        if (it == base_index.end())
            throw IntegrityError("decorate: transported chamber is not in the base star");
        int insert_idx = it->second;

        std::vector<int> vmap(d, -1);
        for (int v : cq.cells[c].vertices) {
            int t = cq.vertices[v].label;
            if (vmap[t] != -1) throw IntegrityError("decorate: repeated type in a chamber");
            vmap[t] = v;
        }
        GlueResult res = glue(dc.cx, c, inserts[insert_idx], vmap);
        dc.insert_of_chamber[c] = insert_idx;
        dc.chamber_glue_cells[c] = std::move(res.cell_map);
        dc.chamber_glue_verts[c] = std::move(res.vertex_map);
    }

    // Every chamber must be gone; the (d-2)-skeleton of C(Q) must be intact.
    for (const auto& c : cq.cells) {
        bool alive = dc.cx.cells[c.id].alive;
        if (c.dim == cq.dim && alive)
            throw IntegrityError("decorate: chamber " + std::to_string(c.id) + " left undecorated");
        if (c.dim < cq.dim && !alive)
            throw IntegrityError("decorate: skeleton cell " + std::to_string(c.id) + " destroyed");
    }

    // Measured valencies against the plan: exact equality for C(Q) vertices,
    // the bound m for everything else.
    auto final_val = dc.cx.valencies();
    for (long x = 0; x < dc.cq_vertex_count; ++x) {
        long expect = dc.cq_vertex_val[x] + dc.cq_vertex_s[x] * plan.m_by_type[dc.cq_vertex_type[x]];
        if (final_val[x] != expect)
            throw IntegrityError("decorate: vertex " + std::to_string(x) + " valency " +
                                 std::to_string(final_val[x]) + " != predicted " +
                                 std::to_string(expect));
        const auto& iv = plan.intervals[dc.cq_vertex_type[x]];
        if (final_val[x] < iv[0] || final_val[x] > iv[1])
            throw IntegrityError("decorate: vertex valency outside its interval");
    }
    for (size_t x = dc.cq_vertex_count; x < final_val.size(); ++x)
        if (final_val[x] > plan.m)
            throw IntegrityError("decorate: interior vertex " + std::to_string(x) +
                                 " valency exceeds m");

    return dc;
}

namespace {

std::vector<std::vector<int>> build_embedding(const DecoratedComplex& dc, const CellComplex& cq,
                                              const PermGroup& group, const OrbitPolytope& q,
                                              const std::vector<int>& remap, long final_faces) {
    // Reconstruct the C(Q)-cell action (as in decorate).
    LatticeInfo qinfo = build_info(q.hull.lattice);
    std::map<std::vector<int>, int> qface_of;
    for (int f = 0; f < q.hull.lattice.face_count(); ++f)
        if (q.hull.lattice.faces[f].rank >= 0 && q.hull.lattice.faces[f].rank < q.hull.lattice.rank)
            qface_of[qinfo.vertex_sets[f]] = f;
    std::vector<int> cq_vertex_of_face(q.hull.lattice.face_count(), -1);
    for (size_t x = 0; x < cq.vertices.size(); ++x)
        cq_vertex_of_face[cq.vertices[x].origin] = static_cast<int>(x);
    std::map<std::vector<int>, int> cq_cell_of;
    for (const auto& c : cq.cells) cq_cell_of[c.vertices] = c.id;

    auto qface_image = [&](int g, int f) {
        std::vector<int> mapped;
        for (int vf : qinfo.vertex_sets[f]) {
            int p = q.vertex_to_group[vf];
            mapped.push_back(q.group_to_vertex[group.mul(g, p)]);
        }
        std::sort(mapped.begin(), mapped.end());
        return qface_of.at(mapped);
    };
    auto cq_cell_image = [&](int g, int cell) {
        std::vector<int> mapped;
        for (int v : cq.cells[cell].vertices)
            mapped.push_back(cq_vertex_of_face[qface_image(g, cq.vertices[v].origin)]);
        std::sort(mapped.begin(), mapped.end());
        return cq_cell_of.at(mapped);
    };

    long cq_cells = static_cast<long>(cq.cells.size());
    std::vector<std::vector<int>> embedding;
    for (long g = 0; g < group.order(); ++g) {
        std::vector<int> perm(final_faces, -1);
        perm[0] = 0;
        perm[final_faces - 1] = static_cast<int>(final_faces - 1);
        // C(Q) skeleton cells.
        for (long x = 0; x < cq_cells; ++x) {
            if (remap[x] < 0) continue; // decorated chamber
            int y = cq_cell_image(static_cast<int>(g), static_cast<int>(x));
            if (remap[y] < 0) throw IntegrityError("embedding: skeleton image is dead");
            perm[remap[x] + 1] = remap[y] + 1;
        }
        // Inserted cells, transported chamber to chamber.
        for (long c = 0; c < cq_cells; ++c) {
            if (dc.insert_of_chamber[c] < 0) continue;
            int tc = cq_cell_image(static_cast<int>(g), static_cast<int>(c));
            if (dc.insert_of_chamber[tc] != dc.insert_of_chamber[c])
                throw IntegrityError("embedding: image chamber has a different decoration");
            const auto& src = dc.chamber_glue_cells[c];
            const auto& dst = dc.chamber_glue_cells[tc];
            for (size_t j = 0; j < src.size(); ++j) {
                if (src[j] < 0) continue;
                if (static_cast<long>(src[j]) < cq_cells && remap[src[j]] >= 0 &&
                    perm[remap[src[j]] + 1] >= 0)
                    continue; // boundary cell, already mapped with the skeleton
                if (dst[j] < 0) throw IntegrityError("embedding: missing image cell");
                perm[remap[src[j]] + 1] = remap[dst[j]] + 1;
            }
        }
        for (long f = 0; f < final_faces; ++f)
            if (perm[f] < 0) throw IntegrityError("embedding: face left unmapped");
        embedding.push_back(std::move(perm));
    }
    return embedding;
}

void fill_counts(ConstructionReport& report, const FaceLattice& P) {
    LatticeInfo info = build_info(P);
    report.counts["faces_total"] = P.face_count();
    for (int r = 0; r <= P.rank; ++r)
        report.counts["rank_" + std::to_string(r)] = static_cast<long>(info.rank_faces(r).size());
}

} // namespace

Construction construct(const PermGroup& group, const ForgeOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Construction out;
    out.report.group_order = group.order();

    GroupClass cls = classify(group);
    bool general_path = false;
    switch (cls.tag) {
        case GroupClass::Trivial:
            out.polytope = point_lattice();
            out.report.branch = "trivial-point";
            out.report.d = 0;
            break;
        case GroupClass::Cyclic:
            if (cls.k == 2) {
                out.polytope = segment_lattice();
                out.report.branch = "cyclic-segment";
                out.report.d = 1;
            } else {
                out.polytope = wheel_polyhedron(static_cast<int>(cls.k));
                out.report.branch = "cyclic-wheel";
                out.report.d = 3;
            }
            break;
        case GroupClass::Dihedral:
            if (!opts.force_general) {
                out.polytope = polygon(static_cast<int>(cls.k));
                out.report.branch = "dihedral-polygon";
                out.report.d = 2;
                break;
            }
            general_path = true;
            break;
        case GroupClass::General:
            general_path = true;
            break;
    }

    if (general_path) {
        int n = group.degree - 1;
        if (n < 1)
            throw ValidationError("construct: the general pipeline needs degree >= 2");
        RatVec v = initial_vertex(n);
        OrbitPolytope q = orbit_polytope(group, v, opts.hull);
        if (q.dim == 2) {
            // A 2-flat orbit forces a dihedral group; emit the polygon.
            if (cls.tag != GroupClass::Dihedral)
                throw IntegrityError("construct: 2-flat orbit for a non-dihedral group");
            out.polytope = polygon(static_cast<int>(cls.k));
            out.report.branch = "dihedral-2flat";
            out.report.d = 2;
            general_path = false;
        } else {
            ValidationReport qcheck = validate(q.hull.lattice, opts.validate);
            if (!qcheck.ok())
                throw IntegrityError("construct: orbit polytope lattice failed validation");
            CellComplex cq = barycentric_subdivision(q.hull.lattice);

            // Base star size fixes the list of L polytopes.
            int base_face = q.group_to_vertex[0];
            int base_vertex = -1;
            for (size_t x = 0; x < cq.vertices.size(); ++x)
                if (cq.vertices[x].label == 0 && cq.vertices[x].origin == base_face)
                    base_vertex = static_cast<int>(x);
            if (base_vertex < 0) throw IntegrityError("construct: base vertex missing");
            long star_size = chamber_count_through(cq, base_vertex);

            std::vector<FaceLattice> star_polytopes;
            std::vector<int> star_outers;
            for (long i = 0; i < star_size; ++i) {
                star_polytopes.push_back(cyclic_polytope(q.dim + 2 + static_cast<int>(i), q.dim));
                LatticeInfo linfo = build_info(star_polytopes.back());
                int outer = -1;
                const std::vector<int>* best = nullptr;
                for (int f : linfo.rank_faces(q.dim - 1)) {
                    if (!best || linfo.vertex_sets[f] < *best) {
                        outer = f;
                        best = &linfo.vertex_sets[f];
                    }
                }
                star_outers.push_back(outer);
            }
            ValencyPlan plan = plan_valencies(cq, q.dim, star_polytopes, star_outers);

            DecoratedComplex dc = decorate(cq, group, q, plan);
            std::vector<int> remap = dc.cx.compact();
            FaceLattice P = complete_polytope(dc.cx);

            ValidationReport pcheck = validate(P, opts.validate);
            if (!pcheck.ok())
                throw IntegrityError("construct: assembled polytope failed validation:\n" +
                                     pcheck.summary());

            std::vector<std::vector<int>> embedding =
                build_embedding(dc, cq, group, q, remap, P.face_count());

            out.polytope = std::move(P);
            out.embedding = std::move(embedding);
            out.report.branch = opts.force_general ? "general-forced" : "general";
            out.report.d = q.dim;
            out.report.chamber_count = static_cast<long>(
                std::count_if(cq.cells.begin(), cq.cells.end(),
                              [&](const ComplexCell& c) { return c.dim == cq.dim; }));
            out.report.has_plan = true;
            out.report.plan = plan;
        }
    }

    fill_counts(out.report, out.polytope);
    if (!out.embedding.empty()) {
        out.report.verification = verify_construction(out.polytope, group, out.embedding);
    } else {
        out.report.verification = verify_special(out.polytope, cls);
    }
    out.report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace polyforge
