#include "polyforge/diagrams.hpp"
#include "polyforge/errors.hpp"
#include "polyforge/fixtures.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace polyforge {

namespace {

// Tiles (alive top cells) containing a given (dim-2)-cell.
std::vector<int> tiles_over(const CellComplex& cx, int ridge) {
    std::vector<int> out;
    for (const auto& c : cx.cells) {
        if (!c.alive || c.dim != cx.dim) continue;
        if (std::binary_search(c.facets.begin(), c.facets.end(), ridge)) out.push_back(c.id);
    }
    return out;
}

void assert_face_to_face(const SchlegelComplex& diagram, const char* who) {
    const CellComplex& cx = diagram.cx;
    std::set<int> outer(diagram.outer_vertices.begin(), diagram.outer_vertices.end());
    for (const auto& c : cx.cells) {
        if (!c.alive || c.dim != cx.dim - 1) continue;
        bool on_outer = true;
        for (int v : c.vertices)
            if (!outer.count(v)) { on_outer = false; break; }
        size_t expect = on_outer ? 1 : 2;
        if (tiles_over(cx, c.id).size() != expect)
            throw IntegrityError(std::string(who) + ": diagram is not face-to-face at ridge " +
                                 std::to_string(c.id));
    }
}

} // namespace

SchlegelComplex crosspolytope_diagram(int d) {
    if (d < 3) throw ValidationError("crosspolytope_diagram: need d >= 3");
    SchlegelComplex diag;
    diag.cx.dim = d - 1;

    for (int i = 0; i < d; ++i) {
        ComplexVertex v;
        v.label = i;
        v.origin = i;
        v.kind = VertexKind::Outer;
        diag.cx.add_vertex(v);
    }
    for (int i = 0; i < d; ++i) {
        ComplexVertex v;
        v.label = i;
        v.origin = d + i;
        v.kind = VertexKind::CrossInner;
        diag.cx.add_vertex(v);
    }
    diag.outer_vertices.resize(d);
    for (int i = 0; i < d; ++i) diag.outer_vertices[i] = i;

    // Faces are sign vectors on nonempty axis subsets; vertex id of +i is i,
    // of -i is d+i. The all-plus facet is the outer simplex and is skipped.
    std::map<std::vector<int>, int> cell_of;
    for (int i = 0; i < 2 * d; ++i) cell_of[{i}] = diag.cx.vertex_cell[i];

    for (int size = 2; size <= d; ++size) {
        std::vector<std::vector<int>> supports;
        std::vector<int> cur;
        auto pick = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == size) { supports.push_back(cur); return; }
            for (int i = start; i < d; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        pick(pick, 0);
        for (const auto& support : supports) {
            for (int signs = 0; signs < (1 << size); ++signs) {
                std::vector<int> verts;
                bool all_plus = true;
                for (int t = 0; t < size; ++t) {
                    bool minus = (signs >> t) & 1;
                    if (minus) all_plus = false;
                    verts.push_back(minus ? d + support[t] : support[t]);
                }
                if (size == d && all_plus) continue; // outer facet
                std::sort(verts.begin(), verts.end());
                std::vector<int> facets;
                for (int t = 0; t < size; ++t) {
                    std::vector<int> sub;
                    for (int u = 0; u < size; ++u) {
                        if (u == t) continue;
                        bool minus = (signs >> u) & 1;
                        sub.push_back(minus ? d + support[u] : support[u]);
                    }
                    std::sort(sub.begin(), sub.end());
                    facets.push_back(cell_of.at(sub));
                }
                int id = diag.cx.add_cell(size - 1, verts, std::move(facets));
                cell_of[diag.cx.cells[id].vertices] = id;
            }
        }
    }

    // Marks: central tile is all-minus; F_{u_i} has the single plus at i.
    {
        std::vector<int> z;
        for (int i = 0; i < d; ++i) z.push_back(d + i);
        std::sort(z.begin(), z.end());
        diag.central_cell = cell_of.at(z);
        for (int i = 0; i < d; ++i) {
            std::vector<int> fu;
            fu.push_back(i);
            for (int j = 0; j < d; ++j)
                if (j != i) fu.push_back(d + j);
            std::sort(fu.begin(), fu.end());
            diag.fu_cells.push_back(cell_of.at(fu));
        }
    }

    // Structural guarantees used downstream.
    if (static_cast<int>(diag.cx.cells_of_dim(d - 1).size()) != (1 << d) - 1)
        throw IntegrityError("crosspolytope_diagram: wrong tile count");
    {
        const auto& z = diag.cx.cells[diag.central_cell].vertices;
        for (int u : diag.outer_vertices)
            if (std::binary_search(z.begin(), z.end(), u))
                throw IntegrityError("crosspolytope_diagram: central tile meets the outer simplex");
        for (int i = 0; i < d; ++i) {
            const auto& fu = diag.cx.cells[diag.fu_cells[i]];
            std::vector<int> common;
            std::set_intersection(fu.facets.begin(), fu.facets.end(),
                                  diag.cx.cells[diag.central_cell].facets.begin(),
                                  diag.cx.cells[diag.central_cell].facets.end(),
                                  std::back_inserter(common));
            if (common.size() != 1)
                throw IntegrityError("crosspolytope_diagram: F_u not adjacent to the central tile");
            std::vector<int> meet;
            std::set_intersection(fu.vertices.begin(), fu.vertices.end(),
                                  diag.outer_vertices.begin(), diag.outer_vertices.end(),
                                  std::back_inserter(meet));
            if (meet != std::vector<int>{i})
                throw IntegrityError("crosspolytope_diagram: F_u meets the outer simplex badly");
        }
    }
    assert_face_to_face(diag, "crosspolytope_diagram");
    return diag;
}

bool pyramid_size_admissible(long m, int d) {
    if (d == 3) return m >= 3;
    if (m < d) return false;
    return (m - d) % (d - 2) == 0;
}

long least_admissible_pyramid_size(long at_least, int d) {
    if (d == 3) return std::max<long>(3, at_least);
    if (at_least <= d) return d;
    long k = (at_least - d + (d - 2) - 1) / (d - 2);
    return d + k * (d - 2);
}

FaceLattice truncate_vertex(const FaceLattice& lattice, int vertex_face) {
    LatticeInfo info = build_info(lattice);
    if (lattice.faces[vertex_face].rank != 0)
        throw ValidationError("truncate_vertex: not a vertex face");

    auto contains_v = [&](int f) {
        const auto& vs = info.vertex_sets[f];
        return std::binary_search(vs.begin(), vs.end(), vertex_face);
    };

    // Tokens: (0, f) keeps f, (1, f) is the truncated f, (2, f) is the cut
    // face of f (one rank down).
    using Key = std::pair<int, int>;
    std::map<Key, int> rank_of;
    std::map<Key, std::vector<Key>> covers_of;
    int n = lattice.face_count();
    for (int f = 0; f < n; ++f) {
        int r = lattice.faces[f].rank;
        if (!contains_v(f)) {
            rank_of[{0, f}] = r;
            for (int c : info.covers[f]) covers_of[{0, f}].push_back({0, c});
            continue;
        }
        if (f == vertex_face) continue; // removed
        rank_of[{1, f}] = r;
        rank_of[{2, f}] = r - 1;
        for (int c : info.covers[f]) {
            if (c == vertex_face) continue;
            if (contains_v(c)) {
                covers_of[{1, f}].push_back({1, c});
                covers_of[{2, f}].push_back({2, c});
            } else {
                covers_of[{1, f}].push_back({0, c});
            }
        }
        covers_of[{1, f}].push_back({2, f});
        if (r == 1) covers_of[{2, f}].push_back({0, info.least});
    }

    std::vector<std::pair<int, Key>> order;
    for (const auto& [key, r] : rank_of) order.push_back({r, key});
    std::sort(order.begin(), order.end());
    std::map<Key, int> id_of;
    for (size_t i = 0; i < order.size(); ++i) id_of[order[i].second] = static_cast<int>(i);

    FaceLattice out;
    out.rank = lattice.rank;
    for (size_t i = 0; i < order.size(); ++i) {
        Face f;
        f.id = static_cast<int>(i);
        f.rank = order[i].first;
        for (const Key& c : covers_of[order[i].second]) f.covers.push_back(id_of.at(c));
        std::sort(f.covers.begin(), f.covers.end());
        out.faces.push_back(std::move(f));
    }
    return out;
}

FaceLattice pyramid_over(const FaceLattice& base) {
    LatticeInfo info = build_info(base);
    using Key = std::pair<int, int>; // (0, f) base copy, (1, f) joined with apex
    std::map<Key, int> rank_of;
    std::map<Key, std::vector<Key>> covers_of;
    int n = base.face_count();
    for (int f = 0; f < n; ++f) {
        int r = base.faces[f].rank;
        rank_of[{0, f}] = r;
        for (int c : info.covers[f]) covers_of[{0, f}].push_back({0, c});
        rank_of[{1, f}] = r + 1;
        for (int c : info.covers[f]) covers_of[{1, f}].push_back({1, c});
        covers_of[{1, f}].push_back({0, f});
    }

    std::vector<std::pair<std::pair<int, int>, Key>> order; // ((rank, type), key)
    for (const auto& [key, r] : rank_of) order.push_back({{r, key.first}, key});
    std::sort(order.begin(), order.end());
    std::map<Key, int> id_of;
    for (size_t i = 0; i < order.size(); ++i) id_of[order[i].second] = static_cast<int>(i);

    FaceLattice out;
    out.rank = base.rank + 1;
    for (size_t i = 0; i < order.size(); ++i) {
        Face f;
        f.id = static_cast<int>(i);
        f.rank = order[i].first.first;
        for (const Key& c : covers_of[order[i].second]) f.covers.push_back(id_of.at(c));
        std::sort(f.covers.begin(), f.covers.end());
        out.faces.push_back(std::move(f));
    }
    return out;
}

namespace {

// Lexicographically least simplex facet (by vertex set).
int least_simplex_facet(const FaceLattice& lattice, const LatticeInfo& info) {
    int best = -1;
    const std::vector<int>* best_set = nullptr;
    for (int f : info.rank_faces(lattice.rank - 1)) {
        if (static_cast<int>(info.vertex_sets[f].size()) != lattice.rank) continue;
        if (!best_set || info.vertex_sets[f] < *best_set) {
            best = f;
            best_set = &info.vertex_sets[f];
        }
    }
    if (best < 0) throw IntegrityError("least_simplex_facet: no simplex facet");
    return best;
}

} // namespace

SchlegelComplex pyramid_diagram(long m, int d) {
    if (d < 3) throw ValidationError("pyramid_diagram: need d >= 3");
    if (!pyramid_size_admissible(m, d)) {
        long below = m;
        while (below >= 3 && !pyramid_size_admissible(below, d)) --below;
        long above = m;
        while (!pyramid_size_admissible(above, d)) ++above;
        std::string hint = below >= 3 ? std::to_string(below) + " or " + std::to_string(above)
                                      : std::to_string(above);
        throw ValidationError("pyramid_diagram: m = " + std::to_string(m) +
                              " not admissible at rank " + std::to_string(d) + "; nearest: " + hint);
    }

    FaceLattice base;
    if (d == 3) {
        base = polygon_lattice(static_cast<int>(m));
    } else {
        base = simplex_lattice(d - 1);
        long k = (m - d) / (d - 2);
        for (long t = 0; t < k; ++t) {
            LatticeInfo info = build_info(base);
            int keep_facet = least_simplex_facet(base, info);
            const auto& protect = info.vertex_sets[keep_facet];
            int victim = -1;
            for (int v : info.rank_faces(0)) {
                if (!std::binary_search(protect.begin(), protect.end(), v)) { victim = v; break; }
            }
            if (victim < 0) throw IntegrityError("pyramid_diagram: no vertex left to truncate");
            base = truncate_vertex(base, victim);
        }
    }

    FaceLattice pyr = pyramid_over(base);
    LatticeInfo pinfo = build_info(pyr);
    int apex = pinfo.rank_faces(0).back(); // pyramid_over puts the apex last

    // Outer facet: a simplex facet containing the apex, least by vertex set.
    int outer = -1;
    const std::vector<int>* best = nullptr;
    for (int f : pinfo.rank_faces(pyr.rank - 1)) {
        const auto& vs = pinfo.vertex_sets[f];
        if (static_cast<int>(vs.size()) != pyr.rank) continue;
        if (!std::binary_search(vs.begin(), vs.end(), apex)) continue;
        if (!best || vs < *best) {
            outer = f;
            best = &vs;
        }
    }
    if (outer < 0) throw IntegrityError("pyramid_diagram: no simplex facet through the apex");

    SchlegelComplex diag = schlegel_of(pyr, outer);

    // Re-key outer vertex order: apex first, then ascending.
    int apex_vid = -1;
    for (size_t i = 0; i < diag.cx.vertices.size(); ++i)
        if (diag.cx.vertices[i].origin == apex) apex_vid = static_cast<int>(i);
    if (apex_vid < 0) throw IntegrityError("pyramid_diagram: apex vertex lost");
    std::vector<int> reordered{apex_vid};
    for (int v : diag.outer_vertices)
        if (v != apex_vid) reordered.push_back(v);
    diag.outer_vertices = reordered;
    diag.apex_vertex = apex_vid;
    for (size_t i = 0; i < diag.cx.vertices.size(); ++i) {
        auto& v = diag.cx.vertices[i];
        bool is_outer = std::find(reordered.begin(), reordered.end(), static_cast<int>(i)) !=
                        reordered.end();
        v.kind = is_outer ? VertexKind::Outer : VertexKind::PyramidInner;
    }

    auto val = diag.cx.valencies();
    if (val[apex_vid] != m)
        throw IntegrityError("pyramid_diagram: apex valency " + std::to_string(val[apex_vid]) +
                             " != m = " + std::to_string(m));
    for (size_t v = 0; v < val.size(); ++v)
        if (static_cast<int>(v) != apex_vid && val[v] != d)
            throw IntegrityError("pyramid_diagram: vertex valency " + std::to_string(val[v]) +
                                 " != d at vertex " + std::to_string(v));
    assert_face_to_face(diag, "pyramid_diagram");
    return diag;
}

FaceLattice cyclic_polytope(int v_count, int d) {
    if (d < 2) throw ValidationError("cyclic_polytope: need d >= 2");
    if (v_count < d + 1) throw ValidationError("cyclic_polytope: need at least d+1 vertices");

    // Gale evenness: S is a facet iff any two non-members are separated by an
    // even number of members.
    std::vector<std::vector<int>> facets;
    std::vector<int> cur;
    auto pick = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == d) {
            std::vector<bool> in(v_count, false);
            for (int s : cur) in[s] = true;
            for (int i = 0; i < v_count; ++i) {
                if (in[i]) continue;
                for (int j = i + 1; j < v_count; ++j) {
                    if (in[j]) continue;
                    int between = 0;
                    for (int s : cur)
                        if (s > i && s < j) ++between;
                    if (between % 2 != 0) return;
                }
            }
            facets.push_back(cur);
            return;
        }
        for (int i = start; i < v_count; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    pick(pick, 0);

    // Subset closure of the simplicial facets.
    std::set<std::vector<int>> faces(facets.begin(), facets.end());
    std::queue<std::vector<int>> q;
    for (const auto& f : facets) q.push(f);
    while (!q.empty()) {
        std::vector<int> s = q.front();
        q.pop();
        if (s.size() <= 1) continue;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> sub;
            for (size_t i = 0; i < s.size(); ++i)
                if (i != drop) sub.push_back(s[i]);
            if (faces.insert(sub).second) q.push(sub);
        }
    }
    for (int v = 0; v < v_count; ++v)
        if (!faces.count({v}))
            throw IntegrityError("cyclic_polytope: point " + std::to_string(v) + " is not a vertex");

    using Key = std::vector<int>;
    std::map<Key, int> rank_of;
    std::map<Key, std::vector<Key>> covers_of;
    rank_of[{}] = -1;
    Key top(v_count + 1, -1); // synthetic key for the improper top
    rank_of[top] = d;
    for (const auto& s : faces) {
        rank_of[s] = static_cast<int>(s.size()) - 1;
        if (s.size() == 1) {
            covers_of[s] = {Key{}};
        } else {
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Key sub;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) sub.push_back(s[i]);
                covers_of[s].push_back(sub);
            }
        }
        if (static_cast<int>(s.size()) == d) covers_of[top].push_back(s);
    }

    std::vector<std::pair<int, Key>> order;
    for (const auto& [key, r] : rank_of) order.push_back({r, key});
    std::sort(order.begin(), order.end());
    std::map<Key, int> id_of;
    for (size_t i = 0; i < order.size(); ++i) id_of[order[i].second] = static_cast<int>(i);

    FaceLattice out;
    out.rank = d;
    for (size_t i = 0; i < order.size(); ++i) {
        Face f;
        f.id = static_cast<int>(i);
        f.rank = order[i].first;
        for (const Key& c : covers_of[order[i].second]) f.covers.push_back(id_of.at(c));
        std::sort(f.covers.begin(), f.covers.end());
        out.faces.push_back(std::move(f));
    }
    return out;
}

SchlegelComplex schlegel_of(const FaceLattice& lattice, int outer_facet) {
    LatticeInfo info = build_info(lattice);
    if (outer_facet < 0 || outer_facet >= lattice.face_count() ||
        lattice.faces[outer_facet].rank != lattice.rank - 1)
        throw ValidationError("schlegel_of: outer face is not a facet");
    if (static_cast<int>(info.vertex_sets[outer_facet].size()) != lattice.rank)
        throw ValidationError("schlegel_of: outer facet is not a simplex");

    SchlegelComplex diag;
    diag.cx.dim = lattice.rank - 1;

    std::vector<int> vertex_of_face(lattice.face_count(), -1);
    for (int f : info.rank_faces(0)) {
        ComplexVertex v;
        v.label = -1;
        v.origin = f;
        v.kind = VertexKind::PolyInner;
        vertex_of_face[f] = diag.cx.add_vertex(v);
    }
    for (int f : info.vertex_sets[outer_facet]) {
        diag.outer_vertices.push_back(vertex_of_face[f]);
        diag.cx.vertices[vertex_of_face[f]].kind = VertexKind::Outer;
    }
    std::sort(diag.outer_vertices.begin(), diag.outer_vertices.end());

    std::vector<int> cell_of_face(lattice.face_count(), -1);
    for (int f : info.rank_faces(0)) cell_of_face[f] = diag.cx.vertex_cell[vertex_of_face[f]];
    for (int r = 1; r <= lattice.rank - 1; ++r) {
        for (int f : info.rank_faces(r)) {
            if (f == outer_facet) continue;
            std::vector<int> verts;
            for (int vf : info.vertex_sets[f]) verts.push_back(vertex_of_face[vf]);
            std::vector<int> facets;
            for (int c : info.covers[f]) facets.push_back(cell_of_face[c]);
            cell_of_face[f] = diag.cx.add_cell(r, std::move(verts), std::move(facets), f);
        }
    }
    assert_face_to_face(diag, "schlegel_of");
    return diag;
}

GlueResult glue(CellComplex& host, int target_cell, const SchlegelComplex& insert,
                const std::vector<int>& outer_to_target) {
    if (target_cell < 0 || target_cell >= static_cast<int>(host.cells.size()) ||
        !host.cells[target_cell].alive)
        throw ValidationError("glue: target cell missing or dead");
    const ComplexCell& target = host.cells[target_cell];
    if (target.dim != host.dim || insert.cx.dim != host.dim)
        throw ValidationError("glue: dimension mismatch");
    if (static_cast<int>(target.vertices.size()) != host.dim + 1)
        throw ValidationError("glue: target cell is not a simplex");
    if (outer_to_target.size() != insert.outer_vertices.size() ||
        static_cast<int>(outer_to_target.size()) != host.dim + 1)
        throw ValidationError("glue: vertex map has wrong size");
    {
        std::vector<int> tgt = outer_to_target;
        std::sort(tgt.begin(), tgt.end());
        if (tgt != target.vertices)
            throw ValidationError("glue: vertex map is not a bijection onto the target cell");
    }

    // Faces of the target simplex, keyed by vertex subset.
    std::map<std::vector<int>, int> target_face;
    {
        std::queue<int> q;
        q.push(target_cell);
        std::set<int> seen{target_cell};
        while (!q.empty()) {
            int id = q.front();
            q.pop();
            target_face[host.cells[id].vertices] = id;
            for (int f : host.cells[id].facets)
                if (seen.insert(f).second) q.push(f);
        }
    }

    GlueResult result;
    result.vertex_map.assign(insert.cx.vertices.size(), -1);
    result.cell_map.assign(insert.cx.cells.size(), -1);

    std::set<int> outer(insert.outer_vertices.begin(), insert.outer_vertices.end());
    for (size_t i = 0; i < insert.outer_vertices.size(); ++i)
        result.vertex_map[insert.outer_vertices[i]] = outer_to_target[i];
    for (size_t v = 0; v < insert.cx.vertices.size(); ++v) {
        if (outer.count(static_cast<int>(v))) continue;
        result.vertex_map[v] = host.add_vertex(insert.cx.vertices[v]);
    }

    for (int dim = 0; dim <= insert.cx.dim; ++dim) {
        for (const auto& cell : insert.cx.cells) {
            if (!cell.alive || cell.dim != dim) continue;
            bool on_outer = true;
            for (int v : cell.vertices)
                if (!outer.count(v)) { on_outer = false; break; }
            if (on_outer) {
                std::vector<int> mapped;
                for (int v : cell.vertices) mapped.push_back(result.vertex_map[v]);
                std::sort(mapped.begin(), mapped.end());
                auto it = target_face.find(mapped);
                if (it == target_face.end())
                    throw ValidationError("glue: boundary mismatch at an outer face");
                if (host.cells[it->second].dim != dim)
                    throw IntegrityError("glue: boundary face dimension mismatch");
                result.cell_map[cell.id] = it->second;
                continue;
            }
            if (dim == 0) {
                result.cell_map[cell.id] = host.vertex_cell[result.vertex_map[cell.vertices[0]]];
                continue;
            }
            std::vector<int> verts;
            for (int v : cell.vertices) verts.push_back(result.vertex_map[v]);
            std::vector<int> facets;
            for (int f : cell.facets) {
                int mapped_f = result.cell_map[f];
                if (mapped_f < 0) throw IntegrityError("glue: facet mapped before its cell");
                facets.push_back(mapped_f);
            }
            result.cell_map[cell.id] = host.add_cell(dim, std::move(verts), std::move(facets));
        }
    }

    host.cells[target_cell].alive = false;
    return result;
}

} // namespace polyforge
