#include "polyforge/complex.hpp"
#include "polyforge/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace polyforge {

int CellComplex::add_vertex(const ComplexVertex& v) {
    int vid = static_cast<int>(vertices.size());
    vertices.push_back(v);
    int cid = add_cell(0, {vid}, {});
    vertex_cell.push_back(cid);
    return vid;
}

int CellComplex::add_cell(int d, std::vector<int> verts, std::vector<int> facets, int source) {
    std::sort(verts.begin(), verts.end());
    std::sort(facets.begin(), facets.end());
    ComplexCell c;
    c.id = static_cast<int>(cells.size());
    c.dim = d;
    c.vertices = std::move(verts);
    c.facets = std::move(facets);
    c.source = source;
    cells.push_back(std::move(c));
    return cells.back().id;
}

std::vector<int> CellComplex::cells_of_dim(int d) const {
    std::vector<int> out;
    for (const auto& c : cells)
        if (c.alive && c.dim == d) out.push_back(c.id);
    return out;
}

long CellComplex::alive_cell_count() const {
    long n = 0;
    for (const auto& c : cells)
        if (c.alive) ++n;
    return n;
}

std::vector<long> CellComplex::valencies() const {
    std::vector<long> val(vertices.size(), 0);
    for (const auto& c : cells) {
        if (!c.alive || c.dim != 1) continue;
        for (int v : c.vertices) ++val[v];
    }
    return val;
}

std::vector<int> CellComplex::compact() {
    std::vector<int> order;
    for (const auto& c : cells)
        if (c.alive) order.push_back(c.id);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cells[a].dim < cells[b].dim; });
    std::vector<int> remap(cells.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<int>(i);

    std::vector<ComplexCell> fresh;
    fresh.reserve(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        ComplexCell c = cells[order[i]];
        c.id = static_cast<int>(i);
        for (auto& f : c.facets) {
            f = remap[f];
            if (f < 0) throw IntegrityError("compact: facet of an alive cell is dead");
        }
        std::sort(c.facets.begin(), c.facets.end());
        fresh.push_back(std::move(c));
    }
    cells = std::move(fresh);
    for (size_t v = 0; v < vertex_cell.size(); ++v) {
        vertex_cell[v] = remap[vertex_cell[v]];
        if (vertex_cell[v] < 0) throw IntegrityError("compact: vertex cell died");
    }
    return remap;
}

CellComplex barycentric_subdivision(const FaceLattice& lattice) {
    if (lattice.rank < 1)
        throw ValidationError("barycentric_subdivision: rank must be at least 1");
    LatticeInfo info = build_info(lattice);

    CellComplex cx;
    cx.dim = lattice.rank - 1;

    // One vertex per proper face, rank-major.
    std::vector<int> face_to_vertex(lattice.face_count(), -1);
    for (int r = 0; r < lattice.rank; ++r) {
        for (int f : info.rank_faces(r)) {
            ComplexVertex v;
            v.label = r;
            v.origin = f;
            v.kind = VertexKind::Subdiv;
            face_to_vertex[f] = cx.add_vertex(v);
        }
    }

    // Strict comparability above each proper face.
    int n = lattice.face_count();
    std::vector<std::vector<int>> strictly_above(n);
    for (int r = lattice.rank - 1; r >= 0; --r) {
        for (int f : info.rank_faces(r)) {
            std::set<int> acc;
            for (int a : info.above[f]) {
                if (lattice.faces[a].rank > lattice.rank - 1) continue;
                acc.insert(a);
                acc.insert(strictly_above[a].begin(), strictly_above[a].end());
            }
            strictly_above[f].assign(acc.begin(), acc.end());
        }
    }

    // Chains, grouped by length. Chains are recorded as sorted vertex lists
    // (vertex ids ascend with rank by construction).
    std::vector<std::vector<std::vector<int>>> chains(cx.dim + 1);
    std::vector<int> chain;
    auto extend = [&](auto&& self, int f) -> void {
        chain.push_back(f);
        std::vector<int> verts;
        for (int g : chain) verts.push_back(face_to_vertex[g]);
        chains[static_cast<int>(chain.size()) - 1].push_back(verts);
        for (int g : strictly_above[f]) self(self, g);
        chain.pop_back();
    };
    for (int r = 0; r < lattice.rank; ++r)
        for (int f : info.rank_faces(r)) extend(extend, f);

    // Dimension-0 cells already exist via add_vertex; create the rest with
    // facet links to all drop-one subchains.
    std::map<std::vector<int>, int> cell_of;
    for (size_t v = 0; v < cx.vertices.size(); ++v)
        cell_of[{static_cast<int>(v)}] = cx.vertex_cell[v];
    for (int d = 1; d <= cx.dim; ++d) {
        std::sort(chains[d].begin(), chains[d].end());
        for (const auto& verts : chains[d]) {
            std::vector<int> facets;
            for (size_t drop = 0; drop < verts.size(); ++drop) {
                std::vector<int> sub;
                for (size_t i = 0; i < verts.size(); ++i)
                    if (i != drop) sub.push_back(verts[i]);
                auto it = cell_of.find(sub);
                if (it == cell_of.end())
                    throw IntegrityError("barycentric_subdivision: missing subchain cell");
                facets.push_back(it->second);
            }
            int id = cx.add_cell(d, verts, std::move(facets));
            cell_of[verts] = id;
        }
    }
    return cx;
}

Subcomplex vertex_star(const CellComplex& cx, int vertex) {
    if (vertex < 0 || vertex >= static_cast<int>(cx.vertices.size()))
        throw ValidationError("vertex_star: unknown vertex id " + std::to_string(vertex));
    std::set<int> ids;
    std::queue<int> q;
    Subcomplex star;
    for (const auto& c : cx.cells) {
        if (!c.alive) continue;
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), vertex)) {
            if (ids.insert(c.id).second) q.push(c.id);
            if (c.dim == cx.dim) star.chamber_ids.push_back(c.id);
        }
    }
    while (!q.empty()) {
        int id = q.front();
        q.pop();
        for (int f : cx.cells[id].facets)
            if (ids.insert(f).second) q.push(f);
    }
    star.cell_ids.assign(ids.begin(), ids.end());
    return star;
}

Subcomplex vertex_link(const CellComplex& cx, int vertex) {
    Subcomplex star = vertex_star(cx, vertex);
    Subcomplex link;
    for (int id : star.cell_ids) {
        const auto& c = cx.cells[id];
        if (!std::binary_search(c.vertices.begin(), c.vertices.end(), vertex)) {
            link.cell_ids.push_back(id);
            if (c.dim == cx.dim) link.chamber_ids.push_back(id);
        }
    }
    return link;
}

long chamber_count_through(const CellComplex& cx, int vertex) {
    if (vertex < 0 || vertex >= static_cast<int>(cx.vertices.size()))
        throw ValidationError("chamber_count_through: unknown vertex id " + std::to_string(vertex));
    long n = 0;
    for (const auto& c : cx.cells) {
        if (!c.alive || c.dim != cx.dim) continue;
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), vertex)) ++n;
    }
    return n;
}

FaceLattice complete_polytope(const CellComplex& cx) {
    for (const auto& c : cx.cells)
        if (!c.alive) throw IntegrityError("complete_polytope: complex has dead cells; compact first");

    FaceLattice L;
    L.rank = cx.dim + 1;
    int n = static_cast<int>(cx.cells.size());

    Face least;
    least.id = 0;
    least.rank = -1;
    L.faces.push_back(least);

    for (int i = 0; i < n; ++i) {
        const auto& c = cx.cells[i];
        if (c.id != i) throw IntegrityError("complete_polytope: cell ids not dense");
        Face f;
        f.id = i + 1;
        f.rank = c.dim;
        if (c.dim == 0) {
            f.covers = {0};
        } else {
            for (int fc : c.facets) f.covers.push_back(fc + 1);
        }
        L.faces.push_back(std::move(f));
    }

    Face top;
    top.id = n + 1;
    top.rank = L.rank;
    for (int i = 0; i < n; ++i)
        if (cx.cells[i].dim == cx.dim) top.covers.push_back(i + 1);
    L.faces.push_back(std::move(top));

    // complete_polytope promises rank-major ids; cells are dim-major after
    // compact(), which gives exactly that.
    return L;
}

} // namespace polyforge
