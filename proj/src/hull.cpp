#include "polyforge/hull.hpp"
#include "polyforge/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyforge {

RatVec initial_vertex(int n) {
    if (n < 1) throw ValidationError("initial_vertex: need n >= 1");
    RatVec v(n + 1);
    Rat total = 0;
    Rat w = Rat(boost::multiprecision::mpz_int(1) << n); // 2^n
    for (int i = 0; i <= n; ++i) {
        v[i] = w;
        total += w;
        w /= 2;
    }
    for (auto& c : v) c /= total;
    return v;
}

std::vector<RatVec> orbit(const PermGroup& group, const RatVec& v) {
    if (static_cast<int>(v.size()) != group.degree)
        throw ValidationError("orbit: point length must equal group degree");
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j])
                throw ValidationError("orbit: coordinates " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide; orbit could collapse");
    std::vector<RatVec> pts;
    pts.reserve(group.elements.size());
    for (const auto& g : group.elements) {
        Permutation ginv = g.inverse();
        RatVec p(v.size());
        for (size_t i = 0; i < v.size(); ++i) p[i] = v[ginv.images[i]];
        pts.push_back(std::move(p));
    }
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw IntegrityError("orbit: repeated orbit point");
    return pts;
}

int dimension(const std::vector<RatVec>& points) {
    if (points.empty()) throw ValidationError("dimension: no points");
    return affine_rank(points);
}

namespace {

struct WorkFacet {
    std::vector<int> points; // sorted
    Hyperplane plane;
};

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Incremental beneath-beyond insertion over exact arithmetic. Facets may be
// non-simplicial; coplanar merges are handled by canonical hyperplane keys.
std::vector<WorkFacet> incremental_hull(const std::vector<RatVec>& pts, int dim,
                                        const std::vector<int>& basis_points) {
    // Initial simplex from the chart-defining points.
    std::vector<WorkFacet> facets;
    RatVec interior(dim, Rat(0));
    for (int bp : basis_points)
        interior = add(interior, pts[bp]);
    interior = scale(interior, Rat(1) / Rat(static_cast<long>(basis_points.size())));

    for (size_t drop = 0; drop < basis_points.size(); ++drop) {
        WorkFacet f;
        std::vector<RatVec> span;
        for (size_t i = 0; i < basis_points.size(); ++i) {
            if (i == drop) continue;
            f.points.push_back(basis_points[i]);
            span.push_back(pts[basis_points[i]]);
        }
        std::sort(f.points.begin(), f.points.end());
        f.plane = hyperplane_through(span, interior);
        facets.push_back(std::move(f));
    }

    std::vector<bool> used(pts.size(), false);
    for (int bp : basis_points) used[bp] = true;

    for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
        if (used[p]) continue;
        std::vector<int> side(facets.size());
        bool any_visible = false;
        for (size_t i = 0; i < facets.size(); ++i) {
            side[i] = facets[i].plane.side(pts[p]);
            if (side[i] > 0) any_visible = true;
        }
        if (!any_visible)
            throw IntegrityError("hull: input point " + std::to_string(p) +
                                 " is not a vertex of the hull");

        std::vector<WorkFacet> next;
        std::vector<WorkFacet> created;
        for (size_t i = 0; i < facets.size(); ++i) {
            if (side[i] < 0) {
                next.push_back(facets[i]);
            } else if (side[i] == 0) {
                WorkFacet ext = facets[i];
                ext.points.push_back(p);
                std::sort(ext.points.begin(), ext.points.end());
                next.push_back(std::move(ext));
            }
        }
        // Horizon ridges: shared (dim-2)-faces between a visible facet and a
        // strictly invisible one.
        for (size_t i = 0; i < facets.size(); ++i) {
            if (side[i] <= 0) continue;
            for (size_t j = 0; j < facets.size(); ++j) {
                if (side[j] >= 0) continue;
                std::vector<int> shared = sorted_intersection(facets[i].points, facets[j].points);
                if (shared.size() < static_cast<size_t>(dim - 1)) continue;
                std::vector<RatVec> shared_pts;
                for (int s : shared) shared_pts.push_back(pts[s]);
                if (affine_rank(shared_pts) != dim - 2) continue;
                WorkFacet nf;
                nf.points = shared;
                nf.points.push_back(p);
                std::sort(nf.points.begin(), nf.points.end());
                std::vector<RatVec> span;
                // Greedy affinely independent subset spanning the new plane.
                for (int s : nf.points) {
                    std::vector<RatVec> trial = span;
                    trial.push_back(pts[s]);
                    if (affine_rank(trial) == static_cast<int>(span.size())) continue;
                    span = std::move(trial);
                    if (static_cast<int>(span.size()) == dim) break;
                }
                if (static_cast<int>(span.size()) != dim)
                    throw IntegrityError("hull: degenerate horizon ridge");
                nf.plane = hyperplane_through(span, interior);
                created.push_back(std::move(nf));
            }
        }
        for (auto& f : created) next.push_back(std::move(f));

        // Merge facets sharing an oriented hyperplane.
        std::map<std::vector<Rat>, WorkFacet> merged;
        for (auto& f : next) {
            auto key = hyperplane_key(f.plane);
            auto it = merged.find(key);
            if (it == merged.end()) {
                merged.emplace(std::move(key), std::move(f));
            } else {
                auto& tgt = it->second.points;
                tgt.insert(tgt.end(), f.points.begin(), f.points.end());
                std::sort(tgt.begin(), tgt.end());
                tgt.erase(std::unique(tgt.begin(), tgt.end()), tgt.end());
            }
        }
        facets.clear();
        for (auto& [key, f] : merged) facets.push_back(std::move(f));
        used[p] = true;
    }
    return facets;
}

// Per-facet exact certificates: all points weakly below, the on-set equals
// the recorded vertex set, and the vertex set affinely spans the plane.
void certify_facets(const std::vector<RatVec>& pts, int dim, const std::vector<WorkFacet>& facets) {
    for (const auto& f : facets) {
        std::vector<int> on;
        for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
            int s = f.plane.side(pts[p]);
            if (s > 0)
                throw IntegrityError("hull: point " + std::to_string(p) +
                                     " above a recorded facet; input not in convex position");
            if (s == 0) on.push_back(p);
        }
        if (on != f.points)
            throw IntegrityError("hull: an input point lies on a facet without being its vertex");
        std::vector<RatVec> span;
        for (int p : f.points) span.push_back(pts[p]);
        if (affine_rank(span) != dim - 1)
            throw IntegrityError("hull: facet vertex set does not span its hyperplane");
    }
}

} // namespace

std::vector<std::vector<int>> brute_force_facets(const std::vector<RatVec>& chart_points, int dim) {
    int n = static_cast<int>(chart_points.size());
    std::set<std::vector<int>> found;
    std::vector<int> subset(dim);
    auto rec = [&](auto&& self, int start, int k) -> void {
        if (k == dim) {
            std::vector<RatVec> span;
            for (int idx : subset) span.push_back(chart_points[idx]);
            if (affine_rank(span) != dim - 1) return;
            RatMat diffs;
            for (int i = 1; i < dim; ++i) diffs.push_back(sub(span[i], span[0]));
            RatVec normal = nullspace_vector(diffs, dim);
            Rat offset = dot(normal, span[0]);
            int pos = 0, neg = 0;
            std::vector<int> on;
            for (int p = 0; p < n; ++p) {
                Rat v = dot(normal, chart_points[p]) - offset;
                if (v > 0) ++pos;
                else if (v < 0) ++neg;
                else on.push_back(p);
                if (pos && neg) return;
            }
            found.insert(on);
            return;
        }
        for (int i = start; i <= n - (dim - k); ++i) {
            subset[k] = i;
            self(self, i + 1, k + 1);
        }
    };
    if (dim >= 1) rec(rec, 0, 0);
    return {found.begin(), found.end()};
}

HullResult hull_lattice(const std::vector<RatVec>& points, const HullOptions& opts) {
    if (points.size() < 2) throw ValidationError("hull_lattice: need at least 2 points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw ValidationError("hull_lattice: duplicate points " + std::to_string(i) +
                                      " and " + std::to_string(j));
    if (static_cast<int>(points.size()) > opts.max_points)
        throw ResourceError("hull_lattice: point count " + std::to_string(points.size()) +
                            " exceeds cap " + std::to_string(opts.max_points));

    HullResult res;
    res.chart = build_chart(points);
    res.dim = res.chart.dim();
    if (res.dim > opts.max_dim)
        throw ResourceError("hull_lattice: dimension " + std::to_string(res.dim) + " exceeds cap " +
                            std::to_string(opts.max_dim));
    if (res.dim < 1) throw ValidationError("hull_lattice: points are all equal");
    if (res.dim == static_cast<int>(points[0].size())) {
        // Full-dimensional input: use the identity chart so facet planes stay
        // in input coordinates.
        res.chart.origin.assign(res.dim, Rat(0));
        res.chart.basis.assign(res.dim, RatVec(res.dim, Rat(0)));
        for (int i = 0; i < res.dim; ++i) res.chart.basis[i][i] = 1;
        res.chart_points = points;
    } else {
        for (const auto& p : points) res.chart_points.push_back(res.chart.to_chart(p));
    }

    std::vector<WorkFacet> facets;
    if (res.dim == 1) {
        // The hull is a segment: the two extreme points. Any third point
        // would be interior, violating the vertex contract.
        if (points.size() != 2)
            throw IntegrityError("hull: collinear input with an interior point");
        for (int p = 0; p < 2; ++p) {
            WorkFacet f;
            f.points = {p};
            f.plane.normal = {res.chart_points[p][0] > res.chart_points[1 - p][0] ? Rat(1) : Rat(-1)};
            f.plane.offset = f.plane.normal[0] * res.chart_points[p][0];
            facets.push_back(f);
        }
    } else {
        facets = incremental_hull(res.chart_points, res.dim, res.chart.basis_points);
        certify_facets(res.chart_points, res.dim, facets);
        if (opts.cross_check && static_cast<int>(points.size()) <= 14) {
            auto oracle = brute_force_facets(res.chart_points, res.dim);
            std::set<std::vector<int>> mine;
            for (const auto& f : facets) mine.insert(f.points);
            if (std::set<std::vector<int>>(oracle.begin(), oracle.end()) != mine)
                throw IntegrityError("hull: production facets disagree with brute-force oracle");
        }
    }
    std::sort(facets.begin(), facets.end(),
              [](const WorkFacet& a, const WorkFacet& b) { return a.points < b.points; });

    // Face lattice by intersection closure of facet vertex sets.
    std::set<std::vector<int>> face_sets;
    std::vector<int> all_points(points.size());
    for (size_t i = 0; i < points.size(); ++i) all_points[i] = static_cast<int>(i);
    std::vector<std::vector<int>> queue;
    for (const auto& f : facets) {
        if (face_sets.insert(f.points).second) queue.push_back(f.points);
    }
    while (!queue.empty()) {
        std::vector<int> cur = queue.back();
        queue.pop_back();
        for (const auto& f : facets) {
            std::vector<int> meet = sorted_intersection(cur, f.points);
            if (meet.empty() || meet == cur) continue;
            if (face_sets.insert(meet).second) queue.push_back(meet);
        }
    }

    // Every input point must appear as a vertex (a singleton face).
    for (int p : all_points)
        if (!face_sets.count({p}))
            throw IntegrityError("hull: input point " + std::to_string(p) +
                                 " is not a vertex of the hull");

    struct ProtoFace {
        std::vector<int> pts;
        int rank;
    };
    std::vector<ProtoFace> proto;
    proto.push_back({{}, -1});
    for (const auto& s : face_sets) {
        std::vector<RatVec> span;
        for (int p : s) span.push_back(res.chart_points[p]);
        proto.push_back({s, affine_rank(span)});
    }
    proto.push_back({all_points, res.dim});
    std::stable_sort(proto.begin(), proto.end(), [](const ProtoFace& a, const ProtoFace& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.pts < b.pts;
    });

    res.lattice.rank = res.dim;
    res.face_points.resize(proto.size());
    std::vector<std::vector<int>> ids_by_rank(res.dim + 2);
    for (size_t i = 0; i < proto.size(); ++i) {
        Face f;
        f.id = static_cast<int>(i);
        f.rank = proto[i].rank;
        res.face_points[i] = proto[i].pts;
        ids_by_rank[proto[i].rank + 1].push_back(f.id);
        res.lattice.faces.push_back(std::move(f));
    }
    for (int r = 0; r <= res.dim; ++r) {
        for (int id : ids_by_rank[r + 1]) {
            auto& f = res.lattice.faces[id];
            if (r == 0) {
                f.covers = {0};
                continue;
            }
            for (int sub : ids_by_rank[r]) {
                if (std::includes(res.face_points[id].begin(), res.face_points[id].end(),
                                  res.face_points[sub].begin(), res.face_points[sub].end()))
                    f.covers.push_back(sub);
            }
            std::sort(f.covers.begin(), f.covers.end());
        }
    }

    for (int id : ids_by_rank[1]) res.vertex_point.push_back(res.face_points[id][0]);

    for (const auto& f : facets) {
        HullFacet hf;
        hf.points = f.points;
        hf.plane = f.plane;
        res.facets.push_back(std::move(hf));
    }
    return res;
}

OrbitPolytope orbit_polytope(const PermGroup& group, const RatVec& v, const HullOptions& opts) {
    OrbitPolytope q;
    q.points = orbit(group, v);
    if (q.points.size() < 2)
        throw ValidationError("orbit_polytope: group too small for a polytope");
    q.hull = hull_lattice(q.points, opts);
    q.dim = q.hull.dim;
    if (group.order() >= 4 && q.dim < 2)
        throw IntegrityError("orbit_polytope: dimension below 2 for a group of order >= 4");

    LatticeInfo info = build_info(q.hull.lattice);
    const auto& verts = info.rank_faces(0);
    q.vertex_to_group.assign(q.hull.lattice.face_count(), -1);
    q.group_to_vertex.assign(group.elements.size(), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        int point_index = q.hull.face_points[verts[i]][0];
        q.vertex_to_group[verts[i]] = point_index; // orbit order = element order
        q.group_to_vertex[point_index] = verts[i];
    }
    for (int g : q.group_to_vertex)
        if (g < 0) throw IntegrityError("orbit_polytope: an orbit point is not a hull vertex");
    return q;
}

} // namespace polyforge
