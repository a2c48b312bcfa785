#include "polyforge/realize.hpp"
#include "polyforge/complex.hpp"
#include "polyforge/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace polyforge {

GeometricPolytope make_polytope(const std::vector<RatVec>& points, const HullOptions& opts) {
    GeometricPolytope p;
    p.ambient_points = points;
    HullResult hull = hull_lattice(points, opts);
    p.chart = hull.chart;
    p.points = hull.chart_points;
    p.dim = hull.dim;
    p.lattice = std::move(hull.lattice);
    p.face_points = std::move(hull.face_points);
    p.facets = std::move(hull.facets);
    return p;
}

std::pair<std::vector<int>, std::vector<int>> hyperplane_sets(const GeometricPolytope& current,
                                                              const std::vector<int>& face_points) {
    if (face_points.empty()) throw ValidationError("hyperplane_sets: empty face");
    std::vector<int> containing, meeting;
    for (size_t h = 0; h < current.facets.size(); ++h) {
        const auto& plane = current.facets[h].plane;
        size_t on = 0;
        for (int pt : face_points)
            if (plane.side(current.points[pt]) == 0) ++on;
        if (on == face_points.size()) containing.push_back(static_cast<int>(h));
        else if (on > 0) meeting.push_back(static_cast<int>(h));
    }
    if (containing.empty())
        throw ValidationError("hyperplane_sets: face absent from the current polytope");
    return {containing, meeting};
}

namespace {

struct PullStagePoint {
    int face = -1; // lattice face id of the input polytope
    RatVec coords;
};

// Open segment (x, y) meets the interior of the polytope given by oriented
// facet planes. Exact one-variable feasibility.
bool segment_meets_interior(const RatVec& x, const RatVec& y,
                            const std::vector<HullFacet>& facets) {
    Rat lo = 0, hi = 1;
    for (const auto& f : facets) {
        Rat ax = dot(f.plane.normal, x);
        Rat ay = dot(f.plane.normal, y);
        Rat coeff = ay - ax;           // constraint: ax + s*coeff < c
        Rat rhs = f.plane.offset - ax; // need s*coeff < rhs
        if (coeff == 0) {
            if (!(rhs > 0)) return false;
        } else if (coeff > 0) {
            hi = std::min(hi, Rat(rhs / coeff));
        } else {
            lo = std::max(lo, Rat(rhs / coeff));
        }
    }
    return lo < hi;
}

GeometricPolytope snapshot(const AffineChart& chart, const RatVec& shift,
                           const std::vector<RatVec>& pts, const HullOptions& hull_opts) {
    GeometricPolytope g;
    g.chart = chart;
    HullResult hull = hull_lattice(pts, hull_opts);
    // hull_lattice re-charts; our points are full-dimensional, so the chart
    // is the identity and chart_points == pts.
    g.points = hull.chart_points;
    g.dim = hull.dim;
    g.lattice = std::move(hull.lattice);
    g.face_points = std::move(hull.face_points);
    g.facets = std::move(hull.facets);
    for (const auto& p : pts) g.ambient_points.push_back(chart.from_chart(add(p, shift)));
    return g;
}

} // namespace

RealizeResult pull_realize(const GeometricPolytope& p, const RealizeOptions& opts) {
    const int k = p.dim;
    if (k < 2 || k > 4)
        throw ResourceError("pull_realize: rank " + std::to_string(k) + " outside the supported 2..4");

    LatticeInfo info = build_info(p.lattice);

    // Working coordinates: chart coordinates with the vertex centroid at the
    // origin.
    RatVec o(p.points[0].size(), Rat(0));
    for (const auto& pt : p.points) o = add(o, pt);
    o = scale(o, Rat(1) / Rat(static_cast<long>(p.points.size())));

    std::vector<PullStagePoint> pts;
    for (size_t i = 0; i < p.points.size(); ++i) {
        // point i is a vertex; find its rank-0 face id
        PullStagePoint sp;
        sp.coords = sub(p.points[i], o);
        for (int f : info.rank_faces(0))
            if (p.face_points[f] == std::vector<int>{static_cast<int>(i)}) sp.face = f;
        if (sp.face < 0) throw IntegrityError("pull_realize: input point is not a vertex face");
        pts.push_back(std::move(sp));
    }

    HullOptions hull_opts = opts.hull;
    hull_opts.max_points = std::max(hull_opts.max_points, 64);

    RealizeResult result;
    auto coords_of = [&]() {
        std::vector<RatVec> c;
        for (const auto& sp : pts) c.push_back(sp.coords);
        return c;
    };
    GeometricPolytope current = snapshot(p.chart, o, coords_of(), hull_opts);

    // Original faces of R in point-index terms, and their centroids.
    auto face_point_set = [&](int f) { return p.face_points[f]; };

    for (int j = k - 1; j >= 1; --j) {
        std::vector<int> faces_j = info.rank_faces(j);
        std::sort(faces_j.begin(), faces_j.end());

        bool done = false;
        std::string last_failure;
        for (int qe = 1; qe <= opts.q_max_exponent && !done; ++qe) {
            Rat q = Rat(boost::multiprecision::mpz_int(1) << qe);
            std::vector<RatVec> chosen;
            bool feasible = true;

            for (int F : faces_j) {
                const auto& fpts = face_point_set(F);
                RatVec b(pts[0].coords.size(), Rat(0));
                for (int i : fpts) b = add(b, pts[i].coords);
                b = scale(b, Rat(1) / Rat(static_cast<long>(fpts.size())));

                // Split the current facet planes by containment of F; the
                // pulled point goes above the containing ones and stays below
                // every other plane, on the ray through b.
                bool has_upper = false;
                Rat t_hi = 0;
                int containing = 0;
                for (const auto& facet : current.facets) {
                    size_t on = 0;
                    for (int i : fpts)
                        if (facet.plane.side(pts[i].coords) == 0) ++on;
                    if (on == fpts.size()) {
                        ++containing;
                        continue;
                    }
                    Rat ab = dot(facet.plane.normal, b);
                    if (!(ab < facet.plane.offset))
                        throw IntegrityError("pull_realize: face centroid not below a foreign facet");
                    if (ab > 0) {
                        Rat cross = facet.plane.offset / ab;
                        if (!has_upper || cross < t_hi) {
                            t_hi = cross;
                            has_upper = true;
                        }
                    }
                }
                if (containing == 0)
                    throw IntegrityError("pull_realize: face lost before its pulling step");

                Rat t = has_upper ? Rat(1 + (t_hi - 1) / q) : Rat(1 + 1 / q);
                chosen.push_back(scale(b, t));
            }

            // Constraint checks: above the containing planes, below all
            // others, and every open segment between chosen points meets the
            // interior.
            for (size_t a = 0; a < chosen.size() && feasible; ++a) {
                const auto& fpts = face_point_set(faces_j[a]);
                for (const auto& facet : current.facets) {
                    size_t on = 0;
                    for (int i : fpts)
                        if (facet.plane.side(pts[i].coords) == 0) ++on;
                    int side = facet.plane.side(chosen[a]);
                    if (on == fpts.size() ? side <= 0 : side >= 0) {
                        feasible = false;
                        last_failure = "support constraint at face " + std::to_string(faces_j[a]);
                        break;
                    }
                }
            }
            for (size_t a = 0; a < chosen.size() && feasible; ++a) {
                for (size_t b2 = a + 1; b2 < chosen.size() && feasible; ++b2) {
                    if (!segment_meets_interior(chosen[a], chosen[b2], current.facets)) {
                        feasible = false;
                        last_failure = "segment-interior constraint for faces " +
                                       std::to_string(faces_j[a]) + " and " +
                                       std::to_string(faces_j[b2]);
                    }
                }
            }
            if (!feasible) continue;

            std::vector<PullStagePoint> trial = pts;
            for (size_t a = 0; a < chosen.size(); ++a)
                trial.push_back({faces_j[a], chosen[a]});
            std::vector<RatVec> coords;
            for (const auto& sp : trial) coords.push_back(sp.coords);

            GeometricPolytope next;
            try {
                next = snapshot(p.chart, o, coords, hull_opts);
            } catch (const IntegrityError& e) {
                last_failure = e.what();
                continue;
            }

            // Step postconditions: every facet holds exactly one pulled
            // point; faces of rank < j survive; rank-j faces are gone; no
            // face holds two pulled points.
            bool post_ok = true;
            size_t first_new = pts.size();
            for (const auto& facet : next.facets) {
                int fresh = 0;
                for (int i : facet.points)
                    if (static_cast<size_t>(i) >= first_new) ++fresh;
                if (fresh != 1) {
                    post_ok = false;
                    last_failure = "a facet holds " + std::to_string(fresh) + " pulled points";
                    break;
                }
            }
            std::set<std::vector<int>> next_faces(next.face_points.begin() + 1,
                                                  next.face_points.end() - 1);
            for (int r = 0; r < j && post_ok; ++r) {
                for (int f : info.rank_faces(r)) {
                    if (!next_faces.count(face_point_set(f))) {
                        post_ok = false;
                        last_failure = "skeleton face " + std::to_string(f) + " destroyed";
                        break;
                    }
                }
            }
            for (int f : faces_j) {
                if (!post_ok) break;
                if (next_faces.count(face_point_set(f))) {
                    post_ok = false;
                    last_failure = "rank-" + std::to_string(j) + " face " + std::to_string(f) +
                                   " survived its pulling step";
                }
            }
            if (!post_ok) continue;

            pts = std::move(trial);
            current = std::move(next);
            done = true;
        }
        if (!done)
            throw Error("pull_realize: retries exhausted at rank " + std::to_string(j) + ": " +
                        last_failure);
    }

    result.realized = std::move(current);
    for (const auto& sp : pts) result.point_provenance.push_back(sp.face);

    // Certificate: explicit isomorphism onto the completed order complex.
    CellComplex cq = barycentric_subdivision(p.lattice);
    result.subdivision_lattice = complete_polytope(cq);
    std::vector<int> cq_vertex_of_face(p.lattice.face_count(), -1);
    for (size_t x = 0; x < cq.vertices.size(); ++x)
        cq_vertex_of_face[cq.vertices[x].origin] = static_cast<int>(x);

    LatticeInfo rinfo = build_info(result.realized.lattice);
    std::vector<int> vertex_map; // realized rank-0 face id -> subdivision face id
    vertex_map.assign(result.realized.lattice.face_count(), -1);
    for (int vf : rinfo.rank_faces(0)) {
        int point = result.realized.face_points[vf][0];
        int rface = result.point_provenance[point];
        int cqv = cq_vertex_of_face[rface];
        if (cqv < 0) throw IntegrityError("pull_realize: provenance face missing a subdivision vertex");
        vertex_map[vf] = cq.vertex_cell[cqv] + 1;
    }
    result.iso = equivalence_check(result.realized.lattice, result.subdivision_lattice, vertex_map);
    return result;
}

std::vector<std::pair<int, int>> equivalence_check(const FaceLattice& a, const FaceLattice& b,
                                                   const std::vector<int>& vertex_map) {
    if (a.rank != b.rank)
        throw CertificationError("equivalence_check: rank mismatch " + std::to_string(a.rank) +
                                 " vs " + std::to_string(b.rank));
    LatticeInfo ia = build_info(a);
    LatticeInfo ib = build_info(b);

    std::map<std::vector<int>, int> b_face_of;
    for (int f = 0; f < b.face_count(); ++f)
        if (b.faces[f].rank >= 0 && b.faces[f].rank < b.rank) b_face_of[ib.vertex_sets[f]] = f;

    std::vector<int> img(a.face_count(), -1);
    img[ia.least] = ib.least;
    img[ia.greatest] = ib.greatest;
    for (int f = 0; f < a.face_count(); ++f) {
        int r = a.faces[f].rank;
        if (r < 0 || r >= a.rank) continue;
        std::vector<int> mapped;
        for (int vf : ia.vertex_sets[f]) {
            if (vertex_map[vf] < 0)
                throw CertificationError("equivalence_check: vertex " + std::to_string(vf) +
                                         " has no image");
            mapped.push_back(vertex_map[vf]);
        }
        std::sort(mapped.begin(), mapped.end());
        auto it = b_face_of.find(mapped);
        if (it == b_face_of.end())
            throw CertificationError("equivalence_check: face " + std::to_string(f) +
                                     " has no counterpart");
        if (b.faces[it->second].rank != r)
            throw CertificationError("equivalence_check: face " + std::to_string(f) +
                                     " maps across ranks");
        img[f] = it->second;
    }
    std::vector<bool> hit(b.face_count(), false);
    for (int f = 0; f < a.face_count(); ++f) {
        if (img[f] < 0 || hit[img[f]])
            throw CertificationError("equivalence_check: map is not a bijection at face " +
                                     std::to_string(f));
        hit[img[f]] = true;
    }
    if (a.face_count() != b.face_count())
        throw CertificationError("equivalence_check: face counts differ");
    for (int f = 0; f < a.face_count(); ++f) {
        std::vector<int> mapped;
        for (int c : ia.covers[f]) mapped.push_back(img[c]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != ib.covers[img[f]])
            throw CertificationError("equivalence_check: covers mismatch at pair (" +
                                     std::to_string(f) + "," + std::to_string(img[f]) + ")");
    }

    std::vector<std::pair<int, int>> iso;
    for (int f = 0; f < a.face_count(); ++f) iso.push_back({f, img[f]});
    return iso;
}

std::string to_off(const GeometricPolytope& p, int precision) {
    if (p.dim != 3) throw ValidationError("to_off: only rank-3 polytopes are written as OFF");
    const std::vector<RatVec>* coords = &p.ambient_points;
    if (p.ambient_points.empty() || p.ambient_points[0].size() != 3) coords = &p.points;
    if ((*coords)[0].size() != 3)
        throw ValidationError("to_off: no 3-dimensional coordinates available");

    LatticeInfo info = build_info(p.lattice);
    long V = static_cast<long>(info.rank_faces(0).size());
    long E = static_cast<long>(info.rank_faces(1).size());
    long F = static_cast<long>(info.rank_faces(2).size());

    RatVec centroid(3, Rat(0));
    for (const auto& pt : *coords) centroid = add(centroid, pt);
    centroid = scale(centroid, Rat(1) / Rat(static_cast<long>(coords->size())));

    std::ostringstream os;
    os << "OFF\n" << V << " " << F << " " << E << "\n";
    for (const auto& pt : *coords) {
        for (int c = 0; c < 3; ++c) {
            if (c) os << " ";
            os << rational_to_decimal(pt[c], precision);
        }
        os << "\n";
    }
    for (const auto& facet : p.facets) {
        std::vector<int> cycle = facet.points;
        if (cycle.size() == 3) {
            // Orient outward: the facet normal and the vertex order agree.
            const RatVec& a = (*coords)[cycle[0]];
            const RatVec& b = (*coords)[cycle[1]];
            const RatVec& c = (*coords)[cycle[2]];
            RatVec u = sub(b, a), v = sub(c, a), w = sub(a, centroid);
            Rat det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                      u[2] * (v[0] * w[1] - v[1] * w[0]);
            if (det < 0) std::swap(cycle[1], cycle[2]);
        } else {
            // Walk the facet's edge cycle through the lattice.
            int facet_face = -1;
            for (int f : info.rank_faces(2))
                if (p.face_points[f] == facet.points) facet_face = f;
            if (facet_face < 0) throw IntegrityError("to_off: facet without a lattice face");
            std::map<int, std::vector<int>> nbr;
            for (int e : info.covers[facet_face]) {
                const auto& ev = p.face_points[e];
                nbr[ev[0]].push_back(ev[1]);
                nbr[ev[1]].push_back(ev[0]);
            }
            cycle.clear();
            int start = facet.points[0];
            int prev = -1, cur = start;
            do {
                cycle.push_back(cur);
                int nxt = (nbr[cur][0] != prev) ? nbr[cur][0] : nbr[cur][1];
                prev = cur;
                cur = nxt;
            } while (cur != start);
            const RatVec& a = (*coords)[cycle[0]];
            const RatVec& b = (*coords)[cycle[1]];
            const RatVec& c = (*coords)[cycle[2]];
            RatVec u = sub(b, a), v = sub(c, a), w = sub(a, centroid);
            Rat det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                      u[2] * (v[0] * w[1] - v[1] * w[0]);
            if (det < 0) std::reverse(cycle.begin() + 1, cycle.end());
        }
        os << cycle.size();
        for (int v : cycle) os << " " << v;
        os << "\n";
    }
    return os.str();
}

} // namespace polyforge
