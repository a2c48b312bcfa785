#include "polyforge/lattice.hpp"
#include "polyforge/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace polyforge {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

bool LatticeInfo::covers_contains(int face, int covered) const {
    const auto& c = covers[face];
    return std::binary_search(c.begin(), c.end(), covered);
}

LatticeInfo build_info(const FaceLattice& lattice) {
    int n = lattice.face_count();
    if (n == 0) throw ValidationError("lattice has no faces");
    for (int i = 0; i < n; ++i) {
        if (lattice.faces[i].id != i)
            throw ValidationError("face ids must be dense and sorted; face at position " +
                                  std::to_string(i) + " has id " + std::to_string(lattice.faces[i].id));
        if (lattice.faces[i].rank < -1 || lattice.faces[i].rank > lattice.rank)
            throw ValidationError("face " + std::to_string(i) + " has rank out of range");
        for (int c : lattice.faces[i].covers)
            if (c < 0 || c >= n)
                throw ValidationError("face " + std::to_string(i) + " covers unresolved id " +
                                      std::to_string(c));
    }

    LatticeInfo info;
    info.lattice = &lattice;
    info.above.assign(n, {});
    info.covers.assign(n, {});
    info.by_rank.assign(lattice.rank + 2, {});
    for (int i = 0; i < n; ++i) {
        info.by_rank[lattice.faces[i].rank + 1].push_back(i);
        info.covers[i] = lattice.faces[i].covers;
        std::sort(info.covers[i].begin(), info.covers[i].end());
        for (int c : lattice.faces[i].covers) info.above[c].push_back(i);
    }
    for (auto& a : info.above) std::sort(a.begin(), a.end());

    if (info.by_rank[0].size() != 1)
        throw ValidationError("expected exactly one rank -1 face, found " +
                              std::to_string(info.by_rank[0].size()));
    if (info.by_rank[lattice.rank + 1].size() != 1)
        throw ValidationError("expected exactly one top-rank face, found " +
                              std::to_string(info.by_rank[lattice.rank + 1].size()));
    info.least = info.by_rank[0][0];
    info.greatest = info.by_rank[lattice.rank + 1][0];

    // Vertex sets, computed rank by rank.
    info.vertex_sets.assign(n, {});
    for (int r = 0; r <= lattice.rank; ++r) {
        for (int f : info.by_rank[r + 1]) {
            if (r == 0) {
                info.vertex_sets[f] = {f};
                continue;
            }
            std::vector<int> acc;
            for (int c : info.covers[f]) {
                acc.insert(acc.end(), info.vertex_sets[c].begin(), info.vertex_sets[c].end());
            }
            std::sort(acc.begin(), acc.end());
            acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
            info.vertex_sets[f] = std::move(acc);
        }
    }
    return info;
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

namespace {

// Enumerates the maximal chains of the interval [lo, hi] and checks that the
// flag graph restricted to the interval is connected.
bool section_flag_connected(const LatticeInfo& info, int lo, int hi) {
    const FaceLattice& L = *info.lattice;
    int rlo = L.faces[lo].rank;
    int rhi = L.faces[hi].rank;
    int levels = rhi - rlo - 1; // interior ranks
    if (levels <= 0) return true;

    // Faces of the section, found by intersecting the down-set of hi with the
    // up-set of lo.
    std::unordered_set<int> down;
    {
        std::queue<int> q;
        q.push(hi);
        down.insert(hi);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int c : info.covers[f])
                if (L.faces[c].rank >= rlo && down.insert(c).second) q.push(c);
        }
    }
    std::unordered_set<int> section;
    {
        std::queue<int> q;
        q.push(lo);
        section.insert(lo);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int a : info.above[f])
                if (L.faces[a].rank <= rhi && down.count(a) && section.insert(a).second) q.push(a);
        }
    }

    // Enumerate section flags (interior faces only).
    std::vector<std::vector<int>> flags;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int cur) -> void {
        if (L.faces[cur].rank == rhi - 1) {
            if (info.covers_contains(hi, cur)) flags.push_back(chain);
            return;
        }
        for (int a : info.above[cur]) {
            if (!section.count(a)) continue;
            chain.push_back(a);
            self(self, a);
            chain.pop_back();
        }
    };
    if (levels == 0) return true;
    for (int a : info.above[lo]) {
        if (!section.count(a)) continue;
        chain.push_back(a);
        extend(extend, a);
        chain.pop_back();
    }
    if (flags.empty()) return false;

    std::unordered_map<std::vector<int>, int, VecHash> index;
    for (size_t i = 0; i < flags.size(); ++i) index[flags[i]] = static_cast<int>(i);

    // BFS over i-adjacency within the section.
    std::vector<bool> seen(flags.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    size_t reached = 1;
    while (!q.empty()) {
        int fi = q.front();
        q.pop();
        const auto& fl = flags[fi];
        for (int lvl = 0; lvl < levels; ++lvl) {
            int below = (lvl == 0) ? lo : fl[lvl - 1];
            int above_face = (lvl == levels - 1) ? hi : fl[lvl + 1];
            for (int mid : info.above[below]) {
                if (mid == fl[lvl] || !section.count(mid)) continue;
                if (!info.covers_contains(above_face, mid)) continue;
                std::vector<int> other = fl;
                other[lvl] = mid;
                auto it = index.find(other);
                if (it == index.end()) continue;
                if (!seen[it->second]) {
                    seen[it->second] = true;
                    ++reached;
                    q.push(it->second);
                }
            }
        }
    }
    return reached == flags.size();
}

} // namespace

ValidationReport validate(const FaceLattice& lattice, const ValidateOptions& opts) {
    ValidationReport report;
    LatticeInfo info = build_info(lattice); // throws on structural problems
    const int n = lattice.face_count();

    // Boundedness: unique least/greatest guaranteed by build_info; every face
    // must reach both through cover chains.
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < n && ok; ++i) {
            int r = lattice.faces[i].rank;
            if (r > -1 && info.covers[i].empty()) {
                ok = false;
                detail = "face " + std::to_string(i) + " has no face below";
            }
            if (r < lattice.rank && info.above[i].empty()) {
                ok = false;
                detail = "face " + std::to_string(i) + " has no face above";
            }
        }
        report.checks.push_back({"bounded", ok, detail});
    }

    // Gradedness: covers span exactly one rank.
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < n && ok; ++i) {
            for (int c : info.covers[i]) {
                if (lattice.faces[c].rank != lattice.faces[i].rank - 1) {
                    ok = false;
                    detail = "cover " + std::to_string(i) + " -> " + std::to_string(c) +
                             " spans ranks " + std::to_string(lattice.faces[i].rank) + "/" +
                             std::to_string(lattice.faces[c].rank);
                    break;
                }
            }
        }
        report.checks.push_back({"graded", ok, detail});
    }

    bool structure_ok = report.ok();

    // Diamond condition: every interval of rank difference two holds exactly
    // two middle faces.
    {
        bool ok = structure_ok;
        std::string detail = structure_ok ? "" : "skipped: structure checks failed";
        if (structure_ok) {
            std::map<std::pair<int, int>, int> middles;
            for (int h = 0; h < n; ++h) {
                for (int f : info.covers[h])
                    for (int g : info.above[h]) middles[{f, g}]++;
            }
            for (const auto& [pair, cnt] : middles) {
                if (cnt != 2) {
                    ok = false;
                    detail = "interval (" + std::to_string(pair.first) + "," +
                             std::to_string(pair.second) + ") ranks (" +
                             std::to_string(lattice.faces[pair.first].rank) + "," +
                             std::to_string(lattice.faces[pair.second].rank) + ") has " +
                             std::to_string(cnt) + " middle faces";
                    break;
                }
            }
        }
        report.checks.push_back({"diamond", ok, detail});
    }

    // Flag length: with bounded + graded, every maximal chain steps through
    // all ranks.
    report.checks.push_back({"flag_length", structure_ok,
                             structure_ok ? "" : "skipped: structure checks failed"});

    bool diamond_ok = report.ok();

    // Flag connectivity over the whole lattice.
    {
        bool ok = false;
        std::string detail;
        if (!diamond_ok) {
            detail = "skipped: earlier checks failed";
        } else {
            ok = section_flag_connected(info, info.least, info.greatest);
            if (!ok) detail = "flag graph disconnected";
            FlagSystem fs = build_flags(lattice, info);
            report.flag_count = fs.count();
        }
        report.checks.push_back({"flag_connected", ok, detail});
    }

    // Strong flag connectivity on proper sections of rank >= 2.
    {
        bool ok = false;
        std::string detail;
        if (!report.ok()) {
            detail = "skipped: earlier checks failed";
        } else {
            std::vector<std::pair<int, int>> pairs;
            for (int f = 0; f < n; ++f) {
                // Collect comparable faces at least 3 ranks up via BFS.
                std::unordered_set<int> up;
                std::queue<int> q;
                q.push(f);
                while (!q.empty()) {
                    int cur = q.front();
                    q.pop();
                    for (int a : info.above[cur])
                        if (up.insert(a).second) q.push(a);
                }
                for (int g : up)
                    if (lattice.faces[g].rank - lattice.faces[f].rank >= 3 &&
                        !(f == info.least && g == info.greatest))
                        pairs.push_back({f, g});
            }
            std::sort(pairs.begin(), pairs.end());
            if (report.flag_count > opts.strong_flag_cap &&
                static_cast<int>(pairs.size()) > opts.section_sample) {
                std::vector<std::pair<int, int>> sample;
                size_t stride = pairs.size() / opts.section_sample;
                for (size_t i = 0; i < pairs.size(); i += stride) sample.push_back(pairs[i]);
                pairs = std::move(sample);
                detail = "sampled " + std::to_string(pairs.size()) + " sections";
            } else {
                detail = "all " + std::to_string(pairs.size()) + " sections";
            }
            ok = true;
            for (const auto& [f, g] : pairs) {
                if (!section_flag_connected(info, f, g)) {
                    ok = false;
                    detail = "section (" + std::to_string(f) + "," + std::to_string(g) +
                             ") not flag-connected";
                    break;
                }
            }
        }
        report.checks.push_back({"strongly_flag_connected", ok, detail});
    }

    return report;
}

FlagSystem build_flags(const FaceLattice& lattice, const LatticeInfo& info) {
    FlagSystem fs;
    const int d = lattice.rank;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int cur) -> void {
        if (static_cast<int>(chain.size()) == d) {
            if (info.covers_contains(info.greatest, cur) || d == 0) fs.flags.push_back(chain);
            return;
        }
        for (int a : info.above[cur]) {
            if (lattice.faces[a].rank > d - 1) continue;
            chain.push_back(a);
            self(self, a);
            chain.pop_back();
        }
    };
    if (d == 0) {
        fs.flags.push_back({});
    } else {
        extend(extend, info.least);
    }

    std::unordered_map<std::vector<int>, int, VecHash> index;
    for (size_t i = 0; i < fs.flags.size(); ++i) index[fs.flags[i]] = static_cast<int>(i);

    fs.adjacent.assign(fs.flags.size(), std::vector<int>(std::max(d, 0), -1));
    for (size_t fi = 0; fi < fs.flags.size(); ++fi) {
        const auto& fl = fs.flags[fi];
        for (int i = 0; i < d; ++i) {
            int below = (i == 0) ? info.least : fl[i - 1];
            int above_face = (i == d - 1) ? info.greatest : fl[i + 1];
            int other = -1;
            for (int mid : info.above[below]) {
                if (mid == fl[i]) continue;
                if (info.covers_contains(above_face, mid)) { other = mid; break; }
            }
            if (other < 0) throw IntegrityError("build_flags: missing adjacent flag (diamond violated)");
            std::vector<int> adj = fl;
            adj[i] = other;
            auto it = index.find(adj);
            if (it == index.end()) throw IntegrityError("build_flags: adjacent chain is not a flag");
            fs.adjacent[fi][i] = it->second;
        }
    }
    return fs;
}

} // namespace polyforge
