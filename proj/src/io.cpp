#include "polyforge/io.hpp"
#include "polyforge/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace polyforge {

using Json = nlohmann::ordered_json;

namespace {

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

PermGroup read_group_json(const std::string& text, long max_elements) {
    Json j = parse(text);
    bool has_gens = j.contains("generators");
    bool has_table = j.contains("table");
    if (has_gens == has_table)
        throw ValidationError("group JSON must contain exactly one of \"generators\" or \"table\"");
    if (has_table) {
        std::vector<std::vector<int>> table;
        for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
        return regular_embedding(table);
    }
    if (!j.contains("degree")) throw ValidationError("group JSON with generators needs \"degree\"");
    int degree = j.at("degree").get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(parse_permutation(g.get<std::string>(), degree));
    if (gens.empty()) throw ValidationError("group JSON: empty generator list");
    return closure(gens, max_elements);
}

FaceLattice read_lattice_json(const std::string& text) {
    Json j = parse(text);
    FaceLattice L;
    if (!j.contains("rank") || !j.contains("faces"))
        throw ValidationError("lattice JSON needs \"rank\" and \"faces\"");
    L.rank = j.at("rank").get<int>();
    for (const auto& jf : j.at("faces")) {
        Face f;
        f.id = jf.at("id").get<int>();
        f.rank = jf.at("rank").get<int>();
        if (jf.contains("covers")) f.covers = jf.at("covers").get<std::vector<int>>();
        L.faces.push_back(std::move(f));
    }
    std::sort(L.faces.begin(), L.faces.end(), [](const Face& a, const Face& b) { return a.id < b.id; });
    return L;
}

std::string write_lattice_json(const FaceLattice& lattice) {
    Json j;
    j["rank"] = lattice.rank;
    j["faces"] = Json::array();
    for (const auto& f : lattice.faces) {
        Json jf;
        jf["id"] = f.id;
        jf["rank"] = f.rank;
        jf["covers"] = f.covers;
        j["faces"].push_back(std::move(jf));
    }
    return j.dump(2) + "\n";
}

std::vector<RatVec> read_points_json(const std::string& text) {
    Json j = parse(text);
    if (!j.contains("points")) throw ValidationError("points JSON needs \"points\"");
    std::vector<RatVec> pts;
    size_t dim = 0;
    if (j.contains("dim_ambient")) dim = j.at("dim_ambient").get<size_t>();
    for (const auto& row : j.at("points")) {
        RatVec p;
        for (const auto& c : row) {
            if (c.is_string()) p.push_back(parse_rational(c.get<std::string>()));
            else if (c.is_number_integer()) p.push_back(Rat(c.get<long>()));
            else throw ValidationError("points JSON: coordinates must be strings or integers");
        }
        if (dim == 0) dim = p.size();
        if (p.size() != dim) throw ValidationError("points JSON: inconsistent coordinate count");
        pts.push_back(std::move(p));
    }
    if (pts.empty()) throw ValidationError("points JSON: no points");
    return pts;
}

std::string write_points_json(const std::vector<RatVec>& points) {
    Json j;
    j["dim_ambient"] = points.empty() ? 0 : points[0].size();
    j["points"] = Json::array();
    for (const auto& p : points) {
        Json row = Json::array();
        for (const auto& c : p) row.push_back(rational_to_string(c));
        j["points"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string write_complex_json(const CellComplex& cx) {
    Json j;
    j["dim"] = cx.dim;
    j["vertices"] = Json::array();
    for (size_t v = 0; v < cx.vertices.size(); ++v) {
        Json jv;
        jv["id"] = v;
        jv["type"] = cx.vertices[v].label;
        jv["origin"] = cx.vertices[v].origin;
        j["vertices"].push_back(std::move(jv));
    }
    j["cells"] = Json::array();
    for (const auto& c : cx.cells) {
        if (!c.alive) continue;
        Json jc;
        jc["id"] = c.id;
        jc["dim"] = c.dim;
        jc["vertices"] = c.vertices;
        jc["facets"] = c.facets;
        j["cells"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

namespace {

Json verification_to_json(const VerificationResult& v) {
    Json j;
    j["aut_order"] = v.aut_order;
    j["certified"] = v.certified;
    j["checks"] = Json::array();
    for (const auto& c : v.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        j["checks"].push_back(std::move(jc));
    }
    return j;
}

} // namespace

std::string write_verification_json(const VerificationResult& v) {
    return verification_to_json(v).dump(2) + "\n";
}

std::string write_report_json(const ConstructionReport& report) {
    Json j;
    j["branch"] = report.branch;
    j["d"] = report.d;
    j["group_order"] = report.group_order;
    Json counts;
    counts["chambers"] = report.chamber_count;
    for (const auto& [k, v] : report.counts) counts[k] = v;
    j["counts"] = std::move(counts);
    if (report.has_plan) {
        Json plan;
        plan["m"] = report.plan.m;
        plan["m_by_type"] = report.plan.m_by_type;
        plan["intervals"] = Json::array();
        for (const auto& iv : report.plan.intervals)
            plan["intervals"].push_back(Json::array({iv[0], iv[1]}));
        plan["s_stats"] = Json::array();
        for (const auto& st : report.plan.s_stats) {
            Json js;
            js["s_min"] = st[0];
            js["s_max"] = st[1];
            js["val_min"] = st[2];
            js["val_max"] = st[3];
            plan["s_stats"].push_back(std::move(js));
        }
        j["plan"] = std::move(plan);
    } else {
        j["plan"] = nullptr;
    }
    j["verification"] = verification_to_json(report.verification);
    return j.dump(2) + "\n";
}

std::string write_certificate_json(const std::vector<std::pair<int, int>>& iso, bool isomorphic) {
    Json j;
    j["isomorphic"] = isomorphic;
    j["map"] = Json::array();
    for (const auto& [a, b] : iso) j["map"].push_back(Json::array({a, b}));
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

} // namespace polyforge
