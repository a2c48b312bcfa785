#pragma once

#include "polyforge/autgroup.hpp"
#include "polyforge/complex.hpp"
#include "polyforge/forge.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/permgroup.hpp"
#include "polyforge/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyforge {

// Group JSON: {"degree": n, "generators": ["(1 2)(3 4)", ...]} or
// {"table": [[...]]}; exactly one of the two keys.
PermGroup read_group_json(const std::string& text, long max_elements = 10080);

// FaceLattice JSON: {"rank": d, "faces": [{"id", "rank", "covers"}]}.
FaceLattice read_lattice_json(const std::string& text);
std::string write_lattice_json(const FaceLattice& lattice);

// Points JSON: {"dim_ambient": n, "points": [["num/den", ...], ...]}.
std::vector<RatVec> read_points_json(const std::string& text);
std::string write_points_json(const std::vector<RatVec>& points);

// Complex JSON: vertices with type labels and origins, cells with vertex and
// facet lists.
std::string write_complex_json(const CellComplex& cx);

std::string write_verification_json(const VerificationResult& v);
std::string write_report_json(const ConstructionReport& report);
std::string write_certificate_json(const std::vector<std::pair<int, int>>& iso, bool isomorphic);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace polyforge
