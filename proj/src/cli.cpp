#include "polyforge/cli.hpp"

#include "polyforge/autgroup.hpp"
#include "polyforge/complex.hpp"
#include "polyforge/errors.hpp"
#include "polyforge/fixtures.hpp"
#include "polyforge/forge.hpp"
#include "polyforge/io.hpp"
#include "polyforge/realize.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace polyforge {

namespace {

FaceLattice load_lattice(const std::string& file, const std::string& builtin) {
    if (!builtin.empty()) return builtin_lattice(builtin);
    if (file.empty()) throw ValidationError("no lattice given: pass a file or --builtin");
    return read_lattice_json(read_file(file));
}

std::vector<RatVec> load_points(const std::string& file, const std::string& builtin) {
    if (!builtin.empty()) return builtin_points(builtin);
    if (file.empty()) throw ValidationError("no points given: pass a file or --builtin");
    return read_points_json(read_file(file));
}

int cmd_construct(const std::string& group_file, const std::string& out_path,
                  const std::string& report_path, bool force_general, long max_elements,
                  long strong_flag_cap) {
    PermGroup group = read_group_json(read_file(group_file), max_elements);
    ForgeOptions opts;
    opts.force_general = force_general;
    opts.max_elements = max_elements;
    opts.validate.strong_flag_cap = strong_flag_cap;
    Construction c = construct(group, opts);

    if (!out_path.empty()) write_file(out_path, write_lattice_json(c.polytope));
    if (!report_path.empty()) write_file(report_path, write_report_json(c.report));
    std::cout << "branch: " << c.report.branch << "\n"
              << "group order: " << c.report.group_order << "\n"
              << "aut order: " << c.report.verification.aut_order << "\n"
              << "certified: " << (c.report.verification.certified ? "yes" : "no") << "\n"
              << "elapsed: " << c.report.seconds << " s\n";
    return c.report.verification.certified ? 0 : 3;
}

int cmd_aut(const std::string& file, const std::string& builtin, bool print_elements) {
    FaceLattice L = load_lattice(file, builtin);
    ValidationReport check = validate(L);
    if (!check.ok()) {
        std::cerr << "lattice failed validation:\n" << check.summary();
        return 2;
    }
    AutGroup aut = automorphisms(L);
    std::cout << "aut order: " << aut.order << "\n";
    if (print_elements) {
        for (const auto& e : aut.elements) {
            for (size_t f = 0; f < e.size(); ++f) std::cout << (f ? " " : "") << e[f];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_bsd(const std::string& file, const std::string& builtin, const std::string& out_path) {
    FaceLattice L = load_lattice(file, builtin);
    ValidationReport check = validate(L);
    if (!check.ok()) {
        std::cerr << "lattice failed validation:\n" << check.summary();
        return 2;
    }
    CellComplex cx = barycentric_subdivision(L);
    std::string payload = write_complex_json(cx);
    if (!out_path.empty()) write_file(out_path, payload);
    else std::cout << payload;
    long chambers = static_cast<long>(cx.cells_of_dim(cx.dim).size());
    std::cerr << "vertices: " << cx.vertices.size() << ", chambers: " << chambers << "\n";
    return 0;
}

int cmd_realize(const std::string& file, const std::string& builtin, const std::string& out_prefix,
                int precision, int q_max) {
    std::vector<RatVec> pts = load_points(file, builtin);
    GeometricPolytope p = make_polytope(pts);
    RealizeOptions opts;
    opts.q_max_exponent = q_max;
    RealizeResult r = pull_realize(p, opts);

    std::string prefix = out_prefix.empty() ? std::string("realized") : out_prefix;
    write_file(prefix + ".json", write_points_json(r.realized.ambient_points));
    write_file(prefix + ".cert.json", write_certificate_json(r.iso, true));
    if (r.realized.dim == 3) write_file(prefix + ".off", to_off(r.realized, precision));

    LatticeInfo info = build_info(r.realized.lattice);
    std::cout << "vertices: " << info.rank_faces(0).size() << "\n"
              << "facets: " << info.rank_faces(r.realized.dim - 1).size() << "\n"
              << "isomorphic: true\n";
    return 0;
}

int cmd_validate(const std::string& file, const std::string& builtin) {
    FaceLattice L = load_lattice(file, builtin);
    ValidationReport check = validate(L);
    std::cout << check.summary();
    std::cout << "flags: " << check.flag_count << "\n";
    return check.ok() ? 0 : 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"polyforge: polytopes with prescribed automorphism groups"};
    app.require_subcommand(1);

    std::string group_file, out_path, report_path;
    bool force_general = false;
    long max_elements = 10080;
    long strong_flag_cap = 5000;
    auto* construct_cmd = app.add_subcommand("construct", "build a polytope whose automorphism group is the given group");
    construct_cmd->add_option("group", group_file, "group JSON file")->required();
    construct_cmd->add_option("--out", out_path, "output lattice JSON");
    construct_cmd->add_option("--report", report_path, "output report JSON");
    construct_cmd->add_flag("--force-general", force_general, "run the general pipeline on dihedral groups");
    construct_cmd->add_option("--max-elements", max_elements, "group element cap");
    construct_cmd->add_option("--max-flags", strong_flag_cap, "full strong-connectivity sweep cap");

    std::string lattice_file, builtin;
    bool print_elements = false;
    auto* aut_cmd = app.add_subcommand("aut", "automorphism group of a face lattice");
    aut_cmd->add_option("lattice", lattice_file, "lattice JSON file");
    aut_cmd->add_option("--builtin", builtin, "built-in lattice name");
    aut_cmd->add_flag("--elements", print_elements, "print the face permutations");

    std::string bsd_file, bsd_builtin, bsd_out;
    auto* bsd_cmd = app.add_subcommand("bsd", "barycentric subdivision of a face lattice");
    bsd_cmd->add_option("lattice", bsd_file, "lattice JSON file");
    bsd_cmd->add_option("--builtin", bsd_builtin, "built-in lattice name");
    bsd_cmd->add_option("--out", bsd_out, "output complex JSON");

    std::string rl_file, rl_builtin, rl_out;
    int precision = 12;
    int q_max = 16;
    auto* rl_cmd = app.add_subcommand("realize", "convex realization of the barycentric subdivision");
    rl_cmd->add_option("points", rl_file, "points JSON file");
    rl_cmd->add_option("--builtin", rl_builtin, "built-in point set name");
    rl_cmd->add_option("--out", rl_out, "output prefix (.off/.json/.cert.json)");
    rl_cmd->add_option("--precision", precision, "decimal digits in OFF output");
    rl_cmd->add_option("--q-max", q_max, "retry-denominator exponent cap");

    std::string val_file, val_builtin;
    auto* val_cmd = app.add_subcommand("validate", "abstract polytope axiom checks");
    val_cmd->add_option("lattice", val_file, "lattice JSON file");
    val_cmd->add_option("--builtin", val_builtin, "built-in lattice name");

    int jobs = 0;
    app.add_option("--jobs", jobs, "parallelism width (outputs are identical for any width)");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand(construct_cmd))
            return cmd_construct(group_file, out_path, report_path, force_general, max_elements,
                                 strong_flag_cap);
        if (app.got_subcommand(aut_cmd)) return cmd_aut(lattice_file, builtin, print_elements);
        if (app.got_subcommand(bsd_cmd)) return cmd_bsd(bsd_file, bsd_builtin, bsd_out);
        if (app.got_subcommand(rl_cmd)) return cmd_realize(rl_file, rl_builtin, rl_out, precision, q_max);
        if (app.got_subcommand(val_cmd)) return cmd_validate(val_file, val_builtin);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const CertificationError& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace polyforge
