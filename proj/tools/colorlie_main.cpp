#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "colorlie/acceptance.hpp"
#include "colorlie/algebra.hpp"
#include "colorlie/braid.hpp"
#include "colorlie/fock.hpp"
#include "colorlie/json_io.hpp"
#include "colorlie/pascal.hpp"

using nlohmann::json;
using namespace colorlie;

namespace {

Cyclotomic parse_j(const std::string& s) {
    if (s == "1" || s == "j3") return Cyclotomic(1);
    if (s == "j1") return root_of_unity(3, 1);
    if (s == "j2") return root_of_unity(3, 2);
    throw CLI::ValidationError("--j must be one of 1, j1, j2");
}

Cyclotomic parse_delta(const std::string& s) {
    if (s == "1" || s == "+1") return Cyclotomic(1);
    if (s == "-1") return Cyclotomic(-1);
    throw CLI::ValidationError("--delta must be +1 or -1");
}

long parse_level(const std::string& s) {
    if (s == "inf") return braid::kInfiniteLevel;
    long v = std::stol(s);
    if (v < 2) throw CLI::ValidationError("--s must be an integer >= 2 or 'inf'");
    return v;
}

// Deterministic writer: LF endings, no timestamps, stdout when no --out.
void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_table(const std::string& group, const std::string& jsym, const std::string& delta,
              const std::string& out) {
    grading::FactorTable t(0, 0);
    if (group == "z3xz3")
        t = grading::canonical_z3z3(parse_j(jsym));
    else if (group == "z2xz3xz3")
        t = grading::canonical_z2z3z3(parse_j(jsym), parse_delta(delta));
    else
        throw CLI::ValidationError("--group must be z3xz3 or z2xz3xz3");
    json payload = io::to_json(t);
    payload["group"] = group;
    payload["class"] =
        t.classify() == grading::ColorClass::lie_algebra ? "lie_algebra" : "lie_superalgebra";
    emit(out, dump(payload));
    return 0;
}

int run_search(int p, int q, long max_order, bool full, const std::string& out) {
    auto tables = grading::search_tables(p, q, max_order);
    auto classes = grading::classify_inequivalent(tables);
    json payload{{"exact", true},      {"p", p},
                 {"q", q},             {"max_order", max_order},
                 {"tables", tables.size()}, {"classes", classes.size()}};
    json sizes = json::array();
    for (const auto& cls : classes) sizes.push_back(cls.size());
    payload["class_sizes"] = sizes;
    if (full) {
        json list = json::array();
        for (const auto& t : tables) list.push_back(io::to_json(t));
        payload["table_list"] = list;
    }
    emit(out, dump(payload));
    return 0;
}

int run_mat(const std::string& name, const std::string& jsym, const std::string& out) {
    Cyclotomic j = parse_j(jsym);
    gmat::GradedMatrix m;
    if (name.rfind("C_", 0) == 0 && name.size() == 4) {
        m = gmat::c_matrix(name[2] - '0', name[3] - '0', j);
    } else {
        m = gmat::building_block(name, j);
    }
    json payload = io::to_json(m);
    payload["name"] = name;
    emit(out, dump(payload));
    return 0;
}

int run_algebra(const std::string& name, const std::string& check, long n_max,
                const std::string& out) {
    algebra::AlgebraSpec alg = algebra::build_algebra(name, n_max);
    json payload{{"name", name}, {"exact", true}};
    bool failed = false;
    auto add = [&](const char* key, const algebra::CheckReport& rep) {
        payload[key] = rep.violations;
        failed |= !rep.ok();
    };
    if (check == "all" || check == "skew") add("skew", algebra::check_epsilon_skew(alg));
    if (check == "all" || check == "jacobi") add("jacobi", algebra::check_epsilon_jacobi(alg));
    if (check == "all" || check == "metaabelian")
        add("metaabelian", algebra::check_metaabelian(alg));
    if (check == "all" || check == "structure") add("structure", algebra::check_structure(alg));
    if (check == "all" || check == "minimal") {
        auto rep = algebra::check_minimal(alg);
        payload["minimal"] = {{"is_minimal", rep.minimal},
                              {"empty_sectors", rep.empty_sectors},
                              {"sector_counts", rep.sector_counts}};
    }
    emit(out, dump(payload));
    return failed ? 1 : 0;
}

fock::DensityField make_field(const std::string& jsym, long n) {
    long n_max = std::max<long>(8, n + 2);
    fock::OscillatorModel model(parse_j(jsym), n_max);
    return fock::DensityField(model.symmetrized_state(n));
}

int run_density(const std::string& jsym, long n, double range, int res,
                const std::string& out) {
    fock::DensityField field = make_field(jsym, n);
    std::string csv = "x,y,p\n";
    char line[96];
    for (const auto& pt : fock::density_grid(field, range, res)) {
        std::snprintf(line, sizeof(line), "%.6g,%.6g,%.6g\n", pt.x, pt.y, pt.p);
        csv += line;
    }
    emit(out, csv);
    return 0;
}

int run_maxima(const std::string& jsym, long n, const std::string& out) {
    fock::DensityField field = make_field(jsym, n);
    auto rep = fock::find_local_maxima(field, fock::default_seed_grid());
    json list = json::array();
    for (const auto& m : rep.maxima)
        list.push_back({{"x", io::float15(m.x)},
                        {"y", io::float15(m.y)},
                        {"value", io::float15(m.value)}});
    json payload{{"exact", false}, {"j", jsym}, {"n", n}, {"maxima", list},
                 {"failed_seeds", rep.failed_seeds.size()}};
    emit(out, dump(payload));
    return 0;
}

int run_triangle(long n, const std::string& jsym, const std::string& format,
                 const std::string& out) {
    std::string text;
    json rows = json::array();
    for (long r = 0; r <= n; ++r) {
        pascal::TriangleRow row = pascal::triangle_row(r);
        json jrow = json::array();
        std::string line;
        if (jsym == "sym") {
            for (const auto& c : row.coefficients) {
                jrow.push_back(c.to_string());
                line += (line.empty() ? "" : "   ") + c.to_string();
            }
        } else {
            for (const auto& c : pascal::specialize_row(row, parse_j(jsym))) {
                jrow.push_back(c.to_string());
                line += (line.empty() ? "" : "   ") + c.to_string();
            }
        }
        rows.push_back(jrow);
        text += line + "\n";
    }
    if (format == "text") {
        emit(out, text);
    } else {
        emit(out, dump(json{{"exact", true}, {"j", jsym}, {"rows", rows}}));
    }
    return 0;
}

int run_truncation(int k, int sites, long max_n, const std::string& format,
                   const std::string& out) {
    pascal::WordSystem sys = pascal::WordSystem::uniform(sites, root_of_unity(k, 1), true);
    json rows = json::array();
    std::string text = "n  (D1+...+D" + std::to_string(sites) + ")^n\n";
    for (long n = 0; n <= max_n; ++n) {
        bool zero = pascal::symmetrized_power(sys, n).empty();
        rows.push_back({{"n", n}, {"zero", zero}});
        text += std::to_string(n) + "  " + (zero ? "zero" : "nonzero") + "\n";
    }
    if (format == "text")
        emit(out, text);
    else
        emit(out, dump(json{{"exact", true}, {"k", k}, {"N", sites}, {"rows", rows}}));
    return 0;
}

int run_majorana(long n, const std::string& s, const std::string& out) {
    auto spec = braid::chain_spectrum(n, parse_level(s));
    emit(out, dump(json{{"exact", true},
                        {"N", n},
                        {"s", s},
                        {"levels", spec.levels},
                        {"plateau", spec.plateau}}));
    return 0;
}

int run_braid_check(const std::string& s_arg, const std::string& out) {
    const long s = parse_level(s_arg);
    json checks = json::array();
    bool all_ok = true;
    auto add = [&](const std::string& name, bool ok) {
        checks.push_back({{"name", name}, {"passed", ok}});
        all_ok &= ok;
    };
    add("braid relation at t_s", braid::braid_relation_holds(braid::t_parameter(s)));
    if (s != braid::kInfiniteLevel) {
        add("B_t^s = I",
            braid::b_matrix(braid::t_parameter(s)).power(s) == gmat::GradedMatrix::identity(4));
        add("level(-t_s) = s", level(braid::minus_t(s)).value == s);
    }
    add("intertwiner exchange", braid::braided_tensor_check(s).ok);
    if (s == 3 || s == 6) {
        auto rep = braid::reconstruct_color_bracket(s);
        add("color bracket reconstruction", rep.ok());
        json eps = io::to_json(rep.epsilon);
        checks.back()["epsilon"] = eps;
    }
    emit(out, dump(json{{"s", s_arg}, {"passed", all_ok}, {"checks", checks}}));
    return all_ok ? 0 : 1;
}

int run_report(const std::string& out) {
    auto results = acceptance::run_all();
    json list = json::array();
    bool all_ok = true;
    for (const auto& r : results) {
        list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                        {"detail", r.detail}});
        all_ok &= r.passed;
        std::fprintf(stderr, "[%s] criterion %d: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                     r.name.c_str(), r.seconds);
    }
    emit(out, dump(json{{"passed", all_ok}, {"criteria", list}}));
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for mixed-bracket color Heisenberg-Lie (super)algebras"};
    app.require_subcommand(1);

    std::string out, jsym = "j1", delta = "-1", group = "z3xz3", name, check = "all",
                     format = "json", s_arg = "3";
    int p = 0, q = 2, res = 400, kk = 3, sites = 3;
    long n = 2, n_max = 6, max_order = 6, max_n = 6, big_n = 3;
    double range = 2.0;

    auto* table = app.add_subcommand("table", "print a canonical commutation factor table");
    table->add_option("--group", group, "z3xz3 or z2xz3xz3");
    table->add_option("--j", jsym, "third root of unity: 1, j1 or j2");
    table->add_option("--delta", delta, "+1 or -1 (18x18 table only)");
    table->add_option("--out", out, "output file (default stdout)");

    auto* search = app.add_subcommand("search", "classify all consistent tables");
    search->add_option("--p", p, "number of Z2 factors")->required();
    search->add_option("--q", q, "number of Z3 factors")->required();
    search->add_option("--max-order", max_order, "bound on entry root orders");
    bool full = false;
    search->add_flag("--full", full, "include the tables themselves");
    search->add_option("--out", out);

    auto* mat = app.add_subcommand("mat", "print a building block or C matrix");
    mat->add_option("--name", name, "N0, N0p, N0pp, N1, N2, Q+i, Q-i, I2, Y, X, beta, gamma, C_ij")
        ->required();
    mat->add_option("--j", jsym);
    mat->add_option("--out", out);

    auto* algebra_cmd = app.add_subcommand("algebra", "run checks on a named algebra instance");
    algebra_cmd->add_option("--name", name, "hpb4, hfer3, hpf44, hpf_s6, hpf_star3, hpf_s3")
        ->required();
    algebra_cmd->add_option("--check", check, "all, skew, jacobi, metaabelian, structure, minimal");
    algebra_cmd->add_option("--n-max", n_max, "bosonic truncation level");
    algebra_cmd->add_option("--out", out);

    auto* density = app.add_subcommand("density", "CSV grid of a symmetrized-state density");
    density->add_option("--j", jsym, "1 (bosons) or j1 (parabosons)");
    density->add_option("--n", n, "energy level")->required();
    density->add_option("--range", range, "grid half-width");
    density->add_option("--res", res, "points per axis");
    density->add_option("--out", out);

    auto* maxima = app.add_subcommand("maxima", "local maxima of a density");
    maxima->add_option("--j", jsym)->required();
    maxima->add_option("--n", n)->required();
    maxima->add_option("--out", out);

    auto* triangle = app.add_subcommand("triangle", "rows of the (j, z) Pascal triangle");
    triangle->add_option("--n", n, "last row")->required();
    triangle->add_option("--j", jsym, "sym, 1, j1 or j2");
    triangle->add_option("--format", format, "json or text");
    triangle->add_option("--out", out);

    auto* trunc = app.add_subcommand("truncation", "zero/nonzero table of symmetrized powers");
    trunc->add_option("--k", kk, "root of unity level")->required();
    trunc->add_option("--N", sites, "number of nilpotent generators")->required();
    trunc->add_option("--max-n", max_n, "largest power to report");
    trunc->add_option("--format", format);
    trunc->add_option("--out", out);

    auto* majorana = app.add_subcommand("majorana", "energy levels of the braided qubit chain");
    majorana->add_option("--N", big_n, "number of sites")->required();
    majorana->add_option("--s", s_arg, "root of unity level or 'inf'")->required();
    majorana->add_option("--out", out);

    auto* braid_cmd = app.add_subcommand("braid-check", "verify the braid-level identities");
    braid_cmd->add_option("--s", s_arg)->required();
    braid_cmd->add_option("--out", out);

    auto* report = app.add_subcommand("report", "run the full verification suite");
    report->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return run_table(group, jsym, delta, out);
        if (search->parsed()) return run_search(p, q, max_order, full, out);
        if (mat->parsed()) return run_mat(name, jsym, out);
        if (algebra_cmd->parsed()) return run_algebra(name, check, n_max, out);
        if (density->parsed()) return run_density(jsym, n, range, res, out);
        if (maxima->parsed()) return run_maxima(jsym, n, out);
        if (triangle->parsed()) return run_triangle(n, jsym, format, out);
        if (trunc->parsed()) return run_truncation(kk, sites, max_n, format, out);
        if (majorana->parsed()) return run_majorana(big_n, s_arg, out);
        if (braid_cmd->parsed()) return run_braid_check(s_arg, out);
        if (report->parsed()) return run_report(out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
