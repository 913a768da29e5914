#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sge/certificate.hpp"
#include "sge/certificate_io.hpp"
#include "sge/construct.hpp"
#include "sge/exact.hpp"
#include "sge/formulas.hpp"
#include "sge/render.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kBadCertificate = 2;
constexpr int kInconclusive = 3;
constexpr int kIoError = 4;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "-" means standard input.
std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("cannot read " + path);
    return ss.str();
}

// "-" or empty means standard output.
void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw io_error("cannot write " + path);
}

sge::Certificate load_certificate(const std::string& path) {
    return sge::certificate_from_json(read_text(path));
}

// Optimal builder for thin grids, better of the two general bounds
// otherwise; thin grids are built on the wide orientation and transposed
// back when needed.
sge::Certificate build_auto(int n, int m) {
    const bool swap = m > n;
    const int wide = swap ? m : n;
    const int thin = swap ? n : m;
    sge::Certificate cert;
    if (thin <= 4) {
        switch (thin) {
            case 2: cert = sge::construct_p2(wide); break;
            case 3: cert = sge::construct_p3(wide); break;
            case 4: cert = sge::construct_p4(wide); break;
            default: throw std::invalid_argument("construct needs n, m >= 2");
        }
        return swap ? sge::transposed(cert) : cert;
    }
    sge::Certificate band = sge::construct_general(n, m);
    sge::Certificate corners = sge::construct_general_corners(n, m);
    return corners.s.size() < band.s.size() ? corners : band;
}

sge::Certificate build_with_method(const std::string& method, int n, int m) {
    if (method == "auto") return build_auto(n, m);
    if (method == "alg1") return sge::vertical_cover(n, m);
    if (method == "alg1star") return sge::vertical_cover_corners(n, m);
    if (method == "general") return sge::construct_general(n, m);
    if (method == "corners") return sge::construct_general_corners(n, m);
    int want_m = method == "p2" ? 2 : method == "p3" ? 3 : 4;
    if (m != 0 && m != want_m)
        throw std::invalid_argument("--method " + method + " implies --m " +
                                    std::to_string(want_m));
    if (method == "p2") return sge::construct_p2(n);
    if (method == "p3") return sge::construct_p3(n);
    return sge::construct_p4(n);
}

const char* source_name(sge::BoundSource s) {
    switch (s) {
        case sge::BoundSource::formula: return "formula";
        case sge::BoundSource::convex_cut: return "convex-cut";
        case sge::BoundSource::band_two_pass: return "band-two-pass";
        case sge::BoundSource::corner_two_pass: return "corner-two-pass";
    }
    return "?";
}

nlohmann::ordered_json formula_json(int n, int m) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = m;
    auto r = sge::sge_grid(n, m);
    if (std::holds_alternative<long>(r)) {
        j["exact"] = std::get<long>(r);
    } else {
        const auto& b = std::get<sge::BoundBracket>(r);
        j["lower"] = b.lower;
        j["upper"] = b.upper;
        j["lower_source"] = source_name(b.lower_source);
        j["upper_source"] = source_name(b.upper_source);
    }
    return j;
}

std::string formula_cell(int n, int m) {
    auto r = sge::sge_grid(n, m);
    if (std::holds_alternative<long>(r)) return std::to_string(std::get<long>(r));
    const auto& b = std::get<sge::BoundBracket>(r);
    return std::to_string(b.lower) + ".." + std::to_string(b.upper);
}

int report_verify(const sge::Certificate& cert) {
    sge::VerifyReport rep = sge::verify(cert);
    if (rep.valid) {
        std::cout << "valid certificate: grid " << cert.grid.n << "x" << cert.grid.m
                  << ", |S| = " << cert.s.size() << ", " << rep.covered_edge_count
                  << " edges covered by " << cert.paths.size() << " geodesics\n";
        return kOk;
    }
    std::cout << "invalid certificate:\n";
    if (!rep.uncovered_edges.empty()) {
        std::cout << "  uncovered edges (" << rep.uncovered_edges.size() << "):";
        for (const auto& e : rep.uncovered_edges) std::cout << " " << sge::to_string(e);
        std::cout << "\n";
    }
    if (!rep.non_geodesic_paths.empty()) {
        std::cout << "  non-geodesic paths (" << rep.non_geodesic_paths.size() << "): at";
        for (auto i : rep.non_geodesic_paths) std::cout << " paths[" << i << "]";
        std::cout << "\n";
    }
    if (!rep.foreign_endpoints.empty()) {
        std::cout << "  endpoints outside S (" << rep.foreign_endpoints.size() << "): at";
        for (auto i : rep.foreign_endpoints) std::cout << " paths[" << i << "]";
        std::cout << "\n";
    }
    if (!rep.duplicate_pairs.empty()) {
        std::cout << "  duplicated pairs (" << rep.duplicate_pairs.size() << "):";
        for (const auto& [a, b] : rep.duplicate_pairs)
            std::cout << " " << sge::to_string(a) << "-" << sge::to_string(b);
        std::cout << "\n";
    }
    return kBadCertificate;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong edge geodetic sets on grid graphs"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "emit a certificate as JSON");
    int c_n = 0, c_m = 0;
    std::string c_method = "auto";
    std::string c_out;
    c_construct->add_option("--n", c_n, "columns")->required();
    c_construct->add_option("--m", c_m, "rows (optional for --method p2|p3|p4)");
    c_construct->add_option("--method", c_method, "builder")
        ->check(CLI::IsMember(
            {"auto", "alg1", "alg1star", "p2", "p3", "p4", "general", "corners"}));
    c_construct->add_option("--out", c_out, "output path (default: stdout)");

    // verify
    auto* c_verify = app.add_subcommand("verify", "check a certificate file");
    std::string v_file = "-";
    c_verify->add_option("file", v_file, "certificate JSON ('-' for stdin)");

    // exact
    auto* c_exact = app.add_subcommand("exact", "exhaustive optimal solve");
    int e_n = 0, e_m = 0;
    long e_lower = 2, e_upper = 0;
    std::string e_out;
    sge::SearchBudget e_budget;
    bool e_serial = false;
    c_exact->add_option("--n", e_n, "columns")->required();
    c_exact->add_option("--m", e_m, "rows")->required();
    c_exact->add_option("--lower", e_lower, "smallest size to try");
    c_exact->add_option("--upper", e_upper, "largest size to try (0 = from formula)");
    c_exact->add_option("--max-nodes", e_budget.max_nodes, "search node budget");
    c_exact->add_option("--max-geodesics-per-pair", e_budget.max_geodesics_per_pair,
                        "geodesic enumeration cap");
    c_exact->add_option("--time-limit", e_budget.time_limit_seconds,
                        "wall clock limit in seconds (0 = none)");
    c_exact->add_flag("--serial", e_serial, "disable the parallel subset scan");
    c_exact->add_option("--out", e_out, "witness certificate path");

    // formula
    auto* c_formula = app.add_subcommand("formula", "closed-form value or bracket");
    int f_n = 0, f_m = 0;
    c_formula->add_option("--n", f_n, "columns")->required();
    c_formula->add_option("--m", f_m, "rows")->required();

    // table
    auto* c_table = app.add_subcommand("table", "CSV over a range of n");
    int t_max_n = 0, t_m = 0;
    bool t_exact = false;
    long t_exact_cap = 12;
    c_table->add_option("--max-n", t_max_n, "largest n (from 2)")->required();
    c_table->add_option("--m", t_m, "rows")->required();
    c_table->add_flag("--exact", t_exact, "add the solver's value per row");
    c_table->add_option("--exact-max-vertices", t_exact_cap,
                        "skip the exact column when n*m exceeds this");

    // render
    auto* c_render = app.add_subcommand("render", "draw a certificate");
    std::string r_file = "-", r_format = "svg", r_out;
    c_render->add_option("file", r_file, "certificate JSON ('-' for stdin)");
    c_render->add_option("--format", r_format, "svg or tikz")
        ->check(CLI::IsMember({"svg", "tikz"}));
    c_render->add_option("--out", r_out, "output path (default: stdout)");

    // maxf
    auto* c_maxf = app.add_subcommand("maxf", "maximize the column-count objectives");
    int x_arity = 0;
    long x_s = 0, x_min_b = 0, x_min_c = 0, x_min_bc = 0;
    c_maxf->add_option("--arity", x_arity, "3 or 4")
        ->required()
        ->check(CLI::IsMember({3, 4}));
    c_maxf->add_option("--s", x_s, "total weight")->required();
    c_maxf->add_option("--min-b", x_min_b, "lower bound on b");
    c_maxf->add_option("--min-c", x_min_c, "lower bound on c (arity 4)");
    c_maxf->add_option("--min-bc-sum", x_min_bc, "lower bound on b+c (arity 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (c_construct->parsed()) {
            if (c_method == "auto" || c_method == "alg1" || c_method == "alg1star" ||
                c_method == "general" || c_method == "corners") {
                if (c_m == 0) throw std::invalid_argument("--m is required for this method");
            }
            sge::Certificate cert = build_with_method(c_method, c_n, c_m);
            write_text(c_out, sge::to_json(cert));
            return kOk;
        }
        if (c_verify->parsed()) {
            return report_verify(load_certificate(v_file));
        }
        if (c_exact->parsed()) {
            e_budget.parallel = !e_serial;
            sge::ExactResult r = sge::exact_sge(sge::GridSpec(e_n, e_m), e_budget,
                                                e_lower, e_upper);
            nlohmann::ordered_json j;
            j["n"] = e_n;
            j["m"] = e_m;
            j["solved"] = r.solved;
            if (r.solved) {
                j["value"] = r.value;
                j["infeasibility_checked_at"] = r.infeasibility_checked_at;
            } else {
                j["infeasibility_checked_at"] = r.infeasibility_checked_at;
                if (r.upper_bound > 0) j["upper_bound"] = r.upper_bound;
            }
            j["nodes"] = r.stats.nodes;
            j["subsets_tested"] = r.stats.subsets_tested;
            std::cout << j.dump(2) << "\n";
            if (r.solved && !e_out.empty() && r.witness)
                write_text(e_out, sge::to_json(*r.witness));
            return r.solved ? kOk : kInconclusive;
        }
        if (c_formula->parsed()) {
            std::cout << formula_json(f_n, f_m).dump(2) << "\n";
            return kOk;
        }
        if (c_table->parsed()) {
            std::cout << "n,m,formula,construction,exact\n";
            for (int n = 2; n <= t_max_n; ++n) {
                std::string exact_cell;
                if (t_exact && static_cast<long>(n) * t_m <= t_exact_cap) {
                    sge::ExactResult r = sge::exact_sge(sge::GridSpec(n, t_m));
                    exact_cell = r.solved ? std::to_string(r.value) : "inconclusive";
                }
                std::cout << n << "," << t_m << "," << formula_cell(n, t_m) << ","
                          << build_auto(n, t_m).s.size() << "," << exact_cell << "\n";
            }
            return kOk;
        }
        if (c_render->parsed()) {
            sge::Certificate cert = load_certificate(r_file);
            sge::RenderFormat fmt =
                r_format == "svg" ? sge::RenderFormat::svg : sge::RenderFormat::tikz;
            write_text(r_out, sge::render(cert, fmt));
            return kOk;
        }
        if (c_maxf->parsed()) {
            nlohmann::ordered_json j;
            j["arity"] = x_arity;
            j["s"] = x_s;
            if (x_arity == 3) {
                sge::MaxF3 r = sge::max_f3(x_s, x_min_b);
                j["max"] = r.value;
                j["argmax"] = r.argmax;
            } else {
                sge::F4Constraints cons{x_min_b, x_min_c, x_min_bc};
                sge::MaxF4 r = sge::max_f4(x_s, cons);
                j["max"] = r.value;
                j["argmax"] = r.argmax;
            }
            std::cout << j.dump(2) << "\n";
            return kOk;
        }
    } catch (const sge::certificate_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadCertificate;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
