#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypercolor/builder.hpp"
#include "hypercolor/code.hpp"
#include "hypercolor/distance.hpp"
#include "hypercolor/svg.hpp"
#include "hypercolor/tables.hpp"

namespace hc = hypercolor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConstruction = 2;
constexpr int kExitVerification = 3;
constexpr int kExitBudget = 4;

void atomic_write(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        os << content;
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, p);
}

hc::BuilderKind parse_builder(const std::string& s) {
    if (s == "geometric") return hc::BuilderKind::Geometric;
    if (s == "combinatorial") return hc::BuilderKind::Combinatorial;
    return hc::BuilderKind::Auto;
}

// Budget strings: plain seconds or a trailing 's'. Seconds map to a
// deterministic step budget so identical budgets give identical results.
hc::DistanceBudget parse_budget(const std::string& s) {
    hc::DistanceBudget b;
    if (s.empty()) return b;
    std::string t = s;
    if (t.back() == 's') t.pop_back();
    double seconds = std::stod(t);
    b.max_steps = static_cast<long>(seconds * 20'000'000.0);
    if (b.max_steps < 1) b.max_steps = 1;
    return b;
}

std::pair<int, int> parse_genus_range(const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos) {
        int g = std::stoi(s);
        return {g, g};
    }
    return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

// A short homologically nontrivial string to highlight: the lightest pair of
// parallel shrunk-lattice links whose joint support stays outside the row
// space, scanned over the three colors.
std::vector<int> find_highlight_string(const hc::CellComplex& cx, const hc::Coloring& col,
                                       const hc::ColorCode& code) {
    for (hc::Color c : {hc::Color::G, hc::Color::R, hc::Color::B}) {
        hc::ShrunkLattice sl = hc::shrunk_lattice(cx, col, c);
        for (std::size_t i = 0; i < sl.links.size(); ++i)
            for (std::size_t j = i + 1; j < sl.links.size(); ++j) {
                const auto &a = sl.links[i], &b = sl.links[j];
                if (std::min(a.a, a.b) != std::min(b.a, b.b) ||
                    std::max(a.a, a.b) != std::max(b.a, b.b))
                    continue;
                hc::BitVec s = hc::string_operator(
                    sl, {static_cast<int>(i), static_cast<int>(j)}, code.n);
                if (!hc::in_rowspace(code, s)) return s.ones();
            }
    }
    return {};
}

hc::CodeReport make_report(int p, int g, const hc::BuildResult& built, const hc::ColorCode& code) {
    hc::CodeReport rep;
    rep.p = p;
    rep.g = g;
    rep.n_f = static_cast<long>(built.complex.faces.size());
    rep.n = code.n;
    rep.k = hc::logical_count(code, g);
    rep.d_estimate = hc::distance_estimate(p, g);
    rep.ratio = hc::estimate_ratio(p, g);
    rep.builder = built.method;
    auto flags = hc::bounds_check(rep.n, rep.k, rep.d_estimate);
    rep.singleton_ok = flags.singleton_ok;
    rep.singleton_saturated = flags.singleton_saturated;
    rep.hamming_ok = flags.hamming_ok;
    return rep;
}

int cmd_tables(const std::string& genus, const std::string& format, const std::string& out_dir,
               bool compare) {
    auto [g_lo, g_hi] = parse_genus_range(genus);
    int real_mismatches = 0;
    for (int g = g_lo; g <= g_hi; ++g) {
        auto rows = hc::genus_table(g);
        std::string text;
        if (format == "csv") text = hc::table_to_csv(g, rows);
        else if (format == "json") text = hc::table_to_json(g, rows);
        else text = hc::table_to_markdown(g, rows);
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::string ext = format == "md" ? "md" : format;
            atomic_write(out_dir + "/table_g" + std::to_string(g) + "." + ext, text);
        } else {
            std::cout << text << "\n";
        }
        if (compare) {
            auto diffs = hc::compare_to_reference(g);
            if (diffs.empty()) {
                std::cout << "g=" << g << ": no bundled reference table\n";
                continue;
            }
            int ok = 0;
            for (const auto& d : diffs) {
                if (d.match) {
                    ++ok;
                    continue;
                }
                if (d.transposed) {
                    std::printf("g=%d p=%d %s: computed %.6f vs printed %.6f  "
                                "[matches another row's printed value: transcription defect]\n",
                                d.g, d.p, d.column.c_str(), d.computed, d.printed);
                } else {
                    ++real_mismatches;
                    std::printf("g=%d p=%d %s: MISMATCH computed %.6f vs printed %.6f\n", d.g,
                                d.p, d.column.c_str(), d.computed, d.printed);
                }
            }
            std::printf("g=%d compare: %d/%zu cells match\n", g, ok, diffs.size());
        }
    }
    return real_mismatches == 0 ? kExitOk : kExitVerification;
}

int cmd_build(int p, int g, const std::string& builder, const std::string& svg_path,
              std::string prefix) {
    hc::BuildOptions opts;
    opts.builder = parse_builder(builder);
    hc::BuildResult built = hc::build_complex(p, g, opts);
    hc::ColorCode code = hc::plaquette_code(built.complex, built.coloring);
    hc::CodeReport rep = make_report(p, g, built, code);

    if (prefix.empty()) prefix = "p" + std::to_string(p) + "_g" + std::to_string(g);
    hc::TessellationSignature sig(p, 3, g);
    atomic_write(prefix + ".complex.json",
                 hc::complex_to_json(built.complex, &sig, &built.coloring));
    atomic_write(prefix + ".alist", hc::to_alist(code.H));
    atomic_write(prefix + ".report.json", hc::report_to_json(rep));
    std::printf("built (p=%d, g=%d) via %s: [[%d,%d,%d-estimate]], n_f=%ld\n", p, g,
                built.method.c_str(), rep.n, rep.k, rep.d_estimate, rep.n_f);
    if (!built.geometric_note.empty())
        std::printf("geometric builder: %s\n", built.geometric_note.c_str());

    if (!svg_path.empty()) {
        if (built.complex.has_embedding()) {
            hc::SvgOptions so;
            so.highlight_qubits = find_highlight_string(built.complex, built.coloring, code);
            hc::FundamentalPolygon poly = hc::fundamental_polygon(g);
            atomic_write(svg_path, hc::complex_to_svg(built.complex, built.coloring, &poly, so));
            std::printf("wrote %s\n", svg_path.c_str());
        } else {
            std::fprintf(stderr, "svg skipped: complex built without an embedding (%s)\n",
                         built.method.c_str());
        }
    }
    return kExitOk;
}

int cmd_family(int g_max) {
    std::printf("%-4s %-5s %-5s %-5s %-5s %-8s %s\n", "g", "p", "n_f", "n", "k", "k/n", "d_est");
    double prev_rate = 0.0;
    for (int g = 2; g <= g_max; ++g) {
        int p = 4 + 2 * g;
        hc::BuildResult built = hc::build_complex(p, g, {});
        hc::ColorCode code = hc::plaquette_code(built.complex, built.coloring);
        long nf = static_cast<long>(built.complex.faces.size());
        int k = hc::logical_count(code, g);
        int d = hc::distance_estimate(p, g);
        if (nf != 6 || code.n != 8 + 4 * g || k != 4 * g || d != 4) {
            std::fprintf(stderr, "family member g=%d failed its parameter checks\n", g);
            return kExitVerification;
        }
        double rate = static_cast<double>(k) / code.n;
        if (rate <= prev_rate) {
            std::fprintf(stderr, "family rate not increasing at g=%d\n", g);
            return kExitVerification;
        }
        prev_rate = rate;
        std::printf("%-4d %-5d %-5ld %-5d %-5d %-8.4f %d\n", g, p, nf, code.n, k, rate, d);
    }
    return kExitOk;
}

int cmd_verify(int p, int g, const std::string& builder, const std::string& budget, bool strict,
               const std::string& format) {
    hc::BuildOptions opts;
    opts.builder = parse_builder(builder);
    hc::BuildResult built = hc::build_complex(p, g, opts);
    hc::TessellationSignature sig(p, 3, g);

    bool hard_fail = false;
    auto line = [&](const std::string& name, bool pass, const std::string& note = "") {
        std::printf("%-28s %s%s%s\n", name.c_str(), pass ? "PASS" : "FAIL",
                    note.empty() ? "" : "  ", note.c_str());
        if (!pass) hard_fail = true;
    };

    hc::ValidationReport vrep = hc::validate_complex(built.complex, &sig);
    for (const auto& c : vrep.checks)
        line("complex." + c.name, c.pass || c.skipped, c.skipped ? "skipped: " + c.note : c.note);

    hc::ColorCode code = hc::plaquette_code(built.complex, built.coloring);
    int k = 0;
    try {
        k = hc::logical_count(code, g);
        line("code.k_equals_4g", true, "k = " + std::to_string(k));
    } catch (const std::exception& ex) {
        line("code.k_equals_4g", false, ex.what());
    }
    auto dep = hc::color_dependencies(code);
    line("code.color_dependencies", dep.pass());

    try {
        hc::LogicalSet ls = hc::logical_basis(code);
        bool commute = true;
        for (const auto& x : ls.x)
            for (int i = 0; i < code.H.rows(); ++i)
                if (code.H.row(i).dot(x)) commute = false;
        bool paired = ls.pairing == hc::BinaryMatrix::identity(static_cast<int>(ls.x.size()));
        line("code.logical_basis", commute && paired,
             std::to_string(ls.x.size()) + " X / " + std::to_string(ls.z.size()) + " Z pairs");
    } catch (const std::exception& ex) {
        line("code.logical_basis", false, ex.what());
    }

    hc::DistanceBudget db = parse_budget(budget);
    hc::EstimateComparison cmp = hc::estimate_vs_exact(code, p, g, db);
    std::string dnote = "estimate " + std::to_string(cmp.estimate) + ", search ";
    dnote += cmp.exact.value ? ("d=" + std::to_string(*cmp.exact.value)) : "none found";
    dnote += " (" + cmp.exact.status() + ", " + cmp.exact.method + ")";
    // Disagreement with the geometric estimate is data, not failure.
    std::printf("%-28s %s  %s\n", "distance.estimate_vs_search",
                cmp.agree ? "AGREE" : "DIFFER", dnote.c_str());

    int d_for_bounds = cmp.exact.exact && cmp.exact.value ? *cmp.exact.value : cmp.estimate;
    auto flags = hc::bounds_check(code.n, k > 0 ? k : 4 * g, d_for_bounds);
    line("bounds.singleton", flags.singleton_ok,
         flags.singleton_saturated ? "saturated" : "");
    line("bounds.hamming", flags.hamming_ok);

    if (format == "json") {
        hc::CodeReport rep = make_report(p, g, built, code);
        if (cmp.exact.value) rep.d_exact = *cmp.exact.value;
        rep.d_status = cmp.exact.status();
        std::cout << hc::report_to_json(rep) << "\n";
    }

    if (hard_fail) return kExitVerification;
    if (strict && !cmp.exact.exact) return kExitBudget;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercolor: color codes from trivalent 3-colorable tessellations of "
                 "higher-genus hyperbolic surfaces"};
    app.require_subcommand(1);

    std::string genus_range = "2", format = "md", out_dir, builder = "auto", svg_path, prefix,
                budget;
    bool compare = false, strict = false;
    int p = 0, g = 2, g_max = 9;

    auto* tables = app.add_subcommand("tables", "emit per-genus parameter tables");
    tables->add_option("--genus,-g", genus_range, "genus or range, e.g. 2 or 2-9");
    tables->add_option("--format", format, "csv|md|json")
        ->check(CLI::IsMember({"csv", "md", "json"}));
    tables->add_option("--out", out_dir, "write table files under this directory");
    tables->add_flag("--compare", compare, "diff against the bundled reference tables");

    auto* build = app.add_subcommand("build", "construct one code and write its artifacts");
    build->add_option("--sides,-p", p, "face side count")->required();
    build->add_option("--genus,-g", g, "genus")->required();
    build->add_option("--builder", builder, "geometric|combinatorial|auto")
        ->check(CLI::IsMember({"geometric", "combinatorial", "auto"}));
    build->add_option("--svg", svg_path, "write a disk-model SVG here");
    build->add_option("--output,-o", prefix, "output file prefix");

    auto* family = app.add_subcommand("family", "build the d=4 family p = 4+2g");
    family->add_option("--gmax", g_max, "largest genus");

    auto* verify = app.add_subcommand("verify", "run the invariant and distance checks");
    verify->add_option("--sides,-p", p, "face side count")->required();
    verify->add_option("--genus,-g", g, "genus")->required();
    verify->add_option("--builder", builder, "geometric|combinatorial|auto")
        ->check(CLI::IsMember({"geometric", "combinatorial", "auto"}));
    verify->add_option("--budget", budget, "distance search budget, e.g. 60s");
    verify->add_flag("--strict", strict, "exit 4 when the distance is only an upper bound");
    verify->add_option("--format", format, "md|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tables->parsed()) return cmd_tables(genus_range, format, out_dir, compare);
        if (build->parsed()) return cmd_build(p, g, builder, svg_path, prefix);
        if (family->parsed()) return cmd_family(g_max);
        if (verify->parsed()) return cmd_verify(p, g, builder, budget, strict, format);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        std::fprintf(stdout, "{\"error\": \"%s\"}\n", ex.what());
        return kExitConstruction;
    }
    return kExitOk;
}
