#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "boro/fixtures.hpp"
#include "boro/json_io.hpp"

using namespace boro;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContainmentFails = 3;

unsigned env_threads() {
    const char* raw = std::getenv("BOROCZKY_THREADS");
    if (!raw) return std::max(1u, std::thread::hardware_concurrency());
    const long v = std::strtol(raw, nullptr, 10);
    return v > 0 ? static_cast<unsigned>(v) : 1u;
}

void emit(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const unsigned v = static_cast<unsigned>(std::stoul(text));
        return {v, v};
    }
    return {static_cast<unsigned>(std::stoul(text.substr(0, dots))),
            static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
}

Ideal<Rational> rational_ideal_for(unsigned n, unsigned power) {
    auto arr = boroczky_lines(n);
    auto rep = incidence(arr);
    auto T = triple_points(arr, rep, &std::cerr);
    auto sys = make_point_system(xyz_ring(), arr.field, T);
    SymbolicOptions sopts;
    sopts.orbit_grouping = n >= 10;
    AnyIdeal ideal = symbolic_power(sys, power, sopts);
    if (!ideal.descended())
        throw std::runtime_error("ideal did not descend to the rationals; unexpected for B_n");
    return ideal.rational();
}

void write_fixture_files(const std::filesystem::path& dir, bool dual, bool paper) {
    std::filesystem::create_directories(dir);
    if (dual) {
        auto arr = dual_hesse();
        std::ofstream out(dir / "dual_hesse.json", std::ios::binary);
        out << arrangement_json(arr);
        std::cerr << "wrote " << (dir / "dual_hesse.json").string() << "\n";
    }
    if (paper) {
        {
            std::ofstream out(dir / "published_n10_generators.txt", std::ios::binary);
            for (const char* g : kPublishedN10Generators) out << g << "\n";
        }
        {
            // the published presentation matrix, row-major; its signed minors
            // regenerate the 12-point ideal (the generator list does not, see
            // published_n10_generators.txt)
            std::ofstream out(dir / "published_n10_hilbert_burch.txt", std::ios::binary);
            for (const auto& row : kPublishedN10HilbertBurch) {
                for (int c = 0; c < 3; ++c) out << row[c] << (c + 1 < 3 ? " | " : "\n");
            }
        }
        {
            std::ofstream out(dir / "published_n11_generators.txt", std::ios::binary);
            for (const char* g : kPublishedN11Generators) out << g << "\n";
        }
        std::cerr << "wrote published n=10/n=11 fixture files under " << dir.string() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for Boroczky line arrangements and the I^(3) in I^2 containment"};
    app.require_subcommand(1);

    // generate
    unsigned gen_n = 0;
    bool gen_svg = false, gen_json = false;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "construct B_n and print it");
    generate->add_option("n", gen_n, "number of lines (4..24)")->required()->check(CLI::Range(4u, 24u));
    generate->add_flag("--svg", gen_svg, "emit an SVG drawing");
    generate->add_flag("--json", gen_json, "emit arrangement JSON (default)");
    generate->add_option("-o,--output", gen_out, "output file (default stdout)");

    // incidence
    unsigned inc_n = 0;
    std::string inc_out;
    auto* inc_cmd = app.add_subcommand("incidence", "intersection points of B_n with multiplicities");
    inc_cmd->add_option("n", inc_n, "number of lines")->required()->check(CLI::Range(4u, 24u));
    inc_cmd->add_option("-o,--output", inc_out, "output file (default stdout)");

    // ideal
    unsigned ideal_n = 0, ideal_m = 1;
    std::string ideal_out;
    auto* ideal_cmd = app.add_subcommand("ideal", "generators of I(T_n) or its symbolic power");
    ideal_cmd->add_option("n", ideal_n, "number of lines")->required()->check(CLI::Range(4u, 24u));
    ideal_cmd->add_option("-m,--symbolic", ideal_m, "symbolic power (default 1 = radical ideal)")
        ->check(CLI::Range(1u, 4u));
    ideal_cmd->add_option("-o,--output", ideal_out, "output file (default stdout)");

    // resolve
    unsigned res_n = 0, res_r = 1;
    bool res_diff = false;
    std::string res_out;
    auto* res_cmd = app.add_subcommand("resolve", "minimal free resolution and Betti table of I(T_n)^r");
    res_cmd->add_option("n", res_n, "number of lines")->required()->check(CLI::Range(4u, 24u));
    res_cmd->add_option("-r,--power", res_r, "ordinary power (default 1)")->check(CLI::Range(1u, 3u));
    res_cmd->add_flag("--differentials", res_diff, "also print the differential matrices as text");
    res_cmd->add_option("-o,--output", res_out, "output file (default stdout)");

    // contain
    unsigned con_n = 0;
    std::string con_method = "all";
    bool con_dual = false;
    std::string con_out;
    auto* con_cmd = app.add_subcommand("contain", "decide I^(3) in I^2 for the triple points of B_n");
    con_cmd->add_option("n", con_n, "number of lines")->check(CLI::Range(4u, 24u));
    con_cmd->add_option("--method", con_method, "all|direct|bh|ghm|seceleanu")
        ->check(CLI::IsMember({"all", "direct", "bh", "ghm", "seceleanu"}));
    con_cmd->add_flag("--dual-hesse", con_dual, "run on the dual-Hesse fixture instead of B_n");
    con_cmd->add_option("-o,--output", con_out, "output file (default stdout)");

    // report
    std::string rep_range = "4..12";
    std::string rep_json_path, rep_md_path;
    auto* rep_cmd = app.add_subcommand("report", "the containment table over a range of n");
    rep_cmd->add_option("--range", rep_range, "n range, e.g. 4..12 (beyond 12 is experimental)");
    rep_cmd->add_option("--json", rep_json_path, "also write the JSON table to this file");
    rep_cmd->add_option("--md", rep_md_path, "also write the Markdown table to this file");

    // fixtures
    bool fix_dual = false, fix_paper = false;
    std::string fix_dir = "fixtures";
    auto* fix_cmd = app.add_subcommand("fixtures", "write validation fixtures");
    fix_cmd->add_flag("--dual-hesse", fix_dual, "write the dual-Hesse arrangement");
    fix_cmd->add_flag("--paper-ideals", fix_paper, "write the published B_10/B_11 generator lists");
    fix_cmd->add_option("--dir", fix_dir, "output directory (default ./fixtures)");

    // plot
    unsigned plot_n = 0;
    std::string plot_out;
    auto* plot_cmd = app.add_subcommand("plot", "SVG drawing of B_n with marked intersections");
    plot_cmd->add_option("n", plot_n, "number of lines")->required()->check(CLI::Range(4u, 24u));
    plot_cmd->add_option("-o,--output", plot_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) {
            auto arr = boroczky_lines(gen_n);
            if (gen_svg) {
                emit(plot_svg(arr, incidence(arr)), gen_out);
            } else {
                emit(arrangement_json(arr), gen_out);
            }
            return kExitOk;
        }
        if (*inc_cmd) {
            auto arr = boroczky_lines(inc_n);
            emit(incidence_json(incidence(arr)), inc_out);
            return kExitOk;
        }
        if (*ideal_cmd) {
            auto I = rational_ideal_for(ideal_n, ideal_m);
            std::string payload = "{\n  \"n\": " + std::to_string(ideal_n) +
                                  ",\n  \"symbolic_power\": " + std::to_string(ideal_m) +
                                  ",\n  \"alpha\": " + std::to_string(alpha(I)) + ",\n  \"generators\": [\n";
            const auto gens = minimal_generators(I);
            for (std::size_t i = 0; i < gens.size(); ++i)
                payload += "    \"" + to_text(gens[i]) + (i + 1 < gens.size() ? "\",\n" : "\"\n");
            payload += "  ]\n}\n";
            emit(payload, ideal_out);
            return kExitOk;
        }
        if (*res_cmd) {
            auto I = rational_ideal_for(res_n, 1);
            Ideal<Rational> target = res_r == 1 ? I : ideal_power(I, res_r);
            auto res = free_resolution(target);
            std::string payload = betti_json(res.betti());
            if (res_diff) payload += resolution_text(res);
            emit(payload, res_out);
            return kExitOk;
        }
        if (*con_cmd) {
            if (!con_dual && con_n == 0) {
                std::cerr << "contain: specify n or --dual-hesse\n";
                return kExitUsage;
            }
            AnalyzeOptions opts;
            if (con_method == "direct") opts.method = MethodSelect::Direct;
            else if (con_method == "bh") opts.method = MethodSelect::BocciHarbourne;
            else if (con_method == "ghm") opts.method = MethodSelect::Ghm;
            else if (con_method == "seceleanu") opts.method = MethodSelect::Seceleanu;
            const ReportRow row = con_dual ? analyze_arrangement(dual_hesse(), "dual-Hesse", opts)
                                           : analyze_boroczky(con_n, opts);
            emit(verdict_json(row), con_out);
            std::cerr << row.label << ": I^(3) in I^2 " << (row.holds ? "holds" : "FAILS") << "\n";
            return row.holds ? kExitOk : kExitContainmentFails;
        }
        if (*rep_cmd) {
            const auto [lo, hi] = parse_range(rep_range);
            if (lo < 4 || hi < lo) {
                std::cerr << "report: bad range\n";
                return kExitUsage;
            }
            if (hi > 12) std::cerr << "note: n > 12 is experimental; runtime grows sharply\n";
            const auto t0 = std::chrono::steady_clock::now();
            auto rows = run_report(lo, hi, AnalyzeOptions{}, env_threads());
            std::cerr << "report computed in "
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
                      << "s\n";
            const std::string md = report_markdown(rows);
            std::cout << md;
            if (!rep_md_path.empty()) emit(md, rep_md_path);
            if (!rep_json_path.empty()) emit(report_json(rows), rep_json_path);
            return kExitOk;
        }
        if (*fix_cmd) {
            if (!fix_dual && !fix_paper) fix_dual = fix_paper = true;
            write_fixture_files(fix_dir, fix_dual, fix_paper);
            return kExitOk;
        }
        if (*plot_cmd) {
            auto arr = boroczky_lines(plot_n);
            emit(plot_svg(arr, incidence(arr)), plot_out);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
