#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rrb/census.hpp"
#include "rrb/certificate.hpp"
#include "rrb/generators.hpp"
#include "rrb/io.hpp"
#include "rrb/search.hpp"
#include "rrb/sector_fan.hpp"
#include "rrb/svg.hpp"
#include "rrb/verify.hpp"

namespace {

using rrb::Json;

struct Output {
    std::string path;  // empty: stdout
    bool quiet = false;

    void emit(const std::string& text) const {
        if (!path.empty()) {
            rrb::write_text_file(path, text);
        } else if (!quiet) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
        }
    }
};

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int run(int argc, char** argv) {
    CLI::App app{"exact census and certified lower bounds for empty two-colored triangles"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file supplying flag defaults");
    app.set_version_flag("--version", "rrb 0.1.0");

    std::string out_path;
    std::string format;
    bool quiet = false;
    app.add_option("--out", out_path, "write the result here instead of stdout")
        ->capture_default_str();
    app.add_option("--format", format, "json | csv (tables only; reports are json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--quiet", quiet, "suppress stdout output");

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "produce a point-set file");
    std::string kind;
    int gen_n = 10, gen_m = 10, gen_k = 4;
    std::int64_t gen_box = 1000000, gen_radius = 1000000;
    std::int64_t shrink_num = 0, shrink_den = 0;
    std::uint64_t seed = 1;
    std::string scheme_text = "alternating";
    generate->add_option("--kind", kind, "random | circle | horton")
        ->required()
        ->check(CLI::IsMember({"random", "circle", "horton"}));
    generate->add_option("--n", gen_n, "red count (random) or ring size (circle)");
    generate->add_option("--m", gen_m, "blue count (random)");
    generate->add_option("--box", gen_box, "half-width of the sampling box (random)");
    generate->add_option("--seed", seed, "RNG seed");
    generate->add_option("--radius", gen_radius, "ring radius (circle)");
    generate->add_option("--shrink-num", shrink_num, "blue ring shrink numerator (circle)");
    generate->add_option("--shrink-den", shrink_den, "blue ring shrink denominator (circle)");
    generate->add_option("--k", gen_k, "size exponent: 2^k points (horton)");
    generate->add_option("--scheme", scheme_text,
                         "coloring for horton: alternating | x-parity | random(SEED)");

    // ---- census ----
    auto* census_cmd = app.add_subcommand("census", "count empty triangles by color class");
    std::string census_file;
    bool use_oracle = false, use_fast = false, use_both = false;
    census_cmd->add_option("file", census_file, "point-set file")->required();
    census_cmd->add_flag("--oracle", use_oracle, "exhaustive O(N^4) path only");
    census_cmd->add_flag("--fast", use_fast, "radial-sweep path only (default)");
    census_cmd->add_flag("--both", use_both, "run both paths and cross-check");

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "sector fans, p, and the certificate");
    std::string analyze_file;
    analyze->add_option("file", analyze_file, "point-set file")->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the full inequality battery");
    std::string verify_file, depth_text = "quick";
    verify->add_option("file", verify_file, "point-set file")->required();
    verify->add_option("--depth", depth_text, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));

    // ---- search ----
    auto* search = app.add_subcommand("search", "anneal toward few empty rrb triangles");
    int s_n = 10, s_m = 10, s_restarts = 1;
    std::int64_t s_box = 1000, s_iterations = 20000, s_step = 0, s_period = 100, s_audit = 1000;
    double s_t0 = -1.0, s_ratio = 0.999;
    std::uint64_t s_seed = 1;
    std::string best_path, trace_path;
    search->add_option("--n", s_n, "red count");
    search->add_option("--m", s_m, "blue count");
    search->add_option("--box", s_box, "coordinate half-width");
    search->add_option("--seed", s_seed, "RNG seed");
    search->add_option("--iterations", s_iterations, "moves per restart");
    search->add_option("--step", s_step, "max per-axis displacement (0: box/16)");
    search->add_option("--t0", s_t0, "initial temperature (<0: count/10)");
    search->add_option("--ratio", s_ratio, "cooling ratio per period");
    search->add_option("--ratio-period", s_period, "iterations per cooling step");
    search->add_option("--restarts", s_restarts, "independent restarts");
    search->add_option("--audit-interval", s_audit, "accepted moves between recount audits");
    search->add_option("--out-best", best_path, "write the best point set here");
    search->add_option("--out-trace", trace_path, "write the annealing trace CSV here");

    // ---- scan-horton ----
    auto* scan = app.add_subcommand("scan-horton", "rrb counts of bicolored Horton sets");
    int k_min = 2, k_max = 6;
    std::vector<std::string> scheme_list = {"alternating"};
    scan->add_option("--kmin", k_min, "smallest size exponent");
    scan->add_option("--kmax", k_max, "largest size exponent");
    scan->add_option("--schemes", scheme_list, "coloring schemes")->delimiter(',');

    // ---- render ----
    auto* render = app.add_subcommand("render", "SVG of a sector fan or a good-sector run");
    std::string render_file, mode = "fan";
    int apex = -1;
    render->add_option("file", render_file, "point-set file")->required();
    render->add_option("--mode", mode, "points | fan | run")
        ->check(CLI::IsMember({"points", "fan", "run"}));
    render->add_option("--apex", apex, "red index for fan mode (default: the p_min argmin)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);
    const Output out{out_path, quiet};

    if (generate->parsed()) {
        rrb::ColoredPointSet set;
        std::string provenance;
        if (kind == "random") {
            set = rrb::gen_random_gp(gen_n, gen_m, gen_box, seed);
            provenance = "random n=" + std::to_string(gen_n) + " m=" + std::to_string(gen_m) +
                         " box=" + std::to_string(gen_box) + " seed=" + std::to_string(seed);
        } else if (kind == "circle") {
            if (shrink_num == 0 || shrink_den == 0) {
                std::tie(shrink_num, shrink_den) = rrb::default_circle_shrink(gen_n);
            }
            set = rrb::gen_circle_pair(gen_n, gen_radius, shrink_num, shrink_den);
            provenance = "circle n=" + std::to_string(gen_n) + " radius=" +
                         std::to_string(gen_radius) + " shrink=" + std::to_string(shrink_num) +
                         "/" + std::to_string(shrink_den);
        } else {
            set = rrb::bicolor(rrb::gen_horton(gen_k), rrb::ColoringScheme::parse(scheme_text));
            provenance = "horton k=" + std::to_string(gen_k) + " scheme=" + scheme_text;
        }
        out.emit("# generated: " + provenance + "\n" + rrb::point_file_text(set));
        return 0;
    }

    if (census_cmd->parsed()) {
        const auto set = rrb::read_point_file(census_file);
        if (!use_oracle && !use_both) use_fast = true;
        Json report = rrb::make_report(set);
        report["instance"]["source"] = census_file;
        Json timings;
        bool mismatch = false;
        rrb::Census fast, oracle;
        if (use_fast || use_both) {
            const auto t0 = std::chrono::steady_clock::now();
            fast = rrb::census_fast(set);
            timings["census_fast_ms"] = elapsed_ms(t0);
            report["census"] = rrb::census_to_json(fast);
        }
        if (use_oracle || use_both) {
            const auto t0 = std::chrono::steady_clock::now();
            oracle = rrb::census_oracle(set);
            timings["census_oracle_ms"] = elapsed_ms(t0);
            report[use_both ? "census_oracle" : "census"] = rrb::census_to_json(oracle);
        }
        if (use_both) {
            mismatch = !(fast == oracle);
            report["paths_match"] = !mismatch;
        }
        report["timings"] = timings;
        out.emit(report.dump(2) + "\n");
        if (mismatch) {
            std::cerr << "census: fast and oracle paths disagree\n";
            return 1;
        }
        return 0;
    }

    if (analyze->parsed()) {
        const auto set = rrb::read_point_file(analyze_file);
        Json report = rrb::make_report(set);
        report["instance"]["source"] = analyze_file;
        if (set.n() >= 2) {
            Json fans = Json::array();
            for (int r = 0; r < set.n(); ++r) {
                const rrb::SectorFan fan = rrb::build_sector_fan(set, r);
                fans.push_back(Json{{"red", r},
                                    {"p", fan.p_of_r},
                                    {"red_sectors", fan.red_sectors.size()},
                                    {"whole_plane_red", fan.whole_plane_red}});
            }
            const auto [p, r0] = rrb::p_min(set);
            report["fans"] = fans;
            report["p"] = p;
            report["p_argmin"] = r0;
            if (set.m() >= set.n()) {
                report["certificate"] = rrb::certificate_to_json(rrb::assemble_certificate(set));
            } else {
                report["certificate"] = nullptr;
                report["certificate_skipped"] =
                    "m < n: certificate requires m >= n; swap colors to certify rbb";
            }
        } else {
            report["fans"] = Json::array();
            report["certificate"] = nullptr;
            report["certificate_skipped"] = "fewer than two red points";
        }
        out.emit(report.dump(2) + "\n");
        return 0;
    }

    if (verify->parsed()) {
        const auto set = rrb::read_point_file(verify_file);
        const auto report = rrb::verify_all(
            set, depth_text == "full" ? rrb::VerifyDepth::full : rrb::VerifyDepth::quick);
        Json doc = rrb::make_report(set);
        doc["instance"]["source"] = verify_file;
        doc["verification"] = rrb::verification_report_to_json(report);
        out.emit(doc.dump(2) + "\n");
        if (!quiet) {
            for (const auto& c : report.checks) {
                std::cerr << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " (" << c.lhs
                          << " vs " << c.rhs << ")\n";
            }
        }
        return report.overall ? 0 : 1;
    }

    if (search->parsed()) {
        rrb::AnnealParams params;
        params.iterations = s_iterations;
        params.step = s_step;
        params.t0 = s_t0;
        params.ratio = s_ratio;
        params.ratio_period = s_period;
        params.seed = s_seed;
        params.restarts = s_restarts;
        params.audit_interval = s_audit;
        params.record_trace = !trace_path.empty();
        const rrb::SearchResult result = rrb::minimize_rrb(s_n, s_m, s_box, params);
        if (!best_path.empty()) rrb::write_point_file(result.best, best_path);
        if (!trace_path.empty()) rrb::write_text_file(trace_path, rrb::trace_csv(result.trace));
        Json summary = rrb::make_report(result.best);
        summary["best_count_rrb"] = result.best_count;
        summary["proposals"] = result.proposals;
        summary["accepted"] = result.accepted;
        out.emit(summary.dump(2) + "\n");
        return 0;
    }

    if (scan->parsed()) {
        std::vector<rrb::ColoringScheme> schemes;
        for (const std::string& s : scheme_list) schemes.push_back(rrb::ColoringScheme::parse(s));
        const auto rows = rrb::horton_bicoloring_scan(k_min, k_max, schemes);
        if (format == "json") {
            Json table = Json::array();
            for (const auto& r : rows) {
                table.push_back(Json{{"k", r.size_log2},
                                     {"scheme", r.scheme},
                                     {"points", r.points},
                                     {"reds", r.reds},
                                     {"count_rrb", r.count_rrb},
                                     {"rrb_over_n_squared", r.ratio}});
            }
            out.emit(table.dump(2) + "\n");
        } else {
            out.emit(rrb::horton_scan_csv(rows));
        }
        return 0;
    }

    if (render->parsed()) {
        const auto set = rrb::read_point_file(render_file);
        std::string svg;
        if (mode == "points") {
            svg = rrb::render_points_svg(set);
        } else if (mode == "fan") {
            int a = apex;
            if (a < 0) a = rrb::p_min(set).second;
            svg = rrb::render_fan_svg(set, rrb::build_sector_fan(set, a));
        } else {
            const rrb::Certificate cert = rrb::assemble_certificate(set);
            if (cert.branch != rrb::Certificate::Branch::good_sector) {
                std::cerr << "render: certificate took the min-sector branch; no run to draw\n";
                return 1;
            }
            svg = rrb::render_run_svg(set, cert.chosen());
        }
        out.emit(svg);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rrb::PointFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
