#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "segstab/generators.h"
#include "segstab/io.h"
#include "segstab/oracle.h"
#include "segstab/solver.h"
#include "segstab/svg_render.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

constexpr const char* kCsvHeader = "class,n,r,nu,seed,Y0,k,H,OPT,ratio,ms";

struct RunRecord {
    std::string cls;
    std::size_t n = 0;
    double r = 0.0;
    double nu = 0.0;
    std::uint64_t seed = 0;
    std::size_t y0 = 0;
    long k = 0;
    std::size_t h = 0;
    bool has_opt = false;
    int opt = 0;
    double ms = 0.0;

    std::string csv_line() const {
        std::ostringstream os;
        os.precision(10);
        os << cls << "," << n << "," << r << "," << nu << "," << seed << ","
           << y0 << "," << k << "," << h << ",";
        if (has_opt)
            os << opt << "," << static_cast<double>(h) / opt;
        else
            os << ",";
        os << "," << ms;
        return os.str();
    }
};

void append_record(const std::string& path, const RunRecord& rec) {
    bool fresh = !std::filesystem::exists(path) ||
                 std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw segstab::Error("cannot open for append: " + path);
    if (fresh) out << kCsvHeader << "\n";
    out << rec.csv_line() << "\n";
}

segstab::GenConfig make_config(std::uint64_t seed, int n, double r_abs,
                               double r_frac) {
    segstab::GenConfig cfg;
    cfg.seed = seed;
    cfg.n = n;
    if (r_abs > 0.0) {
        cfg.r_absolute = true;
        cfg.r_value = r_abs;
    } else if (r_frac > 0.0) {
        cfg.r_fraction = r_frac;
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stab plane-graph segments with equal disks"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a random instance");
    std::string g_class = "delaunay";
    int g_n = 20;
    std::uint64_t g_seed = 1;
    double g_r = 0.0, g_rfrac = 0.0;
    std::string g_out = "instance.json";
    gen->add_option("--class", g_class, "graph class");
    gen->add_option("--n", g_n, "points (proximity classes) or edges");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--r", g_r, "absolute radius");
    gen->add_option("--r-frac", g_rfrac, "radius as fraction of mean length");
    gen->add_option("--out", g_out, "output path");

    // solve
    auto* slv = app.add_subcommand("solve", "solve an instance");
    std::string s_in, s_out = "solution.json", s_svg, s_records;
    std::string s_variant;
    double s_nu = 6.0;
    bool s_prune = false;
    std::uint64_t s_seed = 0;
    slv->add_option("input", s_in, "instance JSON")->required();
    slv->add_option("--nu", s_nu, "accuracy parameter");
    slv->add_option("--out", s_out, "solution path");
    slv->add_option("--svg", s_svg, "also render an SVG");
    slv->add_option("--records", s_records, "append a run record CSV line");
    slv->add_option("--variant-override", s_variant,
                    "force a class variant");
    slv->add_option("--seed", s_seed, "seed column for the record");
    slv->add_flag("--prune-remark", s_prune,
                  "assign segment-meeting capsules to existing pivots");

    // verify
    auto* ver = app.add_subcommand("verify", "check a solution");
    std::string v_in, v_sol;
    ver->add_option("input", v_in, "instance JSON")->required();
    ver->add_option("solution", v_sol, "solution JSON")->required();

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact optimum (small inputs)");
    std::string o_in;
    int o_max = 14;
    orc->add_option("input", o_in, "instance JSON")->required();
    orc->add_option("--oracle-max", o_max, "active edge guard");

    // bench
    auto* ben = app.add_subcommand("bench", "seeded solve matrix");
    std::vector<std::string> b_classes{"general", "remote",    "gabriel",
                                       "delaunay", "outerplane_dt",
                                       "outerplane"};
    std::vector<int> b_ns{10, 20};
    int b_seeds = 5;
    double b_nu = 6.0;
    int b_jobs = 1;
    std::string b_out = "bench.csv";
    ben->add_option("--classes", b_classes, "class list");
    ben->add_option("--n-list", b_ns, "sizes");
    ben->add_option("--seeds", b_seeds, "seeds per cell");
    ben->add_option("--nu", b_nu, "accuracy parameter");
    ben->add_option("--jobs", b_jobs, "worker threads");
    ben->add_option("--out", b_out, "CSV path");

    // plot
    auto* plt = app.add_subcommand("plot", "render instance + solution");
    std::string p_in, p_sol, p_svg = "plot.svg";
    plt->add_option("input", p_in, "instance JSON")->required();
    plt->add_option("solution", p_sol, "solution JSON (optional)");
    plt->add_option("--svg", p_svg, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            segstab::GraphClass cls;
            try {
                cls = segstab::graph_class_from_string(g_class);
            } catch (const segstab::Error& e) {
                std::cerr << e.what() << "\n";
                return kExitUsage;
            }
            auto inst = segstab::generate(
                cls, make_config(g_seed, g_n, g_r, g_rfrac));
            segstab::save_instance(inst, g_out);
            std::cout << g_out << ": " << inst.edges.size() << " edges, r="
                      << inst.r << "\n";
            return kExitOk;
        }

        if (slv->parsed()) {
            auto inst = segstab::load_instance(s_in);
            segstab::SolveOverrides ov;
            ov.prune_segment_meets = s_prune;
            if (!s_variant.empty()) {
                ov.has_variant = true;
                ov.variant = segstab::graph_class_from_string(s_variant);
            }
            segstab::Solution sol = segstab::solve(inst, s_nu, ov);
            segstab::save_solution(sol, s_out);
            if (!s_svg.empty()) {
                std::ofstream svg(s_svg);
                svg << segstab::render_svg(inst, sol.points);
            }
            if (!s_records.empty()) {
                RunRecord rec;
                rec.cls = segstab::to_string(sol.variant);
                rec.n = inst.edges.size();
                rec.r = inst.r;
                rec.nu = s_nu;
                rec.seed = s_seed;
                rec.y0 = sol.y0_size;
                rec.k = sol.pap.k_final;
                rec.h = sol.points.size();
                rec.ms = sol.wall_ms;
                append_record(s_records, rec);
            }
            std::cout << "points=" << sol.points.size()
                      << " verified=" << (sol.verified ? "yes" : "no")
                      << " ms=" << sol.wall_ms << "\n";
            return sol.verified ? kExitOk : kExitVerifyFailed;
        }

        if (ver->parsed()) {
            auto inst = segstab::load_instance(v_in);
            auto sol = segstab::load_solution(v_sol);
            auto rep = segstab::verify_hitting(inst, sol.points);
            for (int e : rep.failed_edges)
                std::cout << "edge " << e << " unhit, distance "
                          << rep.distance[e] << " > " << rep.tolerance
                          << "\n";
            std::cout << (rep.pass ? "pass" : "fail") << " (max distance "
                      << rep.max_distance << ", tolerance " << rep.tolerance
                      << ")\n";
            return rep.pass ? kExitOk : kExitVerifyFailed;
        }

        if (orc->parsed()) {
            auto inst = segstab::load_instance(o_in);
            auto res = segstab::exact_opt(inst, o_max);
            std::cout << res.value << "\n";
            return kExitOk;
        }

        if (ben->parsed()) {
            struct Job {
                segstab::GraphClass cls;
                int n;
                std::uint64_t seed;
            };
            std::vector<Job> jobs;
            for (const std::string& c : b_classes) {
                auto cls = segstab::graph_class_from_string(c);
                for (int n : b_ns)
                    for (int s = 0; s < b_seeds; ++s)
                        jobs.push_back({cls, n,
                                        static_cast<std::uint64_t>(s + 1)});
            }
            std::mutex sink;
            std::atomic<std::size_t> next{0};
            std::atomic<bool> all_ok{true};
            std::vector<RunRecord> results(jobs.size());
            std::vector<char> got(jobs.size(), 0);
            auto worker = [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= jobs.size()) return;
                    const Job& jb = jobs[i];
                    try {
                        auto inst = segstab::generate(
                            jb.cls, make_config(jb.seed, jb.n, 0.0, 0.0));
                        auto sol = segstab::solve(inst, b_nu, {});
                        RunRecord rec;
                        rec.cls = segstab::to_string(jb.cls);
                        rec.n = inst.edges.size();
                        rec.r = inst.r;
                        rec.nu = b_nu;
                        rec.seed = jb.seed;
                        rec.y0 = sol.y0_size;
                        rec.k = sol.pap.k_final;
                        rec.h = sol.points.size();
                        rec.ms = sol.wall_ms;
                        results[i] = rec;
                        got[i] = 1;
                        if (!sol.verified) all_ok = false;
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lock(sink);
                        std::cerr << "bench job failed: " << e.what() << "\n";
                        all_ok = false;
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < std::max(1, b_jobs); ++t)
                pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            // records land in matrix order regardless of scheduling
            for (std::size_t i = 0; i < jobs.size(); ++i)
                if (got[i]) append_record(b_out, results[i]);
            std::cout << b_out << ": " << jobs.size() << " runs\n";
            return all_ok ? kExitOk : kExitVerifyFailed;
        }

        if (plt->parsed()) {
            auto inst = segstab::load_instance(p_in);
            std::vector<segstab::Point> pts;
            if (!p_sol.empty()) pts = segstab::load_solution(p_sol).points;
            std::ofstream svg(p_svg);
            if (!svg) throw segstab::Error("cannot open: " + p_svg);
            svg << segstab::render_svg(inst, pts);
            std::cout << p_svg << "\n";
            return kExitOk;
        }
    } catch (const segstab::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const segstab::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
