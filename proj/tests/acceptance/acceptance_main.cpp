// Acceptance suite: one check per shipped guarantee, one line per check.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "segstab/epsilon_net.h"
#include "segstab/generators.h"
#include "segstab/interval_hitting.h"
#include "segstab/io.h"
#include "segstab/oracle.h"
#include "segstab/solver.h"
#include "unit/test_support.h"

using namespace segstab;
using segstab::testing::exhaustive_cover;

namespace {

constexpr double kPi = 3.14159265358979323846;

const GraphClass kClasses[] = {GraphClass::General,  GraphClass::RemoteEdges,
                               GraphClass::Gabriel,  GraphClass::Delaunay,
                               GraphClass::OuterplaneDelaunay,
                               GraphClass::Outerplane};

struct CritResult {
    bool pass = true;
    std::string detail;
};

template <typename F>
void parallel_for(std::size_t count, F&& body) {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

int gen_n_for(GraphClass cls, int target_edges) {
    switch (cls) {
        case GraphClass::General:
        case GraphClass::RemoteEdges: return target_edges;
        case GraphClass::Delaunay:
            return std::max(4, target_edges / 3 + 2);
        case GraphClass::Gabriel:
            return std::max(4, static_cast<int>(target_edges / 1.5));
        case GraphClass::OuterplaneDelaunay:
            return std::max(4, (target_edges + 3) / 2);
        case GraphClass::Outerplane:
            return std::max(4, static_cast<int>((target_edges + 3) / 1.4));
    }
    return target_edges;
}

PlaneGraphInstance robust_generate(GraphClass cls, GenConfig cfg) {
    for (int shift = 0; shift < 3; ++shift) {
        try {
            return generate(cls, cfg);
        } catch (const Error&) {
            cfg.seed += 1000003;
        }
    }
    return generate(cls, cfg);  // let the final attempt surface the error
}

// bucket statistics collected from every weighted-net run in criterion 1,
// re-checked by criterion 9
struct BucketRecord {
    GraphClass cls;
    double delta_i;
    FinderStats stats;
};
std::vector<BucketRecord> g_buckets;
std::mutex g_buckets_mu;

double bucket_bound(GraphClass cls, double delta_i, bool fell_back) {
    FinderConstants fc = finder_constants(
        fell_back ? FinderVariant::GeneralFinder : finder_for_class(cls));
    double bound = delta_i > 0.0
                       ? fc.c1 / delta_i + fc.c2
                       : std::numeric_limits<double>::infinity();
    if (!fell_back && cls == GraphClass::Delaunay && delta_i > 0.0)
        bound = std::max(bound, 1.0 / delta_i + 18.0);
    return bound;
}

// ---------------------------------------------------------------- 1
CritResult criterion_hitting() {
    const int seeds_per_class = 500;
    const int sizes[] = {10, 20, 35, 50, 75, 100};
    struct Job {
        GraphClass cls;
        std::uint64_t seed;
        int target;
    };
    std::vector<Job> jobs;
    for (GraphClass cls : kClasses)
        for (int s = 0; s < seeds_per_class; ++s)
            jobs.push_back({cls, static_cast<std::uint64_t>(s + 1),
                            sizes[s % 6]});

    std::atomic<int> failures{0};
    std::mutex detail_mu;
    std::string first_failure;
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(jobs.size(), [&](std::size_t i) {
        const Job& jb = jobs[i];
        try {
            GenConfig cfg;
            cfg.seed = jb.seed;
            cfg.n = gen_n_for(jb.cls, jb.target);
            auto inst = robust_generate(jb.cls, cfg);
            auto sol = solve(inst, 6.0);
            if (!sol.verified) throw Error("verifier failed");
            std::lock_guard<std::mutex> lock(g_buckets_mu);
            for (std::size_t b = 0; b < sol.pap.finder_stats.size(); ++b)
                g_buckets.push_back({jb.cls, sol.pap.finder_delta_i[b],
                                     sol.pap.finder_stats[b]});
        } catch (const std::exception& e) {
            ++failures;
            std::lock_guard<std::mutex> lock(detail_mu);
            if (first_failure.empty()) {
                std::ostringstream os;
                os << to_string(jb.cls) << " seed " << jb.seed << ": "
                   << e.what();
                first_failure = os.str();
            }
        }
    });
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    CritResult res;
    res.pass = failures == 0 && secs < 1800.0;
    std::ostringstream os;
    os << jobs.size() << " solves across 6 classes, " << failures
       << " failures, " << secs << " s";
    if (!first_failure.empty()) os << "; first: " << first_failure;
    res.detail = os.str();
    return res;
}

// ---------------------------------------------------------------- 2
CritResult criterion_factors() {
    struct Cell {
        std::atomic<int> done{0};
        std::atomic<int> violations{0};
        double worst_ratio = 0.0;
        std::mutex mu;
    };
    Cell cells[6];
    std::atomic<int> gen_failures{0};

    struct Job {
        int cls_idx;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (int c = 0; c < 6; ++c)
        for (int s = 0; s < 160; ++s)
            jobs.push_back({c, static_cast<std::uint64_t>(1000 + s)});

    parallel_for(jobs.size(), [&](std::size_t i) {
        const Job& jb = jobs[i];
        GraphClass cls = kClasses[jb.cls_idx];
        Cell& cell = cells[jb.cls_idx];
        if (cell.done.load() >= 100) return;
        try {
            GenConfig cfg;
            cfg.seed = jb.seed;
            cfg.n = gen_n_for(cls, 9);
            cfg.r_fraction = 0.35;
            auto inst = robust_generate(cls, cfg);
            auto prep = prepare(inst);
            if (prep.active.size() > 12 || prep.active.empty()) return;
            auto sol = solve(inst, 6.0);
            if (!sol.verified) {
                ++cell.violations;
                return;
            }
            double bound = variant_constants(cls).net_size_bound() + 6.0;
            double ratio;
            if (cls == GraphClass::Gabriel) {
                auto oracle = exact_opt(prep);
                int opt_total =
                    oracle.value;
                ratio = static_cast<double>(sol.points.size()) / opt_total;
            } else {
                auto oracle = exact_opt(prep);
                if (oracle.active_value == 0) return;
                double active_pts = static_cast<double>(sol.points.size()) -
                                    static_cast<double>(sol.forced_count);
                ratio = active_pts / oracle.active_value;
            }
            // the solver can never beat the optimum
            if (ratio > bound || ratio < 1.0 - 1e-12) ++cell.violations;
            {
                std::lock_guard<std::mutex> lock(cell.mu);
                cell.worst_ratio = std::max(cell.worst_ratio, ratio);
            }
            ++cell.done;
        } catch (const std::exception&) {
            ++gen_failures;
        }
    });

    CritResult res;
    std::ostringstream os;
    for (int c = 0; c < 6; ++c) {
        if (cells[c].done.load() < 100 || cells[c].violations.load() > 0)
            res.pass = false;
        os << to_string(kClasses[c]) << " n=" << cells[c].done.load()
           << " worst=" << cells[c].worst_ratio << "  ";
    }
    if (gen_failures > 0) os << "(" << gen_failures << " skipped)";
    res.detail = os.str();
    return res;
}

// ------------------------------------------------------------- 3 + 4
struct NetRunSummary {
    bool net_ok = true;
    bool size_ok = true;
    bool indep_ok = true;
    bool maximal_ok = true;
    bool family_ok = true;
    int runs = 0;
};

NetRunSummary run_net_matrix() {
    NetRunSummary sum;
    const double eps_grid[] = {0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9};
    std::mutex mu;
    std::atomic<int> produced{0};
    parallel_for(520, [&](std::size_t i) {
        if (produced.load() >= 500) return;
        GraphClass cls = kClasses[i % 6];
        GenConfig cfg;
        cfg.seed = 40000 + i;
        cfg.n = gen_n_for(cls, 8 + static_cast<int>(i % 18));
        PlaneGraphInstance inst;
        try {
            inst = robust_generate(cls, cfg);
        } catch (const Error&) {
            return;
        }
        auto prep = prepare(inst);
        if (prep.active.empty()) return;
        std::vector<int> yd(prep.cands.size());
        for (std::size_t k = 0; k < yd.size(); ++k)
            yd[k] = static_cast<int>(k);
        SplitMix64 rng(9000 + i);
        std::vector<double> w(prep.cands.size());
        for (double& v : w) v = rng.uniform(0.05, 2.0);
        double eps = eps_grid[i % 7];
        auto vc = variant_constants(cls);
        auto net = epsilon_net(inst, prep.index, yd, prep.active, w, eps, vc);

        double total = 0.0;
        for (double v : w) total += v;
        double tol = inst.r + prep.eps_geom;
        bool net_ok = true;
        for (int e : prep.active) {
            if (!(weight_of(e, prep.index, w) > eps * total)) continue;
            bool hit = false;
            for (const Point& p : net.points)
                if (dist_point_segment(p, inst.segment(e)) <= tol) {
                    hit = true;
                    break;
                }
            if (!hit) net_ok = false;
        }
        bool size_ok = static_cast<double>(net.points.size()) <=
                       vc.net_size_bound() / eps + 1e-9;
        double threshold = net.delta * total;
        bool indep_ok = true;
        for (std::size_t a = 0; a < net.family.pivots.size(); ++a)
            for (std::size_t b = a + 1; b < net.family.pivots.size(); ++b)
                if (weight_of_intersection(net.family.pivots[a],
                                           net.family.pivots[b], prep.index,
                                           w) > threshold)
                    indep_ok = false;
        bool maximal_ok = true;
        std::size_t members = 0;
        for (const Bucket& bk : net.family.buckets) {
            members += bk.members.size();
            for (int e : bk.members) {
                if (e == bk.pivot) continue;
                if (net.delta == 0.0) {
                    if (dist_segment_segment(inst.segment(e),
                                             inst.segment(bk.pivot)) >
                        2.0 * inst.r)
                        maximal_ok = false;
                } else if (!(weight_of_intersection(e, bk.pivot, prep.index,
                                                    w) > threshold)) {
                    maximal_ok = false;
                }
            }
        }
        if (members != net.heavy.size()) maximal_ok = false;
        double theta0 = vc.theta0();
        bool family_ok =
            static_cast<double>(net.family.pivots.size()) <=
            vc.tau / ((vc.alpha - theta0 * vc.beta) * eps) + 1.0;

        std::lock_guard<std::mutex> lock(mu);
        sum.net_ok &= net_ok;
        sum.size_ok &= size_ok;
        sum.indep_ok &= indep_ok;
        sum.maximal_ok &= maximal_ok;
        sum.family_ok &= family_ok;
        ++sum.runs;
        ++produced;
    });
    return sum;
}

NetRunSummary g_net_summary;
bool g_net_summary_ready = false;

const NetRunSummary& net_summary() {
    if (!g_net_summary_ready) {
        g_net_summary = run_net_matrix();
        g_net_summary_ready = true;
    }
    return g_net_summary;
}

CritResult criterion_net_property() {
    const NetRunSummary& s = net_summary();
    CritResult res;
    res.pass = s.runs >= 500 && s.net_ok && s.size_ok;
    std::ostringstream os;
    os << s.runs << " runs, property " << (s.net_ok ? "ok" : "VIOLATED")
       << ", size bound " << (s.size_ok ? "ok" : "VIOLATED");
    res.detail = os.str();
    return res;
}

CritResult criterion_independence() {
    const NetRunSummary& s = net_summary();
    CritResult res;
    res.pass = s.runs >= 500 && s.indep_ok && s.maximal_ok && s.family_ok;
    std::ostringstream os;
    os << "pairwise overlap " << (s.indep_ok ? "ok" : "VIOLATED")
       << ", maximality " << (s.maximal_ok ? "ok" : "VIOLATED")
       << ", family bound " << (s.family_ok ? "ok" : "VIOLATED");
    res.detail = os.str();
    return res;
}

// ---------------------------------------------------------------- 5
CritResult criterion_stabbing() {
    SplitMix64 rng(501);
    bool optimal = true, witness_ok = true;
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 1 + static_cast<int>(rng.below(8));
        std::vector<RealInterval> in;
        for (int i = 0; i < n; ++i) {
            double lo = rng.uniform(0.0, 10.0);
            in.push_back({lo, lo + rng.uniform(0.0, 4.0)});
        }
        auto res = min_hitting_intervals(in);
        std::vector<std::uint64_t> masks;
        std::uint64_t full = (1ULL << n) - 1;
        for (int i = 0; i < n; ++i) {
            std::uint64_t m = 0;
            for (int j = 0; j < n; ++j)
                if (in[j].lo <= in[i].lo && in[i].lo <= in[j].hi)
                    m |= 1ULL << j;
            masks.push_back(m);
        }
        if (static_cast<int>(res.points.size()) !=
            exhaustive_cover(masks, full))
            optimal = false;
    }
    // arcs against brute force
    int done = 0;
    while (done < 1000) {
        int n = 1 + static_cast<int>(rng.below(8));
        double total = 7.0;
        double cut = rng.uniform(0.0, total);
        std::vector<CyclicArc> arcs;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            double start = rng.uniform(0.0, total);
            CyclicArc a{start,
                        std::fmod(start + rng.uniform(0.05, 2.5), total)};
            if (a.contains(cut, total)) {
                ok = false;
                break;
            }
            arcs.push_back(a);
        }
        if (!ok) continue;
        auto res = min_hitting_arcs(arcs, total, cut);
        std::vector<RealInterval> lin;
        for (const CyclicArc& a : arcs)
            lin.push_back({std::fmod(a.start - cut + total, total),
                           std::fmod(a.end - cut + total, total)});
        std::vector<std::uint64_t> masks;
        std::uint64_t full = (1ULL << arcs.size()) - 1;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            std::uint64_t m = 0;
            for (std::size_t j = 0; j < lin.size(); ++j)
                if (lin[j].lo <= lin[i].lo && lin[i].lo <= lin[j].hi)
                    m |= 1ULL << j;
            masks.push_back(m);
        }
        if (static_cast<int>(res.points.size()) !=
            exhaustive_cover(masks, full))
            optimal = false;
        ++done;
    }
    // witness disjointness at scale
    {
        std::vector<RealInterval> in;
        for (int i = 0; i < 10000; ++i) {
            double lo = rng.uniform(0.0, 500.0);
            in.push_back({lo, lo + rng.uniform(0.0, 3.0)});
        }
        auto res = min_hitting_intervals(in);
        if (res.points.size() != res.witness.size()) witness_ok = false;
        for (std::size_t i = 0; i + 1 < res.witness.size() && witness_ok;
             ++i) {
            const RealInterval& a = in[res.witness[i]];
            for (std::size_t j = i + 1; j < res.witness.size(); ++j) {
                const RealInterval& b = in[res.witness[j]];
                if (!(a.hi < b.lo || b.hi < a.lo)) witness_ok = false;
            }
        }
        for (const RealInterval& iv : in) {
            bool hit = false;
            for (double p : res.points)
                if (iv.lo <= p && p <= iv.hi) {
                    hit = true;
                    break;
                }
            if (!hit) witness_ok = false;
        }
    }
    CritResult res;
    res.pass = optimal && witness_ok;
    res.detail = std::string("greedy optimal: ") + (optimal ? "yes" : "NO") +
                 ", witness certificates: " + (witness_ok ? "yes" : "NO");
    return res;
}

// ---------------------------------------------------------------- 6
CritResult criterion_covers() {
    SplitMix64 rng(601);
    long violations = 0;
    long samples = 0;
    const int per_capsule = 2000;  // 100 capsules -> 2e5 per construction
    for (int cap_idx = 0; cap_idx < 100; ++cap_idx) {
        double r = rng.uniform(0.3, 1.5);
        double half;
        switch (cap_idx % 3) {  // span all three half-length regimes
            case 0: half = rng.uniform(0.05, std::sqrt(2.0)) * r; break;
            case 1: half = rng.uniform(std::sqrt(2.0), 2.0) * r; break;
            default: half = rng.uniform(2.0, 5.0) * r; break;
        }
        double ang = rng.uniform(0.0, 2.0 * kPi);
        Point c{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        Point d{std::cos(ang), std::sin(ang)};
        Capsule cap{{c - d * half, c + d * half}, r};
        double tol = r * (1.0 + 1e-9);

        // 7-cover of the doubled disk
        auto seven = seven_cover(c, r, rng.uniform(0.0, kPi));
        for (int i = 0; i < per_capsule; ++i) {
            double a = rng.uniform(0.0, 2.0 * kPi);
            double rad = 2.0 * r * std::sqrt(rng.uniform());
            Point p = c + Point{std::cos(a), std::sin(a)} * rad;
            double best = 1e300;
            for (const Point& q : seven) best = std::min(best, dist(p, q));
            ++samples;
            if (best > tol) ++violations;
        }
        // 4-cover of the sqrt(2) disk
        auto four = four_cover(c, r, ang);
        for (int i = 0; i < per_capsule; ++i) {
            double a = rng.uniform(0.0, 2.0 * kPi);
            double rad = std::sqrt(2.0) * r * std::sqrt(rng.uniform());
            Point p = c + Point{std::cos(a), std::sin(a)} * rad;
            double best = 1e300;
            for (const Point& q : four) best = std::min(best, dist(p, q));
            ++samples;
            if (best > tol) ++violations;
        }
        // frame coverage: boundary for short capsules, capsule minus the
        // diametral disk for long ones
        auto frame = u_points(cap);
        double total = boundary_length(cap);
        Point mid = cap.seg.midpoint();
        for (int i = 0; i < per_capsule; ++i) {
            Point p;
            if (half <= r) {
                p = boundary_point(cap, rng.uniform(0.0, total));
            } else {
                // rejection sample the capsule minus the diametral disk
                double s = rng.uniform(-r, 2.0 * half + r);
                double off = rng.uniform(-r, r);
                p = cap.seg.a + d * s + d.perp() * off;
                if (dist_point_segment(p, cap.seg) > r) continue;
                if (dist(p, mid) <= half) continue;
            }
            double best = 1e300;
            for (const Point& q : frame) best = std::min(best, dist(p, q));
            ++samples;
            if (best > tol) ++violations;
        }
        // 18-point scaffold covers the doubled reach minus the inner disk
        auto u0 = u0_points(cap);
        for (int i = 0; i < per_capsule; ++i) {
            double s = rng.uniform(-2.0 * r, 2.0 * half + 2.0 * r);
            double off = rng.uniform(-2.0 * r, 2.0 * r);
            Point p = cap.seg.a + d * s + d.perp() * off;
            if (dist_point_segment(p, cap.seg) > 2.0 * r) continue;
            if (dist(p, mid) < half) continue;
            double best = 1e300;
            for (const Point& q : u0) best = std::min(best, dist(p, q));
            ++samples;
            if (best > tol) ++violations;
        }
    }
    CritResult res;
    res.pass = violations == 0;
    std::ostringstream os;
    os << samples << " samples, " << violations << " outside the tolerance";
    res.detail = os.str();
    return res;
}

// ---------------------------------------------------------------- 7
CritResult criterion_reweighting() {
    bool contract_ok = true, growth_ok = true, scaling_ok = true;
    int accepting_runs = 0;
    std::mutex mu;
    parallel_for(60, [&](std::size_t i) {
        GraphClass cls = kClasses[i % 6];
        if (cls == GraphClass::Gabriel) cls = GraphClass::General;
        GenConfig cfg;
        cfg.seed = 70000 + i;
        cfg.n = gen_n_for(cls, 10 + static_cast<int>(i % 25));
        PlaneGraphInstance inst;
        try {
            inst = robust_generate(cls, cfg);
        } catch (const Error&) {
            return;
        }
        auto prep = prepare(inst);
        if (prep.active.empty()) return;
        std::vector<int> yd(prep.cands.size());
        for (std::size_t k = 0; k < yd.size(); ++k)
            yd[k] = static_cast<int>(k);
        PapParams p = PapParams::from_nu(6.0);
        long cap = static_cast<long>(
            std::min(prep.active.size(), prep.cands.size()));
        bool c_ok = true, g_ok = true, s_ok = true;
        int accepted = 0;
        for (long k = 1; k <= cap; k = std::min(2 * k, cap)) {
            std::vector<double> w1, w2;
            auto a = iterative_reweighting(prep.index, yd, prep.active, k, p,
                                           w1, 1.0);
            auto b = iterative_reweighting(prep.index, yd, prep.active, k, p,
                                           w2, 1000.0);
            if (a.success != b.success || a.s_final != b.s_final ||
                a.rounds != b.rounds || a.total_updates != b.total_updates)
                s_ok = false;
            if (a.success) {
                ++accepted;
                double total = 0.0;
                for (int y : yd) total += w1[y];
                for (int e : prep.active)
                    if (!(weight_of(e, prep.index, w1) > a.eps0 * total))
                        c_ok = false;
                double bound =
                    2.0 * p.lambda() * static_cast<double>(k) *
                        std::log(static_cast<double>(yd.size()) /
                                 static_cast<double>(k)) /
                        (p.lambda1 * p.kappa()) +
                    std::ceil(p.mu * static_cast<double>(k));
                if (static_cast<double>(a.total_updates) > bound)
                    g_ok = false;
                break;
            }
            if (k == cap) break;
        }
        std::lock_guard<std::mutex> lock(mu);
        contract_ok &= c_ok;
        growth_ok &= g_ok;
        scaling_ok &= s_ok;
        accepting_runs += accepted;
    });
    CritResult res;
    res.pass = contract_ok && growth_ok && scaling_ok && accepting_runs > 30;
    std::ostringstream os;
    os << accepting_runs << " accepting runs; heaviness "
       << (contract_ok ? "ok" : "VIOLATED") << ", update bound "
       << (growth_ok ? "ok" : "VIOLATED") << ", scale invariance "
       << (scaling_ok ? "ok" : "VIOLATED");
    res.detail = os.str();
    return res;
}

// ---------------------------------------------------------------- 8
CritResult criterion_gabriel() {
    bool time_ok = true, verify_ok = true, shape_ok = true, oracle_ok = true;
    double worst_secs = 0.0;
    std::size_t biggest = 0;
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 670;  // about a thousand edges
        auto inst = gen_gabriel(cfg);
        biggest = std::max(biggest, inst.edges.size());
        auto t0 = std::chrono::steady_clock::now();
        auto sol = gabriel_solve(inst);
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        worst_secs = std::max(worst_secs, secs);
        if (secs >= 10.0) time_ok = false;
        if (!sol.verified) verify_ok = false;
        if (sol.points.size() != 18 * sol.independent_count)
            shape_ok = false;
    }
    int checked = 0;
    for (std::uint64_t seed = 100; seed < 200 && checked < 30; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 8;
        PlaneGraphInstance inst;
        try {
            inst = gen_gabriel(cfg);
        } catch (const Error&) {
            continue;
        }
        if (inst.edges.size() > 12) continue;
        auto sol = gabriel_solve(inst);
        auto oracle = exact_opt(inst);
        if (static_cast<int>(sol.independent_count) > oracle.value)
            oracle_ok = false;
        if (sol.points.size() != 18 * sol.independent_count)
            shape_ok = false;
        ++checked;
    }
    CritResult res;
    res.pass = time_ok && verify_ok && shape_ok && oracle_ok && checked >= 30;
    std::ostringstream os;
    os << "largest " << biggest << " edges in " << worst_secs
       << " s; verifier " << (verify_ok ? "ok" : "FAILED")
       << "; |family| <= OPT on " << checked << " small instances "
       << (oracle_ok ? "ok" : "VIOLATED");
    res.detail = os.str();
    return res;
}

// ---------------------------------------------------------------- 9
CritResult criterion_finder_bounds() {
    long checked = 0, violations = 0;
    long delaunay_buckets = 0, delaunay_fallbacks = 0;
    for (const BucketRecord& rec : g_buckets) {
        ++checked;
        double bound =
            bucket_bound(rec.cls, rec.delta_i, rec.stats.general_fallback);
        if (static_cast<double>(rec.stats.output_size) > bound + 1e-9)
            ++violations;
        if (rec.cls == GraphClass::Delaunay) {
            ++delaunay_buckets;
            if (rec.stats.general_fallback) ++delaunay_fallbacks;
        }
    }
    double rate = delaunay_buckets
                      ? static_cast<double>(delaunay_fallbacks) /
                            static_cast<double>(delaunay_buckets)
                      : 0.0;
    CritResult res;
    res.pass = checked > 0 && violations == 0 && rate < 0.05;
    std::ostringstream os;
    os << checked << " buckets, " << violations
       << " size-bound violations; empty-disk fallback rate " << rate * 100.0
       << "% over " << delaunay_buckets << " buckets";
    res.detail = os.str();
    return res;
}

// --------------------------------------------------------------- 10
CritResult criterion_oracle_crosscheck() {
    int done = 0;
    bool ok = true;
    std::uint64_t seed = 90000;
    while (done < 200 && seed < 91500) {
        GenConfig cfg;
        cfg.seed = seed++;
        cfg.n = 2 + static_cast<int>(seed % 3);
        cfg.r_fraction = 0.5;
        PlaneGraphInstance inst;
        try {
            inst = gen_segments(cfg);
        } catch (const Error&) {
            continue;
        }
        auto prep = prepare(inst);
        if (prep.cands.size() > 18 || prep.active.empty()) continue;
        std::vector<std::uint64_t> masks;
        for (std::size_t y = 0; y < prep.cands.size(); ++y) {
            std::uint64_t m = 0;
            for (std::size_t a = 0; a < prep.active.size(); ++a) {
                const auto& list =
                    prep.index.capsule_to_candidates[prep.active[a]];
                if (std::find(list.begin(), list.end(),
                              static_cast<int>(y)) != list.end())
                    m |= 1ULL << a;
            }
            masks.push_back(m);
        }
        std::uint64_t full = (1ULL << prep.active.size()) - 1;
        if (exact_opt(prep).active_value != exhaustive_cover(masks, full))
            ok = false;
        ++done;
    }
    CritResult res;
    res.pass = ok && done >= 200;
    std::ostringstream os;
    os << done << " instances cross-checked, "
       << (ok ? "all equal" : "MISMATCH");
    res.detail = os.str();
    return res;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        std::function<CritResult()> run;
    };
    const Entry entries[] = {
        {1, "hitting correctness on 3000 seeded instances",
         criterion_hitting},
        {2, "approximation factor vs the exact oracle", criterion_factors},
        {3, "weighted net property and size bound", criterion_net_property},
        {4, "independent family overlap, maximality, cardinality",
         criterion_independence},
        {5, "interval and arc stabbing optimality", criterion_stabbing},
        {6, "cover constructions against sampled inclusions",
         criterion_covers},
        {7, "reweighting contracts", criterion_reweighting},
        {8, "direct gabriel path", criterion_gabriel},
        {9, "per-bucket finder size bounds and fallback rate",
         criterion_finder_bounds},
        {10, "branch and bound vs exhaustive enumeration",
         criterion_oracle_crosscheck},
    };
    bool all = true;
    for (const Entry& e : entries) {
        CritResult res;
        try {
            res = e.run();
        } catch (const std::exception& ex) {
            res.pass = false;
            res.detail = std::string("exception: ") + ex.what();
        }
        all &= res.pass;
        std::cout << (res.pass ? "PASS" : "FAIL") << " criterion " << e.id
                  << ": " << e.label << " (" << res.detail << ")\n"
                  << std::flush;
    }
    std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED")
              << "\n";
    return all ? 0 : 1;
}
