#include "segstab/solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace segstab {

PapParams PapParams::from_nu(double nu) {
    if (nu <= 0.0) throw Error("nu must be positive");
    PapParams p;
    p.nu = nu;
    p.mu = 1.0;
    p.eta = nu / 300.0;
    p.lambda1 = nu / 600.0;
    p.delta = nu / 600.0;
    return p;
}

void PapParams::check() const {
    if (!(mu > 0.0 && eta > 0.0 && lambda1 > 0.0 && delta > 0.0))
        throw Error("reweighting parameters must be positive");
    if (!(kappa() > 0.0))
        throw Error("kappa = 2*eta - lambda*lambda1 must be positive");
}

ReweightOutcome iterative_reweighting(const IncidenceIndex& index,
                                      const std::vector<int>& yd,
                                      const std::vector<int>& rd, long k,
                                      const PapParams& p,
                                      std::vector<double>& w,
                                      double init_weight) {
    p.check();
    if (k <= 0) throw Error("iterative_reweighting: k must be positive");
    if (rd.empty()) throw Error("iterative_reweighting: empty range family");
    if (yd.empty()) throw Error("iterative_reweighting: empty ground set");
    if (init_weight <= 0.0)
        throw Error("iterative_reweighting: nonpositive initial weight");

    const double lambda = p.lambda();
    const double l1 = p.lambda1;
    const double growth = 1.0 + l1;
    const std::size_t n_caps = index.capsule_to_candidates.size();
    const std::size_t n_pts = index.candidate_to_capsules.size();

    std::vector<char> in_y(n_pts, 0);
    for (int y : yd) in_y[y] = 1;
    std::vector<int> pos(n_caps, -1);
    std::vector<std::vector<int>> lists(rd.size());
    for (std::size_t i = 0; i < rd.size(); ++i) {
        pos[rd[i]] = static_cast<int>(i);
        for (int y : index.capsule_to_candidates[rd[i]])
            if (in_y[y]) lists[i].push_back(y);
    }

    w.assign(n_pts, 0.0);
    for (int y : yd) w[y] = init_weight;
    double total = init_weight * static_cast<double>(yd.size());
    std::vector<double> weight(rd.size());
    for (std::size_t i = 0; i < rd.size(); ++i)
        weight[i] = init_weight * static_cast<double>(lists[i].size());

    const long cap = static_cast<long>(
        std::ceil(p.mu * static_cast<double>(k)));
    const double budget_real =
        2.0 * lambda *
        std::log(static_cast<double>(yd.size()) / static_cast<double>(k)) /
        (p.mu * l1 * p.kappa());
    const long budget = static_cast<long>(std::ceil(budget_real));

    ReweightOutcome out;
    out.round_budget = budget;

    auto recompute = [&]() {
        total = 0.0;
        for (int y : yd) total += w[y];
        for (std::size_t i = 0; i < rd.size(); ++i) {
            double s = 0.0;
            for (int y : lists[i]) s += w[y];
            weight[i] = s;
        }
    };

    long t = 1;
    for (;;) {
        long s = 0;
        bool capped = false;
        for (std::size_t pi = 0; pi < rd.size(); ++pi) {
            if (weight[pi] > total / (lambda * static_cast<double>(k)))
                continue;
            double set_w = weight[pi];
            double factor = 1.0;
            long j = 0;
            while (set_w <= total / (lambda * static_cast<double>(k)) &&
                   s < cap) {
                ++s;
                ++j;
                ++out.total_updates;
                total += l1 * set_w;
                set_w *= growth;
                factor *= growth;
            }
            if (j > 0) {
                for (int y : lists[pi]) {
                    double old = w[y];
                    double nw = old * factor;
                    w[y] = nw;
                    double dw = nw - old;
                    for (int e2 : index.candidate_to_capsules[y]) {
                        int q = pos[e2];
                        if (q >= 0 && q != static_cast<int>(pi))
                            weight[q] += dw;
                    }
                }
                weight[pi] = set_w;
            }
            if (s >= cap) {
                capped = true;
                break;
            }
        }
        if (!capped) {
            out.success = true;
            out.s_final = s;
            out.rounds = t;
            out.eps0 =
                1.0 / (lambda * static_cast<double>(k) *
                       std::exp(l1 * static_cast<double>(s) /
                                (lambda * static_cast<double>(k))));
            return out;
        }
        if (t > budget) {
            out.success = false;
            out.rounds = t;
            return out;
        }
        ++t;
        if (total > 1e250) {
            double scale = 1.0 / total;
            for (int y : yd) w[y] *= scale;
            recompute();
        }
    }
}

namespace {

std::vector<Point> merge_points(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

void absorb_net_stats(const EpsilonNetResult& net, PapStats& st) {
    st.family_size += net.family.pivots.size();
    for (std::size_t i = 0; i < net.finder_stats.size(); ++i) {
        const FinderStats& fs = net.finder_stats[i];
        if (fs.general_fallback) ++st.finder_fallbacks;
        st.dichotomy_violations += fs.dichotomy_violations;
        st.finder_stats.push_back(fs);
        st.finder_delta_i.push_back(net.family.buckets[i].delta_i);
    }
}

}  // namespace

std::vector<Point> parametric_agarwal_pan(const PreparedInstance& prep,
                                          const PapParams& p,
                                          const VariantConstants& vc,
                                          PapStats* stats,
                                          bool prune_segment_meets) {
    p.check();
    PapStats local;
    PapStats& st = stats ? *stats : local;
    const PlaneGraphInstance& inst = *prep.inst;
    const IncidenceIndex& index = prep.index;

    std::vector<int> all_r = prep.active;
    std::sort(all_r.begin(), all_r.end());
    if (all_r.empty()) return {};
    std::vector<int> all_y(prep.cands.size());
    for (std::size_t i = 0; i < all_y.size(); ++i)
        all_y[i] = static_cast<int>(i);
    std::vector<double> ones(prep.cands.size(), 1.0);

    double hit_tol = inst.r + prep.eps_geom;
    long cap_k = static_cast<long>(
        std::min(all_r.size(), prep.cands.size()));
    long k = 1;
    long last_failed = 0;

    for (;;) {
        // preparatory unweighted net at 1/(delta*k), usually empty
        std::vector<Point> h1;
        double eps1 = 1.0 / (p.delta * static_cast<double>(k));
        if (eps1 < 1.0) {
            EpsilonNetResult net1 =
                epsilon_net(inst, index, all_y, all_r, ones, eps1, vc,
                            prune_segment_meets);
            h1 = net1.points;
            absorb_net_stats(net1, st);
        }
        std::vector<int> rd;
        for (int e : all_r) {
            Segment se = inst.segment(e);
            bool hit = false;
            for (const Point& q : h1)
                if (dist_point_segment(q, se) <= hit_tol) {
                    hit = true;
                    break;
                }
            if (!hit) rd.push_back(e);
        }
        if (rd.empty()) {
            st.k_final = k;
            st.h1_size = h1.size();
            return merge_points(std::move(h1));
        }
        std::vector<int> yd;
        for (int y : all_y) {
            const Point& c = prep.cands.points[y];
            bool stripped = false;
            for (const Point& q : h1)
                if (dist(c, q) <= prep.eps_geom) {
                    stripped = true;
                    break;
                }
            if (!stripped) yd.push_back(y);
        }
        if (yd.empty()) {
            // cannot happen while capsules keep their own midpoints, but
            // stay defensive about the stripping tolerance
            yd = all_y;
        }

        std::vector<double> w;
        ReweightOutcome oc = iterative_reweighting(index, yd, rd, k, p, w);
        ++st.reweight_runs;
        st.rounds += oc.rounds;
        st.total_updates += oc.total_updates;
        if (!oc.success) {
            last_failed = k;
            long next = std::min(2 * k, cap_k);
            if (next == k)
                throw Error(
                    "reweighting rejected k above the transversal size");
            k = next;
            continue;
        }

        // smallest accepting k' in (last_failed, k]
        long lo = last_failed + 1, hi = k;
        std::vector<double> w_best = w;
        ReweightOutcome best = oc;
        while (lo < hi) {
            long mid = lo + (hi - lo) / 2;
            ReweightOutcome oc2 =
                iterative_reweighting(index, yd, rd, mid, p, w);
            ++st.reweight_runs;
            st.rounds += oc2.rounds;
            st.total_updates += oc2.total_updates;
            if (oc2.success) {
                hi = mid;
                best = oc2;
                w_best = w;
            } else {
                lo = mid + 1;
            }
        }
        st.k_final = hi;
        st.eps_final = best.eps0;

        // every surviving capsule must stay heavy under the final weights;
        // shave the threshold below the observed minimum ratio so float
        // drift cannot drop one out of the net
        double total = 0.0;
        for (int y : yd) total += w_best[y];
        double min_ratio = std::numeric_limits<double>::infinity();
        for (int e : rd)
            min_ratio =
                std::min(min_ratio, weight_of(e, index, w_best) / total);
        st.net_contract_ok = min_ratio > best.eps0;
        double eps_used = std::min(best.eps0, min_ratio * 0.999999999);

        EpsilonNetResult net2 = epsilon_net(inst, index, yd, rd, w_best,
                                            eps_used, vc,
                                            prune_segment_meets);
        absorb_net_stats(net2, st);
        st.h1_size = h1.size();
        st.h2_size = net2.points.size();
        std::vector<Point> out = std::move(h1);
        out.insert(out.end(), net2.points.begin(), net2.points.end());
        return merge_points(std::move(out));
    }
}

namespace {

Solution finish_solution(const PlaneGraphInstance& inst, Solution sol,
                         std::chrono::steady_clock::time_point t0) {
    VerifyReport rep = verify_hitting(inst, sol.points);
    sol.verified = rep.pass;
    sol.witness.clear();
    for (std::size_t e = 0; e < inst.edges.size(); ++e)
        sol.witness.push_back({static_cast<int>(e), rep.nearest_point[e],
                               rep.distance[e]});
    sol.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return sol;
}

}  // namespace

Solution gabriel_solve(const PlaneGraphInstance& inst) {
    auto t0 = std::chrono::steady_clock::now();
    if (inst.cls != GraphClass::Gabriel)
        throw Error("gabriel_solve: instance class is not gabriel");
    ValidationReport rep = validate(inst);
    if (!rep.ok) throw ValidationError(rep.message());
    if (inst.r <= 0.0) throw ValidationError("radius must be positive");

    // diametral emptiness of every edge
    double slack = inst.eps_geom();
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        auto [i, j] = inst.edges[e];
        if (i == j) continue;
        Point mid = inst.segment(static_cast<int>(e)).midpoint();
        double half = 0.5 * inst.segment(static_cast<int>(e)).length();
        for (int v = 0; v < static_cast<int>(inst.vertices.size()); ++v) {
            if (v == i || v == j) continue;
            if (dist(inst.vertices[v], mid) < half - slack)
                throw ValidationError(
                    "gabriel_solve: diametral disk of an edge contains a "
                    "vertex");
        }
    }

    Solution sol;
    sol.variant = GraphClass::Gabriel;
    sol.active_count = inst.edges.size();

    // greedy maximal disjoint family over all capsules; an isolated
    // capsule simply becomes its own pivot
    std::size_t m = inst.edges.size();
    std::vector<std::vector<int>> adj(m);
    double reach = 2.0 * inst.r;
    for (std::size_t i = 0; i < m; ++i) {
        Segment si = inst.segment(static_cast<int>(i));
        for (std::size_t j = i + 1; j < m; ++j) {
            if (dist_segment_segment(si, inst.segment(static_cast<int>(j))) <=
                reach) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    std::vector<char> taken(m, 0);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < m; ++i) {
        if (taken[i]) continue;
        taken[i] = 1;
        for (int j : adj[i]) taken[j] = 1;
        ++sol.independent_count;
        Capsule cap = inst.capsule(static_cast<int>(i));
        if (cap.seg.length() == 0.0) {
            auto cov = seven_cover(cap.seg.a, inst.r);
            pts.insert(pts.end(), cov.begin(), cov.end());
        } else {
            auto u0 = u0_points(cap);
            pts.insert(pts.end(), u0.begin(), u0.end());
        }
    }
    sol.points = std::move(pts);
    return finish_solution(inst, std::move(sol), t0);
}

Solution solve(const PlaneGraphInstance& inst, double nu,
               const SolveOverrides& ov) {
    auto t0 = std::chrono::steady_clock::now();
    GraphClass effective = ov.has_variant ? ov.variant : inst.cls;
    if (effective == GraphClass::Gabriel) {
        Solution sol = gabriel_solve(inst);
        sol.nu = nu;
        return sol;
    }

    PreparedInstance prep = prepare(inst);
    Solution sol;
    sol.variant = effective;
    sol.nu = nu;
    sol.active_count = prep.active.size();
    sol.forced_count = prep.forced_points.size();
    sol.y0_size = prep.cands.size();

    std::vector<Point> pts;
    if (!prep.active.empty()) {
        PapParams p = PapParams::from_nu(nu);
        VariantConstants vc = variant_constants(effective);
        pts = parametric_agarwal_pan(prep, p, vc, &sol.pap,
                                     ov.prune_segment_meets);
    }
    pts.insert(pts.end(), prep.forced_points.begin(),
               prep.forced_points.end());
    sol.points = std::move(pts);
    return finish_solution(inst, std::move(sol), t0);
}

}  // namespace segstab
