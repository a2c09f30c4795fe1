#include "segstab/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace segstab {

namespace {

struct Column {
    std::uint64_t mask = 0;
    int id = -1;  // candidate id, lowest among equals
};

struct Search {
    std::vector<Column> cols;
    int best = 0;
    std::vector<int> best_pick;  // indices into cols
    std::uint64_t full = 0;

    int max_cover(std::uint64_t uncovered, const std::vector<int>& pool)
        const {
        int mc = 0;
        for (int c : pool)
            mc = std::max(mc,
                          std::popcount(cols[c].mask & uncovered));
        return mc;
    }

    void dfs(std::uint64_t uncovered, std::vector<int> pool,
             std::vector<int>& picked) {
        if (uncovered == 0) {
            if (static_cast<int>(picked.size()) < best) {
                best = static_cast<int>(picked.size());
                best_pick = picked;
            }
            return;
        }
        // prune columns that no longer cover anything
        pool.erase(std::remove_if(pool.begin(), pool.end(),
                                  [&](int c) {
                                      return (cols[c].mask & uncovered) == 0;
                                  }),
                   pool.end());
        if (pool.empty()) return;
        int mc = max_cover(uncovered, pool);
        int lb = (std::popcount(uncovered) + mc - 1) / mc;
        if (static_cast<int>(picked.size()) + lb >= best) return;

        // unit propagation: a capsule covered by a single pool column
        std::uint64_t rest = uncovered;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            int only = -1, cnt = 0;
            for (int c : pool) {
                if (cols[c].mask >> bit & 1) {
                    ++cnt;
                    only = c;
                    if (cnt > 1) break;
                }
            }
            if (cnt == 0) return;  // infeasible branch
            if (cnt == 1) {
                picked.push_back(only);
                dfs(uncovered & ~cols[only].mask, pool, picked);
                picked.pop_back();
                return;
            }
        }

        // branch on the column covering the most uncovered capsules
        int pick = -1, cover = -1;
        for (int c : pool) {
            int cv = std::popcount(cols[c].mask & uncovered);
            if (cv > cover) {
                cover = cv;
                pick = c;
            }
        }
        picked.push_back(pick);
        dfs(uncovered & ~cols[pick].mask, pool, picked);
        picked.pop_back();

        std::vector<int> rest_pool;
        rest_pool.reserve(pool.size() - 1);
        for (int c : pool)
            if (c != pick) rest_pool.push_back(c);
        dfs(uncovered, std::move(rest_pool), picked);
    }
};

}  // namespace

OracleResult exact_opt(const PreparedInstance& prep, int max_active) {
    if (static_cast<int>(prep.active.size()) > max_active)
        throw Error("exact_opt: active edge count exceeds the size guard");
    OracleResult res;
    res.value = static_cast<int>(prep.isolated.size());
    res.points = prep.forced_points;
    if (prep.active.empty()) return res;
    if (prep.active.size() > 63)
        throw Error("exact_opt: more than 63 active capsules");

    std::vector<int> bit_of(prep.index.capsule_to_candidates.size(), -1);
    for (std::size_t i = 0; i < prep.active.size(); ++i)
        bit_of[prep.active[i]] = static_cast<int>(i);

    // column per distinct coverage mask, keeping the lowest candidate id
    std::vector<std::uint64_t> mask_of(prep.cands.size(), 0);
    for (int e : prep.active)
        for (int y : prep.index.capsule_to_candidates[e])
            mask_of[y] |= 1ULL << bit_of[e];

    Search sr;
    for (std::size_t y = 0; y < mask_of.size(); ++y) {
        if (mask_of[y] == 0) continue;
        bool dup = false;
        for (Column& c : sr.cols)
            if (c.mask == mask_of[y]) {
                dup = true;
                break;
            }
        if (!dup) sr.cols.push_back({mask_of[y], static_cast<int>(y)});
    }
    // dominance: drop columns whose mask is contained in another
    std::vector<Column> kept;
    for (std::size_t i = 0; i < sr.cols.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sr.cols.size(); ++j) {
            if (i == j) continue;
            if ((sr.cols[i].mask & ~sr.cols[j].mask) == 0 &&
                sr.cols[i].mask != sr.cols[j].mask) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(sr.cols[i]);
    }
    sr.cols = std::move(kept);
    sr.full = prep.active.size() == 64
                  ? ~0ULL
                  : (1ULL << prep.active.size()) - 1;

    std::uint64_t covered = 0;
    for (const Column& c : sr.cols) covered |= c.mask;
    if (covered != sr.full)
        throw Error("exact_opt: an active capsule has no candidate");

    // greedy upper bound
    std::vector<int> pool(sr.cols.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        pool[i] = static_cast<int>(i);
    {
        std::uint64_t uncovered = sr.full;
        std::vector<int> pick;
        while (uncovered) {
            int bestc = -1, cover = -1;
            for (int c : pool) {
                int cv = std::popcount(sr.cols[c].mask & uncovered);
                if (cv > cover) {
                    cover = cv;
                    bestc = c;
                }
            }
            pick.push_back(bestc);
            uncovered &= ~sr.cols[bestc].mask;
        }
        sr.best = static_cast<int>(pick.size());
        sr.best_pick = pick;
    }

    std::vector<int> picked;
    sr.dfs(sr.full, pool, picked);

    res.active_value = sr.best;
    res.value += sr.best;
    for (int c : sr.best_pick)
        res.points.push_back(prep.cands.points[sr.cols[c].id]);
    return res;
}

OracleResult exact_opt(const PlaneGraphInstance& inst, int max_active) {
    PreparedInstance prep = prepare(inst);
    return exact_opt(prep, max_active);
}

VerifyReport verify_hitting(const PlaneGraphInstance& inst,
                            const std::vector<Point>& points) {
    VerifyReport rep;
    rep.tolerance = inst.r + inst.eps_geom();
    rep.pass = true;
    std::size_t m = inst.edges.size();
    rep.nearest_point.assign(m, -1);
    rep.distance.assign(m, std::numeric_limits<double>::infinity());
    for (std::size_t e = 0; e < m; ++e) {
        Segment se = inst.segment(static_cast<int>(e));
        for (std::size_t i = 0; i < points.size(); ++i) {
            double d = dist_point_segment(points[i], se);
            if (d < rep.distance[e]) {
                rep.distance[e] = d;
                rep.nearest_point[e] = static_cast<int>(i);
            }
        }
        if (!(rep.distance[e] <= rep.tolerance)) {
            rep.pass = false;
            rep.failed_edges.push_back(static_cast<int>(e));
        }
        if (rep.distance[e] < std::numeric_limits<double>::infinity())
            rep.max_distance = std::max(rep.max_distance, rep.distance[e]);
    }
    return rep;
}

}  // namespace segstab
