#include "segstab/interval_hitting.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace segstab {

StabbingResult min_hitting_intervals(const std::vector<RealInterval>& in) {
    StabbingResult res;
    int n = static_cast<int>(in.size());
    if (n == 0) return res;
    for (const RealInterval& iv : in)
        if (!(iv.lo <= iv.hi))
            throw Error("min_hitting_intervals: interval with lo > hi");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (in[a].lo != in[b].lo) return in[a].lo < in[b].lo;
        if (in[a].hi != in[b].hi) return in[a].hi > in[b].hi;
        return a > b;  // smaller id survives the dominance sweep
    });

    // Drop intervals that contain another input interval.  Sweeping from
    // the right, an interval is dominated iff some interval with lo >= its
    // lo has hi <= its hi.
    std::vector<int> kept;
    double min_hi = std::numeric_limits<double>::infinity();
    for (int i = n - 1; i >= 0; --i) {
        int id = order[i];
        if (in[id].hi < min_hi) {
            kept.push_back(id);
            min_hi = in[id].hi;
        }
    }
    std::reverse(kept.begin(), kept.end());
    // kept is now strictly increasing in both lo and hi

    int j = static_cast<int>(kept.size()) - 1;
    while (j >= 0) {
        int id = kept[j];
        double pt = in[id].lo;
        res.points.push_back(pt);
        res.witness.push_back(id);
        while (j >= 0 && in[kept[j]].hi >= pt) --j;
    }
    std::reverse(res.points.begin(), res.points.end());
    std::reverse(res.witness.begin(), res.witness.end());
    return res;
}

StabbingResult min_hitting_arcs(const std::vector<CyclicArc>& arcs,
                                double total_length, double cut) {
    if (total_length <= 0.0)
        throw Error("min_hitting_arcs: nonpositive total length");
    auto rebase = [&](double t) {
        double v = std::fmod(t - cut, total_length);
        if (v < 0.0) v += total_length;
        return v;
    };
    std::vector<RealInterval> ivs;
    ivs.reserve(arcs.size());
    for (const CyclicArc& a : arcs) {
        if (a.contains(cut, total_length))
            throw Error("min_hitting_arcs: an arc contains the cut");
        double lo = rebase(a.start);
        double hi = rebase(a.end);
        if (hi < lo) throw Error("min_hitting_arcs: arc wraps across the cut");
        ivs.push_back({lo, hi});
    }
    StabbingResult lin = min_hitting_intervals(ivs);
    // each point sits exactly at its witness interval's lower end, so map
    // back through the original arc start to avoid rebase rounding
    for (std::size_t i = 0; i < lin.points.size(); ++i)
        lin.points[i] = arcs[lin.witness[i]].start;
    return lin;
}

}  // namespace segstab
