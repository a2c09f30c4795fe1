#include "segstab/epsilon_net.h"

#include <algorithm>
#include <cmath>

namespace segstab {

double VariantConstants::theta0() const {
    if (c1 <= 0.0) return 0.0;
    return (alpha / beta) /
           (1.0 + std::sqrt(1.0 + c2 * alpha / (c1 * beta)));
}

double VariantConstants::net_size_bound() const {
    if (c1 <= 0.0) return c2 * tau / alpha;
    double root = std::sqrt(1.0 + c2 * alpha / (c1 * beta));
    return (1.0 + 1.0 / root) *
               (2.0 * c1 * tau * beta / (alpha * alpha) + c2 * tau / alpha) +
           c2 * tau / (alpha * root);
}

VariantConstants variant_constants(GraphClass cls) {
    VariantConstants vc;
    vc.cls = cls;
    vc.finder = finder_for_class(cls);
    FinderConstants fc = finder_constants(vc.finder);
    vc.c1 = fc.c1;
    vc.c2 = fc.c2;
    vc.alpha = 1.0;
    vc.tau = 1.0;
    switch (cls) {
        case GraphClass::Outerplane:
        case GraphClass::OuterplaneDelaunay:
            vc.beta = 2.0;
            break;
        default:
            vc.beta = 3.0;
            break;
    }
    return vc;
}

IndependentFamily build_independent(const PlaneGraphInstance& inst,
                                    const IncidenceIndex& index,
                                    const std::vector<int>& heavy,
                                    double delta, double total_weight,
                                    const std::vector<double>& w,
                                    bool prune_segment_meets) {
    IndependentFamily fam;
    double threshold = delta * total_weight;
    double reach = 2.0 * inst.r;
    for (int cand : heavy) {
        int assigned = -1;
        for (std::size_t i = 0; i < fam.pivots.size() && assigned < 0; ++i) {
            int piv = fam.pivots[i];
            if (prune_segment_meets &&
                classify_segment_meet(inst.segment(cand),
                                      inst.segment(piv)) !=
                    SegmentMeet::None) {
                assigned = static_cast<int>(i);
                break;
            }
            bool violates;
            if (delta == 0.0) {
                violates = dist_segment_segment(inst.segment(cand),
                                                inst.segment(piv)) <= reach;
            } else {
                violates =
                    weight_of_intersection(cand, piv, index, w) > threshold;
            }
            if (violates) assigned = static_cast<int>(i);
        }
        if (assigned < 0) {
            Bucket b;
            b.pivot = cand;
            b.members.push_back(cand);
            fam.pivots.push_back(cand);
            fam.buckets.push_back(std::move(b));
        } else {
            fam.buckets[assigned].members.push_back(cand);
        }
    }
    return fam;
}

EpsilonNetResult epsilon_net(const PlaneGraphInstance& inst,
                             const IncidenceIndex& index,
                             const std::vector<int>& yd,
                             const std::vector<int>& universe,
                             const std::vector<double>& w, double eps,
                             const VariantConstants& vc,
                             bool prune_segment_meets) {
    if (eps <= 0.0) throw Error("epsilon_net: eps must be positive");
    EpsilonNetResult res;
    res.eps = eps;
    if (eps >= 1.0) return res;

    // restrict weights to the surviving ground set
    std::vector<double> we(w.size(), 0.0);
    double total = 0.0;
    for (int y : yd) {
        we[y] = w[y];
        total += w[y];
    }
    res.total_weight = total;
    if (total <= 0.0) return res;

    std::vector<int> uni = universe;
    std::sort(uni.begin(), uni.end());
    for (int e : uni)
        if (weight_of(e, index, we) > eps * total) res.heavy.push_back(e);
    if (res.heavy.empty()) return res;

    res.delta = vc.theta0() * eps;
    res.family = build_independent(inst, index, res.heavy, res.delta, total,
                                   we, prune_segment_meets);

    FinderContext fctx{&inst, inst.eps_geom()};
    for (Bucket& b : res.family.buckets) {
        double wi = weight_of(b.pivot, index, we);
        b.delta_i = wi > 0.0 ? res.delta * total / wi : 0.0;
        FinderStats st;
        std::vector<Point> pts =
            run_finder(fctx, vc.finder, b.pivot, b.members, &st);
        res.finder_stats.push_back(st);
        res.points.insert(res.points.end(), pts.begin(), pts.end());
    }
    // drop exact duplicates only; a tolerance merge could push a point
    // outside the verifier margin of the member it was built for
    std::sort(res.points.begin(), res.points.end(),
              [](const Point& a, const Point& b) {
                  return a.x != b.x ? a.x < b.x : a.y < b.y;
              });
    res.points.erase(std::unique(res.points.begin(), res.points.end()),
                     res.points.end());
    return res;
}

}  // namespace segstab
