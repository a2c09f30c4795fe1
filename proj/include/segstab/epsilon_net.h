#pragma once

#include <vector>

#include "segstab/finders.h"
#include "segstab/instance.h"

namespace segstab {

/// Structural parameters and finder constants for one graph class,
/// together with the derived overlap tuning and net-size coefficient.
struct VariantConstants {
    GraphClass cls = GraphClass::General;
    FinderVariant finder = FinderVariant::GeneralFinder;
    double alpha = 1.0;
    double beta = 3.0;
    double tau = 1.0;
    double c1 = 8.0;
    double c2 = 2.0;

    double theta0() const;
    /// Coefficient B with |net| <= B / eps.
    double net_size_bound() const;
};

VariantConstants variant_constants(GraphClass cls);

/// Maximal delta-independent pivots plus the disjoint buckets that
/// partition the heavy capsules.
struct IndependentFamily {
    std::vector<int> pivots;
    std::vector<Bucket> buckets;  // aligned with pivots
};

/// Greedy single pass in ascending id order.  A capsule joins the family
/// when its weighted overlap with every current pivot is at most
/// delta * total_weight; otherwise it joins the first violating pivot's
/// bucket.  delta == 0 switches the overlap test to geometric capsule
/// intersection.
IndependentFamily build_independent(const PlaneGraphInstance& inst,
                                    const IncidenceIndex& index,
                                    const std::vector<int>& heavy,
                                    double delta, double total_weight,
                                    const std::vector<double>& w,
                                    bool prune_segment_meets = false);

struct EpsilonNetResult {
    std::vector<Point> points;
    IndependentFamily family;
    std::vector<FinderStats> finder_stats;  // aligned with buckets
    double eps = 0.0;
    double delta = 0.0;
    double total_weight = 0.0;
    std::vector<int> heavy;  // capsules with w(N) > eps * total
};

/// Weighted epsilon net for the capsules in `universe` restricted to the
/// candidates in `yd`.  Returns an empty net for eps >= 1.
EpsilonNetResult epsilon_net(const PlaneGraphInstance& inst,
                             const IncidenceIndex& index,
                             const std::vector<int>& yd,
                             const std::vector<int>& universe,
                             const std::vector<double>& w, double eps,
                             const VariantConstants& vc,
                             bool prune_segment_meets = false);

}  // namespace segstab
