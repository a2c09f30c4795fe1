#pragma once

#include <optional>
#include <vector>

#include "segstab/instance.h"

namespace segstab {

enum class FinderVariant {
    GeneralFinder,
    StarFinder,
    GabrielFinder,
    DelaunayFinder,
    OuterplaneDTFinder,
};

/// Size-bound constants: |output| <= c1/delta_I + c2.
struct FinderConstants {
    double c1 = 0.0;
    double c2 = 0.0;
};

FinderConstants finder_constants(FinderVariant v);
FinderVariant finder_for_class(GraphClass cls);

/// Pivot capsule with the capsules assigned to it, pivot included.
struct Bucket {
    int pivot = -1;
    std::vector<int> members;
    double delta_i = 0.0;
};

struct FinderStats {
    std::size_t output_size = 0;
    int dichotomy_violations = 0;  // straddling clips handled by splitting
    bool general_fallback = false; // special finder fell back wholesale
    bool star_precondition_failed = false;
    char branch = '-';             // a/b/c for the proximity-graph finders
    // member edges behind the disjoint stabbing witnesses, one group per
    // stabbed 1-D family (projection side or boundary arcs)
    std::vector<std::vector<int>> witness_groups;
};

/// Shared inputs for one finder call.
struct FinderContext {
    const PlaneGraphInstance* inst = nullptr;
    double eps_geom = 0.0;

    double r() const { return inst->r; }
    /// Member filtering tolerance, equal to the verifier tolerance.
    double hit_tol() const { return eps_geom; }
    /// Arc extraction tolerance, kept below hit_tol so stabbing points
    /// remain inside the verifier tolerance.
    double arc_tol() const { return 0.5 * eps_geom; }
};

/// Carrier-line exits, halfplane classification, projection stabbing and
/// 4-point covers.  Hits every member; <= 8/delta_I + 2 points for
/// buckets satisfying the weight invariant.
std::vector<Point> finder_general(const FinderContext& ctx, int pivot,
                                  const std::vector<int>& members,
                                  FinderStats* stats = nullptr);

/// Boundary-arc stabbing behind the 6-point frame of the pivot.
/// Requires every surviving member to stay further than r from the pivot
/// segment; returns nullopt when that fails (callers fall back).
std::optional<std::vector<Point>> finder_star(const FinderContext& ctx,
                                              int pivot,
                                              const std::vector<int>& members,
                                              FinderStats* stats = nullptr);

/// Fixed 18-point hitter; valid whenever the edge set is a subgraph of a
/// Gabriel graph.  Bucket contents are irrelevant.
std::vector<Point> finder_gabriel(const FinderContext& ctx, int pivot,
                                  FinderStats* stats = nullptr);

/// Empty-disk based finder for Delaunay edge sets; <= 4/delta_I + 10.
std::vector<Point> finder_delaunay(const FinderContext& ctx, int pivot,
                                   const std::vector<int>& members,
                                   FinderStats* stats = nullptr);

/// Variant for outerplane Delaunay edge sets; <= 5/delta_I + 4.
std::vector<Point> finder_outerplane_dt(const FinderContext& ctx, int pivot,
                                        const std::vector<int>& members,
                                        FinderStats* stats = nullptr);

/// Dispatch by variant; star falls back to the general finder on
/// precondition failure.
std::vector<Point> run_finder(const FinderContext& ctx, FinderVariant v,
                              int pivot, const std::vector<int>& members,
                              FinderStats* stats = nullptr);

}  // namespace segstab
