#pragma once

#include <vector>

#include "segstab/instance.h"

namespace segstab {

/// Set-cover view of an instance: candidates cover the capsules whose
/// edges they hit.
struct CoverProblem {
    std::vector<int> universe;                 // capsule ids
    std::vector<int> candidates;               // candidate ids
    std::vector<std::vector<int>> coverage;    // candidate -> capsule ids
};

struct OracleResult {
    int value = 0;         // active optimum plus one per isolated capsule
    int active_value = 0;  // optimum of the active sub-instance alone
    std::vector<Point> points;
};

/// Exact minimum hitting set, by branch and bound over the candidate set
/// with dominance elimination and unit propagation.  Isolated capsules
/// contribute their midpoints.  Guarded: throws when the number of
/// active edges exceeds max_active.
OracleResult exact_opt(const PlaneGraphInstance& inst, int max_active = 14);

/// Same search on an already prepared instance.
OracleResult exact_opt(const PreparedInstance& prep, int max_active = 14);

struct VerifyReport {
    bool pass = false;
    double tolerance = 0.0;
    // per edge: index of the nearest point and its distance
    std::vector<int> nearest_point;
    std::vector<double> distance;
    std::vector<int> failed_edges;
    double max_distance = 0.0;
};

/// Checks that every edge lies within r + eps_geom of some point.
VerifyReport verify_hitting(const PlaneGraphInstance& inst,
                            const std::vector<Point>& points);

}  // namespace segstab
