#pragma once

#include <vector>

#include "segstab/geometry.h"

namespace segstab {

/// Closed bounded interval on the real line.
struct RealInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Optimal stabbing together with its optimality certificate: the ids of
/// a pairwise-disjoint subfamily of the input, one per stabbing point.
struct StabbingResult {
    std::vector<double> points;  // ascending
    std::vector<int> witness;    // input ids, aligned with points
};

/// Minimum-cardinality stabbing of closed intervals.  Points are placed
/// exactly at interval lower ends; |points| == |witness|.
StabbingResult min_hitting_intervals(const std::vector<RealInterval>& in);

/// Stabbing of arcs on a cyclic parameter domain of the given length.
/// `cut` must lie in no arc; the cyclic problem is rebased there and
/// solved as a line problem.  Output points are cyclic parameters.
StabbingResult min_hitting_arcs(const std::vector<CyclicArc>& arcs,
                                double total_length, double cut);

}  // namespace segstab
