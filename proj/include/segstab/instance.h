#pragma once

#include <string>
#include <utility>
#include <vector>

#include "segstab/geometry.h"

namespace segstab {

enum class GraphClass {
    General,
    RemoteEdges,
    Gabriel,
    Delaunay,
    OuterplaneDelaunay,
    Outerplane,
};

std::string to_string(GraphClass cls);
GraphClass graph_class_from_string(const std::string& s);

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Plane straight-line graph with the stabbing radius.  A zero-length
/// edge [i,i] stands for an isolated vertex.
struct PlaneGraphInstance {
    std::vector<Point> vertices;
    std::vector<std::pair<int, int>> edges;
    double r = 0.0;
    GraphClass cls = GraphClass::General;

    Segment segment(int e) const {
        return {vertices[edges[e].first], vertices[edges[e].second]};
    }
    Capsule capsule(int e) const { return {segment(e), r}; }
    /// Bounding-box diagonal of the vertex set.
    double diameter() const;
    /// Outward containment tolerance: 1e-9 * (1 + diameter()).
    double eps_geom() const { return 1e-9 * (1.0 + diameter()); }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::pair<int, int>> crossing_pairs;
    std::vector<std::pair<int, int>> duplicate_pairs;
    std::string message() const;
};

/// Edges may meet only at shared endpoints; duplicates are rejected.
ValidationReport validate(const PlaneGraphInstance& inst);

struct SplitResult {
    std::vector<int> active;
    std::vector<int> isolated;
    std::vector<Point> forced_points;  // midpoints of the isolated edges
};

/// An edge is isolated when its capsule meets no other capsule, i.e. all
/// pairwise segment distances exceed 2r.
SplitResult split_isolated(const PlaneGraphInstance& inst);

enum class CandidateKind { ArrangementVertex, Midpoint };

struct CandidateSet {
    std::vector<Point> points;
    std::vector<CandidateKind> kinds;

    std::size_t size() const { return points.size(); }
};

/// Candidate hitter positions: all boundary-arrangement vertices of the
/// active capsules plus every active segment midpoint, deduplicated
/// within eps_geom.  Midpoints are inserted first and survive dedup.
CandidateSet build_candidates(const PlaneGraphInstance& inst,
                              const std::vector<int>& active);

/// Precomputed membership between candidates and active capsules.
/// Membership uses a quarter of the verifier tolerance so that points
/// derived from members (covers, stabbers) stay within the full one.
struct IncidenceIndex {
    std::vector<std::vector<int>> capsule_to_candidates;  // by edge id, sorted
    std::vector<std::vector<int>> candidate_to_capsules;  // sorted
    double membership_tol = 0.0;
};

IncidenceIndex build_incidence(const PlaneGraphInstance& inst,
                               const std::vector<int>& active,
                               const CandidateSet& cands);

/// Positive multiplicative weights over the candidate set.
struct WeightMap {
    std::vector<double> w;
    double total = 0.0;

    static WeightMap uniform(std::size_t n, double value = 1.0);
    /// Divide every weight by the current total and recompute the sum.
    void renormalize();
};

double weight_of(int capsule_id, const IncidenceIndex& index,
                 const std::vector<double>& w);
double weight_of_intersection(int c1, int c2, const IncidenceIndex& index,
                              const std::vector<double>& w);

/// Validates, splits off isolated capsules and builds the candidate set
/// and incidence for the active part.
struct PreparedInstance {
    const PlaneGraphInstance* inst = nullptr;
    std::vector<int> active;
    std::vector<int> isolated;
    std::vector<Point> forced_points;
    CandidateSet cands;
    IncidenceIndex index;
    double eps_geom = 0.0;
};

PreparedInstance prepare(const PlaneGraphInstance& inst);

}  // namespace segstab
