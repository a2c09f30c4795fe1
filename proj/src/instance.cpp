#include "segstab/instance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace segstab {

std::string to_string(GraphClass cls) {
    switch (cls) {
        case GraphClass::General: return "general";
        case GraphClass::RemoteEdges: return "remote";
        case GraphClass::Gabriel: return "gabriel";
        case GraphClass::Delaunay: return "delaunay";
        case GraphClass::OuterplaneDelaunay: return "outerplane_dt";
        case GraphClass::Outerplane: return "outerplane";
    }
    return "general";
}

GraphClass graph_class_from_string(const std::string& s) {
    if (s == "general") return GraphClass::General;
    if (s == "remote") return GraphClass::RemoteEdges;
    if (s == "gabriel") return GraphClass::Gabriel;
    if (s == "delaunay") return GraphClass::Delaunay;
    if (s == "outerplane_dt") return GraphClass::OuterplaneDelaunay;
    if (s == "outerplane") return GraphClass::Outerplane;
    throw Error("unknown graph class: " + s);
}

double PlaneGraphInstance::diameter() const {
    if (vertices.empty()) return 0.0;
    double xmin = vertices[0].x, xmax = xmin;
    double ymin = vertices[0].y, ymax = ymin;
    for (const Point& p : vertices) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

std::string ValidationReport::message() const {
    if (ok) return "ok";
    std::ostringstream os;
    os << "invalid instance:";
    for (auto [i, j] : crossing_pairs)
        os << " edges " << i << "," << j << " cross;";
    for (auto [i, j] : duplicate_pairs)
        os << " edges " << i << "," << j << " duplicate;";
    return os.str();
}

ValidationReport validate(const PlaneGraphInstance& inst) {
    ValidationReport rep;
    int n = static_cast<int>(inst.edges.size());
    int nv = static_cast<int>(inst.vertices.size());
    for (int i = 0; i < n; ++i) {
        auto [a, b] = inst.edges[i];
        if (a < 0 || a >= nv || b < 0 || b >= nv)
            throw ValidationError("edge endpoint index out of range");
    }
    std::map<std::pair<int, int>, int> seen;
    for (int i = 0; i < n; ++i) {
        auto [a, b] = inst.edges[i];
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        auto it = seen.find(key);
        if (it != seen.end()) {
            rep.ok = false;
            rep.duplicate_pairs.emplace_back(it->second, i);
        } else {
            seen.emplace(key, i);
        }
    }
    for (int i = 0; i < n; ++i) {
        Segment si = inst.segment(i);
        for (int j = i + 1; j < n; ++j) {
            if (classify_segment_meet(si, inst.segment(j)) ==
                SegmentMeet::Improper) {
                rep.ok = false;
                rep.crossing_pairs.emplace_back(i, j);
            }
        }
    }
    return rep;
}

SplitResult split_isolated(const PlaneGraphInstance& inst) {
    SplitResult out;
    int n = static_cast<int>(inst.edges.size());
    double reach = 2.0 * inst.r;
    for (int i = 0; i < n; ++i) {
        Segment si = inst.segment(i);
        bool isolated = true;
        for (int j = 0; j < n && isolated; ++j) {
            if (j == i) continue;
            if (dist_segment_segment(si, inst.segment(j)) <= reach)
                isolated = false;
        }
        if (isolated) {
            out.isolated.push_back(i);
            out.forced_points.push_back(si.midpoint());
        } else {
            out.active.push_back(i);
        }
    }
    return out;
}

namespace {

/// Incremental point dedup over a uniform grid keyed by cell.
class PointDedup {
public:
    PointDedup(double tol) : tol_(std::max(tol, 1e-300)) {}

    bool insert(const Point& p) {
        long long cx = static_cast<long long>(std::floor(p.x / tol_));
        long long cy = static_cast<long long>(std::floor(p.y / tol_));
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find({cx + dx, cy + dy});
                if (it == cells_.end()) continue;
                for (const Point& q : it->second)
                    if (dist(p, q) <= tol_) return false;
            }
        cells_[{cx, cy}].push_back(p);
        return true;
    }

private:
    double tol_;
    std::map<std::pair<long long, long long>, std::vector<Point>> cells_;
};

}  // namespace

CandidateSet build_candidates(const PlaneGraphInstance& inst,
                              const std::vector<int>& active) {
    CandidateSet out;
    double tol = inst.eps_geom();
    PointDedup dedup(tol);
    auto push = [&](const Point& p, CandidateKind kind) {
        if (dedup.insert(p)) {
            out.points.push_back(p);
            out.kinds.push_back(kind);
        }
    };
    for (int e : active)
        push(inst.segment(e).midpoint(), CandidateKind::Midpoint);

    double reach = 2.0 * inst.r;
    for (std::size_t i = 0; i < active.size(); ++i) {
        Capsule ci = inst.capsule(active[i]);
        for (std::size_t j = i + 1; j < active.size(); ++j) {
            Segment sj = inst.segment(active[j]);
            if (dist_segment_segment(ci.seg, sj) > reach) continue;
            for (const Point& p :
                 capsule_boundary_intersections(ci, inst.capsule(active[j])))
                push(p, CandidateKind::ArrangementVertex);
        }
    }
    return out;
}

IncidenceIndex build_incidence(const PlaneGraphInstance& inst,
                               const std::vector<int>& active,
                               const CandidateSet& cands) {
    IncidenceIndex idx;
    idx.membership_tol = 0.25 * inst.eps_geom();
    idx.capsule_to_candidates.assign(inst.edges.size(), {});
    idx.candidate_to_capsules.assign(cands.size(), {});

    int m = static_cast<int>(cands.size());
    std::vector<int> by_x(m);
    for (int i = 0; i < m; ++i) by_x[i] = i;
    std::sort(by_x.begin(), by_x.end(), [&](int a, int b) {
        return cands.points[a].x < cands.points[b].x;
    });
    std::vector<double> xs(m);
    for (int i = 0; i < m; ++i) xs[i] = cands.points[by_x[i]].x;

    double reach = inst.r + idx.membership_tol;
    for (int e : active) {
        Segment s = inst.segment(e);
        double xlo = std::min(s.a.x, s.b.x) - reach;
        double xhi = std::max(s.a.x, s.b.x) + reach;
        double ylo = std::min(s.a.y, s.b.y) - reach;
        double yhi = std::max(s.a.y, s.b.y) + reach;
        auto lo = std::lower_bound(xs.begin(), xs.end(), xlo) - xs.begin();
        auto hi = std::upper_bound(xs.begin(), xs.end(), xhi) - xs.begin();
        auto& list = idx.capsule_to_candidates[e];
        for (auto k = lo; k < hi; ++k) {
            int id = by_x[k];
            const Point& p = cands.points[id];
            if (p.y < ylo || p.y > yhi) continue;
            if (dist_point_segment(p, s) <= reach) list.push_back(id);
        }
        std::sort(list.begin(), list.end());
        for (int id : list) idx.candidate_to_capsules[id].push_back(e);
    }
    for (auto& v : idx.candidate_to_capsules) std::sort(v.begin(), v.end());
    return idx;
}

WeightMap WeightMap::uniform(std::size_t n, double value) {
    WeightMap wm;
    wm.w.assign(n, value);
    wm.total = value * static_cast<double>(n);
    return wm;
}

void WeightMap::renormalize() {
    if (total <= 0.0) throw Error("WeightMap: nonpositive total");
    double scale = 1.0 / total;
    double sum = 0.0;
    for (double& v : w) {
        v *= scale;
        sum += v;
    }
    total = sum;
}

double weight_of(int capsule_id, const IncidenceIndex& index,
                 const std::vector<double>& w) {
    if (capsule_id < 0 ||
        capsule_id >= static_cast<int>(index.capsule_to_candidates.size()))
        throw Error("weight_of: unknown capsule id");
    double sum = 0.0;
    for (int y : index.capsule_to_candidates[capsule_id]) sum += w[y];
    return sum;
}

double weight_of_intersection(int c1, int c2, const IncidenceIndex& index,
                              const std::vector<double>& w) {
    int n = static_cast<int>(index.capsule_to_candidates.size());
    if (c1 < 0 || c1 >= n || c2 < 0 || c2 >= n)
        throw Error("weight_of_intersection: unknown capsule id");
    const auto& a = index.capsule_to_candidates[c1];
    const auto& b = index.capsule_to_candidates[c2];
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            sum += w[a[i]];
            ++i;
            ++j;
        }
    }
    return sum;
}

PreparedInstance prepare(const PlaneGraphInstance& inst) {
    ValidationReport rep = validate(inst);
    if (!rep.ok) throw ValidationError(rep.message());
    if (inst.r <= 0.0) throw ValidationError("radius must be positive");

    PreparedInstance out;
    out.inst = &inst;
    SplitResult split = split_isolated(inst);
    out.active = std::move(split.active);
    out.isolated = std::move(split.isolated);
    out.forced_points = std::move(split.forced_points);
    out.eps_geom = inst.eps_geom();
    out.cands = build_candidates(inst, out.active);
    out.index = build_incidence(inst, out.active, out.cands);
    return out;
}

}  // namespace segstab
