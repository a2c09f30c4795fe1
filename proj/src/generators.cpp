#include "segstab/generators.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace segstab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double orient(const Point& a, const Point& b, const Point& c) {
    return (b - a).cross(c - a);
}

// d inside the circumcircle of CCW triangle (a,b,c); positive determinant.
bool in_circumcircle(const Point& a, const Point& b, const Point& c,
                     const Point& d) {
    long double adx = a.x - d.x, ady = a.y - d.y;
    long double bdx = b.x - d.x, bdy = b.y - d.y;
    long double cdx = c.x - d.x, cdy = c.y - d.y;
    long double ad = adx * adx + ady * ady;
    long double bd = bdx * bdx + bdy * bdy;
    long double cd = cdx * cdx + cdy * cdy;
    long double det = adx * (bdy * cd - bd * cdy) -
                      ady * (bdx * cd - bd * cdx) +
                      ad * (bdx * cdy - bdy * cdx);
    return det > 0.0L;
}

struct Tri {
    int a, b, c;
};

/// Incremental insertion with a super-triangle.
std::vector<Tri> bowyer_watson(const std::vector<Point>& input) {
    int n = static_cast<int>(input.size());
    std::vector<Point> pts = input;
    double xmin = pts[0].x, xmax = xmin, ymin = pts[0].y, ymax = ymin;
    for (const Point& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    Point mid{(xmin + xmax) / 2, (ymin + ymax) / 2};
    pts.push_back({mid.x - 40.0 * span, mid.y - 20.0 * span});
    pts.push_back({mid.x + 40.0 * span, mid.y - 20.0 * span});
    pts.push_back({mid.x, mid.y + 40.0 * span});

    std::vector<Tri> tris;
    {
        Tri s{n, n + 1, n + 2};
        if (orient(pts[s.a], pts[s.b], pts[s.c]) < 0) std::swap(s.b, s.c);
        tris.push_back(s);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Tri> keep;
        std::map<std::pair<int, int>, int> edge_count;
        auto add_edge = [&](int u, int v) {
            auto key = std::minmax(u, v);
            edge_count[{key.first, key.second}]++;
        };
        std::vector<Tri> bad;
        for (const Tri& t : tris) {
            if (in_circumcircle(pts[t.a], pts[t.b], pts[t.c], pts[i]))
                bad.push_back(t);
            else
                keep.push_back(t);
        }
        for (const Tri& t : bad) {
            add_edge(t.a, t.b);
            add_edge(t.b, t.c);
            add_edge(t.c, t.a);
        }
        for (const Tri& t : bad) {
            std::array<std::pair<int, int>, 3> es{
                std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
            for (auto [u, v] : es) {
                auto key = std::minmax(u, v);
                if (edge_count[{key.first, key.second}] != 1) continue;
                Tri nt{u, v, i};
                if (orient(pts[nt.a], pts[nt.b], pts[nt.c]) < 0)
                    std::swap(nt.b, nt.c);
                keep.push_back(nt);
            }
        }
        tris = std::move(keep);
    }
    std::vector<Tri> out;
    for (const Tri& t : tris)
        if (t.a < n && t.b < n && t.c < n) out.push_back(t);
    return out;
}

std::vector<std::pair<int, int>> triangulation_edges(
    const std::vector<Tri>& tris) {
    std::set<std::pair<int, int>> es;
    for (const Tri& t : tris) {
        es.insert(std::minmax(t.a, t.b));
        es.insert(std::minmax(t.b, t.c));
        es.insert(std::minmax(t.c, t.a));
    }
    return {es.begin(), es.end()};
}

double mean_edge_length(const PlaneGraphInstance& inst) {
    if (inst.edges.empty()) return 1.0;
    double sum = 0.0;
    for (std::size_t e = 0; e < inst.edges.size(); ++e)
        sum += inst.segment(static_cast<int>(e)).length();
    return sum / static_cast<double>(inst.edges.size());
}

void assign_radius(PlaneGraphInstance& inst, const GenConfig& cfg) {
    if (cfg.r_absolute)
        inst.r = cfg.r_value;
    else
        inst.r = cfg.r_fraction * mean_edge_length(inst);
    if (inst.r <= 0.0) throw Error("generator produced a nonpositive radius");
}

bool delaunay_edge_certified(const PlaneGraphInstance& inst, int e) {
    auto [i, j] = inst.edges[e];
    try {
        empty_disks_through_edge(inst.vertices[i], inst.vertices[j],
                                 inst.vertices);
    } catch (const NotEmptyDiskEdgeError&) {
        return false;
    }
    return true;
}

std::vector<Point> random_points(SplitMix64& rng, int n, double bbox) {
    std::vector<Point> pts(n);
    for (Point& p : pts) {
        p.x = rng.uniform(0.0, bbox);
        p.y = rng.uniform(0.0, bbox);
    }
    return pts;
}

PlaneGraphInstance triangulate_instance(const std::vector<Point>& pts,
                                        GraphClass cls) {
    PlaneGraphInstance inst;
    inst.vertices = pts;
    inst.edges = triangulation_edges(bowyer_watson(pts));
    inst.cls = cls;
    return inst;
}

}  // namespace

PlaneGraphInstance gen_delaunay(const GenConfig& cfg) {
    if (cfg.n < 3) throw Error("gen_delaunay: need at least 3 points");
    SplitMix64 rng(cfg.seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Point> pts = random_points(rng, cfg.n, cfg.bbox);
        PlaneGraphInstance inst =
            triangulate_instance(pts, GraphClass::Delaunay);
        bool ok = !inst.edges.empty();
        for (int e = 0; ok && e < static_cast<int>(inst.edges.size()); ++e)
            ok = delaunay_edge_certified(inst, e);
        if (ok && validate(inst).ok) {
            assign_radius(inst, cfg);
            return inst;
        }
    }
    throw Error("gen_delaunay: degeneracy persisted across retries");
}

PlaneGraphInstance gen_gabriel(const GenConfig& cfg) {
    if (cfg.n < 3) throw Error("gen_gabriel: need at least 3 points");
    SplitMix64 rng(cfg.seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Point> pts = random_points(rng, cfg.n, cfg.bbox);
        PlaneGraphInstance inst =
            triangulate_instance(pts, GraphClass::Gabriel);
        std::vector<std::pair<int, int>> keep;
        for (auto [i, j] : inst.edges) {
            Point mid = (pts[i] + pts[j]) * 0.5;
            double half = 0.5 * dist(pts[i], pts[j]);
            bool empty = true;
            for (int v = 0; v < cfg.n && empty; ++v) {
                if (v == i || v == j) continue;
                if (dist(pts[v], mid) < half) empty = false;
            }
            if (empty) keep.emplace_back(i, j);
        }
        inst.edges = std::move(keep);
        if (!inst.edges.empty() && validate(inst).ok) {
            assign_radius(inst, cfg);
            return inst;
        }
    }
    throw Error("gen_gabriel: degeneracy persisted across retries");
}

namespace {

std::vector<Point> convex_position_points(SplitMix64& rng, int n,
                                          double bbox) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> angles(n);
        for (double& a : angles) a = rng.uniform(0.0, 2.0 * kPi);
        std::sort(angles.begin(), angles.end());
        double min_gap = angles[0] + 2.0 * kPi - angles[n - 1];
        for (int i = 1; i < n; ++i)
            min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
        if (min_gap < 2.0 * kPi / (static_cast<double>(n) * n)) continue;
        // radial jitter well under the sagitta of the tightest gap keeps
        // the points in strictly convex position and off a common circle
        double jitter = std::min(0.002, 0.05 * min_gap * min_gap);
        double R = 0.45 * bbox;
        Point center{0.5 * bbox, 0.5 * bbox};
        std::vector<Point> pts(n);
        for (int i = 0; i < n; ++i) {
            double rr = R * (1.0 + jitter * 2.0 * (rng.uniform() - 0.5));
            pts[i] = center + Point{std::cos(angles[i]), std::sin(angles[i])} *
                                  rr;
        }
        bool convex = true;
        for (int i = 0; i < n && convex; ++i)
            if (orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) <= 0.0)
                convex = false;
        if (convex) return pts;
    }
    throw Error("convex position sampling failed");
}

}  // namespace

PlaneGraphInstance gen_outerplane_dt(const GenConfig& cfg) {
    if (cfg.n < 3) throw Error("gen_outerplane_dt: need at least 3 points");
    SplitMix64 rng(cfg.seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Point> pts = convex_position_points(rng, cfg.n, cfg.bbox);
        PlaneGraphInstance inst =
            triangulate_instance(pts, GraphClass::OuterplaneDelaunay);
        bool ok = !inst.edges.empty();
        for (int e = 0; ok && e < static_cast<int>(inst.edges.size()); ++e)
            ok = delaunay_edge_certified(inst, e);
        if (ok && validate(inst).ok) {
            assign_radius(inst, cfg);
            return inst;
        }
    }
    throw Error("gen_outerplane_dt: degeneracy persisted across retries");
}

PlaneGraphInstance gen_outerplane(const GenConfig& cfg) {
    GenConfig base = cfg;
    PlaneGraphInstance inst = gen_outerplane_dt(base);
    SplitMix64 rng(cfg.seed ^ 0xA5A5A5A5A5A5A5A5ULL);
    std::vector<std::pair<int, int>> keep;
    for (auto e : inst.edges)
        if (rng.uniform() < 0.7) keep.push_back(e);
    if (!keep.empty()) inst.edges = std::move(keep);
    inst.cls = GraphClass::Outerplane;
    if (!cfg.r_absolute) inst.r = cfg.r_fraction * mean_edge_length(inst);
    return inst;
}

PlaneGraphInstance gen_remote(const GenConfig& cfg) {
    if (cfg.n < 1) throw Error("gen_remote: need at least 1 edge");
    SplitMix64 rng(cfg.seed);
    int clusters = cfg.n;  // worst case one arm per cluster
    int grid = static_cast<int>(std::ceil(std::sqrt(clusters)));
    double cell = cfg.bbox / grid;
    double base = cell / 4.0;

    PlaneGraphInstance inst;
    inst.cls = GraphClass::RemoteEdges;
    int edges_left = cfg.n;
    for (int gy = 0; gy < grid && edges_left > 0; ++gy) {
        for (int gx = 0; gx < grid && edges_left > 0; ++gx) {
            Point center{(gx + 0.5) * cell + 0.2 * base * (rng.uniform() - 0.5),
                         (gy + 0.5) * cell +
                             0.2 * base * (rng.uniform() - 0.5)};
            int arms = 1 + static_cast<int>(rng.below(3));
            arms = std::min(arms, edges_left);
            std::vector<double> angles;
            for (int tries = 0; static_cast<int>(angles.size()) < arms &&
                                tries < 200;
                 ++tries) {
                double a = rng.uniform(0.0, 2.0 * kPi);
                bool ok = true;
                for (double b : angles) {
                    double d = std::fabs(std::remainder(a - b, 2.0 * kPi));
                    if (d < 0.3) ok = false;
                }
                if (ok) angles.push_back(a);
            }
            int c_idx = static_cast<int>(inst.vertices.size());
            inst.vertices.push_back(center);
            for (double a : angles) {
                double len = base * rng.uniform(0.5, 1.0);
                Point tip = center + Point{std::cos(a), std::sin(a)} * len;
                int t_idx = static_cast<int>(inst.vertices.size());
                inst.vertices.push_back(tip);
                inst.edges.emplace_back(c_idx, t_idx);
                --edges_left;
                if (edges_left == 0) break;
            }
        }
    }
    assign_radius(inst, cfg);

    // distances between edges of distinct clusters must exceed r
    for (std::size_t i = 0; i < inst.edges.size(); ++i)
        for (std::size_t j = i + 1; j < inst.edges.size(); ++j) {
            if (inst.edges[i].first == inst.edges[j].first) continue;
            double d = dist_segment_segment(inst.segment(static_cast<int>(i)),
                                            inst.segment(static_cast<int>(j)));
            if (d != 0.0 && d <= inst.r)
                throw Error("gen_remote: spacing invariant violated");
        }
    return inst;
}

PlaneGraphInstance gen_segments(const GenConfig& cfg) {
    if (cfg.n < 1) throw Error("gen_segments: need at least 1 segment");
    SplitMix64 rng(cfg.seed);
    double base = 0.5 * cfg.bbox / std::sqrt(static_cast<double>(cfg.n));

    PlaneGraphInstance inst;
    inst.cls = GraphClass::General;
    long budget = 400L * cfg.n;
    while (static_cast<int>(inst.edges.size()) < cfg.n && budget-- > 0) {
        Point c{rng.uniform(0.0, cfg.bbox), rng.uniform(0.0, cfg.bbox)};
        double ang = rng.uniform(0.0, 2.0 * kPi);
        double len = base * rng.uniform(0.5, 1.5);
        Point d{std::cos(ang), std::sin(ang)};
        Segment s{c - d * (0.5 * len), c + d * (0.5 * len)};
        bool ok = true;
        for (std::size_t e = 0; e < inst.edges.size() && ok; ++e)
            if (classify_segment_meet(s, inst.segment(static_cast<int>(e))) !=
                SegmentMeet::None)
                ok = false;
        if (!ok) continue;
        int a_idx = static_cast<int>(inst.vertices.size());
        inst.vertices.push_back(s.a);
        inst.vertices.push_back(s.b);
        inst.edges.emplace_back(a_idx, a_idx + 1);
    }
    if (static_cast<int>(inst.edges.size()) < cfg.n)
        throw Error("gen_segments: rejection budget exhausted");
    assign_radius(inst, cfg);
    return inst;
}

PlaneGraphInstance generate(GraphClass cls, const GenConfig& cfg) {
    switch (cls) {
        case GraphClass::General: return gen_segments(cfg);
        case GraphClass::RemoteEdges: return gen_remote(cfg);
        case GraphClass::Gabriel: return gen_gabriel(cfg);
        case GraphClass::Delaunay: return gen_delaunay(cfg);
        case GraphClass::OuterplaneDelaunay: return gen_outerplane_dt(cfg);
        case GraphClass::Outerplane: return gen_outerplane(cfg);
    }
    throw Error("generate: unknown class");
}

}  // namespace segstab
