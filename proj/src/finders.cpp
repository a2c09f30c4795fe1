#include "segstab/finders.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "segstab/interval_hitting.h"

namespace segstab {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool point_hits(const Point& p, const Segment& e, double r, double tol) {
    return dist_point_segment(p, e) <= r + tol;
}

template <typename Range>
bool any_hits(const Range& pts, const Segment& e, double r, double tol) {
    for (const Point& p : pts)
        if (point_hits(p, e, r, tol)) return true;
    return false;
}

/// Closest point of `on` to `to`.
Point closest_point_on(const Segment& on, const Segment& to) {
    auto proj = [](const Point& p, const Segment& s) {
        Point d = s.b - s.a;
        double len2 = d.norm2();
        if (len2 == 0.0) return s.a;
        double t = std::clamp((p - s.a).dot(d) / len2, 0.0, 1.0);
        return s.a + d * t;
    };
    Point best = proj(to.a, on);
    double bd = dist_point_segment(best, to);
    Point q = proj(to.b, on);
    double d2 = dist_point_segment(q, to);
    if (d2 < bd) {
        best = q;
        bd = d2;
    }
    for (const Point& p : {on.a, on.b}) {
        double d3 = dist(p, proj(p, to));
        if (d3 < bd) {
            best = p;
            bd = d3;
        }
    }
    return best;
}

std::vector<Point> zero_length_hitter(const Point& x, double r) {
    auto cov = seven_cover(x, r);
    return {cov.begin(), cov.end()};
}

struct ProjectionSides {
    std::vector<RealInterval> intervals[2];
    std::vector<int> edges[2];
};

/// Clips the member segment to the 2r-reach of the pivot and classifies
/// the clip by halfplane.  Straddling clips (which cannot occur for
/// members missing both carrier exits of a valid instance) are split at
/// the carrier line and counted.
void add_member_projection(const Segment& eI, const Segment& se, double r,
                           double eps_geom, int edge, ProjectionSides& out,
                           FinderStats& st) {
    Point u = eI.direction();
    Point n = u.perp();
    double rho_z = 2.0 * r + 0.5 * eps_geom;
    Point zp[2];
    auto clip = capsule_clip_segment(eI, se, rho_z);
    if (clip) {
        zp[0] = clip->lo_point();
        zp[1] = clip->hi_point();
    } else {
        zp[0] = zp[1] = closest_point_on(se, eI);
    }
    double sa = n.dot(zp[0] - eI.a);
    double sb = n.dot(zp[1] - eI.a);

    auto push = [&](int side, const Point& p1, const Point& p2) {
        double t1 = u.dot(p1 - eI.a);
        double t2 = u.dot(p2 - eI.a);
        if (t1 > t2) std::swap(t1, t2);
        out.intervals[side].push_back({t1 - r, t2 + r});
        out.edges[side].push_back(edge);
    };

    double flat = 1e-12 * (1.0 + r);
    if (sa >= -flat && sb >= -flat) {
        push(0, zp[0], zp[1]);
    } else if (sa <= flat && sb <= flat) {
        push(1, zp[0], zp[1]);
    } else {
        ++st.dichotomy_violations;
        double t = sa / (sa - sb);  // carrier crossing along the clip
        Point pc = zp[0] + (zp[1] - zp[0]) * t;
        push(sa >= 0.0 ? 0 : 1, zp[0], pc);
        push(sb >= 0.0 ? 0 : 1, pc, zp[1]);
    }
}

/// Stabs the fattened projections on the offset line of each used side
/// and replaces every stabbing point by its 4-point cover.
void stab_and_cover(const Segment& eI, double r, const ProjectionSides& ps,
                    std::vector<Point>& out, FinderStats* st = nullptr) {
    Point u = eI.direction();
    Point n = u.perp();
    double axis = std::atan2(u.y, u.x);
    for (int side = 0; side < 2; ++side) {
        if (ps.intervals[side].empty()) continue;
        StabbingResult sr = min_hitting_intervals(ps.intervals[side]);
        Point offset = side == 0 ? n * r : n * -r;
        for (double t : sr.points) {
            Point x0 = eI.a + offset + u * t;
            for (const Point& p : four_cover(x0, r, axis)) out.push_back(p);
        }
        if (st) {
            std::vector<int> group;
            for (int w : sr.witness) group.push_back(ps.edges[side][w]);
            st->witness_groups.push_back(std::move(group));
        }
    }
}

struct ArcProblem {
    std::vector<CyclicArc> arcs;
    std::vector<int> edges;
    bool ok = true;
};

ArcProblem collect_arcs(const Capsule& capI, const PlaneGraphInstance& inst,
                        const std::vector<int>& members, double rho) {
    ArcProblem ap;
    for (int e : members) {
        auto arcs = capsule_boundary_within(capI, inst.segment(e), rho);
        if (arcs.size() != 1) {
            ap.ok = false;  // empty or disconnected trace on the boundary
            return ap;
        }
        ap.arcs.push_back(arcs[0]);
        ap.edges.push_back(e);
    }
    return ap;
}

/// Cut parameter in no arc, or nullopt when the arcs cover the boundary.
std::optional<double> find_cut(const std::vector<CyclicArc>& arcs,
                               double total,
                               const std::vector<double>& preferred) {
    auto free_of_arcs = [&](double t) {
        for (const CyclicArc& a : arcs)
            if (a.contains(t, total)) return false;
        return true;
    };
    for (double t : preferred)
        if (free_of_arcs(t)) return t;
    std::vector<double> ends;
    for (const CyclicArc& a : arcs) ends.push_back(a.end);
    std::sort(ends.begin(), ends.end());
    for (std::size_t i = 0; i < ends.size(); ++i) {
        double next = i + 1 < ends.size() ? ends[i + 1] : ends[0] + total;
        double mid = std::fmod(0.5 * (ends[i] + next), total);
        if (free_of_arcs(mid)) return mid;
    }
    return std::nullopt;
}

int side_of(const Point& p, const Segment& eI, double flat) {
    double s = eI.direction().perp().dot(p - eI.a);
    return s >= -flat ? 0 : 1;
}

}  // namespace

FinderConstants finder_constants(FinderVariant v) {
    switch (v) {
        case FinderVariant::GeneralFinder: return {8.0, 2.0};
        case FinderVariant::StarFinder: return {1.0, 6.0};
        case FinderVariant::GabrielFinder: return {0.0, 18.0};
        case FinderVariant::DelaunayFinder: return {4.0, 10.0};
        case FinderVariant::OuterplaneDTFinder: return {5.0, 4.0};
    }
    return {8.0, 2.0};
}

FinderVariant finder_for_class(GraphClass cls) {
    switch (cls) {
        case GraphClass::General: return FinderVariant::GeneralFinder;
        case GraphClass::RemoteEdges: return FinderVariant::StarFinder;
        case GraphClass::Gabriel: return FinderVariant::GabrielFinder;
        case GraphClass::Delaunay: return FinderVariant::DelaunayFinder;
        case GraphClass::OuterplaneDelaunay:
            return FinderVariant::OuterplaneDTFinder;
        case GraphClass::Outerplane: return FinderVariant::GeneralFinder;
    }
    return FinderVariant::GeneralFinder;
}

std::vector<Point> finder_general(const FinderContext& ctx, int pivot,
                                  const std::vector<int>& members,
                                  FinderStats* stats) {
    FinderStats local;
    FinderStats& st = stats ? *stats : local;
    const PlaneGraphInstance& inst = *ctx.inst;
    Segment eI = inst.segment(pivot);
    double r = ctx.r();
    if (eI.length() == 0.0) {
        auto out = zero_length_hitter(eI.a, r);
        st.output_size = out.size();
        return out;
    }
    Point u = eI.direction();
    Point v1 = eI.a - u * r;
    Point v2 = eI.b + u * r;
    std::vector<Point> out{v1, v2};

    ProjectionSides ps;
    double tol = ctx.hit_tol();
    for (int e : members) {
        if (e == pivot) continue;
        Segment se = inst.segment(e);
        if (point_hits(v1, se, r, tol) || point_hits(v2, se, r, tol))
            continue;
        add_member_projection(eI, se, r, ctx.eps_geom, e, ps, st);
    }
    stab_and_cover(eI, r, ps, out, &st);
    st.output_size = out.size();
    return out;
}

std::optional<std::vector<Point>> finder_star(const FinderContext& ctx,
                                              int pivot,
                                              const std::vector<int>& members,
                                              FinderStats* stats) {
    FinderStats local;
    FinderStats& st = stats ? *stats : local;
    const PlaneGraphInstance& inst = *ctx.inst;
    Capsule capI = inst.capsule(pivot);
    double r = ctx.r();
    if (capI.seg.length() == 0.0) {
        auto out = zero_length_hitter(capI.seg.a, r);
        st.output_size = out.size();
        return out;
    }
    auto frame = u_points(capI);
    std::vector<Point> out(frame.begin(), frame.end());

    double tol = ctx.hit_tol();
    std::vector<int> surviving;
    for (int e : members) {
        if (e == pivot) continue;
        Segment se = inst.segment(e);
        if (any_hits(frame, se, r, tol)) continue;
        if (dist_segment_segment(se, capI.seg) <= r + tol) {
            st.star_precondition_failed = true;
            return std::nullopt;
        }
        surviving.push_back(e);
    }
    if (!surviving.empty()) {
        ArcProblem ap =
            collect_arcs(capI, inst, surviving, r + ctx.arc_tol());
        if (!ap.ok) {
            st.star_precondition_failed = true;
            return std::nullopt;
        }
        double total = boundary_length(capI);
        double cut = carrier_exit_params(capI).second;  // survivors miss it
        StabbingResult sr;
        try {
            sr = min_hitting_arcs(ap.arcs, total, cut);
        } catch (const Error&) {
            st.star_precondition_failed = true;
            return std::nullopt;
        }
        for (double t : sr.points) out.push_back(boundary_point(capI, t));
        std::vector<int> group;
        for (int w : sr.witness) group.push_back(ap.edges[w]);
        st.witness_groups.push_back(std::move(group));
    }
    st.branch = '*';
    st.output_size = out.size();
    return out;
}

std::vector<Point> finder_gabriel(const FinderContext& ctx, int pivot,
                                  FinderStats* stats) {
    FinderStats local;
    FinderStats& st = stats ? *stats : local;
    Capsule capI = ctx.inst->capsule(pivot);
    if (capI.seg.length() == 0.0) {
        auto out = zero_length_hitter(capI.seg.a, ctx.r());
        st.output_size = out.size();
        return out;
    }
    auto pts = u0_points(capI);
    st.output_size = pts.size();
    return {pts.begin(), pts.end()};
}

namespace {

/// Samples the 2r-reach of the pivot on one side and checks that it is
/// covered by the side disk plus the side's scaffold disks.
bool delaunay_side_covered(const Segment& eI, double r, int side,
                           const Disk& empty_disk,
                           const std::vector<Point>& scaffold, double tol) {
    Point u = eI.direction();
    Point n = side == 0 ? u.perp() : u.perp() * -1.0;
    double len = eI.length();
    int nx = 200, ny = 50;
    for (int ix = 0; ix <= nx; ++ix) {
        double s = -2.0 * r + (len + 4.0 * r) * ix / nx;
        for (int iy = 0; iy <= ny; ++iy) {
            double d = 2.0 * r * iy / ny;
            Point p = eI.a + u * s + n * d;
            if (dist_point_segment(p, eI) > 2.0 * r) continue;
            if (empty_disk.contains(p, tol)) continue;
            bool hit = false;
            for (const Point& q : scaffold)
                if (dist(p, q) <= r + tol) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
    }
    return true;
}

/// Half-rectangle coverage used by the outerplane variant:
/// R_side minus the empty disk must lie under the 6-point frame disks.
bool outerplane_side_covered(const Segment& eI, double r, int side,
                             const Disk& empty_disk,
                             const std::array<Point, 6>& frame, double tol) {
    Point u = eI.direction();
    Point n = side == 0 ? u.perp() : u.perp() * -1.0;
    double len = eI.length();
    int nx = 200, ny = 50;
    for (int ix = 0; ix <= nx; ++ix) {
        double s = len * ix / nx;
        for (int iy = 0; iy <= ny; ++iy) {
            double d = r * iy / ny;
            Point p = eI.a + u * s + n * d;
            if (empty_disk.contains(p, tol)) continue;
            bool hit = false;
            for (const Point& q : frame)
                if (dist(p, q) <= r + tol) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
    }
    return true;
}

bool all_members_hit(const PlaneGraphInstance& inst,
                     const std::vector<int>& members,
                     const std::vector<Point>& pts, double r, double tol) {
    for (int e : members) {
        Segment se = inst.segment(e);
        bool hit = false;
        for (const Point& p : pts)
            if (point_hits(p, se, r, tol)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

std::vector<Point> finder_delaunay(const FinderContext& ctx, int pivot,
                                   const std::vector<int>& members,
                                   FinderStats* stats) {
    FinderStats local;
    FinderStats& st = stats ? *stats : local;
    const PlaneGraphInstance& inst = *ctx.inst;
    Capsule capI = inst.capsule(pivot);
    Segment eI = capI.seg;
    double r = ctx.r();
    double tol = ctx.hit_tol();
    if (eI.length() == 0.0) {
        auto out = zero_length_hitter(eI.a, r);
        st.output_size = out.size();
        return out;
    }
    auto u0 = u0_points(capI);

    std::vector<int> surviving;
    for (int e : members) {
        if (e == pivot) continue;
        if (!any_hits(u0, inst.segment(e), r, tol)) surviving.push_back(e);
    }
    if (surviving.empty()) {
        st.branch = 'a';
        st.output_size = u0.size();
        return {u0.begin(), u0.end()};
    }

    bool all_remote = true;
    for (int e : surviving)
        if (dist_segment_segment(inst.segment(e), eI) <= r + tol) {
            all_remote = false;
            break;
        }

    auto fallback = [&]() {
        st.general_fallback = true;
        return finder_general(ctx, pivot, members, stats ? &st : nullptr);
    };

    if (all_remote) {
        ArcProblem ap = collect_arcs(capI, inst, surviving, r + ctx.arc_tol());
        if (!ap.ok) return fallback();
        double total = boundary_length(capI);
        auto exits = carrier_exit_params(capI);
        auto cut = find_cut(ap.arcs, total, {exits.second, exits.first});
        if (!cut) return fallback();
        StabbingResult sr;
        try {
            sr = min_hitting_arcs(ap.arcs, total, *cut);
        } catch (const Error&) {
            return fallback();
        }
        std::vector<Point> out(u0.begin(), u0.end());
        for (double t : sr.points) out.push_back(boundary_point(capI, t));
        std::vector<int> group;
        for (int w : sr.witness) group.push_back(ap.edges[w]);
        st.witness_groups.push_back(std::move(group));
        st.branch = 'b';
        st.output_size = out.size();
        return out;
    }

    st.branch = 'c';
    auto sides = empty_disks_through_edge(eI.a, eI.b, inst.vertices);
    int prefer = sides.first.disk.radius >= sides.second.disk.radius ? 0 : 1;
    double flat = 1e-12 * (1.0 + r);

    for (int trial = 0; trial < 2; ++trial) {
        int i0 = trial == 0 ? prefer : 1 - prefer;
        const SideDisk& sd = i0 == 0 ? sides.first : sides.second;
        std::vector<Point> scaffold;  // the side's part of the 18 points
        for (const Point& q : u0) {
            int qs = side_of(q, eI, flat);
            double off = eI.direction().perp().dot(q - eI.a);
            bool on_line = std::abs(off) <= flat;
            if (qs == i0 || on_line) scaffold.push_back(q);
        }
        if (!delaunay_side_covered(eI, r, i0, sd.disk, scaffold, tol))
            continue;

        std::vector<Point> out = scaffold;
        ProjectionSides ps;
        st.witness_groups.clear();
        for (int e : members) {
            if (e == pivot) continue;
            Segment se = inst.segment(e);
            if (any_hits(scaffold, se, r, tol)) continue;
            add_member_projection(eI, se, r, ctx.eps_geom, e, ps, st);
        }
        // only the far side gets projection stabbing; near-side leftovers
        // mean the empty disk swallowed them and force the fallback
        int far = 1 - i0;
        if (!ps.intervals[i0].empty()) continue;
        ProjectionSides far_only;
        far_only.intervals[far] = ps.intervals[far];
        far_only.edges[far] = ps.edges[far];
        stab_and_cover(eI, r, far_only, out, &st);
        if (!all_members_hit(inst, members, out, r, tol)) continue;
        st.output_size = out.size();
        return out;
    }
    return fallback();
}

std::vector<Point> finder_outerplane_dt(const FinderContext& ctx, int pivot,
                                        const std::vector<int>& members,
                                        FinderStats* stats) {
    FinderStats local;
    FinderStats& st = stats ? *stats : local;
    const PlaneGraphInstance& inst = *ctx.inst;
    Capsule capI = inst.capsule(pivot);
    Segment eI = capI.seg;
    double r = ctx.r();
    double tol = ctx.hit_tol();
    if (eI.length() == 0.0) {
        auto out = zero_length_hitter(eI.a, r);
        st.output_size = out.size();
        return out;
    }
    auto frame = u_points(capI);

    std::vector<int> surviving;
    for (int e : members) {
        if (e == pivot) continue;
        if (!any_hits(frame, inst.segment(e), r, tol)) surviving.push_back(e);
    }
    if (surviving.empty()) {
        st.branch = 'a';
        st.output_size = frame.size();
        return {frame.begin(), frame.end()};
    }

    auto fallback = [&]() {
        st.general_fallback = true;
        return finder_general(ctx, pivot, members, stats ? &st : nullptr);
    };

    bool all_remote = true;
    for (int e : surviving)
        if (dist_segment_segment(inst.segment(e), eI) <= r + tol) {
            all_remote = false;
            break;
        }

    double total = boundary_length(capI);
    auto exits = carrier_exit_params(capI);

    if (all_remote) {
        ArcProblem ap = collect_arcs(capI, inst, surviving, r + ctx.arc_tol());
        if (!ap.ok) return fallback();
        StabbingResult sr;
        try {
            sr = min_hitting_arcs(ap.arcs, total, exits.second);
        } catch (const Error&) {
            return fallback();
        }
        std::vector<Point> out(frame.begin(), frame.end());
        for (double t : sr.points) out.push_back(boundary_point(capI, t));
        std::vector<int> group;
        for (int w : sr.witness) group.push_back(ap.edges[w]);
        st.witness_groups.push_back(std::move(group));
        st.branch = 'b';
        st.output_size = out.size();
        return out;
    }

    st.branch = 'c';
    auto sides = empty_disks_through_edge(eI.a, eI.b, inst.vertices);
    int prefer = sides.first.disk.radius >= sides.second.disk.radius ? 0 : 1;
    Point u = eI.direction();
    Point n = u.perp();

    for (int trial = 0; trial < 2; ++trial) {
        int i0 = trial == 0 ? prefer : 1 - prefer;
        const SideDisk& sd = i0 == 0 ? sides.first : sides.second;
        if (!outerplane_side_covered(eI, r, i0, sd.disk, frame, tol)) continue;

        // U(I) restricted to the closed halfplane of side i0: the two
        // carrier exits plus the two corners on that side.
        Point ni = i0 == 0 ? n : n * -1.0;
        std::vector<Point> out{eI.a - u * r, eI.b + u * r, eI.a + ni * r,
                               eI.b + ni * r};
        std::vector<Point> base = out;

        ProjectionSides ps;
        std::vector<int> near_side;
        bool bad = false;
        st.witness_groups.clear();
        for (int e : members) {
            if (e == pivot) continue;
            Segment se = inst.segment(e);
            if (any_hits(base, se, r, tol)) continue;
            ProjectionSides one;
            FinderStats tmp;
            add_member_projection(eI, se, r, ctx.eps_geom, e, one, tmp);
            if (tmp.dichotomy_violations > 0) {
                bad = true;
                break;
            }
            int far = 1 - i0;
            if (!one.intervals[far].empty()) {
                ps.intervals[far].push_back(one.intervals[far][0]);
                ps.edges[far].push_back(e);
            } else {
                near_side.push_back(e);
            }
        }
        if (bad) continue;
        stab_and_cover(eI, r, ps, out, &st);
        if (!near_side.empty()) {
            ArcProblem ap =
                collect_arcs(capI, inst, near_side, r + ctx.arc_tol());
            if (!ap.ok) continue;
            StabbingResult sr;
            try {
                // survivors miss both carrier exits, which are in the base
                sr = min_hitting_arcs(ap.arcs, total, exits.second);
            } catch (const Error&) {
                continue;
            }
            for (double t : sr.points) out.push_back(boundary_point(capI, t));
            std::vector<int> group;
            for (int w : sr.witness) group.push_back(ap.edges[w]);
            st.witness_groups.push_back(std::move(group));
        }
        if (!all_members_hit(inst, members, out, r, tol)) continue;
        st.output_size = out.size();
        return out;
    }
    return fallback();
}

std::vector<Point> run_finder(const FinderContext& ctx, FinderVariant v,
                              int pivot, const std::vector<int>& members,
                              FinderStats* stats) {
    FinderStats local;
    FinderStats& st = stats ? *stats : local;
    switch (v) {
        case FinderVariant::GeneralFinder:
            return finder_general(ctx, pivot, members, &st);
        case FinderVariant::StarFinder: {
            auto out = finder_star(ctx, pivot, members, &st);
            if (out) return *out;
            st.general_fallback = true;
            return finder_general(ctx, pivot, members, &st);
        }
        case FinderVariant::GabrielFinder:
            return finder_gabriel(ctx, pivot, &st);
        case FinderVariant::DelaunayFinder:
            return finder_delaunay(ctx, pivot, members, &st);
        case FinderVariant::OuterplaneDTFinder:
            return finder_outerplane_dt(ctx, pivot, members, &st);
    }
    return finder_general(ctx, pivot, members, &st);
}

}  // namespace segstab
