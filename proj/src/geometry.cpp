#include "segstab/geometry.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace segstab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

int orient_sign(const Point& a, const Point& b, const Point& c) {
    double v = (b - a).cross(c - a);
    return (v > 0.0) - (v < 0.0);
}

bool in_box(const Point& p, const Point& a, const Point& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// One piece of the canonical CCW boundary walk.
struct Piece {
    bool is_arc = false;
    double t0 = 0.0, t1 = 0.0;  // global parameter range
    Segment seg;                // when !is_arc, oriented along increasing t
    Point center;               // when is_arc
    double ang0 = 0.0, ang1 = 0.0;  // CCW, ang1 > ang0
};

std::vector<Piece> boundary_pieces(const Capsule& c) {
    double r = c.r;
    double len = c.seg.length();
    std::vector<Piece> ps;
    if (len == 0.0) {
        Piece p;
        p.is_arc = true;
        p.t0 = 0.0;
        p.t1 = 2.0 * kPi * r;
        p.center = c.seg.a;
        p.ang0 = 0.0;
        p.ang1 = 2.0 * kPi;
        ps.push_back(p);
        return ps;
    }
    Point u = c.seg.direction();
    Point n = u.perp();
    Point a = c.seg.a, b = c.seg.b;
    double th = std::atan2(u.y, u.x);
    double quarter = 0.5 * kPi * r;
    double t = 0.0;

    Piece arc_b1;
    arc_b1.is_arc = true;
    arc_b1.t0 = t;
    arc_b1.t1 = t + quarter;
    arc_b1.center = b;
    arc_b1.ang0 = th;
    arc_b1.ang1 = th + 0.5 * kPi;
    ps.push_back(arc_b1);
    t += quarter;

    Piece top;
    top.t0 = t;
    top.t1 = t + len;
    top.seg = {b + n * r, a + n * r};
    ps.push_back(top);
    t += len;

    Piece arc_a;
    arc_a.is_arc = true;
    arc_a.t0 = t;
    arc_a.t1 = t + kPi * r;
    arc_a.center = a;
    arc_a.ang0 = th + 0.5 * kPi;
    arc_a.ang1 = th + 1.5 * kPi;
    ps.push_back(arc_a);
    t += kPi * r;

    Piece bottom;
    bottom.t0 = t;
    bottom.t1 = t + len;
    bottom.seg = {a - n * r, b - n * r};
    ps.push_back(bottom);
    t += len;

    Piece arc_b2;
    arc_b2.is_arc = true;
    arc_b2.t0 = t;
    arc_b2.t1 = t + quarter;
    arc_b2.center = b;
    arc_b2.ang0 = th + 1.5 * kPi;
    arc_b2.ang1 = th + 2.0 * kPi;
    ps.push_back(arc_b2);
    return ps;
}

Point arc_point(const Piece& p, double radius, double ang) {
    return p.center + Point{std::cos(ang), std::sin(ang)} * radius;
}

// Normalizes theta into [a0, a0 + 2*pi) and tests membership in [a0, a1].
bool angle_in_range(double theta, double a0, double a1, double tol = 1e-9) {
    double t = theta;
    while (t < a0 - tol) t += 2.0 * kPi;
    while (t >= a0 + 2.0 * kPi - tol) t -= 2.0 * kPi;
    return t <= a1 + tol;
}

double normalize_angle_from(double theta, double a0) {
    double t = theta;
    while (t < a0) t += 2.0 * kPi;
    while (t >= a0 + 2.0 * kPi) t -= 2.0 * kPi;
    return t;
}

// circle (cc, R) vs infinite line p + t*d, d unit; fills params on the line.
int circle_line_params(const Point& cc, double R, const Point& p,
                       const Point& d, double ts[2]) {
    double m = d.dot(cc - p);
    Point foot = p + d * m;
    double h2 = R * R - (foot - cc).norm2();
    double tol = 1e-12 * (R * R + 1.0);
    if (h2 < -tol) return 0;
    if (h2 <= tol) {
        ts[0] = m;
        return 1;
    }
    double h = std::sqrt(h2);
    ts[0] = m - h;
    ts[1] = m + h;
    return 2;
}

// Returns -1 when the circles coincide.
int circle_circle_points(const Point& c1, double r1, const Point& c2,
                         double r2, Point out[2]) {
    Point dv = c2 - c1;
    double d = dv.norm();
    double tol = 1e-12 * (r1 + r2 + d + 1.0);
    if (d <= tol) {
        if (std::abs(r1 - r2) <= tol) return -1;
        return 0;
    }
    double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    double h2 = r1 * r1 - a * a;
    double tol2 = tol * (r1 + 1.0);
    if (h2 < -tol2) return 0;
    Point base = c1 + dv * (a / d);
    if (h2 <= tol2) {
        out[0] = base;
        return 1;
    }
    double h = std::sqrt(h2);
    Point off = dv.perp() * (h / d);
    out[0] = base + off;
    out[1] = base - off;
    return 2;
}

// Segment-piece intersection.  Collinear overlaps contribute their
// endpoints, which are vertices of the boundary arrangement.
void seg_seg_points(const Segment& s1, const Segment& s2,
                    std::vector<Point>& out) {
    Point d1 = s1.b - s1.a, d2 = s2.b - s2.a;
    double denom = d1.cross(d2);
    double scale = d1.norm() * d2.norm() + 1.0;
    if (std::abs(denom) <= 1e-14 * scale) {
        double off = d1.cross(s2.a - s1.a);
        if (std::abs(off) > 1e-12 * scale) return;  // parallel, distinct lines
        double len1 = d1.norm();
        if (len1 == 0.0) return;
        Point u = d1 * (1.0 / len1);
        double ta = u.dot(s2.a - s1.a);
        double tb = u.dot(s2.b - s1.a);
        double lo = std::max(0.0, std::min(ta, tb));
        double hi = std::min(len1, std::max(ta, tb));
        if (lo > hi) return;
        out.push_back(s1.a + u * lo);
        if (hi > lo) out.push_back(s1.a + u * hi);
        return;
    }
    double t = (s2.a - s1.a).cross(d2) / denom;
    double s = (s2.a - s1.a).cross(d1) / denom;
    double tol = 1e-12;
    if (t < -tol || t > 1.0 + tol || s < -tol || s > 1.0 + tol) return;
    out.push_back(s1.a + d1 * t);
}

void seg_arc_points(const Segment& s, const Piece& arc, double radius,
                    std::vector<Point>& out) {
    double len = s.length();
    if (len == 0.0) return;
    Point d = s.direction();
    double ts[2];
    int k = circle_line_params(arc.center, radius, s.a, d, ts);
    double tol = 1e-9 * (len + radius + 1.0);
    for (int i = 0; i < k; ++i) {
        if (ts[i] < -tol || ts[i] > len + tol) continue;
        Point p = s.a + d * ts[i];
        Point rel = p - arc.center;
        double ang = std::atan2(rel.y, rel.x);
        if (angle_in_range(ang, arc.ang0, arc.ang1)) out.push_back(p);
    }
}

void arc_arc_points(const Piece& a1, double r1, const Piece& a2, double r2,
                    std::vector<Point>& out) {
    Point pts[2];
    int k = circle_circle_points(a1.center, r1, a2.center, r2, pts);
    if (k == -1) {
        // Coincident circles: report the overlap endpoints of the two
        // CCW angle ranges (trying the three cyclic alignments).
        for (int shift = -1; shift <= 1; ++shift) {
            double b0 = a2.ang0 + 2.0 * kPi * shift;
            double b1 = a2.ang1 + 2.0 * kPi * shift;
            double lo = std::max(a1.ang0, b0);
            double hi = std::min(a1.ang1, b1);
            if (lo > hi) continue;
            out.push_back(arc_point(a1, r1, lo));
            if (hi > lo + 1e-12) out.push_back(arc_point(a1, r1, hi));
        }
        return;
    }
    for (int i = 0; i < k; ++i) {
        Point rel1 = pts[i] - a1.center;
        Point rel2 = pts[i] - a2.center;
        if (angle_in_range(std::atan2(rel1.y, rel1.x), a1.ang0, a1.ang1) &&
            angle_in_range(std::atan2(rel2.y, rel2.x), a2.ang0, a2.ang1))
            out.push_back(pts[i]);
    }
}

// {t : lo <= c0 + c1*t <= hi}
bool linear_range(double c0, double c1, double lo, double hi, double& t0,
                  double& t1) {
    if (c1 == 0.0) {
        if (c0 < lo || c0 > hi) return false;
        t0 = -kInf;
        t1 = kInf;
        return true;
    }
    t0 = (lo - c0) / c1;
    t1 = (hi - c0) / c1;
    if (t0 > t1) std::swap(t0, t1);
    return true;
}

// {t : |p + t*v - c| <= rho}, v unit
bool disk_range(const Point& c, double rho, const Point& p, const Point& v,
                double& t0, double& t1) {
    double m = v.dot(c - p);
    double q = (c - p).norm2() - rho * rho;
    double disc = m * m - q;
    if (disc < 0.0) return false;
    double s = std::sqrt(disc);
    t0 = m - s;
    t1 = m + s;
    return true;
}

}  // namespace

bool Capsule::contains(const Point& p, double tol) const {
    return dist_point_segment(p, seg) <= r + tol;
}

double dist_point_segment(const Point& p, const Segment& s) {
    Point d = s.b - s.a;
    double len2 = d.norm2();
    if (len2 == 0.0) return dist(p, s.a);
    double t = (p - s.a).dot(d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, s.a + d * t);
}

SegmentMeet classify_segment_meet(const Segment& s1, const Segment& s2) {
    bool z1 = s1.a == s1.b, z2 = s2.a == s2.b;
    auto on_seg = [](const Point& p, const Segment& s) {
        return orient_sign(s.a, s.b, p) == 0 && in_box(p, s.a, s.b);
    };
    if (z1 && z2) {
        if (!(s1.a == s2.a)) return SegmentMeet::None;
        return SegmentMeet::SharedEndpoint;
    }
    if (z1 || z2) {
        const Point& p = z1 ? s1.a : s2.a;
        const Segment& s = z1 ? s2 : s1;
        if (!on_seg(p, s)) return SegmentMeet::None;
        return (p == s.a || p == s.b) ? SegmentMeet::SharedEndpoint
                                      : SegmentMeet::Improper;
    }
    // shared-endpoint fast path keeps exact end-to-end touches stable
    {
        const Point* shared = nullptr;
        const Point *o1p = nullptr, *o2p = nullptr;
        for (const Point* a : {&s1.a, &s1.b})
            for (const Point* b : {&s2.a, &s2.b})
                if (*a == *b) {
                    shared = a;
                    o1p = a == &s1.a ? &s1.b : &s1.a;
                    o2p = b == &s2.a ? &s2.b : &s2.a;
                }
        if (shared) {
            if (orient_sign(*shared, *o1p, *o2p) != 0)
                return SegmentMeet::SharedEndpoint;
            // collinear: overlapping only when both run the same way
            return (*o1p - *shared).dot(*o2p - *shared) > 0.0
                       ? SegmentMeet::Improper
                       : SegmentMeet::SharedEndpoint;
        }
    }
    int o1 = orient_sign(s1.a, s1.b, s2.a);
    int o2 = orient_sign(s1.a, s1.b, s2.b);
    int o3 = orient_sign(s2.a, s2.b, s1.a);
    int o4 = orient_sign(s2.a, s2.b, s1.b);
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        Point u = s1.direction();
        double len1 = s1.length();
        double ta = u.dot(s2.a - s1.a), tb = u.dot(s2.b - s1.a);
        double lo = std::max(0.0, std::min(ta, tb));
        double hi = std::min(len1, std::max(ta, tb));
        if (lo > hi) return SegmentMeet::None;
        if (lo < hi) return SegmentMeet::Improper;
        return SegmentMeet::SharedEndpoint;  // end-to-end touch
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentMeet::Improper;
    Point touch;
    bool found = false;
    if (o1 == 0 && in_box(s2.a, s1.a, s1.b)) {
        touch = s2.a;
        found = true;
    } else if (o2 == 0 && in_box(s2.b, s1.a, s1.b)) {
        touch = s2.b;
        found = true;
    } else if (o3 == 0 && in_box(s1.a, s2.a, s2.b)) {
        touch = s1.a;
        found = true;
    } else if (o4 == 0 && in_box(s1.b, s2.a, s2.b)) {
        touch = s1.b;
        found = true;
    }
    if (!found) return SegmentMeet::None;
    bool end1 = touch == s1.a || touch == s1.b;
    bool end2 = touch == s2.a || touch == s2.b;
    return (end1 && end2) ? SegmentMeet::SharedEndpoint : SegmentMeet::Improper;
}

double dist_segment_segment(const Segment& s1, const Segment& s2) {
    if (classify_segment_meet(s1, s2) != SegmentMeet::None) return 0.0;
    double d = dist_point_segment(s1.a, s2);
    d = std::min(d, dist_point_segment(s1.b, s2));
    d = std::min(d, dist_point_segment(s2.a, s1));
    d = std::min(d, dist_point_segment(s2.b, s1));
    return d;
}

std::optional<LineInterval> capsule_clip_segment(const Segment& e,
                                                 const Segment& e2,
                                                 double rho) {
    if (rho <= 0.0) throw Error("capsule_clip_segment: rho must be positive");
    double len2 = e2.length();
    Point v = e2.direction();
    LineInterval out{e2.a, v, 0.0, 0.0};
    if (len2 == 0.0) {
        if (dist_point_segment(e2.a, e) <= rho) return out;
        return std::nullopt;
    }

    double lo = kInf, hi = -kInf;
    auto absorb = [&](double t0, double t1) {
        t0 = std::max(t0, 0.0);
        t1 = std::min(t1, len2);
        if (t0 > t1) return;
        lo = std::min(lo, t0);
        hi = std::max(hi, t1);
    };

    double L = e.length();
    if (L > 0.0) {
        Point u = e.direction();
        Point n = u.perp();
        // rectangle part: projection onto e within [0, L], offset within rho
        double a0, a1, b0, b1;
        bool ok_a = linear_range(u.dot(e2.a - e.a), u.dot(v), 0.0, L, a0, a1);
        bool ok_b =
            linear_range(n.dot(e2.a - e.a), n.dot(v), -rho, rho, b0, b1);
        if (ok_a && ok_b) absorb(std::max(a0, b0), std::min(a1, b1));
    }
    double t0, t1;
    if (disk_range(e.a, rho, e2.a, v, t0, t1)) absorb(t0, t1);
    if (disk_range(e.b, rho, e2.a, v, t0, t1)) absorb(t0, t1);

    if (lo <= hi) {
        out.lo = lo;
        out.hi = hi;
        return out;
    }
    // tangency fallback: distance function along e2 is convex
    if (dist_segment_segment(e, e2) > rho) return std::nullopt;
    double a = 0.0, b = len2;
    for (int i = 0; i < 100; ++i) {
        double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (dist_point_segment(e2.point_at(m1), e) <
            dist_point_segment(e2.point_at(m2), e))
            b = m2;
        else
            a = m1;
    }
    out.lo = out.hi = 0.5 * (a + b);
    return out;
}

std::vector<Point> capsule_boundary_intersections(const Capsule& c1,
                                                  const Capsule& c2) {
    bool same_fwd = c1.seg.a == c2.seg.a && c1.seg.b == c2.seg.b;
    bool same_rev = c1.seg.a == c2.seg.b && c1.seg.b == c2.seg.a;
    if ((same_fwd || same_rev) && c1.r == c2.r)
        throw Error("capsule_boundary_intersections: identical capsules");

    std::vector<Piece> ps1 = boundary_pieces(c1);
    std::vector<Piece> ps2 = boundary_pieces(c2);
    std::vector<Point> raw;
    for (const Piece& p1 : ps1) {
        for (const Piece& p2 : ps2) {
            if (!p1.is_arc && !p2.is_arc)
                seg_seg_points(p1.seg, p2.seg, raw);
            else if (!p1.is_arc && p2.is_arc)
                seg_arc_points(p1.seg, p2, c2.r, raw);
            else if (p1.is_arc && !p2.is_arc)
                seg_arc_points(p2.seg, p1, c1.r, raw);
            else
                arc_arc_points(p1, c1.r, p2, c2.r, raw);
        }
    }
    double tol = 1e-9 * (1.0 + std::max(c1.r, c2.r));
    std::vector<Point> out;
    for (const Point& p : raw) {
        bool dup = false;
        for (const Point& q : out) {
            if (dist(p, q) <= tol) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(p);
    }
    return out;
}

std::array<Point, 7> seven_cover(const Point& center, double r,
                                 double axis_angle) {
    if (r <= 0.0) throw Error("seven_cover: r must be positive");
    std::array<Point, 7> out;
    out[0] = center;
    double d = std::sqrt(3.0) * r;
    for (int k = 0; k < 6; ++k) {
        double ang = axis_angle + k * kPi / 3.0;
        out[k + 1] = center + Point{std::cos(ang), std::sin(ang)} * d;
    }
    return out;
}

std::array<Point, 4> four_cover(const Point& center, double r,
                                double axis_angle) {
    if (r <= 0.0) throw Error("four_cover: r must be positive");
    std::array<Point, 4> out;
    for (int k = 0; k < 4; ++k) {
        double ang = axis_angle + kPi / 4.0 + k * kPi / 2.0;
        out[k] = center + Point{std::cos(ang), std::sin(ang)} * r;
    }
    return out;
}

std::array<Point, 6> u_points(const Capsule& c) {
    double len = c.seg.length();
    if (len == 0.0) throw Error("u_points: zero-length segment");
    Point u = c.seg.direction();
    Point n = u.perp();
    const Point &a = c.seg.a, &b = c.seg.b;
    double r = c.r;
    return {a + n * r, b + n * r, a - n * r,
            b - n * r, a - u * r, b + u * r};
}

std::array<Point, 18> u0_points(const Capsule& c) {
    double len = c.seg.length();
    if (len == 0.0) throw Error("u0_points: zero-length segment");
    double r = c.r;
    double half = 0.5 * len;
    Point u = c.seg.direction();
    Point n = u.perp();
    Point ends[2] = {c.seg.a, c.seg.b};
    Point mid = c.seg.midpoint();
    double edge_angle = std::atan2(u.y, u.x);

    std::array<Point, 18> out;
    int idx = 0;
    // Two 7-covers tilted off the carrier line, so each closed halfplane
    // holds at most 4 of a cover's points.
    for (int s = 0; s < 2; ++s) {
        auto cov = seven_cover(ends[s], r, edge_angle + kPi / 6.0);
        for (const Point& p : cov) out[idx++] = p;
    }
    for (int s = 0; s < 2; ++s) {
        for (int i = 0; i < 2; ++i) {
            Point ni = i == 0 ? n : n * -1.0;
            Point tangent = ends[s] + ni * (2.0 * r);
            Point a_si;
            if (half <= std::sqrt(2.0) * r) {
                Point z = mid + ni * std::sqrt(4.0 * r * r - half * half);
                a_si = (tangent + z) * 0.5;
            } else if (half <= 2.0 * r) {
                Point toward = s == 0 ? u : u * -1.0;
                a_si = ends[s] + toward * (0.5 * half) + ni * half;
            } else {
                double t = std::sqrt(half * half - 4.0 * r * r);
                double sign = s == 0 ? -1.0 : 1.0;
                Point b_si = mid + u * (sign * t) + ni * (2.0 * r);
                a_si = (b_si + tangent) * 0.5;
            }
            out[idx++] = a_si;
        }
    }
    return out;
}

std::pair<SideDisk, SideDisk> empty_disks_through_edge(
    const Point& u1, const Point& u2, const std::vector<Point>& V) {
    if (u1 == u2) throw Error("empty_disks_through_edge: identical endpoints");
    Point m = (u1 + u2) * 0.5;
    double q = 0.5 * dist(u1, u2);
    Point n = (u2 - u1).perp() * (1.0 / dist(u1, u2));

    double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
    for (const Point& v : V) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    double diam = V.empty() ? 0.0 : std::hypot(xmax - xmin, ymax - ymin);
    double cap = 10.0 * std::max(diam, dist(u1, u2));

    double upper = kInf, lower = -kInf;
    double scale = cap + 1.0;
    for (const Point& v : V) {
        if (v == u1 || v == u2) continue;
        double beta = n.dot(v - m);
        double gamma = (v - m).norm2() - q * q;
        if (std::abs(beta) <= 1e-14 * scale) {
            if (gamma < -1e-12 * scale * scale)
                throw NotEmptyDiskEdgeError(
                    "vertex inside every disk through the edge");
            continue;
        }
        double bound = gamma / (2.0 * beta);
        if (beta > 0.0)
            upper = std::min(upper, bound);
        else
            lower = std::max(lower, bound);
    }
    if (lower > upper + 1e-9 * scale)
        throw NotEmptyDiskEdgeError("no empty disk through the edge");

    auto make = [&](double t, bool unb) {
        SideDisk sd;
        sd.offset = t;
        sd.unbounded = unb;
        sd.disk = Disk{m + n * t, std::hypot(q, t)};
        return sd;
    };
    double t_left = std::max(std::min(upper, cap), lower);
    double t_right = std::min(std::max(lower, -cap), upper);
    return {make(t_left, upper == kInf), make(t_right, lower == -kInf)};
}

double boundary_length(const Capsule& c) {
    double len = c.seg.length();
    return 2.0 * len + 2.0 * kPi * c.r;
}

Point boundary_point(const Capsule& c, double t) {
    double total = boundary_length(c);
    t = std::fmod(t, total);
    if (t < 0.0) t += total;
    for (const Piece& p : boundary_pieces(c)) {
        if (t > p.t1) continue;
        if (p.is_arc) {
            double ang = p.ang0 + (t - p.t0) / c.r;
            return arc_point(p, c.r, ang);
        }
        return p.seg.a + p.seg.direction() * (t - p.t0);
    }
    // t == total after rounding
    return boundary_point(c, 0.0);
}

std::pair<double, double> carrier_exit_params(const Capsule& c) {
    double len = c.seg.length();
    if (len == 0.0) return {0.0, kPi * c.r};
    return {0.0, len + kPi * c.r};
}

std::vector<CyclicArc> capsule_boundary_within(const Capsule& c,
                                               const Segment& e2,
                                               double rho) {
    double total = boundary_length(c);
    std::vector<std::pair<double, double>> ivs;

    for (const Piece& p : boundary_pieces(c)) {
        if (!p.is_arc) {
            auto clip = capsule_clip_segment(e2, p.seg, rho);
            if (clip) ivs.emplace_back(p.t0 + clip->lo, p.t0 + clip->hi);
            continue;
        }
        // Candidate crossing angles on this arc: circle against the
        // offset lines and endpoint circles of the rho-neighbourhood.
        std::vector<double> cand{p.ang0, p.ang1};
        auto add_angle = [&](const Point& pt) {
            Point rel = pt - p.center;
            cand.push_back(normalize_angle_from(std::atan2(rel.y, rel.x),
                                                p.ang0));
        };
        double len2 = e2.length();
        if (len2 > 0.0) {
            Point v = e2.direction();
            Point nn = v.perp();
            for (int side = 0; side < 2; ++side) {
                Point origin = e2.a + nn * (side == 0 ? rho : -rho);
                double ts[2];
                int k = circle_line_params(p.center, c.r, origin, v, ts);
                for (int i = 0; i < k; ++i) add_angle(origin + v * ts[i]);
            }
        }
        for (const Point& ec : {e2.a, e2.b}) {
            Point pts[2];
            int k = circle_circle_points(p.center, c.r, ec, rho, pts);
            for (int i = 0; i < k; ++i) add_angle(pts[i]);
        }
        std::sort(cand.begin(), cand.end());
        double cur_lo = kInf, cur_hi = -kInf;
        for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
            double a0 = std::max(cand[i], p.ang0);
            double a1 = std::min(cand[i + 1], p.ang1);
            if (a0 >= a1) continue;
            Point midpt = arc_point(p, c.r, 0.5 * (a0 + a1));
            if (dist_point_segment(midpt, e2) > rho) {
                if (cur_lo <= cur_hi) {
                    ivs.emplace_back(p.t0 + (cur_lo - p.ang0) * c.r,
                                     p.t0 + (cur_hi - p.ang0) * c.r);
                    cur_lo = kInf;
                    cur_hi = -kInf;
                }
                continue;
            }
            if (cur_lo > cur_hi) cur_lo = a0;
            cur_hi = a1;
        }
        if (cur_lo <= cur_hi)
            ivs.emplace_back(p.t0 + (cur_lo - p.ang0) * c.r,
                             p.t0 + (cur_hi - p.ang0) * c.r);
    }

    if (ivs.empty()) return {};
    std::sort(ivs.begin(), ivs.end());
    double join = 1e-9 * (1.0 + total);
    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : ivs) {
        if (!merged.empty() && iv.first <= merged.back().second + join)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    // full boundary
    if (merged.size() == 1 && merged[0].first <= join &&
        merged[0].second >= total - join)
        return {CyclicArc{0.0, total}};

    std::vector<CyclicArc> out;
    bool wraps = merged.size() >= 2 && merged.front().first <= join &&
                 merged.back().second >= total - join;
    std::size_t begin = 0, end = merged.size();
    if (wraps) {
        out.push_back(CyclicArc{merged.back().first, merged.front().second});
        begin = 1;
        end = merged.size() - 1;
    }
    for (std::size_t i = begin; i < end; ++i)
        out.push_back(CyclicArc{merged[i].first, merged[i].second});
    std::sort(out.begin(), out.end(),
              [](const CyclicArc& a, const CyclicArc& b) {
                  return a.start < b.start;
              });
    return out;
}

}  // namespace segstab
