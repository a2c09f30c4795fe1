#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segstab {

/// Base error type for the library.  Subcommands map these to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a segment claimed to be an empty-disk edge is not one.
class NotEmptyDiskEdgeError : public Error {
public:
    explicit NotEmptyDiskEdgeError(const std::string& msg) : Error(msg) {}
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }

    double dot(const Point& o) const { return x * o.x + y * o.y; }
    double cross(const Point& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    /// Counterclockwise perpendicular (left normal).
    Point perp() const { return {-y, x}; }
};

inline double dist(const Point& a, const Point& b) { return (a - b).norm(); }

struct Segment {
    Point a;
    Point b;

    double length() const { return dist(a, b); }
    Point midpoint() const { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }
    /// Unit direction a->b; (1,0) for zero-length segments.
    Point direction() const {
        double len = length();
        if (len == 0.0) return {1.0, 0.0};
        return (b - a) * (1.0 / len);
    }
    Point point_at(double t) const { return a + direction() * t; }
};

struct Disk {
    Point center;
    double radius = 0.0;

    bool contains(const Point& p, double tol = 0.0) const {
        return dist(center, p) <= radius + tol;
    }
};

/// Euclidean r-neighbourhood of a segment (a stadium shape).  Degenerates
/// to a disk when the segment has zero length.
struct Capsule {
    Segment seg;
    double r = 0.0;

    bool contains(const Point& p, double tol = 0.0) const;
};

/// Closed sub-interval [lo, hi] of a directed line, in arclength
/// parameters measured from `origin` along unit `dir`.
struct LineInterval {
    Point origin;
    Point dir;
    double lo = 0.0;
    double hi = 0.0;

    Point point_at(double t) const { return origin + dir * t; }
    Point lo_point() const { return point_at(lo); }
    Point hi_point() const { return point_at(hi); }
};

/// Arc of a cyclic parameter domain [0, total), walked forward from
/// `start` to `end`; wraps around when end < start.
struct CyclicArc {
    double start = 0.0;
    double end = 0.0;

    bool contains(double t, double total) const {
        (void)total;
        if (start <= end) return start <= t && t <= end;
        return t >= start || t <= end;
    }
    double length(double total) const {
        return start <= end ? end - start : total - start + end;
    }
};

double dist_point_segment(const Point& p, const Segment& s);
double dist_segment_segment(const Segment& s1, const Segment& s2);

/// How two segments meet; validation only allows None and SharedEndpoint.
enum class SegmentMeet { None, SharedEndpoint, Improper };
SegmentMeet classify_segment_meet(const Segment& s1, const Segment& s2);

/// Sub-segment of e2 lying within distance rho of e, as a parameter
/// interval along e2; empty when dist(e, e2) > rho.
std::optional<LineInterval> capsule_clip_segment(const Segment& e,
                                                 const Segment& e2,
                                                 double rho);

/// All intersection points of the two capsule boundaries, deduplicated
/// within 1e-9*(1+r).  Throws on identical capsules or degenerate
/// boundary overlaps.
std::vector<Point> capsule_boundary_intersections(const Capsule& c1,
                                                  const Capsule& c2);

/// Hexagonal 7-disk cover: the returned centers carry radius-r disks
/// whose union covers the radius-2r disk at `center`.
std::array<Point, 7> seven_cover(const Point& center, double r,
                                 double axis_angle = 0.0);

/// 4-disk cover of the radius sqrt(2)*r disk at `center`; offsets are
/// (+-r/sqrt(2), +-r/sqrt(2)) rotated by axis_angle.
std::array<Point, 4> four_cover(const Point& center, double r,
                                double axis_angle);

/// The 4 rectangle corners of the capsule boundary plus the 2 points
/// where the carrier line exits the capsule.  Rejects zero-length.
std::array<Point, 6> u_points(const Capsule& c);

/// 18-point hitter scaffold: two oriented 7-covers at the segment
/// endpoints plus 4 midpoint-construction points, one per (endpoint,
/// side) pair.  The union of radius-r disks at these points together
/// with the disk of radius len/2 at the segment midpoint covers the
/// 2r-neighbourhood of the segment.  Rejects zero-length.
std::array<Point, 18> u0_points(const Capsule& c);

/// Extremal empty disk through two points, one per side of their line.
struct SideDisk {
    Disk disk;
    bool unbounded = false;  // capped at 10x the diameter of V
    double offset = 0.0;     // signed center offset along the bisector
};

/// For each side of the line u1->u2 (left first), the largest disk
/// through u1 and u2 with center on that side whose interior avoids V.
/// Throws NotEmptyDiskEdgeError when no empty disk through u1,u2 exists.
std::pair<SideDisk, SideDisk> empty_disks_through_edge(
    const Point& u1, const Point& u2, const std::vector<Point>& V);

// Canonical counterclockwise boundary parametrization.  Parameter 0 is
// the carrier-line exit point past b; the walk covers arc(b), the left
// side, arc(a), the right side, then the remainder of arc(b).
double boundary_length(const Capsule& c);
Point boundary_point(const Capsule& c, double t);
/// Parameters of the two carrier-line exit points (past b, past a).
std::pair<double, double> carrier_exit_params(const Capsule& c);

/// Maximal parameter arcs of bd(c) lying within distance rho of e2.
/// Arcs are disjoint and ordered; a full-boundary hit comes back as the
/// single arc [0, total].
std::vector<CyclicArc> capsule_boundary_within(const Capsule& c,
                                               const Segment& e2,
                                               double rho);

}  // namespace segstab
