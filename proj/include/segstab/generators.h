#pragma once

#include <cstdint>

#include "segstab/instance.h"

namespace segstab {

/// SplitMix64: counter-based 64-bit generator with fixed constants
/// (gamma 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB).  Deterministic across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

struct GenConfig {
    std::uint64_t seed = 1;
    int n = 10;           // points for proximity graphs, edges otherwise
    double bbox = 100.0;  // square side
    bool r_absolute = false;
    double r_value = 0.0;     // used when r_absolute
    double r_fraction = 0.3;  // of the mean edge length otherwise
};

/// Delaunay triangulation of n random points (incremental insertion,
/// certified against the empty-disk predicate).
PlaneGraphInstance gen_delaunay(const GenConfig& cfg);

/// Gabriel subgraph of the Delaunay triangulation (diametral disks empty).
PlaneGraphInstance gen_gabriel(const GenConfig& cfg);

/// Delaunay triangulation of points in convex position.
PlaneGraphInstance gen_outerplane_dt(const GenConfig& cfg);

/// Random edge subgraph of a convex-position triangulation; every edge
/// keeps both endpoints on the hull boundary.
PlaneGraphInstance gen_outerplane(const GenConfig& cfg);

/// Star clusters with pairwise segment distances either zero (shared
/// endpoints) or greater than r.
PlaneGraphInstance gen_remote(const GenConfig& cfg);

/// Random non-crossing segments.
PlaneGraphInstance gen_segments(const GenConfig& cfg);

/// Dispatch by class tag.
PlaneGraphInstance generate(GraphClass cls, const GenConfig& cfg);

}  // namespace segstab
