#ifndef MX_REGIONS_HPP
#define MX_REGIONS_HPP

// Partition of the z plane driving formula dispatch: three closed disks
// (origin, both turning points), the strip pieces along the real axis, and
// the outer region for everything else.

#include "core/equilibrium.hpp"

namespace mx {

enum class RegionTag {
    Outer,
    StripLeft,   // 0 < Re z < a near the axis
    OriginLeft,  // |z| <= eps, Re z <= 0
    OriginRight,
    AiryA,  // |z - a| <= eps
    AiryB,  // |z - b| <= eps
    BandLeft,   // a < Re z < 1 near the axis
    BandRight,  // 1 <= Re z < b near the axis
};

enum class HalfPlane { upper, lower, real_axis };

struct Region {
    RegionTag tag = RegionTag::Outer;
    HalfPlane half_plane = HalfPlane::real_axis;
};

// eps = min(a, (b-a)/2, 1-a, b-1)/4, delta = 2 eps: small enough that the
// disks are disjoint and the band split point 1 stays interior, large enough
// that every reference-table point lands in its intended region.
struct RegionConfig {
    double eps = 0.0;
    double delta = 0.0;
    static RegionConfig defaults(const TurningPoints& tp);
};

// Total and deterministic; closed boundaries resolve toward the disks and
// the band/strip (disks tested first, in the order origin, a, b).
Region classify_region(cplx z, double eps, double delta,
                       const TurningPoints& tp);

const char* region_name(RegionTag tag);

// Branch side used when z lies on the real axis: upper boundary values.
Side side_for(const Region& r);

}  // namespace mx

#endif
