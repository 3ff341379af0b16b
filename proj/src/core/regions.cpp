#include "core/regions.hpp"

#include <algorithm>
#include <cmath>

namespace mx {

RegionConfig RegionConfig::defaults(const TurningPoints& tp) {
    double eps = std::min(std::min(tp.a, 0.5 * (tp.b - tp.a)),
                          std::min(1.0 - tp.a, tp.b - 1.0)) /
                 4.0;
    return RegionConfig{eps, 2.0 * eps};
}

Region classify_region(cplx z, double eps, double delta,
                       const TurningPoints& tp) {
    Region r;
    r.half_plane = z.imag() > 0.0   ? HalfPlane::upper
                   : z.imag() < 0.0 ? HalfPlane::lower
                                    : HalfPlane::real_axis;
    if (std::abs(z) <= eps) {
        r.tag = z.real() <= 0.0 ? RegionTag::OriginLeft : RegionTag::OriginRight;
        return r;
    }
    if (std::abs(z - cplx(tp.a, 0.0)) <= eps) {
        r.tag = RegionTag::AiryA;
        return r;
    }
    if (std::abs(z - cplx(tp.b, 0.0)) <= eps) {
        r.tag = RegionTag::AiryB;
        return r;
    }
    if (std::fabs(z.imag()) <= delta) {
        double x = z.real();
        if (x > 0.0 && x < tp.a) {
            r.tag = RegionTag::StripLeft;
            return r;
        }
        if (x > tp.a && x < tp.b) {
            r.tag = x < 1.0 ? RegionTag::BandLeft : RegionTag::BandRight;
            return r;
        }
    }
    r.tag = RegionTag::Outer;
    return r;
}

const char* region_name(RegionTag tag) {
    switch (tag) {
        case RegionTag::Outer: return "Outer";
        case RegionTag::StripLeft: return "StripLeft";
        case RegionTag::OriginLeft: return "OriginLeft";
        case RegionTag::OriginRight: return "OriginRight";
        case RegionTag::AiryA: return "AiryA";
        case RegionTag::AiryB: return "AiryB";
        case RegionTag::BandLeft: return "BandLeft";
        case RegionTag::BandRight: return "BandRight";
    }
    return "?";
}

Side side_for(const Region& r) {
    return r.half_plane == HalfPlane::lower ? Side::lower : Side::upper;
}

}  // namespace mx
