#include "atbgeo/frame.hpp"

#include <cmath>

namespace atbgeo {

void FrameConvention::validate() const {
    if ((sign_x != 1 && sign_x != -1) || (sign_y != 1 && sign_y != -1) ||
        (sign_z != 1 && sign_z != -1))
        throw invalid_spec_error("frame convention signs must be +1 or -1");
    if (!std::isfinite(scale) || scale <= 0.0)
        throw invalid_spec_error("frame convention scale must be positive and finite");
}

Vec3 to_simulator(const Vec3& p, const FrameConvention& conv) {
    if (!p.finite())
        throw invalid_spec_error("point must be finite");
    return {conv.sign_x * conv.scale * p.x, conv.sign_y * conv.scale * p.y,
            conv.sign_z * conv.scale * p.z};
}

Vec3 from_simulator(const Vec3& p, const FrameConvention& conv) {
    if (!p.finite())
        throw invalid_spec_error("point must be finite");
    return {p.x / (conv.sign_x * conv.scale), p.y / (conv.sign_y * conv.scale),
            p.z / (conv.sign_z * conv.scale)};
}

ContactPlane transform_plane(const ContactPlane& plane, const FrameConvention& conv) {
    ContactPlane out;
    out.r1 = to_simulator(plane.r1, conv);
    out.r2 = to_simulator(plane.r2, conv);
    out.r3 = to_simulator(plane.r3, conv);
    out.frame = plane.frame == Frame::simulator ? Frame::scene : Frame::simulator;
    return out;
}

}  // namespace atbgeo
