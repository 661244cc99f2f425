#pragma once

#include "atbgeo/geometry.hpp"
#include "atbgeo/vec3.hpp"

namespace atbgeo {

// Axis-sign flips plus a uniform unit scale mapping the scene frame to the
// simulator frame. Scale is uniform on purpose: per-axis scaling would break
// the edge-length invariants of generated planes.
struct FrameConvention {
    int sign_x = 1;
    int sign_y = 1;
    int sign_z = 1;
    double scale = 1.0;

    void validate() const;

    // (x, y, z) -> (x, -y, -z) with a x12 unit scale, as read off the
    // reference spreadsheet (98.0 / 8.165 ~ 12).
    static FrameConvention paper() { return {1, -1, -1, 12.0}; }
    static FrameConvention identity() { return {1, 1, 1, 1.0}; }
};

Vec3 to_simulator(const Vec3& p, const FrameConvention& conv);
Vec3 from_simulator(const Vec3& p, const FrameConvention& conv);

// Maps every vertex by to_simulator and flips the frame tag; vertex order is
// preserved.
ContactPlane transform_plane(const ContactPlane& plane, const FrameConvention& conv);

}  // namespace atbgeo
