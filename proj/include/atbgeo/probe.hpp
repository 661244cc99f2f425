#pragma once

#include <optional>

#include "atbgeo/geometry.hpp"
#include "atbgeo/vec3.hpp"

namespace atbgeo {

struct ProbeBody {
    enum class Kind { point, sphere, ellipsoid };
    Kind kind = Kind::point;
    Vec3 center;
    Vec3 radii;           // sphere: equal components; point: zero
    double pitch = 0.0;   // ellipsoid orientation, degrees
    double yaw = 0.0;
    double roll = 0.0;

    static ProbeBody point(const Vec3& p) { return {Kind::point, p, {0, 0, 0}}; }
    static ProbeBody sphere(const Vec3& c, double r) {
        return {Kind::sphere, c, {r, r, r}};
    }
    static ProbeBody ellipsoid(const Vec3& c, const Vec3& radii, double pitch = 0,
                               double yaw = 0, double roll = 0) {
        return {Kind::ellipsoid, c, radii, pitch, yaw, roll};
    }
};

// Geometry-only contact report: signed distance of the body's deepest point
// along the plane normal, whether the relevant footprint lies on the finite
// rectangle, and the penetration depth. force_direction is present exactly
// when penetration > 0 and always equals the plane's surface normal.
struct ProbeResult {
    double signed_distance = 0.0;
    bool in_rectangle = false;
    double penetration = 0.0;
    std::optional<Vec3> force_direction;

    bool contact() const { return penetration > 0.0; }
};

ProbeResult probe_point(const Vec3& p, const ContactPlane& plane);
ProbeResult probe_sphere(const ProbeBody& body, const ContactPlane& plane);
ProbeResult probe_ellipsoid(const ProbeBody& body, const ContactPlane& plane);

// Dispatches on body.kind.
ProbeResult probe(const ProbeBody& body, const ContactPlane& plane);

}  // namespace atbgeo
