#include "atbgeo/geometry.hpp"

#include <cmath>

namespace atbgeo {

const char* frame_name(Frame f) {
    switch (f) {
        case Frame::scene: return "scene";
        case Frame::simulator: return "simulator";
        case Frame::vehicle: return "vehicle";
    }
    return "?";
}

double normalize_angle_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r <= -180.0)
        r += 360.0;
    else if (r > 180.0)
        r -= 360.0;
    return r;
}

void PlaneSpec::validate() {
    if (!center.finite())
        throw invalid_spec_error("plane center must be finite");
    if (!std::isfinite(length) || length <= 0.0)
        throw invalid_spec_error("plane length must be positive and finite");
    if (!std::isfinite(height) || height <= 0.0)
        throw invalid_spec_error("plane height must be positive and finite");
    if (!std::isfinite(pitch) || !std::isfinite(yaw) || !std::isfinite(roll))
        throw invalid_spec_error("plane angles must be finite");
    pitch = normalize_angle_deg(pitch);
    yaw = normalize_angle_deg(yaw);
    roll = normalize_angle_deg(roll);
}

Mat3 rot_x(double rad) {
    double c = std::cos(rad), s = std::sin(rad);
    Mat3 r;
    r.m[1][1] = c; r.m[1][2] = -s;
    r.m[2][1] = s; r.m[2][2] = c;
    return r;
}

Mat3 rot_y(double rad) {
    double c = std::cos(rad), s = std::sin(rad);
    Mat3 r;
    r.m[0][0] = c; r.m[0][2] = s;
    r.m[2][0] = -s; r.m[2][2] = c;
    return r;
}

Mat3 rot_z(double rad) {
    double c = std::cos(rad), s = std::sin(rad);
    Mat3 r;
    r.m[0][0] = c; r.m[0][1] = -s;
    r.m[1][0] = s; r.m[1][1] = c;
    return r;
}

Mat3 rotation_from_angles(double pitch_deg, double yaw_deg, double roll_deg) {
    return rot_z(deg_to_rad(yaw_deg)) * rot_y(deg_to_rad(pitch_deg)) *
           rot_x(deg_to_rad(roll_deg));
}

ContactPlane vertices_symmetric(PlaneSpec spec) {
    spec.validate();
    if (spec.yaw != 0.0 || spec.roll != 0.0)
        throw invalid_spec_error(
            "vertices_symmetric requires yaw = roll = 0; use vertices_general");

    double th = deg_to_rad(spec.pitch);
    double hl = 0.5 * spec.length;
    double hh = 0.5 * spec.height;
    const Vec3& c = spec.center;

    ContactPlane p;
    p.r1 = {c.x - hl * std::cos(th), c.y - hh, c.z + hl * std::sin(th)};
    p.r2 = {c.x + hl * std::cos(th), c.y - hh, c.z - hl * std::sin(th)};
    p.r3 = {c.x - hl * std::cos(th), c.y + hh, c.z + hl * std::sin(th)};
    p.frame = Frame::scene;
    return p;
}

ContactPlane vertices_general(PlaneSpec spec) {
    spec.validate();

    Mat3 rot = rotation_from_angles(spec.pitch, spec.yaw, spec.roll);
    Vec3 u = rot * Vec3{spec.length, 0.0, 0.0};
    Vec3 v = rot * Vec3{0.0, spec.height, 0.0};

    ContactPlane p;
    p.r1 = spec.center - u * 0.5 - v * 0.5;
    p.r2 = spec.center + u * 0.5 - v * 0.5;
    p.r3 = spec.center - u * 0.5 + v * 0.5;
    p.frame = Frame::scene;
    return p;
}

EdgePair edge_vectors(const ContactPlane& plane) {
    EdgePair e{plane.r2 - plane.r1, plane.r3 - plane.r1};
    if (e.d21.dot(e.d21) == 0.0 || e.d31.dot(e.d31) == 0.0)
        throw degenerate_plane_error("contact plane has coincident vertices");
    return e;
}

Vec3 surface_normal(const ContactPlane& plane) {
    EdgePair e = edge_vectors(plane);
    Vec3 n = e.d21.cross(e.d31);
    double len = n.norm();
    if (len == 0.0)
        throw degenerate_plane_error("contact plane edges are parallel");
    return n / len;
}

PlaneSpec invert_plane(const ContactPlane& plane, double tolerance) {
    EdgePair e = edge_vectors(plane);
    double len = e.d21.norm();
    double hgt = e.d31.norm();

    if (std::fabs(e.d21.dot(e.d31)) > tolerance * len * hgt)
        throw non_rectangular_error(
            "sampled vertices do not form a rectangle corner at r1");

    PlaneSpec spec;
    spec.center = plane.r1 + (e.d21 + e.d31) * 0.5;
    spec.length = len;
    spec.height = hgt;

    // Orthonormal frame carried by the rectangle; Gram-Schmidt absorbs the
    // residual non-orthogonality allowed by the tolerance.
    Vec3 e1 = e.d21 / len;
    Vec3 e2 = e.d31 - e1 * e.d31.dot(e1);
    e2 = e2.normalized();
    Vec3 e3 = e1.cross(e2);

    // Columns of R = Rz(yaw) * Ry(pitch) * Rx(roll).
    Mat3 rot;
    for (int i = 0; i < 3; ++i) {
        rot.m[i][0] = (i == 0) ? e1.x : (i == 1) ? e1.y : e1.z;
        rot.m[i][1] = (i == 0) ? e2.x : (i == 1) ? e2.y : e2.z;
        rot.m[i][2] = (i == 0) ? e3.x : (i == 1) ? e3.y : e3.z;
    }

    double cos_pitch = std::hypot(rot.m[0][0], rot.m[1][0]);
    double pitch = std::atan2(-rot.m[2][0], cos_pitch);
    double yaw, roll;
    if (cos_pitch < 1e-11) {
        // |pitch| = 90: yaw and roll axes coincide. Report roll = 0 and fold
        // the whole z-axis rotation into yaw.
        roll = 0.0;
        if (rot.m[2][0] < 0.0)
            yaw = std::atan2(-rot.m[0][1], rot.m[0][2]);
        else
            yaw = std::atan2(-rot.m[0][1], -rot.m[0][2]);
    } else {
        yaw = std::atan2(rot.m[1][0], rot.m[0][0]);
        roll = std::atan2(rot.m[2][1], rot.m[2][2]);
    }

    spec.pitch = normalize_angle_deg(rad_to_deg(pitch));
    spec.yaw = normalize_angle_deg(rad_to_deg(yaw));
    spec.roll = normalize_angle_deg(rad_to_deg(roll));
    return spec;
}

}  // namespace atbgeo
