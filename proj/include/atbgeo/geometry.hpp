#pragma once

#include "atbgeo/errors.hpp"
#include "atbgeo/vec3.hpp"

namespace atbgeo {

enum class Frame { scene, simulator, vehicle };

const char* frame_name(Frame f);

// Oriented rectangle: geometric center, edge lengths, and orientation angles
// in degrees. "height" is the lateral edge even though it usually spans the
// vehicle's width; the name follows the source convention.
struct PlaneSpec {
    Vec3 center;
    double length = 0.0;  // L, longitudinal edge
    double height = 0.0;  // H, lateral edge
    double pitch = 0.0;   // degrees, rotation about y
    double yaw = 0.0;     // degrees, rotation about z
    double roll = 0.0;    // degrees, rotation about x

    // Checks finiteness/positivity and normalizes angles to (-180, 180].
    void validate();
};

// Rectangle encoded as a vertex triplet: r1 rear-right corner, r2 front-right,
// r3 rear-left. r2-r1 spans the length edge, r3-r1 the height edge.
struct ContactPlane {
    Vec3 r1, r2, r3;
    Frame frame = Frame::scene;
};

struct EdgePair {
    Vec3 d21;  // right-side edge, length L
    Vec3 d31;  // edge nearest the vehicle CG, length H
};

double normalize_angle_deg(double deg);

Mat3 rot_x(double rad);
Mat3 rot_y(double rad);
Mat3 rot_z(double rad);

// Fixed-axis composition Rz(yaw) * Ry(pitch) * Rx(roll), angles in degrees.
// Ry is signed so that the pitch-only case maps (L,0,0) to (L cos, 0, -L sin).
Mat3 rotation_from_angles(double pitch_deg, double yaw_deg, double roll_deg);

// Closed-form vertices for the x-z mirror-symmetric case (yaw = roll = 0).
ContactPlane vertices_symmetric(PlaneSpec spec);

// General case: local edges (L,0,0) and (0,H,0) rotated by
// Rz(yaw)*Ry(pitch)*Rx(roll) about the center. Reduces exactly to
// vertices_symmetric when yaw = roll = 0.
ContactPlane vertices_general(PlaneSpec spec);

EdgePair edge_vectors(const ContactPlane& plane);

// Unit normal (d21 x d31) / |d21 x d31|; for symmetric planes this is
// (sin pitch, 0, cos pitch).
Vec3 surface_normal(const ContactPlane& plane);

// Recovers the generating spec from a sampled vertex triplet. The edges must
// be orthogonal within `tolerance` (relative). At |pitch| = 90 the roll is
// reported as 0 and the full z-axis rotation folded into yaw.
PlaneSpec invert_plane(const ContactPlane& plane, double tolerance = 1e-3);

}  // namespace atbgeo
