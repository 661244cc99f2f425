#include "atbgeo/probe.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace atbgeo {

namespace {

struct RectFrame {
    Vec3 origin;   // r1
    Vec3 u, v;     // unit edge directions
    double len, hgt;
    Vec3 normal;

    static RectFrame from(const ContactPlane& plane) {
        EdgePair e = edge_vectors(plane);
        RectFrame f;
        f.origin = plane.r1;
        f.len = e.d21.norm();
        f.hgt = e.d31.norm();
        f.u = e.d21 / f.len;
        f.v = e.d31 / f.hgt;
        f.normal = surface_normal(plane);
        return f;
    }

    bool inside(const Vec3& p) const {
        Vec3 rel = p - origin;
        double a = rel.dot(u), b = rel.dot(v);
        return a >= 0.0 && a <= len && b >= 0.0 && b <= hgt;
    }

    Vec3 closest_point(const Vec3& p) const {
        Vec3 rel = p - origin;
        double a = std::clamp(rel.dot(u), 0.0, len);
        double b = std::clamp(rel.dot(v), 0.0, hgt);
        return origin + u * a + v * b;
    }
};

// Maximizes g.w over the unit ball cut by two slabs lo_i <= n_i.w <= hi_i.
// Returns false when the feasible set is empty. Active-set enumeration: the
// optimum activates zero, one, or two of the four slab faces.
bool max_linear_on_cut_ball(const Vec3& g, const Vec3 n_[2], const double lo[2],
                            const double hi[2], double& best) {
    constexpr double eps = 1e-12;
    bool found = false;
    best = 0.0;

    auto consider = [&](const Vec3& w) {
        for (int i = 0; i < 2; ++i) {
            double s = n_[i].dot(w);
            if (s < lo[i] - 1e-9 || s > hi[i] + 1e-9)
                return;
        }
        if (w.dot(w) > 1.0 + 1e-9)
            return;
        double val = g.dot(w);
        if (!found || val > best) {
            found = true;
            best = val;
        }
    };

    // unconstrained ball maximum
    double gn = g.norm();
    consider(gn > eps ? g / gn : Vec3{0, 0, 0});

    // one face active: maximize on ball ∩ {n.w = beta}
    auto face = [&](const Vec3& n, double beta) {
        double nn = n.dot(n);
        if (nn < eps)
            return;
        double par = beta / nn;
        if (par * par * nn > 1.0)
            return;  // plane misses the ball
        Vec3 w0 = n * par;
        double rho2 = 1.0 - beta * beta / nn;
        Vec3 gp = g - n * (g.dot(n) / nn);
        double gpn = gp.norm();
        if (gpn > eps)
            consider(w0 + gp * (std::sqrt(std::max(0.0, rho2)) / gpn));
        else
            consider(w0);
    };
    for (int i = 0; i < 2; ++i) {
        face(n_[i], lo[i]);
        face(n_[i], hi[i]);
    }

    // two faces active: n0.w = beta0, n1.w = beta1
    auto edge = [&](double beta0, double beta1) {
        double g00 = n_[0].dot(n_[0]), g01 = n_[0].dot(n_[1]), g11 = n_[1].dot(n_[1]);
        double det = g00 * g11 - g01 * g01;
        if (std::fabs(det) < eps)
            return;  // parallel constraint normals
        double c0 = (beta0 * g11 - beta1 * g01) / det;
        double c1 = (beta1 * g00 - beta0 * g01) / det;
        Vec3 w0 = n_[0] * c0 + n_[1] * c1;  // min-norm point on the line
        double w0n2 = w0.dot(w0);
        if (w0n2 > 1.0)
            return;
        // component of g along the line direction
        double a0 = (g.dot(n_[0]) * g11 - g.dot(n_[1]) * g01) / det;
        double a1 = (g.dot(n_[1]) * g00 - g.dot(n_[0]) * g01) / det;
        Vec3 gp = g - n_[0] * a0 - n_[1] * a1;
        double gpn = gp.norm();
        if (gpn > eps)
            consider(w0 + gp * (std::sqrt(1.0 - w0n2) / gpn));
        else
            consider(w0);
    };
    edge(lo[0], lo[1]);
    edge(lo[0], hi[1]);
    edge(hi[0], lo[1]);
    edge(hi[0], hi[1]);

    return found;
}

}  // namespace

ProbeResult probe_point(const Vec3& p, const ContactPlane& plane) {
    if (!p.finite())
        throw invalid_spec_error("probe point must be finite");
    RectFrame f = RectFrame::from(plane);

    ProbeResult res;
    res.signed_distance = f.normal.dot(p - f.origin);
    res.in_rectangle = f.inside(p);
    res.penetration = res.in_rectangle ? std::max(0.0, -res.signed_distance) : 0.0;
    if (res.penetration > 0.0)
        res.force_direction = f.normal;
    return res;
}

ProbeResult probe_sphere(const ProbeBody& body, const ContactPlane& plane) {
    if (body.radii.x <= 0.0 || body.radii.x != body.radii.y ||
        body.radii.x != body.radii.z)
        throw invalid_spec_error("sphere body requires equal positive radii");
    double radius = body.radii.x;
    RectFrame f = RectFrame::from(plane);

    ProbeResult res;
    double center_dist = f.normal.dot(body.center - f.origin);
    res.signed_distance = center_dist - radius;  // deepest sphere point
    res.in_rectangle = f.inside(body.center);

    // Contact when the deepest point projects onto the rectangle or the
    // closest rectangle point lies strictly inside the sphere; tangency
    // (penetration exactly 0) counts as no contact.
    Vec3 q = f.closest_point(body.center);
    bool footprint = res.in_rectangle || (q - body.center).norm() < radius;
    res.penetration = footprint ? std::max(0.0, radius - center_dist) : 0.0;
    if (res.penetration > 0.0)
        res.force_direction = f.normal;
    return res;
}

ProbeResult probe_ellipsoid(const ProbeBody& body, const ContactPlane& plane) {
    if (body.radii.x <= 0.0 || body.radii.y <= 0.0 || body.radii.z <= 0.0)
        throw invalid_spec_error("ellipsoid body requires positive radii");
    RectFrame f = RectFrame::from(plane);

    // Ellipsoid = center + M * unit ball, M = R * diag(radii). The support
    // point along direction d is center + M * (M^T d) / |M^T d|.
    Mat3 rot = rotation_from_angles(body.pitch, body.yaw, body.roll);
    Mat3 m = rot;
    for (int i = 0; i < 3; ++i) {
        m.m[i][0] *= body.radii.x;
        m.m[i][1] *= body.radii.y;
        m.m[i][2] *= body.radii.z;
    }
    Mat3 mt = m.transposed();
    Vec3 mtd = mt * (-f.normal);
    Vec3 support = body.center + m * (mtd / mtd.norm());

    ProbeResult res;
    res.signed_distance = f.normal.dot(support - f.origin);
    res.in_rectangle = f.inside(support);

    // Penetration is the depth of the deepest body point whose projection
    // lies on the rectangle: maximize -n.(p - r1) over the ellipsoid subject
    // to the two in-plane slab constraints, solved in unit-ball coordinates
    // p = center + M w where everything is linear in w.
    Vec3 rel = body.center - f.origin;
    Vec3 g = mt * (-f.normal);
    Vec3 slabs[2] = {mt * f.u, mt * f.v};
    double lo[2] = {-rel.dot(f.u), -rel.dot(f.v)};
    double hi[2] = {f.len - rel.dot(f.u), f.hgt - rel.dot(f.v)};

    double depth_w = 0.0;
    if (max_linear_on_cut_ball(g, slabs, lo, hi, depth_w))
        res.penetration = std::max(0.0, depth_w - f.normal.dot(rel));
    else
        res.penetration = 0.0;
    if (res.penetration > 0.0)
        res.force_direction = f.normal;
    return res;
}

ProbeResult probe(const ProbeBody& body, const ContactPlane& plane) {
    switch (body.kind) {
        case ProbeBody::Kind::point: return probe_point(body.center, plane);
        case ProbeBody::Kind::sphere: return probe_sphere(body, plane);
        case ProbeBody::Kind::ellipsoid: return probe_ellipsoid(body, plane);
    }
    throw invalid_spec_error("unknown probe body kind");
}

}  // namespace atbgeo
