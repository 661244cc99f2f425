#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "atbgeo/frame.hpp"
#include "test_support.hpp"

using namespace atbgeo;

TEST_CASE("to_simulator maps reference points") {
    FrameConvention conv = FrameConvention::paper();
    Vec3 p = to_simulator({8.17, -2.74, 1.60}, conv);
    CHECK(std::fabs(p.x - 98.0) <= 0.05);
    CHECK(std::fabs(p.y - 32.9) <= 0.05);
    CHECK(std::fabs(p.z - (-19.2)) <= 0.05);

    p = to_simulator({6.99, -2.74, 2.27}, conv);
    CHECK(std::fabs(p.x - 83.9) <= 0.05);
    CHECK(std::fabs(p.y - 32.9) <= 0.05);
    CHECK(std::fabs(p.z - (-27.2)) <= 0.05);

    p = to_simulator({0, 0, 0}, conv);
    CHECK(p.x == 0.0);
    CHECK(p.y == 0.0);
    CHECK(p.z == 0.0);
}

TEST_CASE("from_simulator is the algebraic inverse") {
    FrameConvention conv = FrameConvention::paper();
    Vec3 p = from_simulator({98.0, 32.9, -19.2}, conv);
    CHECK(std::fabs(p.x - 98.0 / 12.0) <= 1e-9);
    CHECK(std::fabs(p.y - (-32.9 / 12.0)) <= 1e-9);
    CHECK(std::fabs(p.z - 19.2 / 12.0) <= 1e-9);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        Vec3 q{dist(rng), dist(rng), dist(rng)};
        Vec3 back = from_simulator(to_simulator(q, conv), conv);
        CHECK(std::fabs(back.x - q.x) <= 1e-12 * std::fmax(1.0, std::fabs(q.x)));
        CHECK(std::fabs(back.y - q.y) <= 1e-12 * std::fmax(1.0, std::fabs(q.y)));
        CHECK(std::fabs(back.z - q.z) <= 1e-12 * std::fmax(1.0, std::fabs(q.z)));
    }
}

TEST_CASE("transform_plane maps reference row 4 and keeps vertex order") {
    ContactPlane p = vertices_symmetric({{2.00, 0.0, 3.60}, 3.00, 5.48, 33.0});
    ContactPlane q = transform_plane(p, FrameConvention::paper());
    CHECK(q.frame == Frame::simulator);
    CHECK(std::fabs(q.r1.x - 8.9) <= 0.05);
    CHECK(std::fabs(q.r1.y - 32.9) <= 0.05);
    CHECK(std::fabs(q.r1.z - (-53.0)) <= 0.05);
    CHECK(std::fabs(q.r2.x - 39.1) <= 0.05);
    CHECK(std::fabs(q.r2.y - 32.9) <= 0.05);
    CHECK(std::fabs(q.r2.z - (-33.4)) <= 0.05);
    CHECK(std::fabs(q.r3.x - 8.9) <= 0.05);
    CHECK(std::fabs(q.r3.y - (-32.9)) <= 0.05);
    CHECK(std::fabs(q.r3.z - (-53.0)) <= 0.05);
}

TEST_CASE("identity convention leaves the plane unchanged") {
    ContactPlane p = vertices_symmetric({{1, 2, 3}, 2.0, 3.0, 20.0});
    ContactPlane q = transform_plane(p, FrameConvention::identity());
    CHECK(q.r1.x == p.r1.x);
    CHECK(q.r2.y == p.r2.y);
    CHECK(q.r3.z == p.r3.z);
}

TEST_CASE("sign flips at unit scale are involutions") {
    FrameConvention flips{1, -1, -1, 1.0};
    ContactPlane p = vertices_symmetric({{1, 2, 3}, 2.0, 3.0, 20.0});
    ContactPlane q = transform_plane(transform_plane(p, flips), flips);
    CHECK(q.r1.x == p.r1.x);
    CHECK(q.r1.y == p.r1.y);
    CHECK(q.r1.z == p.r1.z);
    CHECK(q.r2.x == p.r2.x);
    CHECK(q.r2.y == p.r2.y);
    CHECK(q.r2.z == p.r2.z);
    CHECK(q.r3.x == p.r3.x);
    CHECK(q.r3.y == p.r3.y);
    CHECK(q.r3.z == p.r3.z);
}

TEST_CASE("edge lengths scale linearly and orthogonality survives") {
    oracle::SpecSampler gen(61);
    FrameConvention conv = FrameConvention::paper();
    for (int i = 0; i < 200; ++i) {
        PlaneSpec s = gen.spec(true);
        ContactPlane p = vertices_general(s);
        ContactPlane q = transform_plane(p, conv);
        EdgePair ep = edge_vectors(p);
        EdgePair eq = edge_vectors(q);
        CHECK(std::fabs(eq.d21.norm() - conv.scale * ep.d21.norm()) <=
              1e-12 * conv.scale * ep.d21.norm());
        CHECK(std::fabs(eq.d31.norm() - conv.scale * ep.d31.norm()) <=
              1e-12 * conv.scale * ep.d31.norm());
        CHECK(std::fabs(eq.d21.dot(eq.d31)) <=
              1e-9 * eq.d21.norm() * eq.d31.norm());
        // transformed vertices stay coplanar with the transformed normal line
        Vec3 n = surface_normal(q);
        Vec3 d4 = (q.r2 - q.r1) + (q.r3 - q.r1);
        double triple = std::fabs(n.dot(d4.cross(q.r2 - q.r1) + d4.cross(q.r3 - q.r1)));
        CHECK(std::fabs(n.dot(q.r2 - q.r1)) <= 1e-9 * eq.d21.norm());
        CHECK(std::fabs(n.dot(q.r3 - q.r1)) <= 1e-9 * eq.d31.norm());
        CHECK(triple <= 1e-6);
    }
}

TEST_CASE("convention validation") {
    CHECK_THROWS_AS((FrameConvention{0, 1, 1, 1.0}.validate()), invalid_spec_error);
    CHECK_THROWS_AS((FrameConvention{1, 1, 1, 0.0}.validate()), invalid_spec_error);
    CHECK_THROWS_AS((FrameConvention{1, 1, 1, -2.0}.validate()), invalid_spec_error);
    CHECK_NOTHROW(FrameConvention::paper().validate());
}
