#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atbgeo/frame.hpp"
#include "atbgeo/geometry.hpp"

namespace atbgeo {

// Ordered batch of plane specifications; row order defines deck numbering.
struct PlaneTable {
    struct Row {
        std::string id;
        PlaneSpec spec;
    };
    std::vector<Row> rows;
    FrameConvention source_convention = FrameConvention::identity();
};

struct VertexTable {
    struct Row {
        std::string id;
        Vec3 r1, r2, r3;
    };
    std::vector<Row> rows;
    Frame frame = Frame::scene;
};

enum class Precision {
    full,     // shortest round-trip representation
    figure7,  // fixed decimals: 2 in the scene frame, 1 in the simulator frame
};

// Input schema: header `id,x,y,z,length,height,pitch,yaw,roll`
// (case-insensitive; yaw/roll optional and defaulting to 0), LF or CRLF.
PlaneTable parse_plane_csv(const std::string& text);

// Vertex schema: header `id,x1,y1,z1,x2,y2,z2,x3,y3,z3`.
VertexTable parse_vertex_csv(const std::string& text, Frame frame = Frame::scene);

// Scene table from vertices_general per row, simulator table from
// transform_plane; order preserved. Geometry errors are tagged with the
// offending row id.
std::pair<VertexTable, VertexTable> build_vertex_tables(const PlaneTable& table,
                                                        const FrameConvention& conv);

std::string emit_vertex_csv(const VertexTable& table, Precision prec = Precision::full);

std::string emit_plane_csv(const PlaneTable& table);

// Versioned plain-text deck: one `# plane <id>` comment plus three lines of
// three fixed-width (12-char, 4-decimal) fields per row. The real ATB card
// layout is not public; this stand-in is documented in the README and carries
// a format-version line so a true emitter can coexist.
std::string emit_atb_deck(const VertexTable& table);

// OBJ subset: 4 vertices per plane (r4 = r2 + r3 - r1 by parallelogram
// completion) and one quad face, wound so the face normal matches
// surface_normal.
std::string emit_mesh(const VertexTable& table);

}  // namespace atbgeo
