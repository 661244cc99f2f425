#include "atbgeo/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace atbgeo {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r')
                cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() && cur.back() == '\r')
        cur.pop_back();
    if (!cur.empty())
        lines.push_back(cur);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front())))
            f.erase(f.begin());
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back())))
            f.pop_back();
    }
    return fields;
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parse_number(const std::string& cell, const std::string& row_id,
                    const std::string& column) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw table_error("row '" + row_id + "', column '" + column +
                              "': not a number: '" + cell + "'",
                          row_id);
    return value;
}

// Column name -> index, lowered; rejects duplicates.
std::map<std::string, size_t> header_map(const std::vector<std::string>& header) {
    std::map<std::string, size_t> cols;
    for (size_t i = 0; i < header.size(); ++i) {
        std::string name = to_lower(header[i]);
        if (cols.count(name))
            throw table_error("duplicate column '" + name + "' in header");
        cols[name] = i;
    }
    return cols;
}

size_t require_column(const std::map<std::string, size_t>& cols, const std::string& name) {
    auto it = cols.find(name);
    if (it == cols.end())
        throw table_error("missing mandatory column '" + name + "'");
    return it->second;
}

std::string format_shortest(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    // avoid "-0.00"
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-')
        s.erase(s.begin());
    return s;
}

}  // namespace

PlaneTable parse_plane_csv(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty())
        throw table_error("empty input: header row required");

    auto cols = header_map(split_fields(lines[0]));
    size_t c_id = require_column(cols, "id");
    size_t c_x = require_column(cols, "x");
    size_t c_y = require_column(cols, "y");
    size_t c_z = require_column(cols, "z");
    size_t c_len = require_column(cols, "length");
    size_t c_hgt = require_column(cols, "height");
    size_t c_pitch = require_column(cols, "pitch");
    bool has_yaw = cols.count("yaw") > 0;
    bool has_roll = cols.count("roll") > 0;

    PlaneTable table;
    std::set<std::string> seen;
    for (size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty())
            continue;
        auto fields = split_fields(lines[li]);
        auto cell = [&](size_t idx, const char* name) -> const std::string& {
            if (idx >= fields.size())
                throw table_error("line " + std::to_string(li + 1) +
                                  ": missing value for column '" + name + "'");
            return fields[idx];
        };

        PlaneTable::Row row;
        row.id = cell(c_id, "id");
        if (row.id.empty())
            throw table_error("line " + std::to_string(li + 1) + ": empty id");
        if (!seen.insert(row.id).second)
            throw table_error("duplicate id '" + row.id + "'", row.id);

        row.spec.center = {parse_number(cell(c_x, "x"), row.id, "x"),
                           parse_number(cell(c_y, "y"), row.id, "y"),
                           parse_number(cell(c_z, "z"), row.id, "z")};
        row.spec.length = parse_number(cell(c_len, "length"), row.id, "length");
        row.spec.height = parse_number(cell(c_hgt, "height"), row.id, "height");
        row.spec.pitch = parse_number(cell(c_pitch, "pitch"), row.id, "pitch");
        row.spec.yaw =
            has_yaw ? parse_number(cell(cols["yaw"], "yaw"), row.id, "yaw") : 0.0;
        row.spec.roll =
            has_roll ? parse_number(cell(cols["roll"], "roll"), row.id, "roll") : 0.0;

        try {
            row.spec.validate();
        } catch (const invalid_spec_error& e) {
            throw table_error("row '" + row.id + "': " + e.what(), row.id);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

VertexTable parse_vertex_csv(const std::string& text, Frame frame) {
    auto lines = split_lines(text);
    if (lines.empty())
        throw table_error("empty input: header row required");

    auto cols = header_map(split_fields(lines[0]));
    size_t c_id = require_column(cols, "id");
    static const char* names[9] = {"x1", "y1", "z1", "x2", "y2",
                                   "z2", "x3", "y3", "z3"};
    size_t c[9];
    for (int i = 0; i < 9; ++i)
        c[i] = require_column(cols, names[i]);

    VertexTable table;
    table.frame = frame;
    std::set<std::string> seen;
    for (size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty())
            continue;
        auto fields = split_fields(lines[li]);
        if (fields.size() <= c_id)
            throw table_error("line " + std::to_string(li + 1) + ": missing id");
        VertexTable::Row row;
        row.id = fields[c_id];
        if (!seen.insert(row.id).second)
            throw table_error("duplicate id '" + row.id + "'", row.id);
        double v[9];
        for (int i = 0; i < 9; ++i) {
            if (c[i] >= fields.size())
                throw table_error("row '" + row.id + "': missing value for column '" +
                                      std::string(names[i]) + "'",
                                  row.id);
            v[i] = parse_number(fields[c[i]], row.id, names[i]);
        }
        row.r1 = {v[0], v[1], v[2]};
        row.r2 = {v[3], v[4], v[5]};
        row.r3 = {v[6], v[7], v[8]};
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::pair<VertexTable, VertexTable> build_vertex_tables(const PlaneTable& table,
                                                        const FrameConvention& conv) {
    conv.validate();
    VertexTable scene, sim;
    scene.frame = Frame::scene;
    sim.frame = Frame::simulator;
    for (const auto& row : table.rows) {
        try {
            ContactPlane p = vertices_general(row.spec);
            ContactPlane q = transform_plane(p, conv);
            scene.rows.push_back({row.id, p.r1, p.r2, p.r3});
            sim.rows.push_back({row.id, q.r1, q.r2, q.r3});
        } catch (const std::exception& e) {
            throw table_error("row '" + row.id + "': " + e.what(), row.id);
        }
    }
    return {std::move(scene), std::move(sim)};
}

std::string emit_vertex_csv(const VertexTable& table, Precision prec) {
    int decimals = table.frame == Frame::simulator ? 1 : 2;
    auto fmt = [&](double v) {
        return prec == Precision::full ? format_shortest(v)
                                       : format_fixed(v, decimals);
    };
    std::string out = "id,x1,y1,z1,x2,y2,z2,x3,y3,z3\n";
    for (const auto& row : table.rows) {
        out += row.id;
        for (const Vec3* r : {&row.r1, &row.r2, &row.r3}) {
            out += ',' + fmt(r->x);
            out += ',' + fmt(r->y);
            out += ',' + fmt(r->z);
        }
        out += '\n';
    }
    return out;
}

std::string emit_plane_csv(const PlaneTable& table) {
    std::string out = "id,x,y,z,length,height,pitch,yaw,roll\n";
    for (const auto& row : table.rows) {
        const PlaneSpec& s = row.spec;
        out += row.id;
        for (double v : {s.center.x, s.center.y, s.center.z, s.length, s.height,
                         s.pitch, s.yaw, s.roll})
            out += ',' + format_shortest(v);
        out += '\n';
    }
    return out;
}

std::string emit_atb_deck(const VertexTable& table) {
    if (table.frame != Frame::simulator)
        throw wrong_frame_error("deck emission requires a simulator-frame table, got " +
                                std::string(frame_name(table.frame)));
    std::string out = "# atbgeo contact-plane deck, format 1\n";
    char buf[64];
    for (const auto& row : table.rows) {
        out += "# plane " + row.id + '\n';
        for (const Vec3* r : {&row.r1, &row.r2, &row.r3}) {
            std::snprintf(buf, sizeof buf, "%12.4f%12.4f%12.4f\n", r->x, r->y, r->z);
            out += buf;
        }
    }
    return out;
}

std::string emit_mesh(const VertexTable& table) {
    std::string out;
    size_t base = 1;
    std::string faces;
    for (const auto& row : table.rows) {
        const Vec3 r4 = row.r2 + row.r3 - row.r1;
        // winding r1 -> r2 -> r4 -> r3 gives face normal d21 x d31
        for (const Vec3* r : {&row.r1, &row.r2, &r4, &row.r3}) {
            out += "v " + format_shortest(r->x) + ' ' + format_shortest(r->y) + ' ' +
                   format_shortest(r->z) + '\n';
        }
        faces += "f " + std::to_string(base) + ' ' + std::to_string(base + 1) + ' ' +
                 std::to_string(base + 2) + ' ' + std::to_string(base + 3) + '\n';
        base += 4;
    }
    return out + faces;
}

}  // namespace atbgeo
