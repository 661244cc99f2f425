#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atbgeo/frame.hpp"
#include "atbgeo/geometry.hpp"
#include "atbgeo/pipeline.hpp"
#include "atbgeo/probe.hpp"

namespace fs = std::filesystem;
using namespace atbgeo;

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw table_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Write to a sibling temp file and rename into place, so a failing run never
// leaves a partial output behind.
void write_file_atomic(const std::string& path, const std::string& content) {
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw table_error("cannot open output file: " + tmp.string());
        out << content;
        if (!out)
            throw table_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

FrameConvention parse_convention(const std::string& text) {
    if (text == "paper")
        return FrameConvention::paper();
    if (text == "identity")
        return FrameConvention::identity();
    if (text.rfind("custom:", 0) == 0) {
        std::istringstream ss(text.substr(7));
        FrameConvention conv;
        char c1, c2, c3;
        if (!(ss >> conv.sign_x >> c1 >> conv.sign_y >> c2 >> conv.sign_z >> c3 >>
              conv.scale) ||
            c1 != ',' || c2 != ',' || c3 != ',')
            throw CLI::ValidationError("--convention",
                                       "expected custom:sx,sy,sz,scale");
        conv.validate();
        return conv;
    }
    throw CLI::ValidationError("--convention",
                               "expected paper, identity, or custom:sx,sy,sz,scale");
}

std::vector<double> parse_number_list(const std::string& text, size_t min_n,
                                      size_t max_n, const char* flag) {
    std::vector<double> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "not a number: " + item);
        }
    }
    if (out.size() < min_n || out.size() > max_n)
        throw CLI::ValidationError(flag, "wrong number of values");
    return out;
}

void print_probe_report(const ProbeResult& res, bool as_csv) {
    if (as_csv) {
        std::printf("signed_distance,in_rectangle,penetration,contact,fx,fy,fz\n");
        std::printf("%.12g,%d,%.12g,%d", res.signed_distance, res.in_rectangle ? 1 : 0,
                    res.penetration, res.contact() ? 1 : 0);
        if (res.force_direction)
            std::printf(",%.12g,%.12g,%.12g\n", res.force_direction->x,
                        res.force_direction->y, res.force_direction->z);
        else
            std::printf(",,,\n");
        return;
    }
    std::printf("signed distance : %.6f\n", res.signed_distance);
    std::printf("in rectangle    : %s\n", res.in_rectangle ? "yes" : "no");
    std::printf("penetration     : %.6f\n", res.penetration);
    std::printf("contact         : %s\n", res.contact() ? "yes" : "no");
    if (res.force_direction)
        std::printf("force direction : (%.6f, %.6f, %.6f)\n", res.force_direction->x,
                    res.force_direction->y, res.force_direction->z);
    else
        std::printf("force direction : none\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contact-plane generator for ATB-style physics decks"};
    app.require_subcommand(1);

    std::string input, output, sim_output, deck_path, mesh_path;
    std::string convention = "paper";
    std::string precision = "full";
    double tolerance = 1e-3;

    auto* convert = app.add_subcommand(
        "convert", "Plane-spec CSV -> vertex CSVs, deck, and/or mesh");
    convert->add_option("--input", input, "plane-spec CSV")->required();
    convert->add_option("--output", output, "scene-frame vertex CSV path");
    convert->add_option("--sim-output", sim_output, "simulator-frame vertex CSV path");
    convert->add_option("--deck", deck_path, "simulator deck path");
    convert->add_option("--mesh", mesh_path, "scene-frame OBJ mesh path");
    convert->add_option("--convention", convention,
                        "paper | identity | custom:sx,sy,sz,scale");
    convert->add_option("--precision", precision, "full | figure7");

    auto* invert = app.add_subcommand(
        "invert", "Scene-frame vertex CSV -> recovered plane-spec CSV");
    invert->add_option("--input", input, "vertex CSV")->required();
    invert->add_option("--output", output, "plane-spec CSV path")->required();
    invert->add_option("--tolerance", tolerance,
                       "relative edge-orthogonality tolerance");

    std::string plane_id, point_arg, sphere_arg, ellipsoid_arg;
    bool probe_csv = false;
    auto* probe_cmd = app.add_subcommand("probe", "Test a body against one plane");
    probe_cmd->add_option("--input", input, "plane-spec CSV")->required();
    probe_cmd->add_option("--id", plane_id, "row id (default: first row)");
    probe_cmd->add_option("--point", point_arg, "x,y,z");
    probe_cmd->add_option("--sphere", sphere_arg, "cx,cy,cz,r");
    probe_cmd->add_option("--ellipsoid", ellipsoid_arg,
                          "cx,cy,cz,rx,ry,rz[,pitch,yaw,roll]");
    probe_cmd->add_flag("--csv", probe_csv, "emit the report as CSV");

    auto* mesh_cmd = app.add_subcommand("emit-mesh",
                                        "Plane-spec CSV -> scene-frame OBJ mesh");
    mesh_cmd->add_option("--input", input, "plane-spec CSV")->required();
    mesh_cmd->add_option("--output", output, "OBJ path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (convert->parsed()) {
            if (output.empty() && sim_output.empty() && deck_path.empty() &&
                mesh_path.empty()) {
                std::cerr << "convert: at least one of --output, --sim-output, "
                             "--deck, --mesh is required\n";
                return kExitUsage;
            }
            Precision prec;
            if (precision == "full")
                prec = Precision::full;
            else if (precision == "figure7")
                prec = Precision::figure7;
            else {
                std::cerr << "--precision: expected full or figure7\n";
                return kExitUsage;
            }
            FrameConvention conv = parse_convention(convention);
            PlaneTable table = parse_plane_csv(read_file(input));
            auto [scene, sim] = build_vertex_tables(table, conv);
            if (!output.empty())
                write_file_atomic(output, emit_vertex_csv(scene, prec));
            if (!sim_output.empty())
                write_file_atomic(sim_output, emit_vertex_csv(sim, prec));
            if (!deck_path.empty())
                write_file_atomic(deck_path, emit_atb_deck(sim));
            if (!mesh_path.empty())
                write_file_atomic(mesh_path, emit_mesh(scene));
        } else if (invert->parsed()) {
            VertexTable vt = parse_vertex_csv(read_file(input));
            PlaneTable specs;
            for (const auto& row : vt.rows) {
                ContactPlane plane{row.r1, row.r2, row.r3, vt.frame};
                try {
                    specs.rows.push_back({row.id, invert_plane(plane, tolerance)});
                } catch (const std::exception& e) {
                    throw table_error("row '" + row.id + "': " + e.what(), row.id);
                }
            }
            write_file_atomic(output, emit_plane_csv(specs));
        } else if (probe_cmd->parsed()) {
            int bodies = (!point_arg.empty()) + (!sphere_arg.empty()) +
                         (!ellipsoid_arg.empty());
            if (bodies != 1) {
                std::cerr << "probe: exactly one of --point, --sphere, --ellipsoid "
                             "is required\n";
                return kExitUsage;
            }
            PlaneTable table = parse_plane_csv(read_file(input));
            if (table.rows.empty())
                throw table_error("probe: input table has no rows");
            const PlaneTable::Row* row = &table.rows.front();
            if (!plane_id.empty()) {
                row = nullptr;
                for (const auto& r : table.rows)
                    if (r.id == plane_id)
                        row = &r;
                if (!row)
                    throw table_error("probe: no row with id '" + plane_id + "'",
                                      plane_id);
            }
            ContactPlane plane = vertices_general(row->spec);

            ProbeBody body;
            if (!point_arg.empty()) {
                auto v = parse_number_list(point_arg, 3, 3, "--point");
                body = ProbeBody::point({v[0], v[1], v[2]});
            } else if (!sphere_arg.empty()) {
                auto v = parse_number_list(sphere_arg, 4, 4, "--sphere");
                body = ProbeBody::sphere({v[0], v[1], v[2]}, v[3]);
            } else {
                auto v = parse_number_list(ellipsoid_arg, 6, 9, "--ellipsoid");
                while (v.size() < 9)
                    v.push_back(0.0);
                body = ProbeBody::ellipsoid({v[0], v[1], v[2]}, {v[3], v[4], v[5]},
                                            v[6], v[7], v[8]);
            }
            print_probe_report(probe(body, plane), probe_csv);
        } else if (mesh_cmd->parsed()) {
            PlaneTable table = parse_plane_csv(read_file(input));
            auto [scene, sim] = build_vertex_tables(table, FrameConvention::identity());
            write_file_atomic(output, emit_mesh(scene));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
