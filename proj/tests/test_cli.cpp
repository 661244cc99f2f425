#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = ATBGEO_CLI_PATH;
const std::string kData = ATBGEO_DATA_DIR;

int run(const std::string& args) {
    int rc = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("atbgeo_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("convert reproduces the golden reference outputs") {
    TempDir tmp;
    std::string scene = (tmp.path / "scene.csv").string();
    std::string sim = (tmp.path / "sim.csv").string();
    int rc = run("convert --input " + kData + "/figure7.csv --output " + scene +
                 " --sim-output " + sim + " --convention paper --precision figure7");
    CHECK(rc == 0);
    CHECK(slurp(scene) == slurp(kData + "/figure7_scene_golden.csv"));
    CHECK(slurp(sim) == slurp(kData + "/figure7_sim_golden.csv"));
}

TEST_CASE("convert is deterministic across runs") {
    TempDir tmp;
    std::string base = "convert --input " + kData +
                       "/figure7.csv --convention paper --precision full";
    for (int i = 0; i < 2; ++i) {
        std::string sfx = std::to_string(i);
        int rc = run(base + " --output " + (tmp.path / ("s" + sfx + ".csv")).string() +
                     " --sim-output " + (tmp.path / ("m" + sfx + ".csv")).string() +
                     " --deck " + (tmp.path / ("d" + sfx + ".deck")).string() +
                     " --mesh " + (tmp.path / ("o" + sfx + ".obj")).string());
        CHECK(rc == 0);
    }
    CHECK(slurp(tmp.path / "s0.csv") == slurp(tmp.path / "s1.csv"));
    CHECK(slurp(tmp.path / "m0.csv") == slurp(tmp.path / "m1.csv"));
    CHECK(slurp(tmp.path / "d0.deck") == slurp(tmp.path / "d1.deck"));
    CHECK(slurp(tmp.path / "o0.obj") == slurp(tmp.path / "o1.obj"));
}

TEST_CASE("convert accepts an empty-but-headed table") {
    TempDir tmp;
    spit(tmp.path / "empty.csv", "id,x,y,z,length,height,pitch,yaw,roll\n");
    std::string out = (tmp.path / "out.csv").string();
    int rc = run("convert --input " + (tmp.path / "empty.csv").string() +
                 " --output " + out);
    CHECK(rc == 0);
    CHECK(slurp(out) == "id,x1,y1,z1,x2,y2,z2,x3,y3,z3\n");
}

TEST_CASE("invert round-trips the emitted scene table") {
    TempDir tmp;
    std::string scene = (tmp.path / "scene.csv").string();
    std::string back = (tmp.path / "back.csv").string();
    CHECK(run("convert --input " + kData + "/figure7.csv --output " + scene +
              " --convention paper --precision full") == 0);
    CHECK(run("invert --input " + scene + " --output " + back) == 0);

    std::string text = slurp(back);
    CHECK(text.rfind("id,x,y,z,length,height,pitch,yaw,roll\n", 0) == 0);
    // row 1 recovered near the fixture values
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    CHECK(cell == "1");
    double vals[8];
    for (double& v : vals) {
        std::getline(row, cell, ',');
        v = std::stod(cell);
    }
    CHECK(vals[0] == doctest::Approx(8.20).epsilon(1e-6));
    CHECK(vals[2] == doctest::Approx(1.10).epsilon(1e-6));
    CHECK(vals[3] == doctest::Approx(1.00).epsilon(1e-6));
    CHECK(vals[4] == doctest::Approx(5.48).epsilon(1e-6));
    CHECK(vals[5] == doctest::Approx(86.0).epsilon(1e-6));
}

TEST_CASE("usage errors exit 2, data errors exit 1 with no partial output") {
    TempDir tmp;
    CHECK(run("frobnicate") == 2);
    CHECK(run("convert") == 2);  // missing --input
    CHECK(run("convert --input " + kData + "/figure7.csv") == 2);  // no outputs

    spit(tmp.path / "bad.csv",
         "id,x,y,z,length,height,pitch\n1,0,0,0,1,1,0\n2,0,0,0,0,1,0\n");
    std::string out = (tmp.path / "out.csv").string();
    CHECK(run("convert --input " + (tmp.path / "bad.csv").string() + " --output " +
              out) == 1);
    CHECK_FALSE(fs::exists(out));

    CHECK(run("convert --input " + (tmp.path / "missing.csv").string() +
              " --output " + out) == 1);
}

TEST_CASE("deck emission requires the simulator frame data path") {
    TempDir tmp;
    std::string deck = (tmp.path / "out.deck").string();
    CHECK(run("convert --input " + kData + "/figure7.csv --deck " + deck +
              " --convention paper") == 0);
    std::string text = slurp(deck);
    CHECK(text.rfind("# atbgeo contact-plane deck, format 1\n", 0) == 0);
    CHECK(text.find("# plane 1\n") != std::string::npos);
    CHECK(text.find("# plane 5\n") != std::string::npos);
}

TEST_CASE("probe subcommand reports contact for a body under the hood plane") {
    int rc = std::system((kCli + " probe --input " + kData +
                          "/figure7.csv --id 3 --sphere 5.1,0,3.5,1.5 --csv "
                          ">/dev/null 2>&1")
                             .c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    CHECK(run("probe --input " + kData + "/figure7.csv --id nope --point 0,0,0") == 1);
    CHECK(run("probe --input " + kData + "/figure7.csv") == 2);  // no body
}

TEST_CASE("emit-mesh writes an OBJ quad per plane") {
    TempDir tmp;
    std::string obj = (tmp.path / "planes.obj").string();
    CHECK(run("emit-mesh --input " + kData + "/figure7.csv --output " + obj) == 0);
    std::string text = slurp(obj);
    size_t nv = 0, nf = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0) ++nv;
        if (line.rfind("f ", 0) == 0) ++nf;
    }
    CHECK(nv == 20);
    CHECK(nf == 5);
}
