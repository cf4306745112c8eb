#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "specgap/cli.hpp"
#include "specgap/constructions.hpp"
#include "specgap/graph6.hpp"

using namespace specgap;
using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// Scratch file helper; contents written before the CLI reads them.
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& contents) {
        path = std::filesystem::temp_directory_path() / ("specgap_test_" + name);
        std::ofstream f(path, std::ios::binary);
        f << contents;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("construct emits graph6") {
    auto r = run({"construct", "--family", "double_kite", "--params", "r=8,s=6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == graph6_encode(double_kite(8, 6)) + "\n");

    auto bad = run({"construct", "--family", "double_kite", "--params", "r=0,s=6"});
    CHECK(bad.exit_code == 2);

    auto unknown = run({"construct", "--family", "nonagon", "--params", "n=9"});
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("analyze a K2 edge list") {
    TempFile input("k2.txt", "2 1\n0 1\n");
    auto r = run({"analyze", "--input", input.str()});
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["lambda1"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(j["relaxation_time"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(j["bounds"]["improved"].get<double>() == 2.0);
}

TEST_CASE("analyze auto-detects graph6 input") {
    TempFile input("p4.g6", graph6_encode(path_graph(4)) + "\n");
    auto r = run({"analyze", "--input", input.str()});
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["m"] == 3);
    CHECK(j["lambda1"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("construct piped into analyze matches the stored fixture") {
    auto constructed = run({"construct", "--family", "double_kite", "--params", "r=8,s=6"});
    REQUIRE(constructed.exit_code == 0);

    std::ifstream fixture(std::string(FIXTURES_DIR) + "/dk_8_6.g6", std::ios::binary);
    REQUIRE(fixture.good());
    std::stringstream buf;
    buf << fixture.rdbuf();
    CHECK(constructed.out == buf.str());

    TempFile from_cli("dk_cli.g6", constructed.out);
    TempFile from_fixture("dk_fixture.g6", buf.str());
    auto a = run({"analyze", "--input", from_cli.str()});
    auto b = run({"analyze", "--input", from_fixture.str()});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("bounds report in both formats") {
    TempFile input("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    auto j = run({"bounds", "--input", input.str()});
    REQUIRE(j.exit_code == 0);
    auto parsed = json::parse(j.out);
    CHECK(parsed["landau_odlyzko"].get<double>() == 1.0 / 24.0);
    CHECK(parsed["chung"].get<double>() == 1.0 / 16.0);
    CHECK(parsed["improved"].get<double>() == 0.25);

    auto c = run({"bounds", "--input", input.str(), "--format", "csv"});
    REQUIRE(c.exit_code == 0);
    CHECK(c.out.rfind("graph6,n,m,vol,diam,lambda1,lo,chung,improved,harmonic,min_slack\n", 0) ==
          0);
}

TEST_CASE("search output is byte-identical across worker counts") {
    auto w1 = run({"search", "--n", "5", "--workers", "1", "--classes"});
    auto w4 = run({"search", "--n", "5", "--workers", "4", "--classes"});
    REQUIRE(w1.exit_code == 0);
    REQUIRE(w4.exit_code == 0);
    CHECK(w1.out == w4.out);

    auto j = json::parse(w1.out);
    CHECK(j["n"] == 5);
    CHECK(j["graphs_scanned"] == 728);
    CHECK(j["distinct_classes"] == 21);
}

TEST_CASE("sweep csv schema") {
    auto r = run({"sweep-dk", "--n", "10", "--format", "csv"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,r,s,lambda1,scaled\n", 0) == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 4);  // header + r = 2..5
}

TEST_CASE("verify-prop21 smoke") {
    auto r = run({"verify-prop21", "--trials", "25", "--max-n", "6", "--seed", "3"});
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["trials"] == 25);
    CHECK(j["objective_failures"] == 0);
    CHECK(j["two_valued_failures"] == 0);
    CHECK(j["interior_failures"] == 0);
}

TEST_CASE("audit json and csv") {
    auto r = run({"audit", "--exhaustive-max", "4", "--random-count", "5", "--seed", "1"});
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["graphs_audited"] == 1 + 4 + 38 + 5);
    CHECK(j["violations"].empty());

    auto c1 = run({"audit", "--exhaustive-max", "3", "--format", "csv", "--workers", "1"});
    auto c4 = run({"audit", "--exhaustive-max", "3", "--format", "csv", "--workers", "4"});
    REQUIRE(c1.exit_code == 0);
    CHECK(c1.out == c4.out);
    CHECK(c1.out.rfind("graph6,n,m,vol,diam,lambda1,lo,chung,improved,harmonic,min_slack\n", 0) ==
          0);
}

TEST_CASE("gap-curve csv") {
    auto r = run({"gap-curve", "--family", "double_kite", "--balanced", "--n-list", "9,12,18",
                  "--format", "csv"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,r,s,lambda1,ratio\n", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"search"}).exit_code == 2);          // missing --n
    CHECK(run({"search", "--n", "9"}).exit_code == 2);  // TooLarge
    TempFile garbage("bad.g6", "\x01\x02\x03");
    CHECK(run({"analyze", "--input", garbage.str()}).exit_code == 2);
}

TEST_CASE("sampling failure exits 3") {
    auto r = run({"construct", "--family", "random_connected", "--params", "n=60,p=0.0000001"});
    CHECK(r.exit_code == 3);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).exit_code == 0);
}
