#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kWork = fs::temp_directory_path() / "octlab_cli_test";

int run(const std::string& args) {
    const std::string cmd = std::string(OCTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

struct Workspace {
    Workspace() {
        fs::remove_all(kWork);
        fs::create_directories(kWork);
    }
};

[[maybe_unused]] const Workspace workspace;

}  // namespace

TEST_CASE("enumerate writes the class and is byte-deterministic") {
    const fs::path dir = kWork / "enum";
    REQUIRE(run("enumerate --out " + dir.string()) == 0);

    int tables = 0;
    for (int i = 0; i < 16; ++i) {
        tables += fs::exists(dir / ("O" + std::to_string(i) + ".table")) ? 1 : 0;
    }
    CHECK(tables == 16);

    const json summary = json::parse(slurp(dir / "summary.json"));
    CHECK(summary["count"] == 16);
    CHECK(summary["chirality_classes"][0].size() == 8);
    CHECK(summary["chirality_classes"][1].size() == 8);
    CHECK(summary["group_check"]["passed"] == true);

    const std::string first = slurp(dir / "summary.json") + slurp(dir / "O7.table");
    const fs::path dir2 = kWork / "enum2";
    REQUIRE(run("enumerate --out " + dir2.string()) == 0);
    CHECK(first == slurp(dir2 / "summary.json") + slurp(dir2 / "O7.table"));
}

TEST_CASE("enumerate --candidates dumps all 128 flags") {
    const fs::path dir = kWork / "cand";
    REQUIRE(run("enumerate --candidates --out " + dir.string()) == 0);
    const json c = json::parse(slurp(dir / "candidates.json"));
    REQUIRE(c.size() == 128);
    int passing = 0;
    for (const auto& e : c) passing += e["alternative"].get<bool>() ? 1 : 0;
    CHECK(passing == 16);
}

TEST_CASE("verify exits cleanly and is deterministic") {
    const fs::path out1 = kWork / "verify1.json";
    const fs::path out2 = kWork / "verify2.json";
    REQUIRE(run("verify --suite lorentz --table O0 --out " + out1.string()) == 0);
    REQUIRE(run("verify --suite lorentz --table O0 --out " + out2.string()) == 0);
    CHECK(slurp(out1) == slurp(out2));

    const json r = json::parse(slurp(out1));
    CHECK(r["passed"] == true);
    CHECK(r["reports"][0]["total_cases"] == 256);

    CHECK(run("verify --suite nosuch") == 2);
}

TEST_CASE("verify accepts a codec file for --table") {
    const fs::path dir = kWork / "enum_for_file";
    REQUIRE(run("enumerate --out " + dir.string()) == 0);
    const fs::path out = kWork / "verify_file.json";
    REQUIRE(run("verify --suite fourtuple --table " + (dir / "O3.table").string() + " --out " +
                out.string()) == 0);
    const json r = json::parse(slurp(out));
    CHECK(r["passed"] == true);
    CHECK(r["reports"][0]["table"] == "O3");
}

TEST_CASE("verify pauli surfaces the coefficient warning") {
    const fs::path out = kWork / "pauli.json";
    REQUIRE(run("verify --suite pauli --out " + out.string()) == 0);
    const json r = json::parse(slurp(out));
    CHECK(r["passed"] == true);
    REQUIRE(r["reports"][0].contains("warnings"));
    CHECK(r["reports"][0]["warnings"].size() == 1);
}

TEST_CASE("solve runs each case") {
    write(kWork / "complex.json", R"({
      "table": "C", "case": "complex",
      "factors": [{"kind": "active", "t": 1.0, "a": -1.0}],
      "particle": {"t": 1.0, "M": 0, "sign": "+"}
    })");
    const fs::path out = kWork / "complex.out.json";
    REQUIRE(run("solve --config " + (kWork / "complex.json").string() + " --out " + out.string()) == 0);
    const json r = json::parse(slurp(out));
    CHECK(std::abs(r["d_tilde"].get<double>() - 1.5707963267948966) <= 1e-10);
    CHECK(r["residual_fd"].get<double>() <= 1e-6);
    CHECK(r["symmetry_class"] == "U1");

    write(kWork / "local.json", R"({
      "table": "H0",
      "factors": [
        {"kind": "passive", "theta": [0,1,0,0], "t": 1.0, "a": 0.0, "N": 0},
        {"kind": "passive", "theta": [0,0,1,0], "t": 1.0, "a": 0.0, "N": 0}
      ]
    })");
    const fs::path lout = kWork / "local.out.json";
    REQUIRE(run("solve --config " + (kWork / "local.json").string() + " --out " + lout.string()) == 0);
    const json lr = json::parse(slurp(lout));
    CHECK(lr["symmetry_class"] == "SU2");
    CHECK(lr["residual_fd"].get<double>() <= 1e-8);

    write(kWork / "octo.json", R"({
      "table": "O0",
      "derivation": {"u": [0,1,0,0,0,0,0.5,0], "v": [0,0,-0.25,0,1,0,0,0]},
      "factors": [
        {"kind": "passive", "theta": [0,1,0,0,0,0,0,0], "t": 0.191, "a": 0.0, "N": 0},
        {"kind": "passive", "theta": [0,0,1,0,0,0,0,0], "t": 0.127, "a": 0.0, "N": 0},
        {"kind": "passive", "theta": [0,0,0,0,1,0,0,0], "t": 0.095, "a": 0.0, "N": 0}
      ]
    })");
    const fs::path oout = kWork / "octo.out.json";
    REQUIRE(run("solve --config " + (kWork / "octo.json").string() + " --out " + oout.string()) == 0);
    const json octo = json::parse(slurp(oout));
    CHECK(octo["symmetry_class"] == "G2-type");
    CHECK(octo["reconstruction_residual"].get<double>() <= 1e-10);
    CHECK(octo["residual_fd"].get<double>() <= 1e-8);
}

TEST_CASE("solve accepts inline table definitions") {
    write(kWork / "inline.json", R"({
      "table": {"dim": 4, "id": "q", "triplets": [[1, 2, 3, 1]]},
      "factors": [
        {"kind": "passive", "theta": [0,1,0,0], "t": 0.4, "a": 0.0, "N": 0},
        {"kind": "passive", "theta": [0,0,0,1], "t": 0.3, "a": 0.0, "N": 1}
      ]
    })");
    const fs::path out = kWork / "inline.out.json";
    REQUIRE(run("solve --config " + (kWork / "inline.json").string() + " --out " + out.string()) == 0);
    const json r = json::parse(slurp(out));
    CHECK(r["table"] == "q");
    CHECK(r["theta_tilde"].size() == 4);
    CHECK(r["residual_fd"].get<double>() <= 1e-8);
}

TEST_CASE("solve rejects malformed configs") {
    write(kWork / "broken.json", "{ not json");
    CHECK(run("solve --config " + (kWork / "broken.json").string()) == 2);

    write(kWork / "missing.json", R"({"table": "C", "case": "complex", "factors": []})");
    CHECK(run("solve --config " + (kWork / "missing.json").string()) == 2);

    CHECK(run("solve --config " + (kWork / "nonexistent.json").string()) == 2);
    CHECK(run("solve") == 2);  // missing required option
}

TEST_CASE("invariance verdict drives the exit code") {
    write(kWork / "inv_pos.json", R"({
      "poly": {"factors": [{"kind": "passive", "theta": [0,0,0,0,0,1,0,0], "t": 1.0, "a": 0.0, "N": 0}]},
      "operator": {"axis": [0,0,0,0,0,1,0,0]}
    })");
    const fs::path pout = kWork / "inv_pos.out.json";
    REQUIRE(run("invariance --config " + (kWork / "inv_pos.json").string() + " --out " + pout.string()) == 0);
    const json pos = json::parse(slurp(pout));
    CHECK(pos["invariant"] == true);
    CHECK(pos["lambdas"].size() == 16);
    CHECK(pos["witness"] == -1);

    write(kWork / "inv_neg.json", R"({
      "poly": {"factors": [
        {"kind": "constant", "theta": [0,1,0,0,0,0,0,0]},
        {"kind": "constant", "theta": [0,0,0,0,1,0,0,0]},
        {"kind": "passive", "theta": [0,0,0,0,0,1,0,0], "t": 1.0, "a": 0.0, "N": 0}
      ]},
      "operator": {"axis": [0,0,0,0,0,1,0,0]}
    })");
    const fs::path nout = kWork / "inv_neg.out.json";
    CHECK(run("invariance --config " + (kWork / "inv_neg.json").string() + " --out " + nout.string()) == 1);
    const json neg = json::parse(slurp(nout));
    CHECK(neg["invariant"] == false);
    CHECK(neg["witness"] == 2);

    write(kWork / "inv_orth.json", R"({
      "poly": {"factors": [{"kind": "passive", "theta": [0,1,0,0,0,0,0,0], "t": 1.0, "a": 0.0, "N": 0}]},
      "phi": {"factors": [{"kind": "passive", "theta": [0,0,0,0,1,0,0,0], "t": 0.6, "a": 0.0, "N": 0}]},
      "operator": {"axis": [0,1,0,0,0,0,0,0]}
    })");
    const fs::path oout = kWork / "inv_orth.out.json";
    REQUIRE(run("invariance --config " + (kWork / "inv_orth.json").string() + " --out " + oout.string()) == 0);
    const json orth = json::parse(slurp(oout));
    CHECK(orth["invariant"] == true);
    CHECK(orth["bracket_residual"].get<double>() <= 1e-10);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
}
