#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out; // stdout and stderr merged
};

std::filesystem::path temp_file(const std::string& content) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("hhcalc_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                 ".json");
    std::ofstream(path) << content;
    return path;
}

CliResult run_cli(const std::string& args, const std::string& stdin_text = {}) {
    std::string cmd = std::string(HHCALC_BIN) + " " + args;
    std::filesystem::path in;
    if (!stdin_text.empty()) {
        in = temp_file(stdin_text);
        cmd += " < " + in.string();
    }
    cmd += " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    if (!in.empty()) std::filesystem::remove(in);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("hodge subcommand emits the diamond") {
    CliResult r = run_cli("hodge --weights 1^6 --degree 4 --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["dim"] == 4);
    // middle antidiagonal p + q = 4
    CHECK(j["h"][4][0] == 0);
    CHECK(j["h"][3][1] == 21);
    CHECK(j["h"][2][2] == 142);
    CHECK(j["h"][1][3] == 21);
    CHECK(j["h"][0][4] == 0);
    CHECK(j.contains("assumes"));

    CliResult cover = run_cli("hodge --weights 1^6,2 --degree 4 --format json");
    REQUIRE(cover.code == 0);
    json c = json::parse(cover.out);
    CHECK(c["dim"] == 5);
    CHECK(c["h"][4][1] == 1);
    CHECK(c["h"][3][2] == 90);
    CHECK(c["h"][2][3] == 90);
    CHECK(c["h"][1][4] == 1);
    CHECK(c["h"][5][0] == 0);
}

TEST_CASE("hodge text output is the default") {
    CliResult r = run_cli("hodge --weights 1,1,1,1 --degree 4");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("20") != std::string::npos); // K3 h^{1,1}
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("hh subcommand computes homology and the Calabi-Yau shift") {
    CliResult r = run_cli("hh --weights 1,1,1,1 --degree 4 --cy 2 --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["hh_homology"]["dims"] == json({{"-2", 1}, {"0", 22}, {"2", 1}}));
    CHECK(j["hh_homology"]["kind"] == "homology");
    CHECK(j["hh_cohomology"]["dims"] == json({{"0", 1}, {"2", 22}, {"4", 1}}));

    // diamond JSON over stdin
    CliResult d = run_cli("hodge --weights 1,1,1,1 --degree 4 --format json");
    REQUIRE(d.code == 0);
    CliResult via = run_cli("hh --diamond - --format json", d.out);
    REQUIRE(via.code == 0);
    CHECK(json::parse(via.out)["hh_homology"]["dims"] == json({{"-2", 1}, {"0", 22}, {"2", 1}}));

    CliResult missing = run_cli("hh --format json");
    CHECK(missing.code == 2);
}

TEST_CASE("usage and schema problems exit 2, domain errors exit 1") {
    CHECK(run_cli("hodge --weights 1^x --degree 4").code == 2);
    CHECK(run_cli("hodge --degree 4").code == 2);      // missing required option
    CHECK(run_cli("nonsense").code == 2);              // unknown subcommand
    CHECK(run_cli("sod residual /nonexistent.json").code == 2);
    CHECK(run_cli("sod residual -", "{not json").code == 2);

    CHECK(run_cli("hodge --weights 2,3 --degree 7").code == 1);  // not quasi-smooth
    CHECK(run_cli("hodge --weights 2,2 --degree 2").code == 1);  // degree not above weight
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("sod residual reads a spec from stdin") {
    const char* spec = R"({
        "total": {"dims": {"-2": 21, "0": 146, "2": 21}, "kind": "homology"},
        "exceptional_count": 2
    })";
    CliResult r = run_cli("sod residual - --format json", spec);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["dims"] == json({{"-2", 21}, {"0", 144}, {"2", 21}}));
    CHECK(j["kind"] == "homology");

    // inconsistent totals are domain errors
    CliResult bad = run_cli("sod residual - --format json",
                            R"({"total": {"dims": {"0": 1}, "kind": "homology"},
                                "exceptional_count": 2})");
    CHECK(bad.code == 1);
}

TEST_CASE("split subcommand bounds both unknowns") {
    auto path = temp_file(R"({
        "known_cg": {"dims": {"0": 1, "2": 90, "3": 2, "4": 90, "6": 1}},
        "hh_hom":   {"dims": {"-2": 21, "0": 144, "2": 21}},
        "n": 3
    })");
    CliResult r = run_cli("split " + path.string() + " --format json");
    std::filesystem::remove(path);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["hh_coh"]["lo"]["dims"] == json({{"0", 1}, {"2", 90}, {"4", 90}, {"6", 1}}));
    CHECK(j["hh_coh"]["hi"]["dims"]["3"] == 2);
    CHECK(j["invariant_hom"]["lo"]["dims"] == json::object());
    CHECK(j["invariant_hom"]["hi"]["dims"] == json({{"0", 2}}));
}

TEST_CASE("serre subcommand reports both derived descriptors") {
    CliResult r = run_cli("serre --shift-n 3 --twist-q 2 --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["invariant_serre"] == json({{"shift_n", 3}, {"twist_order_q", 1}}));
    CHECK(j["fractional_cy"] == json({{"p", 6}, {"q", 2}}));

    CliResult text = run_cli("serre --shift-n 3 --twist-q 2");
    REQUIRE(text.code == 0);
    CHECK(text.out.find("S^2 = [6]") != std::string::npos);
}

TEST_CASE("orbifold subcommand aggregates fixed-locus data") {
    CliResult r = run_cli("orbifold - --format json", R"([
        {"label": "1", "codim": 0, "table": {"0,0": 1},
         "invariant": {"lo": {"dims": {"0": 1}}, "hi": {"dims": {"0": 1}}}},
        {"label": "g", "codim": 1, "table": {"0,0": 2}}
    ])");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["lo"]["dims"] == json({{"0", 1}}));
    CHECK(j["hi"]["dims"] == json({{"0", 1}, {"1", 2}}));
}

TEST_CASE("verify subcommand exit codes track the report") {
    CliResult ok = run_cli("verify quartic-fourfold --format json");
    REQUIRE(ok.code == 0);
    json j = json::parse(ok.out);
    CHECK(j["all_passed"] == true);

    CliResult unknown = run_cli("verify no-such");
    CHECK(unknown.code == 1);
    CHECK(unknown.out.find("no-such") != std::string::npos);
}
