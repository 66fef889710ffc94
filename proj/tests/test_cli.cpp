#include "cli.hpp"

#include "tqmem/serialize.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"tqmem"};
    argv.insert(argv.end(), args);
    std::ostringstream out;
    std::ostringstream err;
    const int code = tqm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("cli: preset sweep to stdout") {
    const auto r = run({"sweep", "--preset", "fig3-f-sub", "--steps", "5"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.rfind(std::string(tqm::kCsvHeader) + "\n", 0) == 0);
    CHECK(tqm::parse_csv(r.out).size() == 5);
}

TEST_CASE("cli: explicit parameters") {
    const auto r = run({"sweep", "--env", "bosonic", "--s", "2.5", "--coupling", "0.1", "--c1", "1",
                        "--c2", "-1", "--c3", "1", "--t-max", "5", "--steps", "3"});
    CHECK(r.code == 0);
    const auto samples = tqm::parse_csv(r.out);
    REQUIRE(samples.size() == 3);
    CHECK(samples.back().t == 5.0);

    // equivalent to the preset with overridden grid
    const auto p = run({"sweep", "--preset", "fig4-b-super", "--t-max", "5", "--steps", "3"});
    CHECK(p.out == r.out);
}

TEST_CASE("cli: flags override preset values") {
    const auto base = run({"sweep", "--preset", "fig3-f-sub", "--steps", "3"});
    const auto strong = run({"sweep", "--preset", "fig3-f-sub", "--steps", "3", "--coupling", "0.3"});
    REQUIRE(strong.code == 0);
    CHECK(tqm::parse_csv(strong.out).back().alpha < tqm::parse_csv(base.out).back().alpha);
}

TEST_CASE("cli: JSON output") {
    const auto r = run({"sweep", "--preset", "fig4-f-ohmic", "--steps", "4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(tqm::parse_json(r.out).size() == 4);
    CHECK(r.out.find("\"s\": 1.0") != std::string::npos);
}

TEST_CASE("cli: --out writes the same bytes as stdout") {
    const auto path = std::filesystem::path(TQMEM_TEST_TMP) / "cli_out_test.csv";
    const std::string path_str = path.string();
    const auto to_file = run({"sweep", "--preset", "fig3-b-ohmic", "--steps", "7", "--out", path_str.c_str()});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    const auto to_stdout = run({"sweep", "--preset", "fig3-b-ohmic", "--steps", "7", "--out", "-"});
    CHECK(read_file(path) == to_stdout.out);
    std::filesystem::remove(path);
}

TEST_CASE("cli: presets subcommand") {
    const auto r = run({"presets"});
    CHECK(r.code == 0);
    for (const char* name : {"fig3-f-sub", "fig3-b-super", "fig4-f-ohmic", "fig4-b-super"}) {
        CHECK(r.out.find(name) != std::string::npos);
    }
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);
}

TEST_CASE("cli: validation failures exit with 1") {
    const auto check = [](Result r, const char* needle) {
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK(r.err.find(needle) != std::string::npos);
    };
    check(run({"sweep", "--env", "fermionic", "--s", "1", "--coupling", "0.1", "--c1", "1", "--c2", "1",
               "--c3", "1"}),
          "c1/c2/c3");
    check(run({"sweep", "--preset", "nope"}), "preset");
    check(run({"sweep", "--env", "fermionic", "--s", "1"}), "coupling");
    check(run({"sweep", "--preset", "fig3-f-sub", "--steps", "1"}), "steps");
    check(run({"sweep", "--preset", "fig3-f-sub", "--s", "-1"}), "s:");
    check(run({"sweep", "--preset", "fig3-f-sub", "--env", "photonic"}), "env");
    check(run({"sweep", "--preset", "fig3-f-sub", "--format", "xml"}), "format");
    check(run({"sweep", "--preset", "fig3-f-sub", "--steps", "3", "--out", "/nonexistent-dir/x.csv"}),
          "/nonexistent-dir/x.csv");
    CHECK(run({"sweep", "--steps", "abc"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("cli: numerical failure exits with 2") {
    const auto r = run({"sweep", "--preset", "fig3-f-sub", "--t-max", "1e6", "--steps", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("t=") != std::string::npos);
}

TEST_CASE("cli: help exits with 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep") != std::string::npos);
}
