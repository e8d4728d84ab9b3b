#include "qe/cli.hpp"
#include "qe/registry.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qe;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(QE_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& body)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

} // namespace

TEST_CASE("golden outputs")
{
    struct Case {
        std::vector<std::string> args;
        std::string file;
        int code;
    };
    std::vector<Case> cases = {
        {{"mw", "--config", "builtin:A1~^8"}, "mw_a1x8.txt", kExitOk},
        {{"mw", "--config", "builtin:D8~", "--json"}, "mw_d8.json", kExitOk},
        {{"graph", "--config", "builtin:D4~^2"}, "graph_d4x2.txt", kExitOk},
        {{"blowdowns", "--config", "builtin:E8~"}, "blowdowns_e8.txt", kExitOk},
        {{"unexpected", "--char", "2", "--points", "builtin:fano", "--json"}, "unexpected_fano.json", kExitOk},
        {{"pencil", "--config", "builtin:A1~^2+D6~"}, "pencil_a1x2d6.txt", kExitOk},
    };
    for (const Case& c : cases) {
        CAPTURE(c.file);
        Run r = run(c.args);
        CHECK(r.code == c.code);
        CHECK(r.out == golden(c.file));
    }
}

TEST_CASE("json output parses")
{
    Run r = run({"mw", "--config", "builtin:A1~+E7~", "--json"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "mw");
    CHECK(j["paper_expected"] == 2);
}

TEST_CASE("input errors exit with code 2")
{
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"mw", "--config", "builtin:nope"}).code == kExitInputError);
    CHECK(run({"mw", "--config", "/nonexistent/config.json"}).code == kExitInputError);
    CHECK(run({"unexpected", "--char", "3", "--points", "builtin:fano"}).code == kExitInputError);
    CHECK(run({"pencil", "--generators", "x^3;", "--char", "2"}).code == kExitInputError);
    auto bad = temp_file("qe_bad_config.json", "{\"name\": \"x\", \"neg_two\": [\"l-12\"], \"fibers\": []}");
    CHECK(run({"mw", "--config", bad.string()}).code == kExitInputError);
}

TEST_CASE("custom inputs")
{
    const SurfaceConfiguration& d8 = find_config("D8~").config;
    nlohmann::json cj;
    cj["characteristic"] = 2;
    for (const DivisorClass& c : d8.neg_two)
        cj["neg_two"].push_back(format_label(c));
    for (const Fiber& f : d8.fibers) {
        cj["fibers"].push_back(f.members);
        cj["multiplicities"].push_back(f.marks);
    }
    auto cfg = temp_file("qe_d8.json", cj.dump());
    Run m = run({"mw", "--config", cfg.string(), "--json"});
    REQUIRE(m.code == kExitOk);
    CHECK(nlohmann::json::parse(m.out)["mw_order"] == 2);

    Run p = run({"pencil", "--generators", "x^3+y^2z;z^3", "--char", "2"});
    CHECK(p.code == kExitOk);
    CHECK(p.out.find("quasi-elliptic") != std::string::npos);
    auto pts = temp_file("qe_points.json",
                         R"([{"point": [1,0,0]}, {"point": [0,1,0]}, {"point": [0,0,1]}, {"point": [1,1,0]},
                            {"point": [1,0,1]}, {"point": [0,1,1]}, {"point": [1,1,1]}])");
    Run u = run({"unexpected", "--char", "2", "--points", pts.string(), "--json"});
    REQUIRE(u.code == kExitOk);
    auto j = nlohmann::json::parse(u.out);
    CHECK(j["unexpected"] == true);
    CHECK(j["witness_singularity"] == "cusp");
}

TEST_CASE("a mismatch against a builtin exits with code 1")
{
    CHECK(run({"blowdowns", "--config", "builtin:A2~^4"}).code == kExitMismatch);
}
