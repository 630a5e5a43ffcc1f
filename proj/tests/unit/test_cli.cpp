#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/app.hpp"
#include "cli/config.hpp"
#include "cli/table.hpp"

using rectiforce::cli::run_cli;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "rectiforce");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

double field(const std::string& row, int index)
{
    std::istringstream in(row);
    std::string cell;
    for (int i = 0; i <= index; ++i) std::getline(in, cell, ',');
    return std::stod(cell);
}

std::filesystem::path write_temp(const std::string& name, const std::string& body)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("exit codes")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"force-profile", "--bogus"}).code == 2);
    CHECK(invoke({"force-profile", "--points", "0"}).code == 2);
    CHECK(invoke({"force-profile", "--zmin", "3", "--zmax", "1"}).code == 2);
    CHECK(invoke({"force-profile", "--model", "copper"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("selftest passes and detects a wrong branch")
{
    const auto ok = invoke({"selftest"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("selftest passed") != std::string::npos);
    const auto bad = invoke({"selftest", "--perturb-branch"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("ideal profile as CSV")
{
    const auto r = invoke({"force-profile", "--model", "ideal", "--zmin", "0.01", "--zmax", "50",
                           "--points", "5", "--log"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "model,theta,zeta,f_reduced,f_norm,err_estimate,converged");
    CHECK(rows[1].rfind("ideal,", 0) == 0);
    CHECK(std::abs(field(rows[1], 4) - 0.125047) < 1e-6);
    CHECK(std::abs(field(rows[5], 4) - 0.245147) < 1e-6);
}

TEST_CASE("JSON output embeds the resolved config")
{
    const auto r = invoke({"prefactor", "--theta-points", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("config").at("command") == "prefactor");
    REQUIRE(doc.at("rows").size() == 3);
    for (const auto& row : doc.at("rows")) {
        CHECK(row.contains("c_closed_norm"));
        CHECK(row.at("converged") == true);
    }
}

TEST_CASE("config files and flag overrides")
{
    const auto cfg = write_temp("rectiforce_test_cfg.json",
                                R"({"command": "force-profile", "model": "ideal",
                                    "z": {"min": 1, "max": 2, "points": 2}})");
    const auto base = invoke({"force-profile", "--config", cfg.string()});
    REQUIRE(base.code == 0);
    CHECK(lines(base.out).size() == 3);
    const auto overridden = invoke({"force-profile", "--config", cfg.string(), "--points", "4"});
    REQUIRE(overridden.code == 0);
    CHECK(lines(overridden.out).size() == 5);

    const auto bad = write_temp("rectiforce_test_bad.json", R"({"modle": "ideal"})");
    CHECK(invoke({"force-profile", "--config", bad.string()}).code == 2);
}

TEST_CASE("run executes every entry of a runs array")
{
    const auto out = std::filesystem::temp_directory_path() / "rectiforce_test_run";
    std::filesystem::create_directories(out);
    const auto cfg = write_temp("rectiforce_test_runs.json", R"({
        "model": "ideal",
        "z": {"min": 1, "max": 2, "points": 2},
        "runs": [
            {"command": "force-profile", "out": ")" + (out / "a.csv").string() + R"("},
            {"command": "prefactor", "prefactor": {"theta": {"points": 2}}, "out": ")" + (out / "b.csv").string() + R"("}
        ]})");
    const auto r = invoke({"run", "--config", cfg.string()});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(out / "a.csv"));
    CHECK(std::filesystem::exists(out / "b.csv"));
}

TEST_CASE("estimates report both routes")
{
    const auto r = invoke({"estimates"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows[0] == "quantity,route,value,unit");
    CHECK(r.out.find("direct") != std::string::npos);
    CHECK(r.out.find("factored") != std::string::npos);
}

TEST_CASE("table formatting")
{
    using namespace rectiforce::cli;
    Table t{{"a", "b", "c"}, {}};
    t.add_row({1.5, std::nan(""), true});
    std::ostringstream csv;
    write_csv(t, csv);
    CHECK(csv.str() == "a,b,c\n1.50000000e+00,nan,1\n");
    const auto j = rows_json(t);
    CHECK(j[0].at("b").is_null());
}
