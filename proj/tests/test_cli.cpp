#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qboost_cli_" + name);
}

void write(const std::filesystem::path& path, const std::string& text) {
    std::ofstream(path) << text;
}

}  // namespace

TEST_CASE("classical point") {
    const auto r = cli::run("classical --p 0.5 --qr 0.8 --qn 0.2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("classical,0.5,0.80000000000000004,0.20000000000000001,0.5,") !=
          std::string::npos);
}

TEST_CASE("quantum point as json") {
    const auto r = cli::run("--format json quantum --phi 1.0471975511965976 --alpha 0.78539816339744828");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("a").get<double>() == doctest::Approx(1.183013).epsilon(1e-6));
    CHECK(j.at("delta").get<double>() == doctest::Approx(0.138071).epsilon(1e-5));
}

TEST_CASE("global flags also work after the subcommand") {
    const auto before = cli::run("--seed 4 --format json simulate --model classical --n-per-arm 500");
    const auto after = cli::run("simulate --model classical --n-per-arm 500 --seed 4 --format json");
    REQUIRE(before.exit_code == 0);
    CHECK(before.out == after.out);
    CHECK(nlohmann::json::parse(before.out).at("config").at("seed") == 4);
}

TEST_CASE("estimate") {
    const auto good = scratch("good.txt");
    write(good, "# toy collection\n1000 500 400 100 500\n");
    const auto r = cli::run("--format json estimate " + good.string());
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("a").get<double>() == doctest::Approx(0.5));
    CHECK(j.at("delta").get<double>() == doctest::Approx(0.6));

    const auto bad = scratch("bad.txt");
    write(bad, "1000 500 600 100 500\n");
    CHECK(cli::run("estimate " + bad.string()).exit_code == 2);
    CHECK(cli::run("estimate " + scratch("missing.txt").string()).exit_code == 3);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("exit codes") {
    CHECK(cli::run("--help").exit_code == 0);
    CHECK(cli::run("").exit_code == 2);
    CHECK(cli::run("quantum --phi 4 --alpha 0").exit_code == 2);
    CHECK(cli::run("sweep --n-points 0").exit_code == 2);
    CHECK(cli::run("--format xml sweep").exit_code == 2);
    CHECK(cli::run("--out /nonexistent-dir/out.csv sweep --n-points 3").exit_code == 3);
}

TEST_CASE("sweep to file and plotdata") {
    const auto out = scratch("sweep.csv");
    REQUIRE(cli::run("--out " + out.string() + " sweep --model quantum --n-points 50").exit_code == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "model,param1,param2,param3,a,delta,accardi_defined,boost_defined");
    std::filesystem::remove(out);

    const auto plot = cli::run("plotdata --model classical --n-points 20");
    REQUIRE(plot.exit_code == 0);
    CHECK(plot.out.rfind("# a delta\n", 0) == 0);
}

TEST_CASE("simulate csv lists every arm") {
    const auto r = cli::run("simulate --model quantum --phi 0 --alpha 0 --n-per-arm 100");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("cond_on_relevant,100,100,100,false") != std::string::npos);
    CHECK(r.out.find("cond_on_non_relevant,,,1000000,true") != std::string::npos);
    CHECK(r.out.find("baseline_relevance,100,100,100,false") != std::string::npos);
}
