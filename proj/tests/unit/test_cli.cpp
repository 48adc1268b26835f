#include <doctest.h>

#ifdef HPLUS_HAVE_CLI

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hplus/cli/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = hplus::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("moment") {
    const auto r = run({"moment", "--flavor", "h", "--k", "4", "--n", "4", "--s", "2"});
    REQUIRE(r.code == hplus::cli::kSuccess);
    CHECK(parse(r)["value"] == "5/6");
}

TEST_CASE("partitions") {
    const auto r = run({"partitions", "--flavor", "h", "--k", "4"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["count"] == 3);
    CHECK(j["partitions"][1] == nlohmann::json::parse("[[1,4],[2,3]]"));
    const auto csv = run({"partitions", "--flavor", "s", "--k", "3", "--format", "csv"});
    CHECK(csv.out.rfind("index,blocks,partition\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 6);
}

TEST_CASE("weingarten output is exact") {
    const auto j = parse(run({"weingarten", "--k", "4", "--n", "5"}));
    CHECK(j["gram"][0][0] == "25/1");
    CHECK(j["weingarten"][2][2] == "3/10");
    CHECK(j["basis"].size() == 3);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == hplus::cli::kUsageError);
    CHECK(run({"moment", "--k", "4"}).code == hplus::cli::kUsageError);
    CHECK(run({"moment", "--flavor", "x", "--k", "4", "--n", "4", "--s", "1"}).code == hplus::cli::kUsageError);
    CHECK(run({"moment", "--k", "4", "--n", "3", "--s", "1"}).code == hplus::cli::kUsageError);
    CHECK(run({"asymptotic", "--k", "4", "--t", "x/2"}).code == hplus::cli::kUsageError);
    const auto singular = run({"weingarten", "--k", "4", "--n", "1", "--allow-small-n"});
    CHECK(singular.code == hplus::cli::kComputationalError);
    CHECK(parse(singular)["error"]["type"] == "singular_gram");
    CHECK(run({"--help"}).code == hplus::cli::kSuccess);
}

TEST_CASE("mixed moment and integrate") {
    const auto mixed = run({"mixed-moment", "--n", "8", "--interval", "I=1:2", "--interval", "J=3:4", "--pattern", "I,J,I,J"});
    REQUIRE(mixed.code == 0);
    CHECK(parse(mixed)["value"] == "0/1");
    CHECK(run({"mixed-moment", "--n", "8", "--interval", "I=1:2", "--pattern", "I,K"}).code == hplus::cli::kUsageError);
    const auto integral = run({"integrate", "--n", "4", "--i", "1,1", "--j", "2,2"});
    CHECK(parse(integral)["value"] == "1/4");
}

TEST_CASE("laws") {
    const auto beta = parse(run({"bessel-classical", "--t", "1"}));
    CHECK(beta["atoms"]["0"].get<double>() == doctest::Approx(0.46576).epsilon(1e-5));
    const auto free = parse(run({"bessel-free", "--order", "4", "--t", "1/2"}));
    CHECK(free["values"][3] == "1/1");
    const auto r = parse(run({"rtransform", "--order", "5"}));
    CHECK(r["r"][3] == nlohmann::json::parse(R"(["0/1","1/1"])"));
    const auto g = parse(run({"generating", "--order", "6"}));
    CHECK(g["cubic_residual_vanishes"] == true);
}

TEST_CASE("hyperoctahedral commands are deterministic") {
    const std::vector<std::string> args{"sample-hn", "--n", "8", "--s", "4", "--seed", "3", "--samples", "5000"};
    const auto a = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == run(args).out);
    CHECK(parse(a)["N"] == 5000);
    CHECK(parse(run({"enumerate-hn", "--n", "2", "--s", "2"}))["law"]["0"] == "3/4");
    CHECK(parse(run({"hypercube", "--n", "3"}))["distance_algebra"]["spans_equal"] == true);
}

TEST_CASE("output file") {
    const std::string path = "hplus_cli_test_output.json";
    const auto r = run({"moment", "--k", "2", "--n", "6", "--s", "3", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(nlohmann::json::parse(in)["value"] == "1/2");
    std::remove(path.c_str());
}

TEST_CASE("verify subset") {
    const auto r = run({"verify", "--only", "1,14"});
    CHECK(r.code == hplus::cli::kSuccess);
    const auto j = parse(r);
    CHECK(j["criteria"].size() == 2);
    CHECK(j["passed"] == true);
}

}

#endif
