#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "cli_process.hpp"

using gkt::testing::run_cli;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    std::ofstream(name) << body;
    return name;
}

}  // namespace

TEST_CASE("ks on a point mass") {
    const auto r = run_cli("ks --builtin dirac:0 --K 512");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("report").at("ks").is_number());
    CHECK(std::isfinite(j.at("report").at("ks").get<double>()));
    CHECK(j.at("report").at("l2") == "inf");
    CHECK(j.at("schema") == 1);
}

TEST_CASE("ks on an indicator reports every flag true") {
    const auto r = run_cli("ks --builtin indicator:0,1");
    REQUIRE(r.exit_code == 0);
    const auto flags = json::parse(r.out).at("report").at("asserted");
    for (const auto& [k, v] : flags.items()) CHECK_MESSAGE(v == true, k);
}

TEST_CASE("malformed inputs exit with code 2") {
    const auto empty = write_temp("cli_empty_values.json", R"({"grid":{"n":1,"L":1,"m":3},"values":[]})");
    CHECK(run_cli("ks --input " + empty).exit_code == 2);
    const auto broken = write_temp("cli_broken.json", "{ nope");
    CHECK(run_cli("adjoint --input " + broken).exit_code == 2);
    CHECK(run_cli("ks --builtin nosuchfunction").exit_code == 2);
    CHECK(run_cli("schatten --builtin jordan:2 --p 0.5").exit_code == 2);
    CHECK(run_cli("suite --criteria nosuchcriterion").exit_code == 2);
    CHECK(run_cli("spectral --builtin diag:1,2 apply --g nosuch").exit_code == 2);
    CHECK(run_cli("--no-such-flag").exit_code == 2);
    std::remove(empty.c_str());
    std::remove(broken.c_str());
}

TEST_CASE("numerical failures exit with code 3") {
    CHECK(run_cli("poincare --builtin diag:1,0").exit_code == 3);
}

TEST_CASE("operator JSON input") {
    const auto path = write_temp("cli_op.json", R"({"n":2,"matrix":[[2,1],[1,3]],"model":"l1"})");
    const auto r = run_cli("adjoint --input " + path);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("passed") == true);
    std::remove(path.c_str());
}

TEST_CASE("counterexample closed form") {
    const auto r = run_cli("counterexample --n 2048");
    REQUIRE(r.exit_code == 0);
    const double v = json::parse(r.out).at("report").at("tx_minus_e1_l2").get<double>();
    CHECK(std::abs(v - std::sqrt(2047.0) / 2048.0) <= 1e-12);
    CHECK(v < 0.03);
}

TEST_CASE("spectral reconstruction check") {
    const auto r = run_cli("spectral --builtin diag:3,-4 --check reconstruct");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("checks").at("reconstruct_residual").get<double>() <= 1e-10);
    const auto w = j.at("package").at("W");
    CHECK(w[1][1].get<double>() == doctest::Approx(-1.0));

    const auto a = run_cli("spectral --builtin diag:3,-4 apply --g square --x 1,1");
    REQUIRE(a.exit_code == 0);
    const auto y = json::parse(a.out).at("result");
    CHECK(y[0].get<double>() == doctest::Approx(9.0));
    CHECK(y[1].get<double>() == doctest::Approx(-16.0));
}

TEST_CASE("schatten on a Jordan block") {
    const auto r = run_cli("schatten --builtin jordan:2 --p 1");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("mu")[0].get<double>() == doctest::Approx(1.0));
    CHECK(std::abs(j.at("mu")[1].get<double>()) <= 1e-14);
    CHECK(j.at("norm_h2").get<double>() == doctest::Approx(1.0));
    CHECK(j.at("norm_b").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("poincare on diag(2)") {
    const auto r = run_cli("poincare --builtin diag:2");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("c").get<double>() == doctest::Approx(0.5 / (1.0 - std::exp(-1.0))));
    CHECK(j.at("violations") == 0);
}

TEST_CASE("output file option") {
    const std::string path = "cli_out.json";
    std::remove(path.c_str());
    const auto r = run_cli("counterexample --n 4 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    CHECK(json::parse(in).at("report").at("n") == 4);
    std::remove(path.c_str());
}

TEST_CASE("suite filtering and determinism") {
    const auto sub = run_cli("suite --criteria lax,poincare --seed 7");
    REQUIRE(sub.exit_code == 0);
    const auto j = json::parse(sub.out);
    REQUIRE(j.at("criteria").size() == 2);
    CHECK(j.at("criteria")[0].at("id") == "lax");
    CHECK(j.at("criteria")[1].at("id") == "poincare");

    const auto again = run_cli("suite --criteria lax,poincare --seed 7");
    CHECK(again.out == sub.out);
    const auto other = run_cli("suite --criteria lax,poincare --seed 8");
    CHECK(other.out != sub.out);
}
