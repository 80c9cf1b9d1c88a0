#include <doctest.h>

#include <cmath>
#include <fstream>

#include "gkt/errors.hpp"
#include "gkt/generators.hpp"
#include "gkt/json_io.hpp"

using namespace gkt;
using nlohmann::json;

TEST_CASE("numbers and non-finite values") {
    CHECK(io::number(1.5) == json(1.5));
    CHECK(io::number(INFINITY) == json("inf"));
    CHECK(io::number(-INFINITY) == json("-inf"));
    CHECK(io::number(NAN) == json("nan"));
}

TEST_CASE("matrix and vector round trips") {
    const Matrix m = (Matrix(2, 3) << 1, 2, 3, 4, 5, 6).finished();
    CHECK(io::matrix_from_json(io::to_json(m), "m") == m);
    const Vector v = (Vector(3) << -1, 0.5, 2).finished();
    CHECK(io::vector_from_json(io::to_json(v), "v") == v);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1,2],[3]]"), "m"), InvalidArgument);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[]"), "m"), InvalidArgument);
    CHECK_THROWS_AS(io::vector_from_json(json::parse("[1,\"a\"]"), "v"), InvalidArgument);
    CHECK_THROWS_AS(io::vector_from_json(json::parse("{}"), "v"), InvalidArgument);
}

TEST_CASE("grid functions") {
    const Grid g(1, 2.0, 5);
    const GridFunction f(g, {0, 1, 2, 3, 4});
    const auto back = io::grid_function_from_json(io::to_json(f));
    CHECK(back.grid() == g);
    CHECK(back.values() == f.values());
    CHECK_THROWS_AS(io::grid_function_from_json(json::parse(R"({"grid":{"n":1,"L":2,"m":5},"values":[]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(io::grid_function_from_json(json::parse(R"({"grid":{"n":1,"L":2,"m":5},"values":[1,2]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(io::grid_function_from_json(json::parse(R"({"values":[1,2]})")), InvalidArgument);
}

TEST_CASE("KS configuration") {
    const auto cfg = io::ks_config_from_json(json::parse(R"({"n":1,"K":16,"weights":"dyadic"})"));
    CHECK(cfg.size() == 16);
    CHECK(cfg.dyadic_weights());
    const auto explicit_w = io::ks_config_from_json(json::parse(R"({"n":1,"K":2,"weights":[0.25,0.25]})"));
    CHECK(explicit_w.weights()[1] == 0.25);
    CHECK_THROWS_AS(io::ks_config_from_json(json::parse(R"({"n":1,"K":2,"weights":[0.9,0.9]})")), InvalidArgument);
    CHECK_THROWS_AS(io::ks_config_from_json(json::parse(R"({"n":1,"K":2,"weights":"flat"})")), InvalidArgument);
}

TEST_CASE("operators and triples") {
    const auto op = gen::random_operator(3, 0, 4, 4);
    const auto back = io::operator_from_json(io::to_json(op));
    CHECK(back.model() == op.model());
    CHECK((back.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.triple().g1() - op.triple().g1()).cwiseAbs().maxCoeff() == 0.0);

    const auto plain = io::operator_from_json(json::parse(R"({"n":2,"matrix":[[1,0],[0,2]],"model":"l2"})"));
    CHECK(plain.triple().single_metric());
    CHECK(plain.triple().g2().isIdentity());
    const auto lp = io::operator_from_json(json::parse(R"({"n":2,"matrix":[[1,0],[0,2]],"model":{"lp":3}})"));
    CHECK(lp.model().exponent() == 3.0);

    CHECK_THROWS_AS(io::operator_from_json(json::parse(R"({"n":3,"matrix":[[1,0],[0,2]],"model":"l2"})")),
                    InvalidArgument);
    CHECK_THROWS_AS(io::operator_from_json(json::parse(R"({"n":2,"matrix":[[1,0],[0,2]],"model":"l9"})")),
                    InvalidArgument);
    auto bad = io::to_json(op);
    bad["triple"]["lambda"][0] = -1.0;
    CHECK_THROWS_AS(io::operator_from_json(bad), InvalidArgument);

    CHECK_THROWS_AS(io::load_operator("/nonexistent/op.json"), InvalidArgument);
    const std::string path = "test_json_io_op.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(io::load_operator(path), InvalidArgument);
    std::remove(path.c_str());
}

TEST_CASE("reports serialise their asserted fields") {
    const auto j = io::to_json(ell1_counterexample(4));
    CHECK(j.at("n") == 4);
    CHECK(j.at("tx_minus_e1_l2").get<double>() == doctest::Approx(std::sqrt(3.0) / 4.0));
    const auto p = io::to_json(poincare_verify(OperatorOnB::hilbert(Matrix::Identity(2, 2)), 10));
    CHECK(p.at("violations") == 0);
    CHECK(p.at("c").get<double>() == doctest::Approx(1.58198).epsilon(1e-5));
    const auto e = io::to_json(embedding_report(PointMass{{0.0}, 1.0}, KSConfig::dyadic(1, 32)));
    CHECK(e.at("l2") == json("inf"));
}
