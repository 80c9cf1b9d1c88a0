#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <utility>

#include "gkt/errors.hpp"
#include "gkt/ks_space.hpp"
#include "oracles.hpp"

using namespace gkt;

using gkt::testing::oracle_dyadics;
using gkt::testing::oracle_pairs;

TEST_CASE("cube order prefix") {
    const std::vector<CubeIndex> expected = {{1, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {2, 3}};
    CHECK(cube_enumeration(8) == expected);
    CHECK(cube_enumeration(1) == std::vector<CubeIndex>{{1, 1}});
    CHECK_THROWS_AS(cube_enumeration(0), InvalidArgument);
}

TEST_CASE("cube order matches an independent diagonal sweep and is injective") {
    const std::size_t k = 10000;
    const auto pairs = cube_enumeration(k);
    const auto oracle = oracle_pairs(k);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < k; ++i) {
        CHECK(pairs[i].level == oracle[i].first);
        CHECK(pairs[i].rational == oracle[i].second);
        seen.insert({pairs[i].level, pairs[i].rational});
    }
    CHECK(seen.size() == k);
}

TEST_CASE("dyadic rational enumeration") {
    CHECK(enumerate_rationals(1, 1) == std::vector<Point>{{0.0}});
    CHECK(enumerate_rationals(1, 3) == std::vector<Point>{{0.0}, {0.5}, {-0.5}});
    const std::size_t k = 10000;
    const auto pts = enumerate_rationals(1, k);
    const auto oracle = oracle_dyadics(k);
    std::set<double> seen;
    for (std::size_t i = 0; i < k; ++i) {
        CHECK(pts[i][0] == std::ldexp(static_cast<double>(oracle[i].first), -oracle[i].second));
        seen.insert(pts[i][0]);
    }
    CHECK(seen.size() == k);
    const auto pts2 = enumerate_rationals(2, 5000);
    CHECK(std::set<Point>(pts2.begin(), pts2.end()).size() == 5000);
}

TEST_CASE("cube k has diagonal 2^-l and centre at rational i") {
    const CubeEnumeration e(1, 64);
    const auto rationals = enumerate_rationals(1, 64);
    for (std::size_t k = 0; k < e.size(); ++k) {
        CHECK(e.cubes()[k].diagonal() == std::ldexp(1.0, -e.indices()[k].level));
        CHECK(e.cubes()[k].center() == rationals[static_cast<std::size_t>(e.indices()[k].rational - 1)]);
    }
}

TEST_CASE("KS configuration validation") {
    CHECK_THROWS_AS(KSConfig(CubeEnumeration(1, 3), {0.5, 0.5, 0.5}), InvalidArgument);
    CHECK_THROWS_AS(KSConfig(CubeEnumeration(1, 3), {0.5, 0.0, 0.1}), InvalidArgument);
    CHECK_THROWS_AS(KSConfig(CubeEnumeration(1, 3), {0.5, 0.1}), InvalidArgument);
    const auto cfg = KSConfig::dyadic(1, 10);
    CHECK(cfg.weights()[0] == 0.5);
    CHECK(cfg.weights()[9] == std::ldexp(1.0, -10));
}

TEST_CASE("Dirac mass at the origin: KS norm from covering cubes") {
    const auto cfg = KSConfig::dyadic(1, 512);
    const double mass = gkt::testing::oracle_origin_mass(512);
    const double got = ks_norm(PointMass{{0.0}, 1.0}, cfg);
    CHECK(std::isfinite(got));
    CHECK(std::abs(got - std::sqrt(mass)) <= 1e-12);
    CHECK(got <= 1.0);
}

TEST_CASE("KS inner product properties") {
    const Grid g(1, 4.0, 801);
    const auto cfg = KSConfig::dyadic(1, 256);
    const auto zero = GridFunction::sample(g, [](const Point&) { return 0.0; });
    const auto f = GridFunction::sample(g, [](const Point& x) { return std::exp(-x[0] * x[0]); });
    const auto h = GridFunction::sample(g, [](const Point& x) { return std::sin(3 * x[0]); });
    CHECK(ks_inner(zero, zero, cfg) == 0.0);
    CHECK(ks_norm(zero, cfg) == 0.0);
    CHECK(ks_inner(f, h, cfg) == doctest::Approx(ks_inner(h, f, cfg)).epsilon(1e-14));
    CHECK(ks_norm(f.scaled(-3.0), cfg) == doctest::Approx(3.0 * ks_norm(f, cfg)).epsilon(1e-13));
    const auto sum = f.combined(2.0, h, 1.0);
    CHECK(ks_inner(sum, f, cfg) == doctest::Approx(2 * ks_inner(f, f, cfg) + ks_inner(h, f, cfg)).epsilon(1e-12));

    const PointMass d{{0.5}, 1.0};
    double covering = 0.0;
    for (std::size_t k = 0; k < cfg.size(); ++k)
        if (cfg.enumeration().cubes()[k].contains(d.location)) covering += cfg.weights()[k];
    CHECK(ks_inner(d, d, cfg) == doctest::Approx(covering).epsilon(1e-14));
    CHECK(ks_norm(d, cfg) <= 1.0);

    const Grid other(1, 3.0, 801);
    const auto f_other = GridFunction::sample(other, [](const Point&) { return 1.0; });
    CHECK_THROWS_AS(ks_inner(f, f_other, cfg), InvalidArgument);
    CHECK_THROWS_AS(ks_inner(f, PointMass{{5.0}, 1.0}, cfg), InvalidArgument);
}

TEST_CASE("KS norm is monotone under truncation") {
    const Grid g(1, 4.0, 801);
    const auto f = GridFunction::sample(g, [](const Point& x) { return 2 * x[0] * std::cos(x[0] * x[0]); });
    double prev = 0.0;
    for (std::size_t k : {1, 8, 64, 512}) {
        const double v = ks_norm(f, KSConfig::dyadic(1, k));
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("embedding report examples") {
    const auto cfg = KSConfig::dyadic(1, 512);
    const Grid g1(1, 1.0, 401);
    const auto one = GridFunction::sample(g1, [](const Point&) { return 1.0; });
    auto r = embedding_report(one, cfg);
    CHECK(r.all_hold());
    CHECK(r.ks <= 1.0);

    const Grid g4(1, 4.0, 1601);
    const auto ind = GridFunction::sample(g4, [](const Point& x) { return x[0] >= 0 && x[0] <= 1 ? 1.0 : 0.0; });
    r = embedding_report(ind, cfg);
    CHECK(r.all_hold());
    CHECK(r.l1 == doctest::Approx(1.0).epsilon(1e-2));

    const Grid g8(1, 8.0, 4096);
    const auto chirp = GridFunction::sample(g8, [](const Point& x) { return 2 * x[0] * std::cos(x[0] * x[0]); });
    r = embedding_report(chirp, cfg);
    CHECK(std::isfinite(r.ks));
    CHECK(r.all_hold());
    CHECK(r.l1 > 10.0 * r.ks);

    r = embedding_report(PointMass{{0.0}, 2.0}, cfg);
    CHECK(r.all_hold());
    CHECK(std::isinf(r.l2));
    CHECK(r.l1 == 2.0);
}

TEST_CASE("Hermite functions are orthonormal in L2") {
    const Grid g(1, 12.0, 4001);
    const auto w = g.axis_weights();
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i)
                s += w[i] * hermite_function(a, g.coordinate(i)) * hermite_function(b, g.coordinate(i));
            CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) <= 1e-10);
        }
    }
    CHECK(hermite_function(0, 0.0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)));
}

TEST_CASE("KS-orthonormal Hermite basis") {
    const Grid g(1, 6.0, 801);
    auto cfg = std::make_shared<const KSConfig>(KSConfig::dyadic(1, 512));

    const auto b1 = build_hermite_ks_basis(1, g, cfg);
    const double n1 = ks_norm(b1.sources[0], *cfg);
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(std::abs(b1.functions[0].values()[i] - b1.sources[0].values()[i] / n1) <= 1e-12);

    const auto b5 = build_hermite_ks_basis(5, g, cfg);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(std::abs(ks_inner(b5.functions[i], b5.functions[j], *cfg) - (i == j ? 1.0 : 0.0)) <= 1e-8);

    // h_2 lies in span(phi_1, phi_2)
    auto residual = b5.sources[1];
    for (std::size_t j = 0; j < 2; ++j)
        residual = residual.combined(1.0, b5.functions[j], -ks_inner(b5.sources[1], b5.functions[j], *cfg));
    CHECK(ks_norm(residual, *cfg) <= 1e-8 * ks_norm(b5.sources[1], *cfg));

    CHECK_THROWS_AS(build_hermite_ks_basis(31, Grid(1, 6.0, 1000), cfg), InvalidArgument);
    CHECK_THROWS_AS(build_hermite_ks_basis(5, Grid(1, 6.0, 39), cfg), InvalidArgument);
}

TEST_CASE("Gross-Steadman inner product and weights") {
    const Grid g(1, 6.0, 801);
    auto cfg = std::make_shared<const KSConfig>(KSConfig::dyadic(1, 512));
    const auto basis = build_hermite_ks_basis(4, g, cfg);
    const auto r = ks1_inner(basis.functions[0], basis.functions[0], basis);
    CHECK(r.value == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-8));
    CHECK_FALSE(r.projected);
    const auto zero = GridFunction::sample(g, [](const Point&) { return 0.0; });
    CHECK(ks1_inner(zero, basis.functions[1], basis).value == 0.0);
    const auto off = GridFunction::sample(g, [](const Point& x) { return std::abs(x[0]) < 0.3 ? 1.0 : 0.0; });
    CHECK(ks1_inner(off, off, basis).projected);

    CHECK(gross_steadman_weight(1) == doctest::Approx(6.0 / (std::numbers::pi * std::numbers::pi)));
    double s = 0.0;
    for (int n = 100; n >= 1; --n) s += 6.0 / (std::numbers::pi * std::numbers::pi * n * n);
    CHECK(gross_steadman_weight_mass(100) == doctest::Approx(s).epsilon(1e-14));
    CHECK(gross_steadman_weight_mass(100) == doctest::Approx(0.99395).epsilon(1e-5));
    CHECK(gross_steadman_weight_mass(100000) > gross_steadman_weight_mass(100));
    CHECK(gross_steadman_weight_mass(100000) < 1.0);
}
