#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padua/chebyshev.hpp"
#include "padua/rng.hpp"

#include <cmath>
#include <numbers>

using namespace padua;

TEST_CASE("cheb_T low orders") {
    CHECK(cheb_T(0, 0.3) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cheb_T(1, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    // T_2 = 2 s T_1 - T_0 = 2*0.5*0.5 - 1 = -0.5
    CHECK(cheb_T(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("cheb_T matches the trigonometric identity") {
    for (int n = 0; n <= 30; ++n) {
        for (int k = 0; k < 100; ++k) {
            const double theta = std::numbers::pi * k / 99.0;
            CHECK(std::abs(cheb_T(n, std::cos(theta)) - std::cos(n * theta)) < 1e-10);
        }
    }
}

TEST_CASE("cheb_T stays bounded on the interval") {
    RngEngine rng = make_stream(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = static_cast<int>(rng() % 31);
        const double s = uniform(rng, -1.0, 1.0);
        CHECK(std::abs(cheb_T(n, s)) <= 1.0 + 1e-9);
    }
}

TEST_CASE("cheb_T clamps round-off and rejects true out-of-range") {
    CHECK(cheb_T(3, 1.0 + 5e-13) == doctest::Approx(1.0));
    CHECK(cheb_T(3, -1.0 - 5e-13) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(cheb_T(3, 1.0 + 1e-6), std::domain_error);
    CHECK_THROWS_AS(cheb_T(3, -1.1), std::domain_error);
}

TEST_CASE("cgl_points small orders") {
    const ChebGrid g1 = cgl_points(1);
    REQUIRE(g1.values.size() == 2);
    CHECK(g1.values[0] == -1.0);
    CHECK(g1.values[1] == 1.0);

    const ChebGrid g2 = cgl_points(2);
    REQUIRE(g2.values.size() == 3);
    CHECK(g2.values[0] == -1.0);
    CHECK(std::abs(g2.values[1]) < 1e-15);
    CHECK(g2.values[2] == 1.0);

    const ChebGrid g4 = cgl_points(4);
    REQUIRE(g4.values.size() == 5);
    const double c = std::cos(std::numbers::pi / 4.0);
    CHECK(g4.values[1] == doctest::Approx(-c).epsilon(1e-15));
    CHECK(g4.values[3] == doctest::Approx(c).epsilon(1e-15));
}

TEST_CASE("cgl_points rejects order zero") {
    CHECK_THROWS_AS(cgl_points(0), std::invalid_argument);
}

TEST_CASE("cgl_points symmetry and monotonicity") {
    for (int order = 1; order <= 20; ++order) {
        const ChebGrid g = cgl_points(order);
        REQUIRE(g.values.size() == static_cast<std::size_t>(order) + 1);
        for (int j = 0; j <= order; ++j)
            CHECK(std::abs(g.values[j] + g.values[order - j]) < 1e-12);
        for (int j = 1; j <= order; ++j) CHECK(g.values[j] > g.values[j - 1]);
    }
}

TEST_CASE("cheb_matrix small cases") {
    const double root2 = std::numbers::sqrt2;

    const double s0[] = {0.0};
    const ChebMatrix m1 = cheb_matrix(1, s0);
    REQUIRE(m1.entries.rows() == 2);
    REQUIRE(m1.entries.cols() == 1);
    CHECK(m1.entries(0, 0) == doctest::Approx(root2));
    CHECK(m1.entries(1, 0) == doctest::Approx(0.0));

    const double s1[] = {1.0};
    const ChebMatrix m2 = cheb_matrix(2, s1);
    REQUIRE(m2.entries.rows() == 3);
    for (int y = 0; y < 3; ++y) CHECK(m2.entries(y, 0) == doctest::Approx(root2));

    const double sh[] = {0.5};
    const ChebMatrix m3 = cheb_matrix(2, sh);
    CHECK(m3.entries(0, 0) == doctest::Approx(root2));
    CHECK(m3.entries(1, 0) == doctest::Approx(root2 / 2.0));
    CHECK(m3.entries(2, 0) == doctest::Approx(-root2 / 2.0));
}

TEST_CASE("cheb_matrix entries bounded, rejects bad abscissae") {
    RngEngine rng = make_stream(11);
    std::vector<double> s(40);
    for (double& v : s) v = uniform(rng, -1.0, 1.0);
    const ChebMatrix m = cheb_matrix(12, s);
    CHECK(m.entries.rows() == 13);
    CHECK(m.entries.cwiseAbs().maxCoeff() <= std::numbers::sqrt2 * (1.0 + 1e-9));
    CHECK((m.entries.row(0).array() == std::numbers::sqrt2).all());

    const double bad[] = {0.2, 1.5};
    CHECK_THROWS_AS(cheb_matrix(3, bad), std::domain_error);
}
