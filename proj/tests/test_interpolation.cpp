#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padua/chebyshev.hpp"
#include "padua/interpolation.hpp"
#include "padua/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace padua;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

// Independent oracle: trigonometric Chebyshev values and a literal double sum.
double oracle_That(int n, double s) {
    const double t = std::cos(n * std::acos(std::clamp(s, -1.0, 1.0)));
    return (n == 0 ? 1.0 : std::numbers::sqrt2) * t;
}

double oracle_kernel(int order, Point2 a, Point2 b) {
    double sum = 0.0;
    for (int j = 0; j <= order; ++j)
        for (int i = 0; i <= j; ++i)
            sum += oracle_That(i, a.x) * oracle_That(j - i, a.y) *
                   oracle_That(i, b.x) * oracle_That(j - i, b.y);
    return sum;
}

// Random bivariate polynomial of total degree <= n, coefficients in [-1,1].
struct Poly {
    int n;
    std::vector<double> c; // ordered (a,b) with a+b <= n, graded

    static Poly random(int n, RngEngine& rng) {
        Poly p{n, {}};
        for (int t = 0; t <= n; ++t)
            for (int a = 0; a <= t; ++a) p.c.push_back(uniform(rng, -1.0, 1.0));
        return p;
    }

    double operator()(double x, double y) const {
        double acc = 0.0;
        std::size_t idx = 0;
        for (int t = 0; t <= n; ++t)
            for (int a = 0; a <= t; ++a)
                acc += c[idx++] * std::pow(x, a) * std::pow(y, t - a);
        return acc;
    }
};

} // namespace

TEST_CASE("kernel symmetry and brute-force agreement") {
    RngEngine rng = make_stream(21);
    for (int order : {1, 2, 3, 5, 8}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Point2 a{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
            const Point2 b{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
            const double kab = kernel_K(order, a, b);
            CHECK(kab == doctest::Approx(kernel_K(order, b, a)).epsilon(1e-12));
            CHECK(kab == doctest::Approx(oracle_kernel(order, a, b)).epsilon(1e-9));
        }
    }
    // kappa=1 at the origin: direct sum gives 1
    CHECK(kernel_K(1, {0, 0}, {0, 0}) ==
          doctest::Approx(oracle_kernel(1, {0, 0}, {0, 0})).epsilon(1e-14));
}

TEST_CASE("kernel rejects points off the unit square") {
    CHECK_THROWS_AS(kernel_K(3, {1.5, 0.0}, {0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(kernel_K(3, {0.0, 0.0}, {0.0, -1.01}), std::domain_error);
}

TEST_CASE("cubature weight equals 1/K*(x,x)") {
    for (int k = 1; k <= 10; ++k) {
        const PaduaSet s = padua_points_curve(k);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Point2 p = s.points[i];
            const double w = 1.0 / kernel_K_star(k, p, p);
            CHECK(std::abs(w - s.weights[i]) / s.weights[i] < 1e-10);
        }
    }
}

TEST_CASE("lagrange basis is cardinal") {
    for (int k : {1, 2, 3, 5}) {
        const PaduaSet s = padua_points_curve(k);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(lagrange_basis(s, s.points[i], s.points[i]) ==
                  doctest::Approx(1.0).epsilon(1e-12));
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i)
                    CHECK(std::abs(lagrange_basis(s, s.points[i], s.points[j])) < 1e-10);
        }
    }
}

TEST_CASE("cardinal matrix is the identity up to order 10") {
    for (int k = 1; k <= 10; ++k) {
        const PaduaSet s = padua_points_curve(k);
        double worst = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) {
                const double v = lagrange_basis(s, s.points[i], s.points[j]);
                worst = std::max(worst, std::abs(v - (i == j ? 1.0 : 0.0)));
            }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("lagrange basis sums to one") {
    RngEngine rng = make_stream(22);
    for (int k : {1, 3, 6}) {
        const PaduaSet s = padua_points_curve(k);
        for (int trial = 0; trial < 10; ++trial) {
            const Point2 t{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
            double sum = 0.0;
            for (Point2 node : s.points) sum += lagrange_basis(s, node, t);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(lagrange_basis(padua_points_curve(2), {0.3, 0.3}, {0, 0}),
                    std::invalid_argument);
}

TEST_CASE("interpolate_kernel basics") {
    const PaduaSet s1 = padua_points_curve(4);
    const PaduaSamples constant =
        sample_function(s1, [](double, double) { return 2.5; });
    const std::vector<Point2> targets{{0.1, -0.3}, {0.9, 0.9}, {-1, -1}, {0, 0}};
    for (double v : interpolate_kernel(constant, targets))
        CHECK(v == doctest::Approx(2.5).epsilon(1e-10));

    const PaduaSamples planar =
        sample_function(padua_points_curve(1), [](double x, double) { return x; });
    const std::vector<double> vals = interpolate_kernel(planar, targets);
    for (std::size_t i = 0; i < targets.size(); ++i)
        CHECK(vals[i] == doctest::Approx(targets[i].x).epsilon(1e-12));

    // at the nodes the samples come back
    const PaduaSet s3 = padua_points_curve(3);
    RngEngine rng = make_stream(23);
    Eigen::VectorXd f(static_cast<Eigen::Index>(s3.size()));
    for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = uniform(rng, 0.0, 3.0);
    const PaduaSamples samples = make_samples(s3, f);
    const std::vector<double> at_nodes =
        interpolate_kernel(samples, samples.set.points);
    for (std::size_t i = 0; i < s3.size(); ++i)
        CHECK(at_nodes[i] == doctest::Approx(f[static_cast<Eigen::Index>(i)]).epsilon(1e-10));
}

TEST_CASE("interpolate_kernel validates inputs") {
    const PaduaSet s = padua_points_curve(2);
    Eigen::VectorXd wrong(3);
    wrong << 1, 2, 3;
    CHECK_THROWS_AS(make_samples(s, wrong), std::invalid_argument);

    const PaduaSamples samples = sample_function(s, [](double, double) { return 1.0; });
    const std::vector<Point2> outside{{1.2, 0.0}};
    CHECK_THROWS_AS(interpolate_kernel(samples, outside), std::domain_error);
}

TEST_CASE("coefficient matrix structure matches the mask oracle") {
    RngEngine rng = make_stream(24);
    for (int k : {2, 3, 4, 5, 6, 7}) {
        const PaduaSet set = padua_points_curve(k);
        Eigen::VectorXd f(static_cast<Eigen::Index>(set.size()));
        for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = uniform(rng, -1.0, 1.0);
        const PaduaSamples samples = make_samples(set, f);
        const CoefficientMatrix c0 = padua_coefficient_matrix(samples);
        REQUIRE(c0.entries.rows() == k + 1);
        REQUIRE(c0.entries.cols() == k + 1);

        // oracle: G assembled through the flattened parity mask
        const ChebGrid gx = cgl_points(k);
        const ChebGrid gy = cgl_points(k + 1);
        Eigen::MatrixXd G = Eigen::MatrixXd::Zero(k + 1, k + 2);
        for (int r = 0; r <= k; ++r)
            for (int s = 0; s <= k + 1; ++s) {
                const int flat = (k % 2 != 0) ? r * (k + 2) + s : s * (k + 1) + r;
                if (flat % 2 != 0) continue;
                const int idx = set.find({gx.values[r], gy.values[s]});
                REQUIRE(idx >= 0);
                G(r, s) = set.weights[idx] * f[idx];
            }
        const Eigen::MatrixXd tx = cheb_matrix(k, gx.values).entries;
        const Eigen::MatrixXd ty = cheb_matrix(k, gy.values).entries;
        Eigen::MatrixXd expect = tx * G * ty.transpose();
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                if (i + j > k) expect(i, j) = 0.0;
        expect(k, 0) *= 0.5;
        CHECK((c0.entries - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("interpolate_fast constant field") {
    for (int k : {1, 2, 5, 9}) {
        const PaduaSamples samples = sample_function(
            padua_points_curve(k), [](double, double) { return std::numbers::pi / 2; });
        const std::vector<double> gx = linspace(-1, 1, 11);
        const std::vector<double> gy = linspace(-1, 1, 7);
        const Eigen::MatrixXd out = interpolate_fast(samples, gx, gy);
        REQUIRE(out.rows() == 7);
        REQUIRE(out.cols() == 11);
        CHECK((out.array() - std::numbers::pi / 2).abs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("interpolate_fast reproduces a degree-3 polynomial") {
    RngEngine rng = make_stream(25);
    const Poly p = Poly::random(3, rng);
    const PaduaSamples samples = sample_function(
        padua_points_curve(3), [&](double x, double y) { return p(x, y); });
    const std::vector<double> g = linspace(-1, 1, 21);
    const Eigen::MatrixXd out = interpolate_fast(samples, g, g);
    double worst = 0.0;
    for (int r = 0; r < 21; ++r)
        for (int c = 0; c < 21; ++c)
            worst = std::max(worst, std::abs(out(r, c) - p(g[c], g[r])));
    CHECK(worst < 1e-8);
}

TEST_CASE("fast and kernel paths agree") {
    RngEngine rng = make_stream(26);
    for (int k = 1; k <= 10; ++k) {
        const PaduaSet set = padua_points_curve(k);
        Eigen::VectorXd f(static_cast<Eigen::Index>(set.size()));
        for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = uniform(rng, -2.0, 2.0);
        const PaduaSamples samples = make_samples(set, f);

        const std::vector<double> g = linspace(-1, 1, 21);
        const Eigen::MatrixXd fast = interpolate_fast(samples, g, g);
        std::vector<Point2> targets;
        for (double y : g)
            for (double x : g) targets.push_back({x, y});
        const std::vector<double> kern = interpolate_kernel(samples, targets);
        double worst = 0.0;
        for (int r = 0; r < 21; ++r)
            for (int c = 0; c < 21; ++c)
                worst = std::max(worst, std::abs(fast(r, c) - kern[r * 21 + c]));
        CHECK(worst < 1e-9);
    }

    const PaduaSamples samples = sample_function(
        padua_points_curve(2), [](double, double) { return 1.0; });
    CHECK_THROWS_AS(interpolate_fast(samples, {}, {}), std::invalid_argument);
}

TEST_CASE("polynomial exactness up to the matching order") {
    RngEngine rng = make_stream(27);
    const std::vector<double> g = linspace(-1, 1, 41);
    for (int k = 1; k <= 8; ++k) {
        const PaduaSet set = padua_points_curve(k);
        for (int trial = 0; trial < 20; ++trial) {
            const int degree = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
            const Poly p = Poly::random(degree, rng);
            const PaduaSamples samples =
                sample_function(set, [&](double x, double y) { return p(x, y); });
            const Eigen::MatrixXd out = interpolate_fast(samples, g, g);
            double worst = 0.0;
            for (int r = 0; r < 41; ++r)
                for (int c = 0; c < 41; ++c)
                    worst = std::max(worst, std::abs(out(r, c) - p(g[c], g[r])));
            CHECK(worst < 1e-8);
        }
    }
}

TEST_CASE("interpolation is linear in the samples") {
    RngEngine rng = make_stream(28);
    const PaduaSet set = padua_points_curve(5);
    Eigen::VectorXd f(static_cast<Eigen::Index>(set.size()));
    Eigen::VectorXd h(static_cast<Eigen::Index>(set.size()));
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        f[i] = uniform(rng, -1.0, 1.0);
        h[i] = uniform(rng, -1.0, 1.0);
    }
    const double alpha = 0.7, beta = -1.3;
    const std::vector<double> g = linspace(-1, 1, 15);
    const Eigen::MatrixXd combo =
        interpolate_fast(make_samples(set, alpha * f + beta * h), g, g);
    const Eigen::MatrixXd split =
        alpha * interpolate_fast(make_samples(set, f), g, g) +
        beta * interpolate_fast(make_samples(set, h), g, g);
    CHECK((combo - split).cwiseAbs().maxCoeff() < 1e-10);
}
