#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padua/chebyshev.hpp"
#include "padua/point_sets.hpp"

#include <cmath>
#include <set>

using namespace padua;

namespace {

bool set_equal(const PaduaSet& a, const PaduaSet& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.points[i].x - b.points[i].x) > tol ||
            std::abs(a.points[i].y - b.points[i].y) > tol)
            return false;
    return true;
}

} // namespace

TEST_CASE("padua_points_curve order 1") {
    const PaduaSet s = padua_points_curve(1);
    REQUIRE(s.size() == 3);
    // canonical order: lexicographic by (x, y)
    CHECK(s.points[0].x == doctest::Approx(-1.0));
    CHECK(s.points[0].y == doctest::Approx(-1.0));
    CHECK(s.points[1].x == doctest::Approx(-1.0));
    CHECK(s.points[1].y == doctest::Approx(1.0));
    CHECK(s.points[2].x == doctest::Approx(1.0));
    CHECK(s.points[2].y == doctest::Approx(0.0));
}

TEST_CASE("padua point counts") {
    CHECK(padua_points_curve(4).size() == 15);
    CHECK(padua_points_curve(10).size() == 66);
    CHECK(padua_points_grid(2).size() == 6);
    CHECK(padua_points_grid(5).size() == 21);
    for (int k = 1; k <= 20; ++k) {
        CHECK(padua_points_curve(k).size() == padua_count(k));
        CHECK(padua_count(k) == static_cast<std::size_t>((k + 2) * (k + 1) / 2));
    }
}

TEST_CASE("curve and grid constructions agree") {
    for (int k = 1; k <= 15; ++k) {
        const PaduaSet a = padua_points_curve(k);
        const PaduaSet b = padua_points_grid(k);
        CHECK(set_equal(a, b, 1e-12));
    }
}

TEST_CASE("padua constructions reject order zero") {
    CHECK_THROWS_AS(padua_points_curve(0), std::invalid_argument);
    CHECK_THROWS_AS(padua_points_grid(0), std::invalid_argument);
}

TEST_CASE("padua points live on the CGL product grid") {
    for (int k = 1; k <= 15; ++k) {
        const PaduaSet s = padua_points_curve(k);
        const ChebGrid gx = cgl_points(k);
        const ChebGrid gy = cgl_points(k + 1);
        for (Point2 p : s.points) {
            bool on_x = false, on_y = false;
            for (double v : gx.values) on_x = on_x || std::abs(v - p.x) <= 1e-12;
            for (double v : gy.values) on_y = on_y || std::abs(v - p.y) <= 1e-12;
            CHECK(on_x);
            CHECK(on_y);
        }
    }
}

TEST_CASE("exactly two vertex points, all points distinct, weights positive") {
    for (int k = 1; k <= 15; ++k) {
        const PaduaSet s = padua_points_curve(k);
        int vertices = 0;
        for (PointClass c : s.classes)
            if (c == PointClass::vertex) ++vertices;
        CHECK(vertices == 2);
        double min_dist = 1e300;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                min_dist = std::min(min_dist,
                                    std::hypot(s.points[i].x - s.points[j].x,
                                               s.points[i].y - s.points[j].y));
        CHECK(min_dist > 1e-9);
        for (double w : s.weights) CHECK(w > 0.0);
    }
}

TEST_CASE("classify_and_weight values") {
    // kappa=2 interior: weight 2/(2*3) = 1/3
    const PaduaSet s2 = padua_points_curve(2);
    for (std::size_t i = 0; i < s2.size(); ++i) {
        const ClassWeight cw = classify_and_weight(s2.points[i], 2);
        CHECK(cw.cls == s2.classes[i]);
        if (cw.cls == PointClass::interior) CHECK(cw.weight == doctest::Approx(1.0 / 3.0));
        if (cw.cls == PointClass::boundary) CHECK(cw.weight == doctest::Approx(1.0 / 6.0));
    }
    // kappa=1 vertex: (1/2)/(1*2) = 1/4
    const ClassWeight v = classify_and_weight({-1.0, -1.0}, 1);
    CHECK(v.cls == PointClass::vertex);
    CHECK(v.weight == doctest::Approx(0.25));

    CHECK_THROWS_AS(classify_and_weight({0.123, 0.456}, 3), std::invalid_argument);
}

TEST_CASE("data_grid basics") {
    const std::vector<Point2> g = data_grid(5, 5);
    REQUIRE(g.size() == 25);
    CHECK(g.front().x == doctest::Approx(-1.0));
    CHECK(g.front().y == doctest::Approx(-1.0));
    CHECK(g.back().x == doctest::Approx(1.0));
    CHECK(g.back().y == doctest::Approx(1.0));
    // spacing 0.5 along x
    CHECK(g[1].x - g[0].x == doctest::Approx(0.5));

    const std::vector<Point2> c = data_grid(2, 2);
    REQUIRE(c.size() == 4);
    for (Point2 p : c) {
        CHECK(std::abs(p.x) == doctest::Approx(1.0));
        CHECK(std::abs(p.y) == doctest::Approx(1.0));
    }

    CHECK_THROWS_AS(data_grid(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(data_grid(5, 0), std::invalid_argument);
}

TEST_CASE("regular_sensor_grid") {
    const std::vector<Point2> data = data_grid(5, 5);

    const SensorGrid g4 = regular_sensor_grid(4, data, false);
    CHECK(g4.points.size() == 16);

    const SensorGrid g2 = regular_sensor_grid(2, data, false);
    REQUIRE(g2.points.size() == 4);
    for (Point2 p : g2.points) {
        CHECK(std::abs(p.x) == doctest::Approx(1.0));
        CHECK(std::abs(p.y) == doctest::Approx(1.0));
    }

    // All 25 data points sit on the 9x9 grid, so removal drops exactly 25.
    const SensorGrid g9 = regular_sensor_grid(9, data, true);
    CHECK(g9.points.size() == 56);
    for (Point2 p : g9.points)
        for (Point2 q : data)
            CHECK(std::hypot(p.x - q.x, p.y - q.y) > 1e-9);

    CHECK_THROWS_AS(regular_sensor_grid(1, data, false), std::invalid_argument);
}

TEST_CASE("standard_assignment structure") {
    const std::vector<Point2> data = data_grid(5, 5);
    for (int orientation = 0; orientation < 4; ++orientation) {
        const NeighborhoodAssignment a = standard_assignment(data, orientation);
        REQUIRE(a.sensors.size() == 9);
        REQUIRE(a.owned.size() == 9);

        int assigned = 0;
        std::set<int> seen;
        for (std::size_t s = 0; s < 9; ++s) {
            const std::size_t n = a.owned[s].size();
            if (s < 4) CHECK(n == 4);       // block sensors
            else if (s < 8) CHECK(n == 2);  // odd row/column pairs
            else CHECK(n == 0);             // leftover corner
            for (int idx : a.owned[s]) {
                CHECK(seen.insert(idx).second); // at most one sensor per data point
                ++assigned;
            }
        }
        CHECK(assigned == 24);
        CHECK(seen.count(a.unassigned_data_index) == 0);
    }
}

TEST_CASE("standard_assignment covers all data points across orientations") {
    const std::vector<Point2> data = data_grid(5, 5);
    std::set<int> covered;
    for (int orientation = 0; orientation < 4; ++orientation) {
        const NeighborhoodAssignment a = standard_assignment(data, orientation);
        for (const auto& owned : a.owned)
            for (int idx : owned) covered.insert(idx);
    }
    CHECK(covered.size() == 25);
}

TEST_CASE("standard_assignment rejects non-5x5 grids") {
    const std::vector<Point2> bad = data_grid(4, 4);
    CHECK_THROWS_AS(standard_assignment(bad, 0), std::invalid_argument);
    const std::vector<Point2> data = data_grid(5, 5);
    CHECK_THROWS_AS(standard_assignment(data, 4), std::invalid_argument);
}
