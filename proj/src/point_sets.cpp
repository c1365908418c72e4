#include "padua/point_sets.hpp"

#include "padua/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace padua {

namespace {

constexpr double kMatchTol = 1e-9;

// Replace a coordinate by its exact CGL grid value (must be within tol).
double snap_to_grid(double v, const std::vector<double>& grid) {
    double best = grid.front();
    double best_err = std::abs(v - best);
    for (double g : grid) {
        const double err = std::abs(v - g);
        if (err < best_err) {
            best = g;
            best_err = err;
        }
    }
    if (best_err > kMatchTol)
        throw std::logic_error("padua: generated point off the product grid by " +
                               std::to_string(best_err));
    return best;
}

PointClass classify(Point2 p) {
    const int on_edge = (std::abs(std::abs(p.x) - 1.0) <= kMatchTol ? 1 : 0) +
                        (std::abs(std::abs(p.y) - 1.0) <= kMatchTol ? 1 : 0);
    if (on_edge == 2) return PointClass::vertex;
    if (on_edge == 1) return PointClass::boundary;
    return PointClass::interior;
}

double cubature_weight(PointClass c, int order) {
    const double base = 1.0 / (static_cast<double>(order) * (order + 1));
    switch (c) {
    case PointClass::vertex: return 0.5 * base;
    case PointClass::boundary: return base;
    case PointClass::interior: return 2.0 * base;
    }
    return base;
}

// Snap, deduplicate, sort and attach classes/weights; validates the result.
PaduaSet finish_set(int order, std::vector<Point2> raw) {
    const ChebGrid gx = cgl_points(order);
    const ChebGrid gy = cgl_points(order + 1);
    for (Point2& p : raw) {
        p.x = snap_to_grid(p.x, gx.values);
        p.y = snap_to_grid(p.y, gy.values);
    }
    std::sort(raw.begin(), raw.end(), [](Point2 a, Point2 b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::vector<Point2> pts;
    pts.reserve(raw.size());
    for (Point2 p : raw) {
        if (!pts.empty() && std::abs(pts.back().x - p.x) <= kMatchTol &&
            std::abs(pts.back().y - p.y) <= kMatchTol)
            continue; // duplicate from the index formulae
        pts.push_back(p);
    }

    PaduaSet set;
    set.order = order;
    set.points = std::move(pts);
    if (set.points.size() != padua_count(order))
        throw std::logic_error("padua: expected " + std::to_string(padua_count(order)) +
                               " points, got " + std::to_string(set.points.size()));
    int vertices = 0;
    for (Point2 p : set.points) {
        const PointClass c = classify(p);
        set.classes.push_back(c);
        set.weights.push_back(cubature_weight(c, order));
        if (c == PointClass::vertex) ++vertices;
    }
    if (vertices != 2)
        throw std::logic_error("padua: expected exactly 2 vertex points, got " +
                               std::to_string(vertices));
    return set;
}

} // namespace

const char* to_string(PointClass c) {
    switch (c) {
    case PointClass::vertex: return "vertex";
    case PointClass::boundary: return "boundary";
    case PointClass::interior: return "interior";
    }
    return "?";
}

int PaduaSet::find(Point2 p, double tol) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (std::abs(points[i].x - p.x) <= tol && std::abs(points[i].y - p.y) <= tol)
            return static_cast<int>(i);
    return -1;
}

std::size_t padua_count(int order) {
    if (order < 1) throw std::invalid_argument("padua_count: order must be >= 1");
    return static_cast<std::size_t>(order + 2) * (order + 1) / 2;
}

PaduaSet padua_points_curve(int order) {
    if (order < 1)
        throw std::invalid_argument("padua_points_curve: order must be >= 1");
    const double k = order;
    std::vector<Point2> pts;
    for (int j = 0; j + 0 <= order; ++j) {
        for (int m = 0; j + m <= order; ++m) {
            const double t = (j * k + m * (k + 1.0)) * std::numbers::pi /
                             (k * (k + 1.0));
            pts.push_back({-std::cos((k + 1.0) * t), -std::cos(k * t)});
        }
    }
    return finish_set(order, std::move(pts));
}

PaduaSet padua_points_grid(int order) {
    if (order < 1)
        throw std::invalid_argument("padua_points_grid: order must be >= 1");
    const ChebGrid gx = cgl_points(order);     // order+1 points
    const ChebGrid gy = cgl_points(order + 1); // order+2 points
    const int nx = order + 1;
    const int ny = order + 2;
    std::vector<Point2> pts;
    for (int r = 0; r < nx; ++r) {
        for (int s = 0; s < ny; ++s) {
            // Every other point of the flattened meshgrid. The flat mask is
            // reshaped (order+1) x (order+2) for odd orders; for even orders
            // it is reshaped (order+2) x (order+1) and transposed.
            const int flat = (order % 2 != 0) ? r * ny + s : s * nx + r;
            if (flat % 2 == 0) pts.push_back({gx.values[r], gy.values[s]});
        }
    }
    return finish_set(order, std::move(pts));
}

ClassWeight classify_and_weight(Point2 p, int order) {
    const PaduaSet set = padua_points_curve(order);
    const int idx = set.find(p);
    if (idx < 0)
        throw std::invalid_argument("classify_and_weight: point is not a Padua point of this order");
    return {set.classes[static_cast<std::size_t>(idx)],
            set.weights[static_cast<std::size_t>(idx)]};
}

std::vector<Point2> data_grid(int rows, int cols) {
    if (rows < 2 || cols < 2)
        throw std::invalid_argument("data_grid: rows and cols must be >= 2");
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        const double y = -1.0 + 2.0 * r / (rows - 1);
        for (int c = 0; c < cols; ++c) {
            const double x = -1.0 + 2.0 * c / (cols - 1);
            pts.push_back({x, y});
        }
    }
    return pts;
}

SensorGrid regular_sensor_grid(int d, std::span<const Point2> data,
                               bool remove_overlaps) {
    if (d < 2) throw std::invalid_argument("regular_sensor_grid: d must be >= 2");
    SensorGrid grid;
    grid.kind = SensorKind::regular;
    grid.param = d;
    grid.overlaps_removed = remove_overlaps;
    for (int r = 0; r < d; ++r) {
        const double y = -1.0 + 2.0 * r / (d - 1);
        for (int c = 0; c < d; ++c) {
            const double x = -1.0 + 2.0 * c / (d - 1);
            if (remove_overlaps) {
                bool coincides = false;
                for (Point2 q : data)
                    if (std::hypot(q.x - x, q.y - y) <= kMatchTol) {
                        coincides = true;
                        break;
                    }
                if (coincides) continue;
            }
            grid.points.push_back({x, y});
        }
    }
    return grid;
}

NeighborhoodAssignment standard_assignment(std::span<const Point2> data,
                                           int orientation) {
    if (orientation < 0 || orientation > 3)
        throw std::invalid_argument("standard_assignment: orientation must be in 0..3");
    const std::vector<Point2> expected = data_grid(5, 5);
    if (data.size() != expected.size())
        throw std::invalid_argument("standard_assignment: data grid must be 5x5");

    // index of the data point at grid position (column i, row j)
    const auto data_index = [&](int i, int j) {
        const double x = -1.0 + 0.5 * i;
        const double y = -1.0 + 0.5 * j;
        for (std::size_t k = 0; k < data.size(); ++k)
            if (std::abs(data[k].x - x) <= kMatchTol &&
                std::abs(data[k].y - y) <= kMatchTol)
                return static_cast<int>(k);
        throw std::invalid_argument("standard_assignment: data grid must be the 5x5 span of [-1,1]^2");
    };

    const bool flip_x = (orientation & 1) != 0;
    const bool flip_y = (orientation & 2) != 0;
    const auto ix = [&](int i) { return flip_x ? 4 - i : i; };
    const auto iy = [&](int j) { return flip_y ? 4 - j : j; };
    const auto coord = [](int i) { return -1.0 + 0.5 * i; };

    NeighborhoodAssignment a;
    a.orientation = orientation;

    // 2x2 block sensors inside the 4x4 sub-grid anchored by the orientation
    for (int bi : {0, 2}) {
        for (int bj : {0, 2}) {
            const int i0 = ix(bi), i1 = ix(bi + 1);
            const int j0 = iy(bj), j1 = iy(bj + 1);
            a.sensors.push_back({0.5 * (coord(i0) + coord(i1)),
                                 0.5 * (coord(j0) + coord(j1))});
            a.owned.push_back({data_index(i0, j0), data_index(i1, j0),
                               data_index(i0, j1), data_index(i1, j1)});
        }
    }
    // pairs along the leftover column
    const int oc = ix(4);
    for (int bj : {0, 2}) {
        const int j0 = iy(bj), j1 = iy(bj + 1);
        a.sensors.push_back({coord(oc), 0.5 * (coord(j0) + coord(j1))});
        a.owned.push_back({data_index(oc, j0), data_index(oc, j1)});
    }
    // pairs along the leftover row
    const int orw = iy(4);
    for (int bi : {0, 2}) {
        const int i0 = ix(bi), i1 = ix(bi + 1);
        a.sensors.push_back({0.5 * (coord(i0) + coord(i1)), coord(orw)});
        a.owned.push_back({data_index(i0, orw), data_index(i1, orw)});
    }
    // leftover corner: a sensor with no neighbours
    a.sensors.push_back({coord(oc), coord(orw)});
    a.owned.push_back({});
    a.unassigned_data_index = data_index(oc, orw);
    return a;
}

} // namespace padua
