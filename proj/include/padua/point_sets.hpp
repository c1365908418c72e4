#pragma once

#include <span>
#include <vector>

namespace padua {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

enum class PointClass { vertex, boundary, interior };

const char* to_string(PointClass c);

// Padua point set of a given order on [-1,1]^2 (first family), canonically
// ordered lexicographically by (x, y). Coordinates are snapped onto the
// C_{k+1} x C_{k+2} Chebyshev-Gauss-Lobatto product grid so both
// constructions produce bitwise-identical sets.
struct PaduaSet {
    int order = 0;
    std::vector<Point2> points;
    std::vector<PointClass> classes;
    std::vector<double> weights; // cubature weights

    std::size_t size() const { return points.size(); }
    // Index of the set point matching p within tolerance, or -1.
    int find(Point2 p, double tol = 1e-9) const;
};

// Number of Padua points of a given order: (order+2)(order+1)/2.
std::size_t padua_count(int order);

// Equally spaced samples of the generating curve
//   gamma(t) = (-cos((k+1)t), -cos(kt))
// at t_(j,m) = (j*k + m*(k+1))*pi/(k*(k+1)), j,m >= 0, j+m <= k.
PaduaSet padua_points_curve(int order);

// Same set assembled by masking every other point of the flattened
// C_{k+1} x C_{k+2} product grid (parity-dependent reshape).
PaduaSet padua_points_grid(int order);

// Class and cubature weight of a single Padua point; errors if p is not a
// member of the order's Padua set.
struct ClassWeight {
    PointClass cls;
    double weight;
};
ClassWeight classify_and_weight(Point2 p, int order);

// rows x cols equispaced grid spanning [-1,1]^2, ordered row-major in y.
std::vector<Point2> data_grid(int rows, int cols);

enum class SensorKind { padua, regular, standard };

struct SensorGrid {
    SensorKind kind = SensorKind::regular;
    std::vector<Point2> points;
    int param = 0;              // kappa for padua, d for regular
    bool overlaps_removed = false;
};

// d x d equispaced sensor grid spanning [-1,1]^2. With remove_overlaps set,
// sensors within 1e-9 of any data point are dropped.
SensorGrid regular_sensor_grid(int d, std::span<const Point2> data,
                               bool remove_overlaps);

// One orientation of the local-neighbourhood baseline on a 5x5 data grid:
// four sensors at the centers of disjoint 2x2 data blocks (4 data points
// each), four at midpoints of adjacent pairs along the leftover row and
// column (2 each), and one at the leftover corner (none).
struct NeighborhoodAssignment {
    int orientation = 0;
    std::vector<Point2> sensors;          // 9 sensors
    std::vector<std::vector<int>> owned;  // sensor -> data indices
    int unassigned_data_index = -1;       // the leftover corner data point
};

NeighborhoodAssignment standard_assignment(std::span<const Point2> data,
                                           int orientation);

} // namespace padua
