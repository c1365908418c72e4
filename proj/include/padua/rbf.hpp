#pragma once

#include "padua/point_sets.hpp"

#include <Eigen/Core>
#include <span>
#include <vector>

namespace padua {

// Gaussian radial-basis-function interpolant
//   s(x) = sum_i c_i exp(-(shape * |x - center_i|)^2).
struct RbfModel {
    std::vector<Point2> centers;
    Eigen::VectorXd coefficients;
    double shape = 1.0;
    double ridge = 0.0;
};

inline constexpr double kDefaultRidge = 1e-10;

// 1 / (mean nearest-neighbour spacing of the centers).
double default_shape(std::span<const Point2> centers);

// Solve (Phi + ridge I) c = values. Centers must be pairwise distinct; a
// system the ridge cannot rescue raises a conditioning error.
RbfModel rbf_fit(std::span<const Point2> centers, const Eigen::VectorXd& values,
                 double shape, double ridge = kDefaultRidge);

std::vector<double> rbf_eval(const RbfModel& model, std::span<const Point2> targets);

} // namespace padua
