#pragma once

#include "padua/point_sets.hpp"

#include <Eigen/Core>
#include <functional>
#include <span>
#include <vector>

namespace padua {

// Field samples taken at the Padua points, aligned with set.points.
struct PaduaSamples {
    PaduaSet set;
    Eigen::VectorXd values;

    int order() const { return set.order; }
};

PaduaSamples make_samples(PaduaSet set, Eigen::VectorXd values);
PaduaSamples sample_function(PaduaSet set,
                             const std::function<double(double, double)>& f);

// Reproducing kernel for total-degree bivariate polynomials on the unit
// square, in the orthonormal product-Chebyshev scaling (degree-0 factor 1):
//   K(a,b) = sum_{j=0..k} sum_{i=0..j} That_i(a.x) That_{j-i}(a.y)
//                                      That_i(b.x) That_{j-i}(b.y).
double kernel_K(int order, Point2 a, Point2 b);

// K*(a,b) = K(a,b) - T_k(a.x) T_k(b.x); satisfies K*(x,x) = 1/w_x at every
// Padua point x.
double kernel_K_star(int order, Point2 a, Point2 b);

// Lagrange cardinal basis l(node, target) = K*(node,target)/K*(node,node).
// node must be a member of the set.
double lagrange_basis(const PaduaSet& set, Point2 node, Point2 target);

// Direct kernel-sum interpolation: per target, sum_x f(x) l(x, target).
std::vector<double> interpolate_kernel(const PaduaSamples& samples,
                                       std::span<const Point2> targets);

// Coefficient matrix C0(f): the anti-triangular part (row+col <= order) of
//   C(f) = T(C_{k+1}) G(f) T(C_{k+2})^t
// built from uniformly sqrt(2)-scaled Chebyshev matrices, with the last
// element of the first column halved.
struct CoefficientMatrix {
    int order = 0;
    Eigen::MatrixXd entries;
};

CoefficientMatrix padua_coefficient_matrix(const PaduaSamples& samples);

// Fast tensor-grid evaluation of the interpolant over grid_x x grid_y.
// Result is |grid_y| x |grid_x| with entry (r, c) the value at
// (grid_x[c], grid_y[r]). Agrees with interpolate_kernel at every node.
Eigen::MatrixXd interpolate_fast(const PaduaSamples& samples,
                                 std::span<const double> grid_x,
                                 std::span<const double> grid_y);

} // namespace padua
