#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

namespace padua {

// Tolerance for abscissae that land just outside [-1,1] through round-off
// (perturbed-grid experiments produce such values). Anything farther out is
// a domain error.
inline constexpr double kDomainTol = 1e-12;

// Chebyshev polynomial of the first kind, T_n(s), via the three-term
// recurrence. |s| may exceed 1 by at most kDomainTol (clamped).
double cheb_T(int n, double s);

// Chebyshev-Gauss-Lobatto grid of a given order: kappa+1 points
//   z_j = -cos(j*pi/kappa),  j = 0..kappa,
// strictly increasing from -1 to +1.
struct ChebGrid {
    int order = 0;
    std::vector<double> values;
};

ChebGrid cgl_points(int order);

// Rectangular Chebyshev matrix: (kappa+1) x |S| with entry (y, i) equal to
// sqrt(2)*T_y(s_i). Row 0 is the constant sqrt(2).
struct ChebMatrix {
    int order = 0;
    std::vector<double> abscissae;
    Eigen::MatrixXd entries;
};

ChebMatrix cheb_matrix(int order, std::span<const double> abscissae);

} // namespace padua
