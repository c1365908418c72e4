#include "padua/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace padua {

namespace {

double clamp_abscissa(double s) {
    if (s > 1.0) {
        if (s > 1.0 + kDomainTol)
            throw std::domain_error("chebyshev: abscissa " + std::to_string(s) +
                                    " outside [-1,1]");
        return 1.0;
    }
    if (s < -1.0) {
        if (s < -1.0 - kDomainTol)
            throw std::domain_error("chebyshev: abscissa " + std::to_string(s) +
                                    " outside [-1,1]");
        return -1.0;
    }
    return s;
}

} // namespace

double cheb_T(int n, double s) {
    if (n < 0) throw std::invalid_argument("cheb_T: negative degree");
    s = clamp_abscissa(s);
    if (n == 0) return 1.0;
    if (n == 1) return s;
    double prev = 1.0;
    double cur = s;
    for (int k = 2; k <= n; ++k) {
        const double next = 2.0 * s * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ChebGrid cgl_points(int order) {
    if (order < 1) throw std::invalid_argument("cgl_points: order must be >= 1");
    ChebGrid grid;
    grid.order = order;
    grid.values.resize(order + 1);
    for (int j = 0; j <= order; ++j)
        grid.values[j] = -std::cos(static_cast<double>(j) * std::numbers::pi /
                                   static_cast<double>(order));
    grid.values.front() = -1.0;
    grid.values.back() = 1.0;
    return grid;
}

ChebMatrix cheb_matrix(int order, std::span<const double> abscissae) {
    if (order < 1) throw std::invalid_argument("cheb_matrix: order must be >= 1");
    ChebMatrix m;
    m.order = order;
    m.abscissae.assign(abscissae.begin(), abscissae.end());
    m.entries.resize(order + 1, static_cast<Eigen::Index>(abscissae.size()));
    const double root2 = std::numbers::sqrt2;
    for (Eigen::Index i = 0; i < m.entries.cols(); ++i) {
        const double s = clamp_abscissa(m.abscissae[static_cast<std::size_t>(i)]);
        // recurrence down the column
        m.entries(0, i) = root2;
        if (order >= 1) m.entries(1, i) = root2 * s;
        double prev = 1.0;
        double cur = s;
        for (int y = 2; y <= order; ++y) {
            const double next = 2.0 * s * cur - prev;
            prev = cur;
            cur = next;
            m.entries(y, i) = root2 * next;
        }
    }
    return m;
}

} // namespace padua
