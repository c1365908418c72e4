#include "padua/interpolation.hpp"

#include "padua/chebyshev.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace padua {

namespace {

void check_unit_square(Point2 p, const char* who) {
    if (std::abs(p.x) > 1.0 + kDomainTol || std::abs(p.y) > 1.0 + kDomainTol)
        throw std::domain_error(std::string(who) + ": point (" +
                                std::to_string(p.x) + ", " + std::to_string(p.y) +
                                ") outside the unit square");
}

// plain T_0..T_n at s
std::vector<double> cheb_values(int n, double s) {
    std::vector<double> t(static_cast<std::size_t>(n) + 1);
    t[0] = 1.0;
    if (n >= 1) t[1] = s;
    for (int k = 2; k <= n; ++k) t[k] = 2.0 * s * t[k - 1] - t[k - 2];
    return t;
}

double kernel_from_tables(int order, const std::vector<double>& ax,
                          const std::vector<double>& ay,
                          const std::vector<double>& bx,
                          const std::vector<double>& by) {
    double sum = 0.0;
    for (int j = 0; j <= order; ++j) {
        for (int i = 0; i <= j; ++i) {
            const double scale = (i == 0 ? 1.0 : 2.0) * (j - i == 0 ? 1.0 : 2.0);
            sum += scale * ax[i] * bx[i] * ay[j - i] * by[j - i];
        }
    }
    return sum;
}

int locate(double v, const std::vector<double>& grid, const char* who) {
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (std::abs(grid[i] - v) <= 1e-9) return static_cast<int>(i);
    throw std::logic_error(std::string(who) + ": coordinate not on the product grid");
}

} // namespace

PaduaSamples make_samples(PaduaSet set, Eigen::VectorXd values) {
    if (static_cast<std::size_t>(values.size()) != set.size())
        throw std::invalid_argument("make_samples: expected " +
                                    std::to_string(set.size()) + " values, got " +
                                    std::to_string(values.size()));
    if (!values.allFinite())
        throw std::invalid_argument("make_samples: sample values must be finite");
    return PaduaSamples{std::move(set), std::move(values)};
}

PaduaSamples sample_function(PaduaSet set,
                             const std::function<double(double, double)>& f) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(set.size()));
    for (std::size_t i = 0; i < set.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = f(set.points[i].x, set.points[i].y);
    return make_samples(std::move(set), std::move(v));
}

double kernel_K(int order, Point2 a, Point2 b) {
    if (order < 1) throw std::invalid_argument("kernel_K: order must be >= 1");
    check_unit_square(a, "kernel_K");
    check_unit_square(b, "kernel_K");
    return kernel_from_tables(order, cheb_values(order, a.x), cheb_values(order, a.y),
                              cheb_values(order, b.x), cheb_values(order, b.y));
}

double kernel_K_star(int order, Point2 a, Point2 b) {
    return kernel_K(order, a, b) - cheb_T(order, a.x) * cheb_T(order, b.x);
}

double lagrange_basis(const PaduaSet& set, Point2 node, Point2 target) {
    const int idx = set.find(node);
    if (idx < 0)
        throw std::invalid_argument("lagrange_basis: node is not a Padua point of this set");
    const Point2 x = set.points[static_cast<std::size_t>(idx)];
    return kernel_K_star(set.order, x, target) / kernel_K_star(set.order, x, x);
}

std::vector<double> interpolate_kernel(const PaduaSamples& samples,
                                       std::span<const Point2> targets) {
    const int order = samples.order();
    const std::size_t n = samples.set.size();

    std::vector<std::vector<double>> node_tx(n), node_ty(n);
    std::vector<double> denom(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = samples.set.points[i];
        node_tx[i] = cheb_values(order, p.x);
        node_ty[i] = cheb_values(order, p.y);
        denom[i] = kernel_from_tables(order, node_tx[i], node_ty[i], node_tx[i],
                                      node_ty[i]) -
                   node_tx[i][order] * node_tx[i][order];
    }

    std::vector<double> out;
    out.reserve(targets.size());
    for (Point2 t : targets) {
        check_unit_square(t, "interpolate_kernel");
        const auto tx = cheb_values(order, t.x);
        const auto ty = cheb_values(order, t.y);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double kstar = kernel_from_tables(order, node_tx[i], node_ty[i],
                                                    tx, ty) -
                                 node_tx[i][order] * tx[order];
            acc += samples.values[static_cast<Eigen::Index>(i)] * kstar / denom[i];
        }
        out.push_back(acc);
    }
    return out;
}

CoefficientMatrix padua_coefficient_matrix(const PaduaSamples& samples) {
    const int order = samples.order();
    const ChebGrid cx = cgl_points(order);
    const ChebGrid cy = cgl_points(order + 1);

    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(order + 1, order + 2);
    for (std::size_t i = 0; i < samples.set.size(); ++i) {
        const Point2 p = samples.set.points[i];
        const int r = locate(p.x, cx.values, "padua_coefficient_matrix");
        const int s = locate(p.y, cy.values, "padua_coefficient_matrix");
        G(r, s) = samples.set.weights[i] * samples.values[static_cast<Eigen::Index>(i)];
    }

    const ChebMatrix tx = cheb_matrix(order, cx.values);
    const ChebMatrix ty = cheb_matrix(order, cy.values);
    Eigen::MatrixXd C = tx.entries * G * ty.entries.transpose();

    for (int i = 0; i <= order; ++i)
        for (int j = 0; j <= order; ++j)
            if (i + j > order) C(i, j) = 0.0;
    C(order, 0) *= 0.5;
    return CoefficientMatrix{order, std::move(C)};
}

Eigen::MatrixXd interpolate_fast(const PaduaSamples& samples,
                                 std::span<const double> grid_x,
                                 std::span<const double> grid_y) {
    if (grid_x.empty() || grid_y.empty())
        throw std::invalid_argument("interpolate_fast: evaluation grids must be non-empty");
    const int order = samples.order();

    CoefficientMatrix c0 = padua_coefficient_matrix(samples);
    // The uniform sqrt(2) scaling of the Chebyshev matrices double-counts the
    // degree-zero rows; rescaling the first row and column restores the
    // orthonormal-convention coefficients.
    c0.entries.row(0) *= 0.5;
    c0.entries.col(0) *= 0.5;

    const ChebMatrix ux = cheb_matrix(order, grid_x);
    const ChebMatrix uy = cheb_matrix(order, grid_y);
    return (ux.entries.transpose() * c0.entries * uy.entries).transpose();
}

} // namespace padua
