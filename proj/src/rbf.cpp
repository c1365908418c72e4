#include "padua/rbf.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace padua {

double default_shape(std::span<const Point2> centers) {
    if (centers.size() < 2)
        return 1.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        double nn = 1e300;
        for (std::size_t j = 0; j < centers.size(); ++j) {
            if (i == j) continue;
            nn = std::min(nn, std::hypot(centers[i].x - centers[j].x,
                                         centers[i].y - centers[j].y));
        }
        acc += nn;
    }
    return static_cast<double>(centers.size()) / acc;
}

RbfModel rbf_fit(std::span<const Point2> centers, const Eigen::VectorXd& values,
                 double shape, double ridge) {
    if (centers.empty())
        throw std::invalid_argument("rbf_fit: no centers");
    if (static_cast<std::size_t>(values.size()) != centers.size())
        throw std::invalid_argument("rbf_fit: centers/values size mismatch");
    if (!values.allFinite())
        throw std::invalid_argument("rbf_fit: values must be finite");
    if (shape <= 0.0)
        throw std::invalid_argument("rbf_fit: shape must be positive");
    if (ridge < 0.0)
        throw std::invalid_argument("rbf_fit: ridge must be non-negative");

    const Eigen::Index n = static_cast<Eigen::Index>(centers.size());
    Eigen::MatrixXd phi(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        phi(i, i) = 1.0 + ridge;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double r = std::hypot(centers[i].x - centers[j].x,
                                        centers[i].y - centers[j].y);
            if (r <= 1e-9)
                throw std::invalid_argument("rbf_fit: coincident centers at index " +
                                            std::to_string(i) + " and " + std::to_string(j));
            const double v = std::exp(-(shape * r) * (shape * r));
            phi(i, j) = v;
            phi(j, i) = v;
        }
    }

    RbfModel model;
    model.centers.assign(centers.begin(), centers.end());
    model.shape = shape;
    model.ridge = ridge;
    model.coefficients = phi.ldlt().solve(values);

    // (Phi + ridge I) c = v must hold to solver accuracy; if it does not,
    // the Gram matrix was numerically singular beyond the ridge's reach.
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    const double residual = (phi * model.coefficients - values).cwiseAbs().maxCoeff();
    if (!model.coefficients.allFinite() || residual > 1e-6 * scale)
        throw std::runtime_error("rbf_fit: system is numerically singular (residual " +
                                 std::to_string(residual) + ")");
    return model;
}

std::vector<double> rbf_eval(const RbfModel& model, std::span<const Point2> targets) {
    std::vector<double> out;
    out.reserve(targets.size());
    for (Point2 t : targets) {
        double acc = 0.0;
        for (std::size_t i = 0; i < model.centers.size(); ++i) {
            const double r = std::hypot(t.x - model.centers[i].x,
                                        t.y - model.centers[i].y);
            acc += model.coefficients[static_cast<Eigen::Index>(i)] *
                   std::exp(-(model.shape * r) * (model.shape * r));
        }
        out.push_back(acc);
    }
    return out;
}

} // namespace padua
