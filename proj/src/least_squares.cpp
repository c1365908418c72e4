#include "padua/least_squares.hpp"

#include "padua/chebyshev.hpp"
#include "padua/interpolation.hpp"
#include "padua/rng.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace padua {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

// plain T_0..T_n by recurrence
void cheb_row(int n, double s, std::vector<double>& t) {
    t.resize(static_cast<std::size_t>(n) + 1);
    t[0] = 1.0;
    if (n >= 1) t[1] = s;
    for (int k = 2; k <= n; ++k) t[k] = 2.0 * s * t[k - 1] - t[k - 2];
}

int rank_of(const Eigen::VectorXd& sv) {
    if (sv.size() == 0) return 0;
    const double tol = sv[0] * std::max<double>(1, sv.size()) * 1e-13;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > tol) ++r;
    return r;
}

void require_full_rank(const Eigen::VectorXd& sv, Eigen::Index cols, const char* who) {
    const int r = rank_of(sv);
    if (r < cols)
        throw RankDeficiencyError(static_cast<int>(cols) - r,
                                  std::string(who) + ": matrix is rank-deficient by " +
                                      std::to_string(cols - r) + " column(s)");
}

} // namespace

Eigen::MatrixXd basis_eval(const BasisSpec& basis, std::span<const Point2> points) {
    const int n = basis.degree;
    const int dim = basis.dimension();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), dim);
    std::vector<double> tx, ty;
    const double root2 = std::numbers::sqrt2;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point2 p = points[i];
        int col = 0;
        if (basis.kind == BasisKind::monomial) {
            std::vector<double> xp(n + 1, 1.0), yp(n + 1, 1.0);
            for (int k = 1; k <= n; ++k) {
                xp[k] = xp[k - 1] * p.x;
                yp[k] = yp[k - 1] * p.y;
            }
            for (int t = 0; t <= n; ++t)
                for (int a = 0; a <= t; ++a)
                    m(static_cast<Eigen::Index>(i), col++) = xp[a] * yp[t - a];
        } else {
            cheb_row(n, p.x, tx);
            cheb_row(n, p.y, ty);
            for (int t = 0; t <= n; ++t)
                for (int a = 0; a <= t; ++a) {
                    double v = tx[a] * ty[t - a];
                    if (a > 0) v *= root2;
                    if (t - a > 0) v *= root2;
                    if (a == n && t == n) v /= root2; // the (degree, 0) element
                    m(static_cast<Eigen::Index>(i), col++) = v;
                }
        }
    }
    return m;
}

WeightedVandermonde make_vandermonde(BasisSpec basis, std::vector<Point2> points,
                                     Eigen::VectorXd weights) {
    if (static_cast<std::size_t>(weights.size()) != points.size())
        throw std::invalid_argument("make_vandermonde: weights/points size mismatch");
    if ((weights.array() <= 0.0).any())
        throw std::invalid_argument("make_vandermonde: weights must be strictly positive");
    WeightedVandermonde v;
    v.basis = basis;
    v.matrix = basis_eval(basis, points);
    v.points = std::move(points);
    v.weights = std::move(weights);
    return v;
}

WeightedVandermonde padua_system(int order, BasisKind kind) {
    const PaduaSet set = padua_points_curve(order);
    Eigen::VectorXd w(static_cast<Eigen::Index>(set.size()));
    for (std::size_t i = 0; i < set.size(); ++i)
        w[static_cast<Eigen::Index>(i)] = std::sqrt(set.weights[i]);
    return make_vandermonde(BasisSpec{kind, order}, set.points, std::move(w));
}

Eigen::VectorXd lsq_fit(const WeightedVandermonde& v, const Eigen::VectorXd& f) {
    if (f.size() != v.matrix.rows())
        throw std::invalid_argument("lsq_fit: sample vector length mismatch");
    if (v.matrix.rows() < v.matrix.cols())
        throw RankDeficiencyError(
            static_cast<int>(v.matrix.cols() - v.matrix.rows()),
            "lsq_fit: fewer points than basis functions");
    const Eigen::MatrixXd wv = v.weights.asDiagonal() * v.matrix;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(wv, Eigen::ComputeThinU | Eigen::ComputeThinV);
    require_full_rank(svd.singularValues(), wv.cols(), "lsq_fit");
    return svd.solve(v.weights.asDiagonal() * f);
}

std::vector<double> lsq_eval(const BasisSpec& basis, const Eigen::VectorXd& coeffs,
                             std::span<const Point2> points) {
    if (coeffs.size() != basis.dimension())
        throw std::invalid_argument("lsq_eval: coefficient length mismatch");
    const Eigen::MatrixXd b = basis_eval(basis, points);
    const Eigen::VectorXd vals = b * coeffs;
    return {vals.data(), vals.data() + vals.size()};
}

double condition_number(const WeightedVandermonde& v, OperatorNorm norm) {
    const Eigen::MatrixXd wv = v.weights.asDiagonal() * v.matrix;
    if (wv.rows() < wv.cols())
        throw RankDeficiencyError(static_cast<int>(wv.cols() - wv.rows()),
                                  "condition_number: fewer points than basis functions");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(wv, Eigen::ComputeThinU | Eigen::ComputeThinV);
    require_full_rank(svd.singularValues(), wv.cols(), "condition_number");
    if (norm == OperatorNorm::spectral) {
        const auto& sv = svd.singularValues();
        return sv[0] / sv[sv.size() - 1];
    }
    const Eigen::MatrixXd pinv =
        svd.matrixV() * svd.singularValues().cwiseInverse().asDiagonal() *
        svd.matrixU().transpose();
    return wv.cwiseAbs().rowwise().sum().maxCoeff() *
           pinv.cwiseAbs().rowwise().sum().maxCoeff();
}

Eigen::MatrixXd gram_orthonormality(const WeightedVandermonde& v) {
    const Eigen::MatrixXd wv = v.weights.asDiagonal() * v.matrix;
    return wv.transpose() * wv;
}

LebesgueEstimate lebesgue_estimate(int order, int resolution) {
    if (resolution < 50)
        throw std::invalid_argument("lebesgue_estimate: resolution must be >= 50");
    const PaduaSet set = padua_points_curve(order);
    const BasisSpec basis{BasisKind::product_chebyshev, order};

    // With the orthonormal scaling (including the modified (order,0)
    // element), K*(x, y) = phi(x) . phi(y), so the Lebesgue function is
    // sum_i w_i |(Phi_nodes Phi_targets^t)_i|.
    const Eigen::MatrixXd phi_nodes = basis_eval(basis, set.points);
    Eigen::VectorXd w(static_cast<Eigen::Index>(set.size()));
    for (std::size_t i = 0; i < set.size(); ++i)
        w[static_cast<Eigen::Index>(i)] = set.weights[i];

    const std::vector<double> g = linspace(-1.0, 1.0, resolution);
    double best = 0.0;
    std::vector<Point2> chunk;
    const int chunk_rows = std::max(1, 8192 / resolution);
    for (int r0 = 0; r0 < resolution; r0 += chunk_rows) {
        chunk.clear();
        const int r1 = std::min(resolution, r0 + chunk_rows);
        for (int r = r0; r < r1; ++r)
            for (int c = 0; c < resolution; ++c)
                chunk.push_back({g[static_cast<std::size_t>(c)], g[static_cast<std::size_t>(r)]});
        const Eigen::MatrixXd phi_t = basis_eval(basis, chunk);
        const Eigen::VectorXd lebesgue =
            (phi_nodes * phi_t.transpose()).cwiseAbs().transpose() * w;
        best = std::max(best, lebesgue.maxCoeff());
    }
    return LebesgueEstimate{order, resolution, best};
}

Eigen::MatrixXd pseudoinverse(const Eigen::MatrixXd& a) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double tol =
        (sv.size() ? sv[0] : 0.0) * std::max(a.rows(), a.cols()) * 1e-14;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > tol) inv[i] = 1.0 / sv[i];
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Eigen::MatrixXd block_pseudoinverse(const Eigen::MatrixXd& a,
                                    const Eigen::MatrixXd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("block_pseudoinverse: shape mismatch");
    const Eigen::Index m = a.rows(), n = a.cols();
    Eigen::MatrixXd big(2 * m, 2 * n);
    big.topLeftCorner(m, n) = a;
    big.topRightCorner(m, n) = b;
    big.bottomLeftCorner(m, n) = b;
    big.bottomRightCorner(m, n) = a;
    const Eigen::MatrixXd p = pseudoinverse(big);
    return 0.5 * (p.topLeftCorner(n, m) + p.topRightCorner(n, m) +
                  p.bottomLeftCorner(n, m) + p.bottomRightCorner(n, m));
}

std::vector<PerturbationRow> perturbation_sweep(int order,
                                                std::span<const double> epsilons,
                                                const Field& field,
                                                std::uint64_t seed,
                                                int dense_resolution) {
    const PaduaSet set = padua_points_curve(order);
    double min_spacing = 1e300;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            min_spacing = std::min(min_spacing,
                                   std::hypot(set.points[i].x - set.points[j].x,
                                              set.points[i].y - set.points[j].y));
    for (double eps : epsilons)
        if (eps < 0.0 || eps >= 0.5 * min_spacing)
            throw std::invalid_argument(
                "perturbation_sweep: displacement " + std::to_string(eps) +
                " would collapse nodes (min spacing " + std::to_string(min_spacing) + ")");

    // one random unit direction per node, shared by all magnitudes
    RngEngine rng = make_stream(seed, 0xd15fULL);
    std::vector<Point2> dirs(set.size());
    for (Point2& d : dirs) {
        const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        d = {std::cos(theta), std::sin(theta)};
    }

    const std::vector<double> g = linspace(-1.0, 1.0, dense_resolution);
    std::vector<Point2> dense;
    dense.reserve(static_cast<std::size_t>(dense_resolution) * dense_resolution);
    for (double y : g)
        for (double x : g) dense.push_back({x, y});
    const std::vector<double> truth = eval_field(field, dense);

    const BasisSpec basis{BasisKind::product_chebyshev, order};
    std::vector<PerturbationRow> rows;
    for (double eps : epsilons) {
        std::vector<Point2> moved(set.size());
        Eigen::VectorXd w(static_cast<Eigen::Index>(set.size()));
        for (std::size_t i = 0; i < set.size(); ++i) {
            moved[i] = {std::clamp(set.points[i].x + eps * dirs[i].x, -1.0, 1.0),
                        std::clamp(set.points[i].y + eps * dirs[i].y, -1.0, 1.0)};
            w[static_cast<Eigen::Index>(i)] = std::sqrt(set.weights[i]);
        }
        const WeightedVandermonde v = make_vandermonde(basis, moved, w);
        const std::vector<double> fvals = eval_field(field, moved);
        const Eigen::VectorXd fv =
            Eigen::Map<const Eigen::VectorXd>(fvals.data(), static_cast<Eigen::Index>(fvals.size()));
        const Eigen::VectorXd c = lsq_fit(v, fv);
        const std::vector<double> recon = lsq_eval(basis, c, dense);
        double err = 0.0;
        for (std::size_t i = 0; i < dense.size(); ++i)
            err = std::max(err, std::abs(recon[i] - truth[i]));
        rows.push_back({eps, err});
    }
    return rows;
}

} // namespace padua
