#pragma once

#include "padua/fields.hpp"
#include "padua/point_sets.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace padua {

class RankDeficiencyError : public std::runtime_error {
  public:
    RankDeficiencyError(int deficient_columns, const std::string& what)
        : std::runtime_error(what), deficient_columns_(deficient_columns) {}
    int deficient_columns() const { return deficient_columns_; }

  private:
    int deficient_columns_;
};

enum class BasisKind { monomial, product_chebyshev };

// Total-degree polynomial basis of dimension (degree+1)(degree+2)/2, ordered
// graded: (a, b) with a+b = t for t = 0..degree. The product-Chebyshev basis
// is orthonormally scaled (degree-0 factor 1, sqrt(2) otherwise) and its
// (degree, 0) element carries an extra 1/sqrt(2): that is the element the
// Padua cubature would otherwise double-count.
struct BasisSpec {
    BasisKind kind = BasisKind::product_chebyshev;
    int degree = 0;

    int dimension() const { return (degree + 1) * (degree + 2) / 2; }
};

// L x N matrix of basis values p_j(x_i).
Eigen::MatrixXd basis_eval(const BasisSpec& basis, std::span<const Point2> points);

struct WeightedVandermonde {
    BasisSpec basis;
    std::vector<Point2> points;
    Eigen::VectorXd weights; // diagonal of W, strictly positive
    Eigen::MatrixXd matrix;  // L x N, entries p_j(x_i)
};

WeightedVandermonde make_vandermonde(BasisSpec basis, std::vector<Point2> points,
                                     Eigen::VectorXd weights);

// Padua points of the given order with weights sqrt(w_x), so the discrete
// inner product sum_k w_k^2 p_i p_j carries the cubature weights.
WeightedVandermonde padua_system(int order, BasisKind kind);

// Weighted least-squares coefficients c = (W V)^+ W F.
Eigen::VectorXd lsq_fit(const WeightedVandermonde& v, const Eigen::VectorXd& f);

// Evaluate the fitted polynomial at arbitrary points.
std::vector<double> lsq_eval(const BasisSpec& basis, const Eigen::VectorXd& coeffs,
                             std::span<const Point2> points);

enum class OperatorNorm { spectral, infinity };

// Condition number ||(WV)^+|| * ||WV||. The spectral norm realises the
// optimality value of one for the weighted product-Chebyshev basis at the
// Padua points and is the default; the max-row-sum norm is also available.
double condition_number(const WeightedVandermonde& v,
                        OperatorNorm norm = OperatorNorm::spectral);

// Gram matrix of the discrete inner product, entry (i,j) =
// sum_k w_k^2 p_i(x_k) p_j(x_k).
Eigen::MatrixXd gram_orthonormality(const WeightedVandermonde& v);

struct LebesgueEstimate {
    int order = 0;
    int resolution = 0;
    double value = 1.0;
};

// Max over a resolution x resolution grid of sum_x |l(x, target)|.
LebesgueEstimate lebesgue_estimate(int order, int resolution);

// Moore-Penrose pseudoinverse (SVD based).
Eigen::MatrixXd pseudoinverse(const Eigen::MatrixXd& a);

// (A+B)^+ through the block identity
//   (A+B)^+ = 1/2 [I I] [[A, B], [B, A]]^+ [I; I].
Eigen::MatrixXd block_pseudoinverse(const Eigen::MatrixXd& a,
                                    const Eigen::MatrixXd& b);

struct PerturbationRow {
    double epsilon = 0.0;
    double sup_error = 0.0;
};

// For each displacement magnitude, move every Padua node by epsilon along a
// seeded random unit direction (fixed across magnitudes), refit the
// least-squares interpolant on the perturbed nodes using true field values
// there, and report the sup reconstruction error over a dense grid.
std::vector<PerturbationRow> perturbation_sweep(int order,
                                                std::span<const double> epsilons,
                                                const Field& field,
                                                std::uint64_t seed,
                                                int dense_resolution = 81);

} // namespace padua
