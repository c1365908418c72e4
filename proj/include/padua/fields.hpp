#pragma once

#include "padua/point_sets.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <vector>

namespace padua {

enum class FieldKind { polynomial, linear, franke, nonpoly };

const char* to_string(FieldKind k);
FieldKind field_kind_from_string(const std::string& s);

// A true scalar field on [-1,1]^2, affinely normalized so its range over a
// fixed 101x101 reference grid is [0, pi]. Zero-range fields map to pi/2.
class Field {
  public:
    static constexpr int kReferenceGridSize = 101;

    FieldKind kind() const { return kind_; }
    int degree() const { return degree_; }
    std::uint64_t seed() const { return seed_; }
    double scale() const { return scale_; }
    double shift() const { return shift_; }

    // Raw (un-normalized) field value.
    double raw(double x, double y) const;
    // Normalized value; pure affine map of raw (no clamping).
    double operator()(double x, double y) const { return scale_ * raw(x, y) + shift_; }

    friend Field random_polynomial_field(int degree, std::uint64_t seed);
    friend Field linear_field();
    friend Field franke_field();
    friend Field nonpoly_field();

  private:
    Field() = default;
    void normalize();

    FieldKind kind_ = FieldKind::linear;
    int degree_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<double> coeffs_; // graded (a,b), a+b <= degree; polynomial only
    double scale_ = 1.0;
    double shift_ = 0.0;
};

// Total-degree-n polynomial with i.i.d. uniform[-1,1] coefficients from the
// seeded stream. Degenerate (constant) draws are re-drawn with an
// incremented sub-seed, at most 10 times; n = 0 is constant by design.
Field random_polynomial_field(int degree, std::uint64_t seed);

// a + b x + c y with (a,b,c) = (0, 1, 0.5).
Field linear_field();

// 0.1 (x+y) + exp(-8((x+0.4)^2+(y+0.4)^2)) + exp(-8((x-0.4)^2+(y-0.4)^2)).
Field franke_field();

// cos(exp(2x+y)) sin(y).
Field nonpoly_field();

Field make_field(FieldKind kind, int degree, std::uint64_t seed);

// Normalized values at the given points; rejects points off the unit square.
std::vector<double> eval_field(const Field& f, std::span<const Point2> points);

} // namespace padua
