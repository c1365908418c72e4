#include "padua/fields.hpp"

#include "padua/chebyshev.hpp"
#include "padua/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace padua {

namespace {

constexpr double kDegenerateRange = 1e-12;

double poly_eval(int degree, const std::vector<double>& coeffs, double x, double y) {
    // graded (a, b) with a+b = t; powers accumulated incrementally
    double acc = 0.0;
    std::size_t idx = 0;
    std::vector<double> xp(degree + 1, 1.0), yp(degree + 1, 1.0);
    for (int k = 1; k <= degree; ++k) {
        xp[k] = xp[k - 1] * x;
        yp[k] = yp[k - 1] * y;
    }
    for (int t = 0; t <= degree; ++t)
        for (int a = 0; a <= t; ++a) acc += coeffs[idx++] * xp[a] * yp[t - a];
    return acc;
}

} // namespace

const char* to_string(FieldKind k) {
    switch (k) {
    case FieldKind::polynomial: return "polynomial";
    case FieldKind::linear: return "linear";
    case FieldKind::franke: return "franke";
    case FieldKind::nonpoly: return "nonpoly";
    }
    return "?";
}

FieldKind field_kind_from_string(const std::string& s) {
    if (s == "polynomial") return FieldKind::polynomial;
    if (s == "linear") return FieldKind::linear;
    if (s == "franke") return FieldKind::franke;
    if (s == "nonpoly") return FieldKind::nonpoly;
    throw std::invalid_argument("unknown field kind '" + s + "'");
}

double Field::raw(double x, double y) const {
    switch (kind_) {
    case FieldKind::polynomial: return poly_eval(degree_, coeffs_, x, y);
    case FieldKind::linear: return x + 0.5 * y;
    case FieldKind::franke:
        return 0.1 * (x + y) +
               std::exp(-8.0 * ((x + 0.4) * (x + 0.4) + (y + 0.4) * (y + 0.4))) +
               std::exp(-8.0 * ((x - 0.4) * (x - 0.4) + (y - 0.4) * (y - 0.4)));
    case FieldKind::nonpoly: return std::cos(std::exp(2.0 * x + y)) * std::sin(y);
    }
    return 0.0;
}

void Field::normalize() {
    const int n = kReferenceGridSize;
    double lo = raw(-1.0, -1.0), hi = lo;
    for (int r = 0; r < n; ++r) {
        const double y = -1.0 + 2.0 * r / (n - 1);
        for (int c = 0; c < n; ++c) {
            const double x = -1.0 + 2.0 * c / (n - 1);
            const double v = raw(x, y);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (hi - lo < kDegenerateRange) {
        scale_ = 0.0;
        shift_ = std::numbers::pi / 2.0; // midpoint convention for constants
    } else {
        scale_ = std::numbers::pi / (hi - lo);
        shift_ = -lo * scale_;
    }
}

Field random_polynomial_field(int degree, std::uint64_t seed) {
    if (degree < 0)
        throw std::invalid_argument("random_polynomial_field: degree must be >= 0");
    Field f;
    f.kind_ = FieldKind::polynomial;
    f.degree_ = degree;
    f.seed_ = seed;
    for (int attempt = 0; attempt < 10; ++attempt) {
        RngEngine rng = make_stream(seed, 0x5eedULL, attempt);
        f.coeffs_.clear();
        for (int t = 0; t <= degree; ++t)
            for (int a = 0; a <= t; ++a) f.coeffs_.push_back(uniform(rng, -1.0, 1.0));
        f.normalize();
        if (degree == 0 || f.scale_ != 0.0) return f;
    }
    throw std::runtime_error("random_polynomial_field: degenerate draws exhausted");
}

Field linear_field() {
    Field f;
    f.kind_ = FieldKind::linear;
    f.normalize();
    return f;
}

Field franke_field() {
    Field f;
    f.kind_ = FieldKind::franke;
    f.normalize();
    return f;
}

Field nonpoly_field() {
    Field f;
    f.kind_ = FieldKind::nonpoly;
    f.normalize();
    return f;
}

Field make_field(FieldKind kind, int degree, std::uint64_t seed) {
    switch (kind) {
    case FieldKind::polynomial: return random_polynomial_field(degree, seed);
    case FieldKind::linear: return linear_field();
    case FieldKind::franke: return franke_field();
    case FieldKind::nonpoly: return nonpoly_field();
    }
    throw std::invalid_argument("make_field: bad kind");
}

std::vector<double> eval_field(const Field& f, std::span<const Point2> points) {
    std::vector<double> out;
    out.reserve(points.size());
    for (Point2 p : points) {
        if (std::abs(p.x) > 1.0 + kDomainTol || std::abs(p.y) > 1.0 + kDomainTol)
            throw std::domain_error("eval_field: point (" + std::to_string(p.x) +
                                    ", " + std::to_string(p.y) +
                                    ") outside the unit square");
        out.push_back(f(p.x, p.y));
    }
    return out;
}

} // namespace padua
