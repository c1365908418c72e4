#include "padua/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace padua {

double born_probability(double f_value) {
    constexpr double tol = 1e-12;
    if (f_value < -tol || f_value > std::numbers::pi + tol)
        throw std::domain_error("born_probability: phase " + std::to_string(f_value) +
                                " outside [0, pi]");
    f_value = std::clamp(f_value, 0.0, std::numbers::pi);
    return 0.5 * (1.0 - std::cos(f_value));
}

int sample_shots(double p, int shots, RngEngine& rng) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("sample_shots: probability outside [0,1]");
    if (shots < 1)
        throw std::invalid_argument("sample_shots: shots must be >= 1");
    int ones = 0;
    for (int i = 0; i < shots; ++i)
        if (uniform01(rng) < p) ++ones;
    return ones;
}

double estimate_field(int ones, int shots) {
    if (shots < 1)
        throw std::invalid_argument("estimate_field: shots must be >= 1");
    if (ones < 0 || ones > shots)
        throw std::invalid_argument("estimate_field: ones outside [0, shots]");
    const double arg = std::clamp(1.0 - 2.0 * static_cast<double>(ones) / shots, -1.0, 1.0);
    return std::acos(arg);
}

MeasurementRecord measure_sensor(Point2 sensor, double f_value, int shots,
                                 RngEngine& rng) {
    MeasurementRecord rec;
    rec.sensor = sensor;
    rec.shots = shots;
    rec.ones = sample_shots(born_probability(f_value), shots, rng);
    rec.estimate = estimate_field(rec.ones, shots);
    return rec;
}

} // namespace padua
