#pragma once

#include "padua/point_sets.hpp"
#include "padua/rng.hpp"

namespace padua {

// Probability of the outcome-1 projective result for a phase in [0, pi]:
//   p = (1 - cos f) / 2,
// strictly increasing and exactly invertible on the interval. Inputs are
// clamped within 1e-12 of the interval; anything farther is a domain error.
double born_probability(double f_value);

// Count of ones from m independent Bernoulli(p) draws off the stream.
int sample_shots(double p, int shots, RngEngine& rng);

// Plug-in inverse of born_probability: arccos(1 - 2 ones/m), in [0, pi].
double estimate_field(int ones, int shots);

struct MeasurementRecord {
    Point2 sensor;
    int shots = 0;
    int ones = 0;
    double estimate = 0.0;
};

// Simulate an m-shot batch on one sensor sitting in a field of the given
// (already clamped) value.
MeasurementRecord measure_sensor(Point2 sensor, double f_value, int shots,
                                 RngEngine& rng);

} // namespace padua
