#pragma once

#include "padua/fields.hpp"
#include "padua/io.hpp"
#include "padua/point_sets.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace padua {

enum class Method { padua_lagrange, rbf, standard };

const char* to_string(Method m);
Method method_from_string(const std::string& s);

struct FieldSpec {
    FieldKind kind = FieldKind::polynomial;
    int degree = 1;                   // polynomial only
    bool fresh_seed_per_trial = true; // polynomial only; fixed fields ignore it
};

struct SensorSpec {
    SensorKind kind = SensorKind::padua;
    int param = 1; // kappa for padua, d for regular; unused for standard
    bool remove_overlaps = false;
};

struct ExperimentConfig {
    FieldSpec field;
    SensorSpec sensors;
    Method method = Method::padua_lagrange;
    int shots = 50;
    int trials = 50;
    std::uint64_t master_seed = 0;
    int data_rows = 5;
    int data_cols = 5;
    bool noiseless = false;  // feed exact field values to the reconstruction
    std::string preset;      // config echo
    std::string note;        // config echo (e.g. grid pairing)
};

void validate(const ExperimentConfig& config);

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<double> trial_errors; // successful trials, in trial order
    int failures = 0;
    int sensor_count = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    double std_err = 0.0;
    bool stderr_undefined = false; // a single trial has no spread estimate
    double wall_ms = 0.0;
};

// Uniform (infinity-norm) error between truth and estimate over the data
// points, in radians.
double mapping_error(std::span<const double> truth, std::span<const double> estimate);

// One trial: instantiate the field, simulate the shot budget on every
// sensor, reconstruct at the data points, return the mapping error.
double run_trial(const ExperimentConfig& config, int trial_index);

// All trials with per-trial seeds derived from the master seed. Results are
// keyed by trial index, so any parallelism degree gives identical output.
// Errors in more than 10% of trials fail the experiment.
ExperimentResult run_experiment(const ExperimentConfig& config, int threads = 1);

// Sweep definitions for the standard comparisons.
std::vector<ExperimentConfig> preset_configs(const std::string& name);

extern const char* const kPresetNames[5];

io::Table results_table(std::span<const ExperimentResult> results);

} // namespace padua
