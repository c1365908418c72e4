#include "padua/benchmark.hpp"

#include "padua/interpolation.hpp"
#include "padua/measurement.hpp"
#include "padua/rbf.hpp"
#include "padua/rng.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace padua {

namespace {

constexpr std::uint64_t kTagField = 0xF1E1Dull;
constexpr std::uint64_t kTagShots = 0x5075ull;

Field trial_field(const ExperimentConfig& cfg, int trial) {
    if (cfg.field.kind != FieldKind::polynomial)
        return make_field(cfg.field.kind, 0, 0);
    const int t = cfg.field.fresh_seed_per_trial ? trial : 0;
    return random_polynomial_field(cfg.field.degree,
                                   mix_seed(cfg.master_seed, kTagField, t));
}

double sensor_estimate(const ExperimentConfig& cfg, const Field& field, Point2 s,
                       int trial, std::uint64_t sensor_key) {
    const double f = field(s.x, s.y);
    if (cfg.noiseless) return f;
    // phases are physical only on [0, pi]; off-grid normalization overshoot
    // is clipped before the measurement model
    const double clipped = std::clamp(f, 0.0, std::numbers::pi);
    RngEngine rng = make_stream(cfg.master_seed, kTagShots, trial, sensor_key);
    return measure_sensor(s, clipped, cfg.shots, rng).estimate;
}

double standard_trial(const ExperimentConfig& cfg, const Field& field,
                      std::span<const Point2> data, std::span<const double> truth,
                      int trial) {
    double acc = 0.0;
    for (int orientation = 0; orientation < 4; ++orientation) {
        const NeighborhoodAssignment a = standard_assignment(data, orientation);
        std::vector<double> est(a.sensors.size());
        for (std::size_t s = 0; s < a.sensors.size(); ++s)
            est[s] = sensor_estimate(cfg, field, a.sensors[s], trial,
                                     static_cast<std::uint64_t>(orientation) * 256 + s);
        std::vector<double> recon(data.size(), 0.0);
        for (std::size_t s = 0; s < a.sensors.size(); ++s)
            for (int idx : a.owned[s]) recon[static_cast<std::size_t>(idx)] = est[s];
        // the leftover corner gets the nearest sensor's estimate
        const Point2 lone = data[static_cast<std::size_t>(a.unassigned_data_index)];
        std::size_t nearest = 0;
        double best = 1e300;
        for (std::size_t s = 0; s < a.sensors.size(); ++s) {
            const double d = std::hypot(a.sensors[s].x - lone.x, a.sensors[s].y - lone.y);
            if (d < best) {
                best = d;
                nearest = s;
            }
        }
        recon[static_cast<std::size_t>(a.unassigned_data_index)] = est[nearest];
        acc += mapping_error(truth, recon);
    }
    return acc / 4.0;
}

int count_sensors(const ExperimentConfig& cfg) {
    switch (cfg.sensors.kind) {
    case SensorKind::padua:
        return static_cast<int>(padua_count(cfg.sensors.param));
    case SensorKind::regular: {
        const std::vector<Point2> data = data_grid(cfg.data_rows, cfg.data_cols);
        return static_cast<int>(
            regular_sensor_grid(cfg.sensors.param, data, cfg.sensors.remove_overlaps)
                .points.size());
    }
    case SensorKind::standard:
        return 9;
    }
    return 0;
}

} // namespace

const char* to_string(Method m) {
    switch (m) {
    case Method::padua_lagrange: return "padua-lagrange";
    case Method::rbf: return "rbf";
    case Method::standard: return "standard";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "padua-lagrange") return Method::padua_lagrange;
    if (s == "rbf") return Method::rbf;
    if (s == "standard") return Method::standard;
    throw std::invalid_argument("unknown method '" + s + "'");
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (cfg.shots < 1) throw std::invalid_argument("config: shots must be >= 1");
    if (cfg.data_rows < 2 || cfg.data_cols < 2)
        throw std::invalid_argument("config: data grid must be at least 2x2");
    if (cfg.method == Method::padua_lagrange && cfg.sensors.kind != SensorKind::padua)
        throw std::invalid_argument("config: padua-lagrange requires padua sensors");
    if (cfg.method == Method::standard && cfg.sensors.kind != SensorKind::standard)
        throw std::invalid_argument("config: the standard method requires the standard sensor grid");
    if (cfg.sensors.kind == SensorKind::standard && cfg.method != Method::standard)
        throw std::invalid_argument("config: standard sensors are only used by the standard method");
    if (cfg.sensors.kind != SensorKind::standard && cfg.sensors.param < 1)
        throw std::invalid_argument("config: sensor parameter must be >= 1");
    if (cfg.sensors.kind == SensorKind::regular && cfg.sensors.param < 2)
        throw std::invalid_argument("config: regular grids need d >= 2");
    if (cfg.field.kind == FieldKind::polynomial && cfg.field.degree < 0)
        throw std::invalid_argument("config: polynomial degree must be >= 0");
}

double mapping_error(std::span<const double> truth, std::span<const double> estimate) {
    if (truth.size() != estimate.size())
        throw std::invalid_argument("mapping_error: length mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        worst = std::max(worst, std::abs(truth[i] - estimate[i]));
    return worst;
}

double run_trial(const ExperimentConfig& cfg, int trial_index) {
    const Field field = trial_field(cfg, trial_index);
    const std::vector<Point2> data = data_grid(cfg.data_rows, cfg.data_cols);
    const std::vector<double> truth = eval_field(field, data);

    switch (cfg.method) {
    case Method::padua_lagrange: {
        PaduaSet set = padua_points_curve(cfg.sensors.param);
        Eigen::VectorXd est(static_cast<Eigen::Index>(set.size()));
        for (std::size_t i = 0; i < set.size(); ++i)
            est[static_cast<Eigen::Index>(i)] =
                sensor_estimate(cfg, field, set.points[i], trial_index, i);
        const PaduaSamples samples = make_samples(std::move(set), std::move(est));
        return mapping_error(truth, interpolate_kernel(samples, data));
    }
    case Method::rbf: {
        std::vector<Point2> centers;
        if (cfg.sensors.kind == SensorKind::regular)
            centers = regular_sensor_grid(cfg.sensors.param, data,
                                          cfg.sensors.remove_overlaps)
                          .points;
        else
            centers = padua_points_curve(cfg.sensors.param).points;
        Eigen::VectorXd est(static_cast<Eigen::Index>(centers.size()));
        for (std::size_t i = 0; i < centers.size(); ++i)
            est[static_cast<Eigen::Index>(i)] =
                sensor_estimate(cfg, field, centers[i], trial_index, i);
        const RbfModel model = rbf_fit(centers, est, default_shape(centers));
        return mapping_error(truth, rbf_eval(model, data));
    }
    case Method::standard:
        return standard_trial(cfg, field, data, truth, trial_index);
    }
    throw std::logic_error("run_trial: bad method");
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, int threads) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();

    struct Slot {
        double error = 0.0;
        bool failed = false;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(cfg.trials));
    std::atomic<int> next{0};
    const auto worker = [&] {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= cfg.trials) return;
            try {
                slots[static_cast<std::size_t>(t)].error = run_trial(cfg, t);
            } catch (const std::exception&) {
                slots[static_cast<std::size_t>(t)].failed = true;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ExperimentResult res;
    res.config = cfg;
    res.sensor_count = count_sensors(cfg);
    for (const Slot& s : slots) {
        if (s.failed)
            ++res.failures;
        else
            res.trial_errors.push_back(s.error);
    }
    if (res.failures * 10 > cfg.trials)
        throw std::runtime_error("run_experiment: " + std::to_string(res.failures) +
                                 " of " + std::to_string(cfg.trials) + " trials failed");

    const auto n = static_cast<double>(res.trial_errors.size());
    for (double e : res.trial_errors) res.mean += e;
    res.mean /= n;
    if (res.trial_errors.size() < 2) {
        res.stderr_undefined = true;
    } else {
        double ss = 0.0;
        for (double e : res.trial_errors) ss += (e - res.mean) * (e - res.mean);
        res.std_dev = std::sqrt(ss / (n - 1.0));
        res.std_err = res.std_dev / std::sqrt(n);
    }
    res.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return res;
}

const char* const kPresetNames[5] = {"fig1b", "fig2a", "fig2b", "fig2c", "fig3"};

std::vector<ExperimentConfig> preset_configs(const std::string& name) {
    std::vector<ExperimentConfig> out;
    const auto push = [&](ExperimentConfig cfg) {
        cfg.preset = name;
        out.push_back(std::move(cfg));
    };

    if (name == "fig1b") {
        // nearest-size regular grid for each polynomial order
        const int paired_d[10] = {0, 2, 2, 3, 4, 5, 5, 5, 9, 9};
        for (int n = 1; n <= 9; ++n) {
            ExperimentConfig padua;
            padua.field = {FieldKind::polynomial, n, true};
            padua.sensors = {SensorKind::padua, n, false};
            padua.method = Method::padua_lagrange;
            push(padua);

            ExperimentConfig matched = padua;
            matched.sensors = {SensorKind::regular, paired_d[n],
                               paired_d[n] == 9};
            matched.method = Method::rbf;
            matched.note = "size-matched d=" + std::to_string(paired_d[n]);
            push(matched);

            ExperimentConfig fixed = padua;
            fixed.sensors = {SensorKind::regular, 9, true};
            fixed.method = Method::rbf;
            fixed.note = "fixed d=9";
            push(fixed);
        }
        return out;
    }

    if (name == "fig2a" || name == "fig2b" || name == "fig2c") {
        const FieldKind kind = name == "fig2a"   ? FieldKind::linear
                               : name == "fig2b" ? FieldKind::franke
                                                 : FieldKind::nonpoly;
        for (int kappa : {1, 2, 3, 4, 5, 10}) {
            ExperimentConfig cfg;
            cfg.field = {kind, 0, false};
            cfg.sensors = {SensorKind::padua, kappa, false};
            cfg.method = Method::padua_lagrange;
            push(cfg);
        }
        for (int d : {2, 3, 4, 6, 9}) {
            ExperimentConfig cfg;
            cfg.field = {kind, 0, false};
            cfg.sensors = {SensorKind::regular, d, d == 9};
            cfg.method = Method::rbf;
            push(cfg);
        }
        ExperimentConfig baseline;
        baseline.field = {kind, 0, false};
        baseline.sensors = {SensorKind::standard, 0, false};
        baseline.method = Method::standard;
        push(baseline);
        return out;
    }

    if (name == "fig3") {
        for (FieldKind kind : {FieldKind::linear, FieldKind::nonpoly})
            for (int kappa : {1, 4, 10})
                for (int shots : {5, 10, 25, 50, 100, 250, 500, 1000}) {
                    ExperimentConfig cfg;
                    cfg.field = {kind, 0, false};
                    cfg.sensors = {SensorKind::padua, kappa, false};
                    cfg.method = Method::padua_lagrange;
                    cfg.shots = shots;
                    push(cfg);
                }
        return out;
    }

    throw std::invalid_argument("unknown preset '" + name + "'");
}

io::Table results_table(std::span<const ExperimentResult> results) {
    io::Table t;
    t.header = {"preset",       "field_kind",    "field_degree", "method",
                "sensor_kind",  "sensor_param",  "sensor_count", "shots",
                "trials",       "mean_error_rad", "std_dev_rad", "std_err_rad",
                "failures",     "wall_ms"};
    for (const ExperimentResult& r : results) {
        const ExperimentConfig& c = r.config;
        const char* sensor_kind = c.sensors.kind == SensorKind::padua ? "padua"
                                  : c.sensors.kind == SensorKind::regular
                                      ? "regular"
                                      : "standard";
        t.rows.push_back({c.preset,
                          std::string(to_string(c.field.kind)),
                          static_cast<std::int64_t>(
                              c.field.kind == FieldKind::polynomial ? c.field.degree : 0),
                          std::string(to_string(c.method)),
                          std::string(sensor_kind),
                          static_cast<std::int64_t>(c.sensors.param),
                          static_cast<std::int64_t>(r.sensor_count),
                          static_cast<std::int64_t>(c.shots),
                          static_cast<std::int64_t>(c.trials),
                          r.mean,
                          r.std_dev,
                          r.std_err,
                          static_cast<std::int64_t>(r.failures),
                          r.wall_ms});
    }
    return t;
}

} // namespace padua
