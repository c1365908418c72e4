#include "padua/cli.hpp"

#include "padua/fields.hpp"
#include "padua/interpolation.hpp"
#include "padua/least_squares.hpp"
#include "padua/rbf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace padua::cli {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

std::uint64_t env_seed() {
    const char* env = std::getenv("PADUA_FIELD_SEED");
    if (!env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw UsageError("PADUA_FIELD_SEED is not an unsigned integer");
    }
}

io::Table grid_value_table(const std::vector<double>& grid,
                           const std::function<double(double, double)>& f) {
    io::Table t;
    t.header = {"x", "y", "value"};
    for (double y : grid)
        for (double x : grid) t.rows.push_back({x, y, f(x, y)});
    return t;
}

int run_points(const CliCommand& cmd) {
    const PaduaSet set = cmd.points.construction == "grid"
                             ? padua_points_grid(cmd.points.order)
                             : padua_points_curve(cmd.points.order);
    io::Table t;
    t.header = {"x", "y", "class", "weight"};
    for (std::size_t i = 0; i < set.size(); ++i)
        t.rows.push_back({set.points[i].x, set.points[i].y,
                          std::string(to_string(set.classes[i])), set.weights[i]});
    io::write_output(t, cmd.format, cmd.out);
    return 0;
}

int run_field(const CliCommand& cmd) {
    const Field field = make_field(cmd.field.kind, cmd.field.degree, cmd.field.seed);
    const std::vector<double> grid = linspace(-1.0, 1.0, cmd.field.resolution);
    io::write_output(
        grid_value_table(grid, [&](double x, double y) { return field(x, y); }),
        cmd.format, cmd.out);
    return 0;
}

int run_interp(const CliCommand& cmd) {
    const io::CsvData csv = io::read_csv(cmd.interp.samples_path);
    if (csv.header.size() < 3 || csv.header[0] != "x" || csv.header[1] != "y" ||
        csv.header[2] != "value")
        throw std::runtime_error("interp: samples file must have header x,y,value");
    std::vector<Point2> pts;
    std::vector<double> vals;
    for (const auto& row : csv.rows) {
        if (row.size() < 3)
            throw std::runtime_error("interp: short row in samples file");
        pts.push_back({io::parse_double(row[0]), io::parse_double(row[1])});
        vals.push_back(io::parse_double(row[2]));
    }
    if (pts.empty()) throw std::runtime_error("interp: no samples");

    const std::vector<double> grid = linspace(-1.0, 1.0, cmd.interp.resolution);
    io::Table t;

    if (cmd.interp.method == "padua") {
        // the sample count determines the order
        const double k = (-3.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(pts.size()))) / 2.0;
        const int order = static_cast<int>(std::lround(k));
        if (order < 1 || padua_count(order) != pts.size())
            throw std::runtime_error("interp: " + std::to_string(pts.size()) +
                                     " samples do not form a Padua set");
        PaduaSet set = padua_points_curve(order);
        Eigen::VectorXd f(static_cast<Eigen::Index>(set.size()));
        std::vector<bool> seen(set.size(), false);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const int idx = set.find(pts[i]);
            if (idx < 0 || seen[static_cast<std::size_t>(idx)])
                throw std::runtime_error("interp: samples are not the Padua points of order " +
                                         std::to_string(order));
            seen[static_cast<std::size_t>(idx)] = true;
            f[idx] = vals[i];
        }
        const PaduaSamples samples = make_samples(std::move(set), std::move(f));
        const Eigen::MatrixXd out = interpolate_fast(samples, grid, grid);
        t.header = {"x", "y", "value"};
        for (int r = 0; r < cmd.interp.resolution; ++r)
            for (int c = 0; c < cmd.interp.resolution; ++c)
                t.rows.push_back({grid[static_cast<std::size_t>(c)],
                                  grid[static_cast<std::size_t>(r)], out(r, c)});
    } else {
        const Eigen::VectorXd v =
            Eigen::Map<const Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
        const double shape =
            cmd.interp.shape > 0.0 ? cmd.interp.shape : default_shape(pts);
        const RbfModel model = rbf_fit(pts, v, shape, cmd.interp.ridge);
        std::vector<Point2> targets;
        for (double y : grid)
            for (double x : grid) targets.push_back({x, y});
        const std::vector<double> out = rbf_eval(model, targets);
        t.header = {"x", "y", "value"};
        for (std::size_t i = 0; i < targets.size(); ++i)
            t.rows.push_back({targets[i].x, targets[i].y, out[i]});
    }
    io::write_output(t, cmd.format, cmd.out);
    return 0;
}

int run_diagnose(const CliCommand& cmd) {
    const DiagnoseCmd& d = cmd.diagnose;
    io::Table t;
    if (d.what == "condition") {
        t.header = {"system", "norm", "eta"};
        const WeightedVandermonde padua =
            padua_system(d.order, BasisKind::product_chebyshev);
        const std::vector<Point2> grid = data_grid(d.order + 1, d.order + 1);
        const WeightedVandermonde mono = make_vandermonde(
            BasisSpec{BasisKind::monomial, d.order}, grid,
            Eigen::VectorXd::Ones(static_cast<Eigen::Index>(grid.size())));
        t.rows.push_back({std::string("padua-chebyshev"), std::string("spectral"),
                          condition_number(padua, OperatorNorm::spectral)});
        t.rows.push_back({std::string("padua-chebyshev"), std::string("infinity"),
                          condition_number(padua, OperatorNorm::infinity)});
        t.rows.push_back({std::string("equispaced-monomial"), std::string("spectral"),
                          condition_number(mono, OperatorNorm::spectral)});
        t.rows.push_back({std::string("equispaced-monomial"), std::string("infinity"),
                          condition_number(mono, OperatorNorm::infinity)});
    } else if (d.what == "lebesgue") {
        t.header = {"order", "resolution", "lambda"};
        for (int k = 1; k <= d.order; ++k) {
            const LebesgueEstimate est = lebesgue_estimate(k, d.resolution);
            t.rows.push_back({static_cast<std::int64_t>(k),
                              static_cast<std::int64_t>(est.resolution), est.value});
        }
    } else if (d.what == "gram") {
        const Eigen::MatrixXd g =
            gram_orthonormality(padua_system(d.order, BasisKind::product_chebyshev));
        t.header = {"i", "j", "value"};
        for (Eigen::Index i = 0; i < g.rows(); ++i)
            for (Eigen::Index j = 0; j < g.cols(); ++j)
                t.rows.push_back({static_cast<std::int64_t>(i),
                                  static_cast<std::int64_t>(j), g(i, j)});
    } else if (d.what == "perturb") {
        const Field field = make_field(d.field_kind, d.field_degree, d.seed);
        const std::vector<double> eps{0.0, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2};
        t.header = {"epsilon", "sup_error"};
        for (const PerturbationRow& row : perturbation_sweep(d.order, eps, field, d.seed))
            t.rows.push_back({row.epsilon, row.sup_error});
    } else {
        throw UsageError("diagnose: --what must be one of condition, lebesgue, gram, perturb");
    }
    io::write_output(t, cmd.format, cmd.out);
    return 0;
}

int run_bench(const CliCommand& cmd) {
    const BenchCmd& b = cmd.bench;
    std::vector<ExperimentConfig> configs;
    if (!b.preset.empty())
        configs = preset_configs(b.preset);
    else
        configs.push_back(load_config_json(b.config_path));
    for (ExperimentConfig& cfg : configs) {
        cfg.master_seed = b.seed;
        if (b.trials > 0) cfg.trials = b.trials;
        if (b.shots > 0) cfg.shots = b.shots;
    }
    std::vector<ExperimentResult> results;
    results.reserve(configs.size());
    for (const ExperimentConfig& cfg : configs)
        results.push_back(run_experiment(cfg, b.threads));
    io::write_output(results_table(results), cmd.format, cmd.out);
    return 0;
}

} // namespace

ExperimentConfig load_config_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("bench: cannot open config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("bench: bad JSON in '" + path + "': " + e.what());
    }
    ExperimentConfig cfg;
    try {
        const auto& field = j.at("field");
        cfg.field.kind = field_kind_from_string(field.at("kind").get<std::string>());
        cfg.field.degree = field.value("degree", 0);
        cfg.field.fresh_seed_per_trial = field.value("fresh_seed_per_trial", true);

        const auto& sensors = j.at("sensors");
        const std::string sensor_kind = sensors.at("kind").get<std::string>();
        if (sensor_kind == "padua")
            cfg.sensors.kind = SensorKind::padua;
        else if (sensor_kind == "regular")
            cfg.sensors.kind = SensorKind::regular;
        else if (sensor_kind == "standard")
            cfg.sensors.kind = SensorKind::standard;
        else
            throw std::runtime_error("unknown sensor kind '" + sensor_kind + "'");
        cfg.sensors.param = sensors.value("param", 1);
        cfg.sensors.remove_overlaps = sensors.value("remove_overlaps", false);

        cfg.method = method_from_string(j.at("method").get<std::string>());
        cfg.shots = j.value("shots", 50);
        cfg.trials = j.value("trials", 50);
        cfg.master_seed = j.value("master_seed", std::uint64_t{0});
        if (j.contains("data_grid")) {
            cfg.data_rows = j["data_grid"].value("rows", 5);
            cfg.data_cols = j["data_grid"].value("cols", 5);
        }
        cfg.noiseless = j.value("noiseless", false);
        cfg.preset = j.value("preset", std::string("custom"));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("bench: config '" + path + "' is missing fields: " + e.what());
    }
    return cfg;
}

CliCommand parse_args(const std::vector<std::string>& args) {
    CliCommand cmd;
    CLI::App app{"Padua-point field reconstruction toolkit"};
    app.require_subcommand(0, 1);

    std::string format = "csv";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format (csv or json)")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cmd.out, "Output path ('-' for stdout)");
    };

    CLI::App* points = app.add_subcommand("points", "Emit a Padua point set");
    points->add_option("--order", cmd.points.order, "Padua order (>= 1)")
        ->required()
        ->check(CLI::Range(1, 1000));
    points->add_option("--construction", cmd.points.construction,
                       "Construction route (curve or grid)")
        ->check(CLI::IsMember({"curve", "grid"}));
    add_common(points);

    CLI::App* field = app.add_subcommand("field", "Evaluate a true field over a grid");
    std::string field_kind = "linear";
    field->add_option("--kind", field_kind, "Field family")
        ->required()
        ->check(CLI::IsMember({"polynomial", "linear", "franke", "nonpoly"}));
    field->add_option("--degree", cmd.field.degree, "Polynomial degree")
        ->check(CLI::Range(0, 50));
    CLI::Option* field_seed =
        field->add_option("--seed", cmd.field.seed, "Seed for random coefficients");
    field->add_option("--resolution", cmd.field.resolution, "Grid resolution")
        ->check(CLI::Range(2, 4001));
    add_common(field);

    CLI::App* interp = app.add_subcommand("interp", "Reconstruct a field from samples");
    interp->add_option("--samples", cmd.interp.samples_path, "CSV with x,y,value rows")
        ->required();
    interp->add_option("--method", cmd.interp.method, "padua or rbf")
        ->check(CLI::IsMember({"padua", "rbf"}));
    interp->add_option("--resolution", cmd.interp.resolution, "Evaluation grid resolution")
        ->check(CLI::Range(2, 4001));
    interp->add_option("--shape", cmd.interp.shape, "RBF shape parameter (0 = auto)");
    interp->add_option("--ridge", cmd.interp.ridge, "RBF ridge regularization");
    add_common(interp);

    CLI::App* diagnose = app.add_subcommand("diagnose", "Conditioning and error diagnostics");
    diagnose->add_option("--order", cmd.diagnose.order, "Polynomial/Padua order")
        ->required()
        ->check(CLI::Range(1, 60));
    diagnose->add_option("--what", cmd.diagnose.what, "condition, lebesgue, gram or perturb")
        ->required()
        ->check(CLI::IsMember({"condition", "lebesgue", "gram", "perturb"}));
    diagnose->add_option("--resolution", cmd.diagnose.resolution, "Lebesgue grid resolution")
        ->check(CLI::Range(50, 2001));
    CLI::Option* diag_seed =
        diagnose->add_option("--seed", cmd.diagnose.seed, "Perturbation seed");
    std::string diag_field = "nonpoly";
    diagnose->add_option("--field-kind", diag_field, "Field for the perturbation sweep")
        ->check(CLI::IsMember({"polynomial", "linear", "franke", "nonpoly"}));
    diagnose->add_option("--field-degree", cmd.diagnose.field_degree, "Polynomial degree")
        ->check(CLI::Range(0, 50));
    add_common(diagnose);

    CLI::App* bench = app.add_subcommand("bench", "Run comparison experiments");
    CLI::Option* preset_opt =
        bench->add_option("--preset", cmd.bench.preset, "fig1b, fig2a, fig2b, fig2c or fig3")
            ->check(CLI::IsMember({"fig1b", "fig2a", "fig2b", "fig2c", "fig3"}));
    CLI::Option* config_opt =
        bench->add_option("--config", cmd.bench.config_path, "JSON experiment config");
    preset_opt->excludes(config_opt);
    bench->add_option("--trials", cmd.bench.trials, "Override trial count")
        ->check(CLI::Range(1, 1000000));
    bench->add_option("--shots", cmd.bench.shots, "Override shots per sensor")
        ->check(CLI::Range(1, 100000000));
    CLI::Option* bench_seed = bench->add_option("--seed", cmd.bench.seed, "Master seed");
    bench->add_option("--threads", cmd.bench.threads, "Worker threads for trials")
        ->check(CLI::Range(1, 256));
    add_common(bench);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        cmd.kind = CliCommand::Kind::none;
        return cmd;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cmd.format = io::format_from_string(format);
    if (points->parsed()) cmd.kind = CliCommand::Kind::points;
    else if (field->parsed()) {
        cmd.kind = CliCommand::Kind::field;
        cmd.field.kind = field_kind_from_string(field_kind);
        if (field_seed->count() == 0) cmd.field.seed = env_seed();
    } else if (interp->parsed()) cmd.kind = CliCommand::Kind::interp;
    else if (diagnose->parsed()) {
        cmd.kind = CliCommand::Kind::diagnose;
        cmd.diagnose.field_kind = field_kind_from_string(diag_field);
        if (diag_seed->count() == 0) cmd.diagnose.seed = env_seed();
    } else if (bench->parsed()) {
        cmd.kind = CliCommand::Kind::bench;
        if (cmd.bench.preset.empty() && cmd.bench.config_path.empty())
            throw UsageError("bench: one of --preset or --config is required");
        if (bench_seed->count() == 0) cmd.bench.seed = env_seed();
    } else {
        throw UsageError("missing subcommand (points, field, interp, diagnose, bench)");
    }
    return cmd;
}

int run_command(const CliCommand& cmd) {
    switch (cmd.kind) {
    case CliCommand::Kind::none: return 0;
    case CliCommand::Kind::points: return run_points(cmd);
    case CliCommand::Kind::field: return run_field(cmd);
    case CliCommand::Kind::interp: return run_interp(cmd);
    case CliCommand::Kind::diagnose: return run_diagnose(cmd);
    case CliCommand::Kind::bench: return run_bench(cmd);
    }
    return 1;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run_command(parse_args(args));
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace padua::cli
