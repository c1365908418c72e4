#pragma once

#include "padua/benchmark.hpp"
#include "padua/io.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace padua::cli {

// Bad flags, unknown subcommands, unparsable numerics. Exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct PointsCmd {
    int order = 1;
    std::string construction = "curve"; // curve | grid
};

struct FieldCmd {
    FieldKind kind = FieldKind::linear;
    int degree = 3;
    std::uint64_t seed = 0;
    int resolution = 101;
};

struct InterpCmd {
    std::string samples_path;
    std::string method = "padua"; // padua | rbf
    int resolution = 41;
    double shape = 0.0; // 0 = nearest-neighbour heuristic
    double ridge = 1e-10;
};

struct DiagnoseCmd {
    int order = 1;
    std::string what; // condition | lebesgue | gram | perturb
    int resolution = 201;
    std::uint64_t seed = 0;
    FieldKind field_kind = FieldKind::nonpoly;
    int field_degree = 3;
};

struct BenchCmd {
    std::string preset;
    std::string config_path;
    int trials = 0; // 0 = keep preset/config value
    int shots = 0;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct CliCommand {
    enum class Kind { none, points, field, interp, diagnose, bench };
    Kind kind = Kind::none; // none after --help
    io::Format format = io::Format::csv;
    std::string out = "-";
    PointsCmd points;
    FieldCmd field;
    InterpCmd interp;
    DiagnoseCmd diagnose;
    BenchCmd bench;
};

// Parse (validated) or throw UsageError. Help output goes to stdout and
// yields Kind::none. args excludes the program name.
CliCommand parse_args(const std::vector<std::string>& args);

// Run a parsed command. Throws on runtime failures.
int run_command(const CliCommand& cmd);

// Full entry point: 0 success, 2 usage error, 1 runtime error.
int main_entry(int argc, char** argv);

// Load an experiment configuration from a JSON file.
ExperimentConfig load_config_json(const std::string& path);

} // namespace padua::cli
