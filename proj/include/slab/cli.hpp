#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slab/spectrum.hpp"

namespace slab::cli {

enum class Command { Roots, OracleCheck, Spectrum, Mode, Sweep, Selftest };
enum class Format { Csv, Json };

/// Malformed or unknown configuration (exit status 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::Spectrum;
    std::string variant = "OnePhase(1)";
    std::vector<double> phases_pi;                 // independent phases, units of pi
    std::optional<std::array<double, 4>> angles_pi;  // rho, mu, sigma, nu, units of pi
    double mass = 1.0;
    double field = 0.0;
    double px = 0.0;
    std::optional<double> energy;  // set: fixed energy; unset: Landau level
    int landau_level = 0;
    double half_width = 1.0;
    std::optional<double> k;
    std::optional<double> k_min;
    std::optional<double> k_max;
    std::optional<int> root_selector;
    int grid_points = 256;
    SweepAxis sweep_axis = SweepAxis::HalfWidth;
    std::vector<double> sweep_values;
    int y_points = 41;
    int z_points = 9;
    std::string output_path;
    Format format = Format::Csv;
    std::uint64_t seed = 0;
    int draws = 1000;
};

Command parse_command(const std::string& name);
const char* command_name(Command c);
Format parse_format(const std::string& name);

/// Applies the keys of a JSON config object onto `cfg`. Unknown keys and type errors throw ConfigError.
void apply_json(RunConfig& cfg, const std::string& json_text);

/// Phase configuration and quantization problem built from the config (DomainError on bad physics).
PhaseConfig make_phases(const RunConfig& cfg);
QuantizationProblem make_problem(const RunConfig& cfg);

struct RunResult {
    int exit_code = 0;
    std::string output;  // serialized artifact
    std::string message;  // human-readable summary for stderr
};

/// Executes the configured command. Never throws; errors map to exit codes 2, 3, 4.
RunResult run(const RunConfig& cfg);

/// Serialization helpers.
std::string format_double(double v);
std::string spectrum_csv(const SpectrumTable& t);

}  // namespace slab::cli
