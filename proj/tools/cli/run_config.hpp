#pragma once

#include <json.hpp>

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqz::cli {

/// Bad flags, bad config file or out-of-range settings. Maps to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& s);

/// Settings shared by every subcommand. JSON keys are the field names.
struct RunConfig {
    double s0_re = 1.0;
    double s0_im = 0.0;
    double d0_re = 0.0;
    double d0_im = 0.0;
    double t_start = 0.0;
    double t_end = 2.0 * std::numbers::pi;
    std::size_t n_steps = 64;
    double grid_l = 20.0;
    std::size_t grid_points = 4096;
    std::size_t n_max = 128;
    double tolerance = 1e-8;
    OutputFormat format = OutputFormat::csv;

    // wavefunction
    double time = 0.0;
    // symplectic
    std::string spec = "z(0)";
    double s1_re = 1.0;
    double s1_im = 0.0;
};

/// Throws ConfigError on s0_re <= 0, n_steps < 1, grid_points < 16, grid_l <= 0,
/// n_max < 1, tolerance <= 0 or non-finite numbers.
void validate(const RunConfig& config);

nlohmann::json to_json(const RunConfig& config);

/// Starts from `base` and overwrites every key present in `j`. Accepts either
/// a bare config object or a document with a "config" member, so the JSON
/// output of any subcommand can be fed back in. Unknown keys are rejected.
RunConfig merge_json(RunConfig base, const nlohmann::json& j);

RunConfig load_config_file(const std::string& path, const RunConfig& base = {});

} // namespace sqz::cli
