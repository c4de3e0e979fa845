#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hubsim/engine.hpp"
#include "hubsim/stats.hpp"

namespace hubsim
{

enum class RunMode : std::uint8_t
{
    Simulate,
    Analytic,
    Both,
};

std::string_view run_mode_name(RunMode mode);

/// Everything one invocation of the command-line tool needs.
struct RunConfig
{
    RunMode                    mode = RunMode::Both;
    SweepSpec                  spec;
    std::string                csv_path = "results.csv";
    std::optional<std::string> svg_path;
    AttemptsDenominator        attempts_denominator = AttemptsDenominator::All;
    unsigned                   workers              = 0; ///< 0: hardware concurrency

    void validate() const;
};

/// Bad flag, unknown key, malformed or out-of-range value.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_config for --help; carries the usage text.
class HelpRequested : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Applies one `key=value` setting. Keys mirror the struct field names:
/// mode, p0, beta, kappa, round_budget, cache_capacity, trials, master_seed,
/// grid, policies, csv_path, svg_path, attempts_denominator, workers.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Parses a config file body: one key=value per line, `#` starts a comment,
/// blank lines ignored. Diagnostics carry the line number.
void apply_config_text(RunConfig& config, std::string_view text);

/// Builds a RunConfig from command-line arguments (program name excluded).
/// A --config file is applied first; explicit flags override it.
RunConfig parse_config(const std::vector<std::string>& args);

/// Usage text for the command-line tool.
std::string usage();

} // namespace hubsim
