#include "hubsim/config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

namespace hubsim
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
    {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t                   start = 0;
    for (;;)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos)
        {
            return parts;
        }
        start = pos + 1;
    }
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected)
{
    throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key) + ": expected " +
                      std::string(expected));
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value, Int lo, std::string_view expected)
{
    Int  out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || out < lo)
    {
        bad_value(key, value, expected);
    }
    return out;
}

double parse_double(std::string_view key, std::string_view value)
{
    double out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(out))
    {
        bad_value(key, value, "a finite decimal number");
    }
    return out;
}

} // namespace

std::string_view run_mode_name(RunMode mode)
{
    switch (mode)
    {
        case RunMode::Simulate:
            return "simulate";
        case RunMode::Analytic:
            return "analytic";
        case RunMode::Both:
            return "both";
    }
    return "unknown";
}

void RunConfig::validate() const
{
    if (csv_path.empty())
    {
        throw ConfigError("csv_path must not be empty");
    }
    try
    {
        spec.validate();
    }
    catch (const std::invalid_argument& e)
    {
        throw ConfigError(e.what());
    }
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value)
{
    value       = trim(value);
    auto& p     = config.spec.params;
    using u32   = std::uint32_t;
    using u64   = std::uint64_t;

    if (key == "mode")
    {
        if (value == "simulate")
            config.mode = RunMode::Simulate;
        else if (value == "analytic")
            config.mode = RunMode::Analytic;
        else if (value == "both")
            config.mode = RunMode::Both;
        else
            bad_value(key, value, "one of simulate, analytic, both");
    }
    else if (key == "p0")
    {
        p.p0 = parse_double(key, value);
        if (!(p.p0 > 0.0 && p.p0 <= 1.0))
            bad_value(key, value, "a probability in (0, 1]");
    }
    else if (key == "beta")
    {
        p.beta = parse_double(key, value);
        if (p.beta < 0.0)
            bad_value(key, value, "a number >= 0");
    }
    else if (key == "kappa")
    {
        p.kappa = parse_double(key, value);
        if (!(p.kappa > 0.0))
            bad_value(key, value, "a number > 0");
    }
    else if (key == "round_budget")
    {
        p.round_budget = parse_int<u32>(key, value, 1, "an integer >= 1");
    }
    else if (key == "cache_capacity")
    {
        p.cache_capacity = parse_int<u32>(key, value, 0, "an integer >= 0");
    }
    else if (key == "trials")
    {
        p.trials = parse_int<u32>(key, value, 1, "an integer >= 1");
    }
    else if (key == "master_seed")
    {
        p.master_seed = parse_int<u64>(key, value, 0, "an unsigned 64-bit integer");
    }
    else if (key == "grid")
    {
        std::vector<u32> grid;
        for (auto item : split(value, ','))
        {
            grid.push_back(parse_int<u32>(key, item, 2, "comma-separated integers >= 2"));
        }
        for (std::size_t i = 1; i < grid.size(); ++i)
        {
            if (grid[i] <= grid[i - 1])
                bad_value(key, value, "a strictly increasing list");
        }
        config.spec.grid = std::move(grid);
    }
    else if (key == "policies")
    {
        std::vector<PolicyKind> policies;
        for (auto item : split(value, ','))
        {
            try
            {
                const auto kind = parse_policy(item);
                if (std::find(policies.begin(), policies.end(), kind) != policies.end())
                    bad_value(key, value, "each policy at most once");
                policies.push_back(kind);
            }
            catch (const std::invalid_argument&)
            {
                bad_value(key, value, "comma-separated list of naive, orchestrated");
            }
        }
        config.spec.policies = std::move(policies);
    }
    else if (key == "csv_path")
    {
        if (value.empty())
            bad_value(key, value, "a nonempty path");
        config.csv_path = std::string(value);
    }
    else if (key == "svg_path")
    {
        if (value.empty())
            config.svg_path.reset();
        else
            config.svg_path = std::string(value);
    }
    else if (key == "attempts_denominator")
    {
        if (value == "all")
            config.attempts_denominator = AttemptsDenominator::All;
        else if (value == "served" || value == "served_only")
            config.attempts_denominator = AttemptsDenominator::ServedOnly;
        else
            bad_value(key, value, "all or served");
    }
    else if (key == "workers")
    {
        config.workers = parse_int<unsigned>(key, value, 0, "an integer >= 0 (0 = all cores)");
    }
    else
    {
        throw ConfigError("unknown key '" + std::string(key) + "'");
    }
}

void apply_config_text(RunConfig& config, std::string_view text)
{
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n'))
    {
        ++line_no;
        auto line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
        {
            line = trim(line.substr(0, hash));
        }
        if (line.empty())
        {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
        {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        try
        {
            apply_setting(config, trim(line.substr(0, eq)), line.substr(eq + 1));
        }
        catch (const ConfigError& e)
        {
            throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

namespace
{

struct FlagSpec
{
    const char* flag;
    const char* key;
    const char* help;
};

constexpr FlagSpec kFlags[] = {
    {"--mode", "mode", "simulate | analytic | both (default both)"},
    {"--seed", "master_seed", "64-bit master seed"},
    {"--trials", "trials", "requests per sweep point (default 2500)"},
    {"--grid", "grid", "comma-separated network sizes >= 2 (default 2,4,...,128)"},
    {"--p0", "p0", "base per-attempt success probability (default 0.35)"},
    {"--beta", "beta", "scale attenuation coefficient (default 0.35)"},
    {"--kappa", "kappa", "parallelism coefficient (default 0.9)"},
    {"--rounds", "round_budget", "round budget per request (default 3)"},
    {"--cache-capacity", "cache_capacity", "spare pairs per node pair (default 1)"},
    {"--policies", "policies", "comma-separated: naive,orchestrated"},
    {"--csv", "csv_path", "CSV output path (default results.csv)"},
    {"--svg", "svg_path", "SVG chart output path"},
    {"--attempts-denominator", "attempts_denominator", "all | served (default all)"},
    {"--jobs", "workers", "worker threads, 0 = all cores (default 0)"},
};

void build_app(CLI::App& app, std::string& config_path, std::vector<std::pair<CLI::Option*, std::string>>& values)
{
    app.add_option("--config", config_path, "key=value config file; flags override it");
    values.reserve(std::size(kFlags));
    for (const auto& f : kFlags)
    {
        values.emplace_back(nullptr, std::string{});
        values.back().first = app.add_option(f.flag, values.back().second, f.help);
    }
}

} // namespace

std::string usage()
{
    CLI::App                                         app("Hub-and-spoke teleportation sweep simulator", "hubsim");
    std::string                                      config_path;
    std::vector<std::pair<CLI::Option*, std::string>> values;
    build_app(app, config_path, values);
    return app.help();
}

RunConfig parse_config(const std::vector<std::string>& args)
{
    CLI::App                                         app("Hub-and-spoke teleportation sweep simulator", "hubsim");
    std::string                                      config_path;
    std::vector<std::pair<CLI::Option*, std::string>> values;
    build_app(app, config_path, values);

    std::vector<const char*> argv;
    argv.push_back("hubsim");
    for (const auto& a : args)
    {
        argv.push_back(a.c_str());
    }
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&)
    {
        throw HelpRequested(app.help());
    }
    catch (const CLI::ParseError& e)
    {
        throw ConfigError(e.what());
    }

    RunConfig config;
    if (!config_path.empty())
    {
        std::ifstream in(config_path);
        if (!in)
        {
            throw ConfigError("cannot read config file '" + config_path + "'");
        }
        std::ostringstream body;
        body << in.rdbuf();
        apply_config_text(config, body.str());
    }
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (values[i].first->count() > 0)
        {
            try
            {
                apply_setting(config, kFlags[i].key, values[i].second);
            }
            catch (const ConfigError& e)
            {
                throw ConfigError(std::string(kFlags[i].flag) + ": " + e.what());
            }
        }
    }
    config.validate();
    return config;
}

} // namespace hubsim
