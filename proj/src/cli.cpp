#include "hubsim/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>

#include "hubsim/chart.hpp"
#include "hubsim/config.hpp"
#include "hubsim/csv.hpp"
#include "hubsim/engine.hpp"
#include "hubsim/random.hpp"

namespace hubsim
{

namespace
{

void require_parent_dir(const std::string& path)
{
    const auto parent = std::filesystem::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty() && !std::filesystem::is_directory(parent, ec))
    {
        throw IoError("output directory '" + parent.string() + "' does not exist (for '" + path + "')");
    }
}

std::string progress_line(const PointSummary& s)
{
    char buf[200];
    std::snprintf(buf, sizeof(buf), "N=%-5u policy=%-12s success=%.4f (+/- %.4f) attempts=%.3f cache_hits=%llu",
                  s.n, std::string(policy_name(s.policy)).c_str(), s.success_rate, s.success_stderr, s.mean_attempts,
                  static_cast<unsigned long long>(s.cache_hits));
    return buf;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    try
    {
        config = parse_config(args);
    }
    catch (const HelpRequested& help)
    {
        out << help.what();
        return kExitOk;
    }
    catch (const ConfigError& e)
    {
        err << "error: " << e.what() << "\n\n" << usage();
        return kExitConfigError;
    }

    try
    {
        require_parent_dir(config.csv_path);
        if (config.svg_path)
        {
            require_parent_dir(*config.svg_path);
        }

        std::vector<PointSummary> summaries;
        if (config.mode != RunMode::Analytic)
        {
            out << "# generator: " << kGeneratorName << ", master_seed=" << config.spec.params.master_seed << '\n';
            SweepOptions options;
            options.workers     = config.workers;
            options.denominator = config.attempts_denominator;
            options.on_point    = [&out](const PointSummary& s) { out << progress_line(s) << '\n' << std::flush; };
            summaries           = run_sweep(config.spec, options);
        }

        std::vector<AnalyticPoint> analytic;
        if (config.mode != RunMode::Simulate)
        {
            for (auto n : config.spec.grid)
            {
                for (auto policy : config.spec.policies)
                {
                    analytic.push_back(analytic_point(n, policy, config.spec.params, config.attempts_denominator));
                }
            }
        }

        emit_csv(config.csv_path, summaries, analytic);
        out << "wrote " << config.csv_path << '\n';
        if (config.svg_path)
        {
            emit_chart(*config.svg_path, summaries, analytic);
            out << "wrote " << *config.svg_path << '\n';
        }
    }
    catch (const IoError& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return kExitOk;
}

} // namespace hubsim
