#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hubsim/stats.hpp"

namespace hubsim
{

/// Output file could not be written.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kCsvHeader =
    "source,policy,N,trials,successes,success_rate,mean_attempts,success_stderr,cache_hits,seed";

/// Renders the results table: header, then one row per simulated and analytic
/// point, sorted by (source, policy, N). Probabilities and means carry six
/// decimals; analytic rows leave trials, successes, cache_hits and seed empty
/// and report a zero standard error. Throws std::invalid_argument if there is
/// nothing to write.
std::string format_csv(std::span<const PointSummary> summaries, std::span<const AnalyticPoint> analytic = {});

/// format_csv written to `path`. Throws IoError naming the path.
void emit_csv(const std::string& path, std::span<const PointSummary> summaries,
              std::span<const AnalyticPoint> analytic = {});

/// One parsed CSV row; empty cells come back as nullopt.
struct CsvRow
{
    std::string                  source;
    std::string                  policy;
    std::uint32_t                n = 0;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> successes;
    double                       success_rate   = 0.0;
    double                       mean_attempts  = 0.0;
    double                       success_stderr = 0.0;
    std::optional<std::uint64_t> cache_hits;
    std::optional<std::uint64_t> seed;
};

/// Parses text produced by format_csv. Throws std::invalid_argument on a
/// header mismatch or malformed row.
std::vector<CsvRow> parse_csv(std::string_view text);

} // namespace hubsim
