#pragma once

#include <cstdint>
#include <span>

#include "hubsim/model.hpp"
#include "hubsim/policies.hpp"

namespace hubsim
{

/// Which requests the attempts average divides over.
///
/// `All` is the default: failed requests consumed attempts too, so they stay
/// in both numerator and denominator. `ServedOnly` averages the attempts of
/// served requests over the number served, for sensitivity checks.
enum class AttemptsDenominator : std::uint8_t
{
    All,
    ServedOnly,
};

/// Aggregate statistics for one (N, policy) sweep point.
struct PointSummary
{
    std::uint32_t       n              = 0;
    PolicyKind          policy         = PolicyKind::NaiveSequential;
    std::uint32_t       trials         = 0;
    std::uint64_t       successes      = 0;
    double              success_rate   = 0.0;
    std::uint64_t       total_attempts = 0;
    double              mean_attempts  = 0.0;
    double              success_stderr = 0.0;
    std::uint64_t       cache_hits     = 0;
    std::uint64_t       master_seed    = 0;
    AttemptsDenominator denominator    = AttemptsDenominator::All;

    friend bool operator==(const PointSummary&, const PointSummary&) = default;
};

/// Closed-form counterpart of a PointSummary (cache-free process).
struct AnalyticPoint
{
    std::uint32_t n             = 0;
    PolicyKind    policy        = PolicyKind::NaiveSequential;
    double        success_rate  = 0.0;
    double        mean_attempts = 0.0;
};

/// Throws std::invalid_argument on an empty outcome list.
PointSummary summarize(std::span<const RequestOutcome> outcomes, std::uint32_t n, PolicyKind policy,
                       const ModelParams& params, AttemptsDenominator denominator = AttemptsDenominator::All);

/// Largest binomial standard error over p for the given trial count: 0.5 / sqrt(trials).
double stderr_bound(std::uint32_t trials);

AnalyticPoint analytic_point(std::uint32_t n, PolicyKind policy, const ModelParams& params,
                             AttemptsDenominator denominator = AttemptsDenominator::All);

} // namespace hubsim
