#include "hubsim/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace hubsim
{

PointSummary summarize(std::span<const RequestOutcome> outcomes, std::uint32_t n, PolicyKind policy,
                       const ModelParams& params, AttemptsDenominator denominator)
{
    if (outcomes.empty())
    {
        throw std::invalid_argument("cannot summarize an empty outcome list");
    }

    PointSummary s;
    s.n           = n;
    s.policy      = policy;
    s.trials      = static_cast<std::uint32_t>(outcomes.size());
    s.master_seed = params.master_seed;
    s.denominator = denominator;

    std::uint64_t served_attempts = 0;
    for (const auto& o : outcomes)
    {
        s.total_attempts += o.attempts;
        if (o.served)
        {
            ++s.successes;
            served_attempts += o.attempts;
        }
        if (o.cache_hit)
        {
            ++s.cache_hits;
        }
    }

    const auto trials = static_cast<double>(s.trials);
    s.success_rate    = static_cast<double>(s.successes) / trials;
    s.success_stderr  = std::sqrt(s.success_rate * (1.0 - s.success_rate) / trials);
    if (denominator == AttemptsDenominator::All)
    {
        s.mean_attempts = static_cast<double>(s.total_attempts) / trials;
    }
    else
    {
        s.mean_attempts =
            s.successes == 0 ? 0.0 : static_cast<double>(served_attempts) / static_cast<double>(s.successes);
    }
    return s;
}

double stderr_bound(std::uint32_t trials)
{
    if (trials == 0)
    {
        throw std::invalid_argument("stderr_bound needs trials >= 1");
    }
    return 0.5 / std::sqrt(static_cast<double>(trials));
}

AnalyticPoint analytic_point(std::uint32_t n, PolicyKind policy, const ModelParams& params,
                             AttemptsDenominator denominator)
{
    return {
        .n             = n,
        .policy        = policy,
        .success_rate  = analytic_success(n, policy, params),
        .mean_attempts = denominator == AttemptsDenominator::All
                             ? analytic_expected_attempts(n, policy, params)
                             : analytic_expected_attempts_served(n, policy, params),
    };
}

} // namespace hubsim
