#include "hubsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hubsim
{

namespace
{

void require_size(std::uint32_t n)
{
    if (n == 0)
    {
        throw std::invalid_argument("network size N must be >= 1");
    }
}

// (1 - p)^k without losing precision for small p.
double miss_probability(double p, double k)
{
    if (p >= 1.0)
    {
        return 0.0;
    }
    return std::exp(k * std::log1p(-p));
}

} // namespace

std::string_view policy_name(PolicyKind policy)
{
    switch (policy)
    {
        case PolicyKind::NaiveSequential:
            return "naive";
        case PolicyKind::OrchestratedParallel:
            return "orchestrated";
    }
    return "unknown";
}

PolicyKind parse_policy(std::string_view text)
{
    if (text == "naive")
    {
        return PolicyKind::NaiveSequential;
    }
    if (text == "orchestrated")
    {
        return PolicyKind::OrchestratedParallel;
    }
    throw std::invalid_argument("unknown policy '" + std::string(text) + "' (expected naive or orchestrated)");
}

void ModelParams::validate() const
{
    if (!(p0 > 0.0 && p0 <= 1.0))
    {
        throw std::invalid_argument("p0 must lie in (0, 1]");
    }
    if (!(beta >= 0.0) || !std::isfinite(beta))
    {
        throw std::invalid_argument("beta must be finite and >= 0");
    }
    if (!(kappa > 0.0) || !std::isfinite(kappa))
    {
        throw std::invalid_argument("kappa must be finite and > 0");
    }
    if (round_budget < 1)
    {
        throw std::invalid_argument("round_budget must be >= 1");
    }
    if (trials < 1)
    {
        throw std::invalid_argument("trials must be >= 1");
    }
}

double effective_success_probability(std::uint32_t n, const ModelParams& params)
{
    require_size(n);
    const double p = params.p0 / (1.0 + params.beta * std::log2(static_cast<double>(n)));
    return std::clamp(p, 0.0, 1.0);
}

std::uint32_t parallelism(std::uint32_t n, PolicyKind policy, const ModelParams& params)
{
    require_size(n);
    if (policy == PolicyKind::NaiveSequential)
    {
        return 1;
    }
    const double scaled = std::ceil(params.kappa * std::log2(static_cast<double>(n)));
    return std::max<std::uint32_t>(2, static_cast<std::uint32_t>(scaled));
}

double round_success_probability(std::uint32_t n, PolicyKind policy, const ModelParams& params)
{
    const double p = effective_success_probability(n, params);
    const auto   k = parallelism(n, policy, params);
    return 1.0 - miss_probability(p, k);
}

double analytic_success(std::uint32_t n, PolicyKind policy, const ModelParams& params)
{
    const double q = round_success_probability(n, policy, params);
    return 1.0 - miss_probability(q, params.round_budget);
}

double analytic_expected_attempts(std::uint32_t n, PolicyKind policy, const ModelParams& params)
{
    const double q = round_success_probability(n, policy, params);
    const auto   k = static_cast<double>(parallelism(n, policy, params));
    if (q <= 0.0)
    {
        return k * params.round_budget;
    }
    return k * (1.0 - miss_probability(q, params.round_budget)) / q;
}

double analytic_expected_attempts_served(std::uint32_t n, PolicyKind policy, const ModelParams& params)
{
    const double q = round_success_probability(n, policy, params);
    const auto   k = static_cast<double>(parallelism(n, policy, params));
    const double served = 1.0 - miss_probability(q, params.round_budget);
    if (served <= 0.0)
    {
        return 0.0;
    }
    // sum_{r=1}^{R} r * K * q * (1-q)^(r-1), normalised by P(served)
    double weighted = 0.0;
    double reach    = 1.0;
    for (std::uint32_t r = 1; r <= params.round_budget; ++r)
    {
        weighted += r * k * q * reach;
        reach *= 1.0 - q;
    }
    return weighted / served;
}

} // namespace hubsim
