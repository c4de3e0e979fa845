#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hubsim
{

/// Entanglement policy run by the hub for a single request.
enum class PolicyKind : std::uint8_t
{
    NaiveSequential,      ///< one attempt per round, no cache
    OrchestratedParallel, ///< K(N) attempts per round plus opportunistic caching
};

/// Short lowercase tag used in CSV rows, config files and stream derivation.
std::string_view policy_name(PolicyKind policy);

/// Accepts "naive" / "orchestrated". Throws std::invalid_argument otherwise.
PolicyKind parse_policy(std::string_view text);

/// Scalar parameters governing one sweep.
///
/// Defaults are the reference configuration: p0 = 0.35, beta = 0.35,
/// kappa = 0.9, three rounds, one cached spare per pair, 2500 requests.
struct ModelParams
{
    double        p0             = 0.35;
    double        beta           = 0.35;
    double        kappa          = 0.9;
    std::uint32_t round_budget   = 3;
    std::uint32_t cache_capacity = 1;
    std::uint32_t trials         = 2500;
    std::uint64_t master_seed    = 0x5eed'0000'0001ULL;

    /// Throws std::invalid_argument naming the first field out of range.
    void validate() const;
};

// Closed-form model. Every function rejects N = 0 with std::invalid_argument.

/// p0 / (1 + beta * log2 N), clamped to [0, 1].
double effective_success_probability(std::uint32_t n, const ModelParams& params);

/// 1 for the naive policy, max{2, ceil(kappa * log2 N)} when orchestrated.
std::uint32_t parallelism(std::uint32_t n, PolicyKind policy, const ModelParams& params);

/// Probability that at least one of the round's K attempts heralds a pair.
double round_success_probability(std::uint32_t n, PolicyKind policy, const ModelParams& params);

/// Cache-free probability of obtaining a pair within the round budget.
double analytic_success(std::uint32_t n, PolicyKind policy, const ModelParams& params);

/// Cache-free expected attempts per request, failed requests included:
/// K * E[min(G, R)] with G ~ Geometric(p_round).
double analytic_expected_attempts(std::uint32_t n, PolicyKind policy, const ModelParams& params);

/// Cache-free expected attempts conditioned on the request being served.
/// Returns 0 when no request can be served.
double analytic_expected_attempts_served(std::uint32_t n, PolicyKind policy, const ModelParams& params);

} // namespace hubsim
