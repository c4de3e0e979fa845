#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hubsim/cache.hpp"
#include "hubsim/model.hpp"
#include "hubsim/random.hpp"

namespace hubsim
{

/// What happened to one teleportation request.
///
///   cache_hit          => served, attempts == 0, rounds == 0
///   served, !cache_hit => 1 <= rounds <= R, attempts == rounds * K
///   !served            => rounds == R, attempts == R * K
struct RequestOutcome
{
    bool          served    = false;
    std::uint32_t attempts  = 0;
    std::uint32_t rounds    = 0;
    bool          cache_hit = false;

    friend bool operator==(const RequestOutcome&, const RequestOutcome&) = default;
};

/// Number of unordered pairs in a network of n nodes.
constexpr std::uint64_t pair_count(std::uint32_t n) noexcept
{
    return std::uint64_t{n} * (n - 1) / 2;
}

/// Maps index in [0, pair_count(n)) to a pair in lo-major order:
/// 0 -> (0,1), 1 -> (0,2), ..., n-2 -> (0,n-1), n-1 -> (1,2), ...
NodePair unrank_pair(std::uint64_t index, std::uint32_t n);

/// Uniform unordered pair of distinct nodes. Consumes exactly one below() draw.
template <DrawSource Stream>
NodePair sample_pair(std::uint32_t n, Stream& stream)
{
    if (n < 2)
    {
        throw std::invalid_argument("sample_pair needs N >= 2, got " + std::to_string(n));
    }
    return unrank_pair(stream.below(pair_count(n)), n);
}

/// Serves one request.
///
/// The orchestrated policy first tries the cache. Otherwise up to R rounds run;
/// each draws all K Bernoulli(p_eff) attempts (round-major, attempt-minor) and
/// the first round with a success serves the request. If that round had m >= 2
/// successes and a cache is supplied, deposit(pair, m - 1) is called.
///
/// The naive policy must not be given a cache.
template <DrawSource Stream>
RequestOutcome execute_request(const NodePair& pair, std::uint32_t n, PolicyKind policy,
                               const ModelParams& params, EntanglementCache* cache, Stream& stream)
{
    if (n < 2)
    {
        throw std::invalid_argument("execute_request needs N >= 2, got " + std::to_string(n));
    }
    if (!pair.fits(n))
    {
        throw std::invalid_argument("node pair (" + std::to_string(pair.lo()) + ", " + std::to_string(pair.hi()) +
                                    ") out of range for N = " + std::to_string(n));
    }
    const bool orchestrated = policy == PolicyKind::OrchestratedParallel;
    if (!orchestrated && cache != nullptr)
    {
        throw std::invalid_argument("the naive policy does not use a cache");
    }

    if (cache != nullptr && cache->try_consume(pair))
    {
        return {.served = true, .attempts = 0, .rounds = 0, .cache_hit = true};
    }

    const double        p = effective_success_probability(n, params);
    const std::uint32_t k = parallelism(n, policy, params);

    RequestOutcome outcome;
    for (std::uint32_t round = 1; round <= params.round_budget; ++round)
    {
        std::uint32_t successes = 0;
        for (std::uint32_t a = 0; a < k; ++a)
        {
            successes += stream.bernoulli(p) ? 1 : 0;
        }
        outcome.rounds   = round;
        outcome.attempts = round * k;
        if (successes > 0)
        {
            outcome.served = true;
            if (cache != nullptr && successes >= 2)
            {
                cache->deposit(pair, successes - 1);
            }
            return outcome;
        }
    }
    return outcome;
}

} // namespace hubsim
