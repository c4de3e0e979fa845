#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hubsim/stats.hpp"

using namespace hubsim;

namespace
{
RequestOutcome served(std::uint32_t attempts, std::uint32_t rounds) { return {true, attempts, rounds, false}; }
RequestOutcome failed(std::uint32_t attempts, std::uint32_t rounds) { return {false, attempts, rounds, false}; }
RequestOutcome hit() { return {true, 0, 0, true}; }
} // namespace

TEST_CASE("all served at one attempt")
{
    const std::vector<RequestOutcome> outcomes(2500, served(1, 1));
    const auto s = summarize(outcomes, 16, PolicyKind::NaiveSequential, ModelParams{});
    CHECK(s.trials == 2500);
    CHECK(s.success_rate == 1.0);
    CHECK(s.mean_attempts == 1.0);
    CHECK(s.success_stderr == 0.0);
}

TEST_CASE("half served gives the worst-case standard error")
{
    std::vector<RequestOutcome> outcomes(1250, served(1, 1));
    outcomes.insert(outcomes.end(), 1250, failed(3, 3));
    const auto s = summarize(outcomes, 16, PolicyKind::NaiveSequential, ModelParams{});
    CHECK(s.success_rate == 0.5);
    CHECK(s.success_stderr == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(s.success_stderr <= stderr_bound(2500));
}

TEST_CASE("mixed outcomes: hand-computed aggregates")
{
    // R = 3, K = 2
    const std::vector<RequestOutcome> outcomes = {served(2, 1), hit(), failed(6, 3)};
    const auto s = summarize(outcomes, 4, PolicyKind::OrchestratedParallel, ModelParams{});
    CHECK(s.successes == 2);
    CHECK(s.success_rate == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(s.total_attempts == 8);
    CHECK(s.mean_attempts == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    CHECK(s.cache_hits == 1);

    const auto served_only =
        summarize(outcomes, 4, PolicyKind::OrchestratedParallel, ModelParams{}, AttemptsDenominator::ServedOnly);
    CHECK(served_only.mean_attempts == doctest::Approx(1.0));
    CHECK(served_only.success_rate == s.success_rate);
}

TEST_CASE("summaries echo the seed and reject empty input")
{
    ModelParams params;
    params.master_seed = 777;
    const std::vector<RequestOutcome> one = {served(1, 1)};
    CHECK(summarize(one, 2, PolicyKind::NaiveSequential, params).master_seed == 777);
    CHECK_THROWS_AS(summarize({}, 2, PolicyKind::NaiveSequential, params), std::invalid_argument);
}

TEST_CASE("summarize is permutation invariant")
{
    std::vector<RequestOutcome> outcomes;
    for (int i = 0; i < 200; ++i)
    {
        outcomes.push_back(i % 3 == 0 ? failed(9, 3) : (i % 5 == 0 ? hit() : served(3 * (1 + i % 3), 1 + i % 3)));
    }
    const auto   reference = summarize(outcomes, 8, PolicyKind::OrchestratedParallel, ModelParams{});
    std::mt19937 shuffle_rng(11);
    for (int round = 0; round < 20; ++round)
    {
        std::shuffle(outcomes.begin(), outcomes.end(), shuffle_rng);
        REQUIRE(summarize(outcomes, 8, PolicyKind::OrchestratedParallel, ModelParams{}) == reference);
    }
}

TEST_CASE("stderr bound")
{
    CHECK(stderr_bound(2500) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(stderr_bound(10000) == doctest::Approx(0.005).epsilon(1e-15));
    CHECK(stderr_bound(1) == 0.5);
    CHECK_THROWS(stderr_bound(0));
}

TEST_CASE("analytic points mirror the model")
{
    const ModelParams params;
    const auto a = analytic_point(128, PolicyKind::OrchestratedParallel, params);
    CHECK(a.success_rate == analytic_success(128, PolicyKind::OrchestratedParallel, params));
    CHECK(a.mean_attempts == analytic_expected_attempts(128, PolicyKind::OrchestratedParallel, params));
    const auto b = analytic_point(128, PolicyKind::OrchestratedParallel, params, AttemptsDenominator::ServedOnly);
    CHECK(b.mean_attempts == analytic_expected_attempts_served(128, PolicyKind::OrchestratedParallel, params));
}
