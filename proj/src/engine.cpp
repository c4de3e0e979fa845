#include "hubsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "hubsim/random.hpp"

namespace hubsim
{

void SweepSpec::validate() const
{
    params.validate();
    if (grid.empty())
    {
        throw std::invalid_argument("grid must contain at least one network size");
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        if (grid[i] < 2)
        {
            throw std::invalid_argument("grid entries must be >= 2 (got " + std::to_string(grid[i]) + ")");
        }
        if (i > 0 && grid[i] <= grid[i - 1])
        {
            throw std::invalid_argument("grid must be strictly increasing");
        }
    }
    if (policies.empty())
    {
        throw std::invalid_argument("at least one policy is required");
    }
}

std::vector<std::uint32_t> SweepSpec::default_grid()
{
    return {2, 4, 8, 16, 32, 64, 128};
}

SweepError::SweepError(std::uint32_t n, PolicyKind policy, const std::string& reason)
    : std::runtime_error("sweep point (N=" + std::to_string(n) + ", policy=" + std::string(policy_name(policy)) +
                         ") failed: " + reason),
      n_(n),
      policy_(policy)
{
}

std::vector<RequestOutcome> run_point(std::uint32_t n, PolicyKind policy, const ModelParams& params)
{
    params.validate();
    if (n < 2)
    {
        throw std::invalid_argument("run_point needs N >= 2, got " + std::to_string(n));
    }

    auto stream = derive_stream(params.master_seed, n, policy);

    std::optional<EntanglementCache> cache;
    if (policy == PolicyKind::OrchestratedParallel)
    {
        cache.emplace(params.cache_capacity);
    }
    EntanglementCache* cache_ptr = cache ? &*cache : nullptr;

    std::vector<RequestOutcome> outcomes;
    outcomes.reserve(params.trials);
    for (std::uint32_t t = 0; t < params.trials; ++t)
    {
        const NodePair pair = sample_pair(n, stream);
        outcomes.push_back(execute_request(pair, n, policy, params, cache_ptr, stream));
    }
    return outcomes;
}

std::vector<PointSummary> run_sweep(const SweepSpec& spec, const SweepOptions& options)
{
    spec.validate();

    struct Task
    {
        std::uint32_t n;
        PolicyKind    policy;
    };
    std::vector<Task> tasks;
    for (auto n : spec.grid)
    {
        for (auto policy : spec.policies)
        {
            tasks.push_back({n, policy});
        }
    }

    std::vector<PointSummary> results(tasks.size());
    std::atomic<std::size_t>  next{0};
    std::mutex                report_mutex;
    std::exception_ptr        failure;
    std::atomic<bool>         aborted{false};

    auto worker = [&] {
        for (;;)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || aborted.load())
            {
                return;
            }
            const auto& task = tasks[i];
            try
            {
                const auto outcomes = run_point(task.n, task.policy, spec.params);
                results[i]          = summarize(outcomes, task.n, task.policy, spec.params, options.denominator);
                if (options.on_point)
                {
                    std::lock_guard lock(report_mutex);
                    options.on_point(results[i]);
                }
            }
            catch (const std::exception& e)
            {
                std::lock_guard lock(report_mutex);
                if (!failure)
                {
                    failure = std::make_exception_ptr(SweepError(task.n, task.policy, e.what()));
                }
                aborted = true;
                return;
            }
        }
    };

    unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
    workers          = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
    if (workers <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
        {
            pool.emplace_back(worker);
        }
    }

    if (failure)
    {
        std::rethrow_exception(failure);
    }
    return results;
}

} // namespace hubsim
