#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hubsim/model.hpp"
#include "hubsim/policies.hpp"
#include "hubsim/stats.hpp"

namespace hubsim
{

/// Network sizes and policies to sweep. The grid must be nonempty,
/// strictly increasing, and every entry >= 2.
struct SweepSpec
{
    std::vector<std::uint32_t> grid     = default_grid();
    std::vector<PolicyKind>    policies = {PolicyKind::NaiveSequential, PolicyKind::OrchestratedParallel};
    ModelParams                params;

    void validate() const;

    /// {2, 4, 8, ..., 128}
    static std::vector<std::uint32_t> default_grid();
};

/// Raised when one sweep point fails; names the point.
class SweepError : public std::runtime_error
{
public:
    SweepError(std::uint32_t n, PolicyKind policy, const std::string& reason);

    std::uint32_t n() const noexcept { return n_; }
    PolicyKind    policy() const noexcept { return policy_; }

private:
    std::uint32_t n_;
    PolicyKind    policy_;
};

/// Runs `params.trials` sequential requests for one point on the point's own
/// derived stream, against a fresh cache (orchestrated) or none (naive).
/// Each request draws its pair first, then its attempts.
std::vector<RequestOutcome> run_point(std::uint32_t n, PolicyKind policy, const ModelParams& params);

struct SweepOptions
{
    /// Worker threads for independent points; 0 means hardware concurrency.
    unsigned            workers     = 1;
    AttemptsDenominator denominator = AttemptsDenominator::All;
    /// Called once per finished point, serialized, in completion order.
    std::function<void(const PointSummary&)> on_point;
};

/// One summary per (grid entry, policy), ordered grid-major then by the SweepSpec's
/// policy order. Output does not depend on `workers`.
std::vector<PointSummary> run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

} // namespace hubsim
