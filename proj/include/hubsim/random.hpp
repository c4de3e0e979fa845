#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string_view>

#include "hubsim/model.hpp"

namespace hubsim
{

/// Name of the underlying generator, written to run metadata.
inline constexpr std::string_view kGeneratorName = "mt19937_64 (MT19937-64), seeded via splitmix64 mixing";

/// Anything that can supply the draws a request needs.
template <typename S>
concept DrawSource = requires(S& s, double p, std::uint64_t n) {
    { s.bernoulli(p) } -> std::same_as<bool>;
    { s.below(n) } -> std::same_as<std::uint64_t>;
};

/// Reproducible random stream built on MT19937-64.
///
/// All derived quantities use explicit bit manipulation rather than the
/// standard distributions, whose output is implementation-defined, so that
/// another implementation seeded identically reproduces every draw:
///   uniform()     = (next_u64() >> 11) * 2^-53
///   bernoulli(p)  = uniform() < p
///   below(n)      = x % n for the first x < floor(2^64 / n) * n
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

/// splitmix64 output function (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for the stream of sweep point (n, policy) under `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint32_t n, PolicyKind policy) noexcept;

RandomStream derive_stream(std::uint64_t master_seed, std::uint32_t n, PolicyKind policy);

} // namespace hubsim
