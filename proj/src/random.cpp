#include "hubsim/random.hpp"

#include <limits>
#include <stdexcept>

namespace hubsim
{

std::uint64_t RandomStream::below(std::uint64_t n)
{
    if (n == 0)
    {
        throw std::invalid_argument("below(0) has no valid outcome");
    }
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    // 2^64 mod n; when zero every draw is unbiased
    const std::uint64_t excess = (kMax % n + 1) % n;
    const std::uint64_t limit  = 0 - excess; // 2^64 - excess, mod 2^64
    for (;;)
    {
        const std::uint64_t x = next_u64();
        if (excess == 0 || x < limit)
        {
            return x % n;
        }
    }
}

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint32_t n, PolicyKind policy) noexcept
{
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ std::uint64_t{n});
    h = splitmix64(h ^ (std::uint64_t{static_cast<std::uint8_t>(policy)} + 1));
    return h;
}

RandomStream derive_stream(std::uint64_t master_seed, std::uint32_t n, PolicyKind policy)
{
    return RandomStream(derive_seed(master_seed, n, policy));
}

} // namespace hubsim
