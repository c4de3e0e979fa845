#include "hubsim/policies.hpp"

namespace hubsim
{

NodePair unrank_pair(std::uint64_t index, std::uint32_t n)
{
    if (n < 2 || index >= pair_count(n))
    {
        throw std::out_of_range("pair index " + std::to_string(index) + " out of range for N = " + std::to_string(n));
    }
    std::uint32_t lo = 0;
    for (std::uint64_t row = n - 1; index >= row; --row)
    {
        index -= row;
        ++lo;
    }
    return NodePair(lo, static_cast<std::uint32_t>(lo + 1 + index));
}

} // namespace hubsim
