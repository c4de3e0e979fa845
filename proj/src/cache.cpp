#include "hubsim/cache.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hubsim
{

NodePair NodePair::of(std::uint32_t a, std::uint32_t b)
{
    if (a == b)
    {
        throw std::invalid_argument("node pair endpoints must differ (got " + std::to_string(a) + " twice)");
    }
    return a < b ? NodePair(a, b) : NodePair(b, a);
}

NodePair::NodePair(std::uint32_t lo, std::uint32_t hi) : lo_(lo), hi_(hi)
{
    if (lo >= hi)
    {
        throw std::invalid_argument("node pair (" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    ") is not canonical: need lo < hi");
    }
}

bool EntanglementCache::try_consume(const NodePair& pair)
{
    auto it = stored_.find(pair);
    if (it == stored_.end())
    {
        return false;
    }
    if (--it->second == 0)
    {
        stored_.erase(it);
    }
    ++hits_;
    return true;
}

std::uint32_t EntanglementCache::deposit(const NodePair& pair, std::uint32_t surplus)
{
    const std::uint32_t held = stored(pair);
    if (surplus == 0 || held >= capacity_)
    {
        return 0;
    }
    // one spare per serving round, whatever the surplus
    const std::uint32_t added = std::min<std::uint32_t>(1, capacity_ - held);
    stored_[pair] = held + added;
    deposits_ += added;
    return added;
}

void EntanglementCache::reset()
{
    stored_.clear();
    hits_     = 0;
    deposits_ = 0;
}

std::uint32_t EntanglementCache::stored(const NodePair& pair) const
{
    auto it = stored_.find(pair);
    return it == stored_.end() ? 0 : it->second;
}

} // namespace hubsim
