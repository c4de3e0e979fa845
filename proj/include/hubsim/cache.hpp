#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>

namespace hubsim
{

/// Unordered pair of distinct QPU indices, stored canonically (lo < hi).
class NodePair
{
public:
    /// Canonicalises (a, b). Throws std::invalid_argument if a == b.
    static NodePair of(std::uint32_t a, std::uint32_t b);

    /// Builds a pair that must already be canonical. Throws if lo >= hi.
    NodePair(std::uint32_t lo, std::uint32_t hi);

    std::uint32_t lo() const noexcept { return lo_; }
    std::uint32_t hi() const noexcept { return hi_; }

    /// True when both endpoints address a QPU in a network of n nodes.
    bool fits(std::uint32_t n) const noexcept { return hi_ < n; }

    friend bool operator==(const NodePair&, const NodePair&) = default;
    friend auto operator<=>(const NodePair&, const NodePair&) = default;

private:
    std::uint32_t lo_;
    std::uint32_t hi_;
};

struct NodePairHash
{
    std::size_t operator()(const NodePair& pair) const noexcept
    {
        return std::hash<std::uint64_t>{}((std::uint64_t{pair.lo()} << 32) | pair.hi());
    }
};

/// Spare heralded Bell pairs held at the hub, keyed by node pair.
///
/// At most one spare enters per deposit call and no pair ever holds more
/// than `capacity` spares. Stored pairs do not expire.
class EntanglementCache
{
public:
    explicit EntanglementCache(std::uint32_t capacity) : capacity_(capacity) {}

    /// Consumes one spare for `pair` if present.
    bool try_consume(const NodePair& pair);

    /// Stores min(surplus, 1, capacity - stored(pair)) spares; returns how many.
    std::uint32_t deposit(const NodePair& pair, std::uint32_t surplus);

    void reset();

    std::uint32_t capacity() const noexcept { return capacity_; }
    std::uint32_t stored(const NodePair& pair) const;
    std::uint64_t hits() const noexcept { return hits_; }
    std::uint64_t deposits() const noexcept { return deposits_; }
    std::size_t   occupied_pairs() const noexcept { return stored_.size(); }

private:
    std::uint32_t                                          capacity_;
    std::unordered_map<NodePair, std::uint32_t, NodePairHash> stored_;
    std::uint64_t                                          hits_     = 0;
    std::uint64_t                                          deposits_ = 0;
};

} // namespace hubsim
