#pragma once

#include "labelkit/graph.hpp"

#include <cstdint>
#include <random>

namespace labelkit {

/// One SplitMix64 step: advances state and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of sub-stream `index` of `base`: the (index+1)-th SplitMix64 output
/// of a generator seeded with base.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Seedable 64-bit stream (mt19937_64) with deterministic sub-streams.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed)
        : seed_(seed)
        , engine_(seed)
    {
    }

    std::uint64_t seed() const noexcept { return seed_; }
    RngStream derive(std::uint64_t index) const { return RngStream(derive_seed(seed_, index)); }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// C(n, 2).
std::uint64_t pair_count(int n);

/// The pair with the given index in lexicographic order of (u, v), u < v.
Edge pair_at(int n, std::uint64_t index);

/// Each pair (u, v), u < v, visited lexicographically and kept with
/// probability p. Throws DomainError unless 0 <= p <= 1.
Graph sample_gnp(int n, double p, RngStream& rng);

/// Uniform m-subset of the pairs by a partial Fisher-Yates shuffle of pair
/// indices. Throws DomainError unless 0 <= m <= C(n, 2).
Graph sample_gnm(int n, std::uint64_t m, RngStream& rng);

} // namespace labelkit
