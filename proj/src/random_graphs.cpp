#include "labelkit/random_graphs.hpp"

#include "labelkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace labelkit {

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    std::uint64_t state = base + index * 0x9e3779b97f4a7c15ULL;
    return splitmix64(state);
}

std::uint64_t RngStream::below(std::uint64_t bound)
{
    if (bound == 0)
        throw DomainError("rng: empty range");
    // rejection sampling keeps the draw exactly uniform
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t pair_count(int n)
{
    const auto un = static_cast<std::uint64_t>(std::max(n, 0));
    return un < 2 ? 0 : un * (un - 1) / 2;
}

Edge pair_at(int n, std::uint64_t index)
{
    if (index >= pair_count(n))
        throw DomainError("pair index " + std::to_string(index) + " out of range for n = " + std::to_string(n));
    // pairs before row u: u(2n - u - 1)/2
    const auto before = [n](std::uint64_t u) { return u * (2 * static_cast<std::uint64_t>(n) - u - 1) / 2; };
    const double nd = n;
    auto u = static_cast<std::uint64_t>(
        std::max(0.0, std::floor(nd - 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(index)))));
    while (u > 0 && before(u) > index)
        --u;
    while (before(u + 1) <= index)
        ++u;
    const std::uint64_t v = u + 1 + (index - before(u));
    return Edge{static_cast<int>(u), static_cast<int>(v)};
}

Graph sample_gnp(int n, double p, RngStream& rng)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("gnp: p must lie in [0, 1]");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p)
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph sample_gnm(int n, std::uint64_t m, RngStream& rng)
{
    const std::uint64_t total = pair_count(n);
    if (m > total)
        throw DomainError("gnm: m = " + std::to_string(m) + " exceeds C(n,2) = " + std::to_string(total));
    GraphBuilder b(n);
    // slot i holds swapped[i] if present, else i
    std::unordered_map<std::uint64_t, std::uint64_t> swapped;
    const auto at = [&](std::uint64_t i) {
        const auto it = swapped.find(i);
        return it == swapped.end() ? i : it->second;
    };
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t j = i + rng.below(total - i);
        const std::uint64_t picked = at(j);
        swapped[j] = at(i);
        const Edge e = pair_at(n, picked);
        b.add_edge(e.u, e.v);
    }
    return std::move(b).build();
}

} // namespace labelkit
