// Brute-force reference implementations used only by the tests.
#pragma once

#include "labelkit/bigint.hpp"
#include "labelkit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using labelkit::Edge;
using labelkit::Graph;

/// Graph on n vertices whose edges are the set bits of mask over pairs in
/// lexicographic order.
inline Graph from_pair_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u)
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

inline std::vector<int> identity(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// Permutations pi with pi(E(f)) a subset of E(g); f and g have the same order.
inline std::uint64_t embeddings(const Graph& f, const Graph& g)
{
    const int n = f.vertex_count();
    auto p = identity(n);
    const auto ef = f.edges();
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (const Edge& e : ef)
            if (!g.adjacent(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

inline std::uint64_t automorphisms(const Graph& g)
{
    return embeddings(g, g);
}

/// h is isomorphic to a (not necessarily induced) subgraph of g.
inline bool subgraph_of(const Graph& h, const Graph& g)
{
    if (h.vertex_count() > g.vertex_count())
        return false;
    const auto eh = h.edges();
    return embeddings(Graph::from_edges(g.vertex_count(), eh), g) > 0;
}

inline labelkit::BigInt factorial(int n)
{
    labelkit::BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// t has the vertices of g, n-1 edges all in g, and is connected.
inline bool is_tree_spanning(const Graph& t, const Graph& g)
{
    const int n = g.vertex_count();
    if (t.vertex_count() != n || t.edge_count() + 1 != static_cast<std::size_t>(std::max(n, 1)))
        return false;
    for (const Edge& e : t.edges())
        if (!g.adjacent(e.u, e.v))
            return false;
    if (n == 0)
        return true;
    std::vector<int> stack{0};
    std::vector<bool> mark(static_cast<std::size_t>(n), false);
    mark[0] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(v))
            if (!mark[static_cast<std::size_t>(w)]) {
                mark[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    return std::all_of(mark.begin(), mark.end(), [](bool b) { return b; });
}

/// Edge subsets of g isomorphic to f, by enumerating subsets with |E(f)| edges.
inline std::uint64_t copies(const Graph& f, const Graph& g)
{
    const auto eg = g.edges();
    const int n = g.vertex_count();
    const std::size_t want = f.edge_count();
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << eg.size()); ++m) {
        if (static_cast<std::size_t>(__builtin_popcountll(m)) != want)
            continue;
        std::vector<Edge> sub;
        for (std::size_t i = 0; i < eg.size(); ++i)
            if ((m >> i) & 1u)
                sub.push_back(eg[i]);
        const Graph h = Graph::from_edges(n, sub);
        // isomorphic iff f embeds into h with equal edge counts
        count += embeddings(f, h) > 0;
    }
    return count;
}

/// Lexicographically least sorted edge list over all relabellings, as text.
inline std::string canonical_text(const Graph& g)
{
    const int n = g.vertex_count();
    auto p = identity(n);
    std::vector<Edge> best;
    bool first = true;
    const auto eg = g.edges();
    do {
        std::vector<Edge> es;
        for (const Edge& e : eg) {
            const int a = p[static_cast<std::size_t>(e.u)];
            const int b = p[static_cast<std::size_t>(e.v)];
            es.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(es.begin(), es.end());
        if (first || es < best) {
            best = es;
            first = false;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::string s = "n " + std::to_string(n) + "\n";
    for (const Edge& e : best)
        s += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return s;
}

/// Max over non-empty vertex subsets of the minimum induced degree.
inline int degeneracy(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 20)
        throw std::invalid_argument("oracle::degeneracy: n > 20");
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int mn = n;
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1u))
                continue;
            int d = 0;
            for (int w = 0; w < n; ++w)
                d += ((s >> w) & 1u) && g.adjacent(v, w);
            mn = std::min(mn, d);
        }
        best = std::max(best, mn);
    }
    return best;
}

/// Degeneracy by repeatedly deleting some minimum-degree vertex, O(n^2) per
/// step; for graphs too large for the subset oracle.
inline int peel_degeneracy(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = n - 1; v >= 0; --v)
            if (!gone[static_cast<std::size_t>(v)]
                && (pick < 0 || deg[static_cast<std::size_t>(v)] <= deg[static_cast<std::size_t>(pick)]))
                pick = v;
        best = std::max(best, deg[static_cast<std::size_t>(pick)]);
        gone[static_cast<std::size_t>(pick)] = true;
        for (int w = 0; w < n; ++w)
            if (!gone[static_cast<std::size_t>(w)] && g.adjacent(pick, w))
                --deg[static_cast<std::size_t>(w)];
    }
    return best;
}

/// Max edges over k-subsets by listing all subsets.
inline std::size_t max_edges(const Graph& g, int k)
{
    const int n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != k)
            continue;
        std::size_t e = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                e += ((s >> u) & 1u) && ((s >> v) & 1u) && g.adjacent(u, v);
        best = std::max(best, e);
    }
    return best;
}

/// P(Bin(N, p) > t) by the pmf recurrence pmf(j+1) = pmf(j) (N-j)/(j+1) p/q,
/// in log space and long double.
inline long double binomial_tail(long long N, long double p, long double t)
{
    const long double q = 1.0L - p;
    std::vector<long double> logpmf(static_cast<std::size_t>(N + 1));
    logpmf[0] = static_cast<long double>(N) * std::log(q);
    for (long long j = 0; j < N; ++j)
        logpmf[static_cast<std::size_t>(j + 1)] = logpmf[static_cast<std::size_t>(j)]
            + std::log(static_cast<long double>(N - j) / static_cast<long double>(j + 1)) + std::log(p / q);
    long double sum = 0.0L;
    for (long long j = 0; j <= N; ++j)
        if (static_cast<long double>(j) > t)
            sum += std::exp(logpmf[static_cast<std::size_t>(j)]);
    return sum;
}

inline std::uint64_t binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace oracle
