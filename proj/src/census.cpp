#include "labelkit/census.hpp"

#include "labelkit/error.hpp"
#include "labelkit/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <set>

namespace labelkit {

const CensusRow& CensusTable::row(int n) const
{
    for (const auto& r : rows)
        if (r.n == n)
            return r;
    throw DomainError("census: no row for n = " + std::to_string(n));
}

namespace {

using Masks = std::vector<std::uint64_t>;

Masks delete_vertex(const Masks& adj, int v)
{
    Masks out;
    out.reserve(adj.size() - 1);
    const std::uint64_t low = (std::uint64_t{1} << v) - 1;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        if (u == v)
            continue;
        const std::uint64_t m = adj[static_cast<std::size_t>(u)];
        out.push_back((m & low) | ((m >> 1) & ~low));
    }
    return out;
}

} // namespace

CensusTable mon_closure_census(std::span<const Graph> seeds, int max_n, bool keep_representatives)
{
    if (max_n > 8)
        throw GuardExceeded("census: max n " + std::to_string(max_n) + " exceeds the guard of 8");
    if (max_n < 1)
        throw DomainError("census: max n must be >= 1");

    std::vector<std::set<CanonicalKey>> level(static_cast<std::size_t>(max_n + 1));
    for (const Graph& s : seeds) {
        if (s.vertex_count() > max_n)
            throw DomainError("census: seed with " + std::to_string(s.vertex_count()) + " vertices exceeds max n "
                              + std::to_string(max_n));
        level[static_cast<std::size_t>(s.vertex_count())].insert(canonical_key(s.adjacency_masks()));
    }

    CensusTable table;
    for (int n = max_n; n >= 1; --n) {
        auto& seen = level[static_cast<std::size_t>(n)];
        std::deque<CanonicalKey> queue(seen.begin(), seen.end());
        // edge deletions stay on this level
        while (!queue.empty()) {
            const Graph g = graph_from_key(n, queue.front());
            queue.pop_front();
            Masks adj = g.adjacency_masks();
            for (const Edge& e : g.edges()) {
                adj[static_cast<std::size_t>(e.u)] ^= std::uint64_t{1} << e.v;
                adj[static_cast<std::size_t>(e.v)] ^= std::uint64_t{1} << e.u;
                CanonicalKey key = canonical_key(adj);
                if (seen.insert(key).second)
                    queue.push_back(std::move(key));
                adj[static_cast<std::size_t>(e.u)] ^= std::uint64_t{1} << e.v;
                adj[static_cast<std::size_t>(e.v)] ^= std::uint64_t{1} << e.u;
            }
        }
        // vertex deletions feed the level below
        auto& below = level[static_cast<std::size_t>(n - 1)];
        for (const CanonicalKey& key : seen) {
            const Masks adj = graph_from_key(n, key).adjacency_masks();
            for (int v = 0; v < n; ++v)
                below.insert(canonical_key(delete_vertex(adj, v)));
        }

        CensusRow row;
        row.n = n;
        row.unlabeled = seen.size();
        for (const CanonicalKey& key : seen) {
            const Graph g = graph_from_key(n, key);
            row.labeled += labeled_count(g);
            if (keep_representatives)
                row.representatives.push_back(g);
        }
        table.rows.push_back(std::move(row));
    }
    std::reverse(table.rows.begin(), table.rows.end());
    return table;
}

std::vector<SmallnessRow> smallness_probe(const CensusTable& table)
{
    if (table.rows.empty())
        throw DomainError("smallness probe: empty census table");
    std::vector<SmallnessRow> out;
    for (const auto& r : table.rows) {
        SmallnessRow s;
        s.n = r.n;
        if (r.labeled == 0) {
            s.c = 0.0;
        } else {
            const double log_ratio = std::log(r.labeled.convert_to<double>()) - std::lgamma(r.n + 1.0);
            s.c = std::exp(log_ratio / r.n);
        }
        out.push_back(s);
    }
    return out;
}

} // namespace labelkit
