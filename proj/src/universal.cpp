#include "labelkit/universal.hpp"

#include "labelkit/error.hpp"

#include <set>

namespace labelkit {

std::optional<int> UniversalGraph::id_of(const Label& label) const
{
    if (!is_well_formed(label, params))
        return std::nullopt;
    const auto it = by_code_.find(label.code());
    if (it == by_code_.end())
        return std::nullopt;
    return it->second;
}

UniversalGraph build_universal_graph(const SchemeParams& p, int max_bits)
{
    const std::size_t bits = p.label_bits();
    if (bits > static_cast<std::size_t>(max_bits) || bits > 30)
        throw GuardExceeded("universal graph: labels of " + std::to_string(bits) + " bits exceed the guard of 2^"
                            + std::to_string(max_bits) + " candidate strings");

    UniversalGraph u;
    u.params = p;
    const std::size_t fields = static_cast<std::size_t>(p.k + 1);
    std::vector<std::uint32_t> f(fields);
    // by_field0[x] = ids whose own position is x
    std::vector<std::vector<int>> by_field0(static_cast<std::size_t>(p.n));
    const std::uint64_t total = std::uint64_t{1} << bits;
    const std::uint32_t mask = (1u << p.w) - 1u;
    for (std::uint64_t code = 0; code < total; ++code) {
        bool ok = true;
        for (std::size_t i = 0; i < fields; ++i) {
            f[i] = static_cast<std::uint32_t>(code >> ((fields - 1 - i) * static_cast<std::size_t>(p.w))) & mask;
            ok = ok && f[i] < static_cast<std::uint32_t>(p.n);
        }
        if (!ok)
            continue;
        const int id = static_cast<int>(u.labels.size());
        u.labels.push_back(Label::from_fields(f, p.w));
        u.by_code_.emplace(code, id);
        by_field0[f[0]].push_back(id);
    }

    // a ~ b iff one lists the other's own position; enumerate through the
    // listed positions instead of testing all pairs.
    GraphBuilder builder(static_cast<int>(u.labels.size()));
    for (int a = 0; a < static_cast<int>(u.labels.size()); ++a) {
        const auto fa = u.labels[static_cast<std::size_t>(a)].fields(p.w);
        std::set<std::uint32_t> listed(fa.begin() + 1, fa.end());
        listed.erase(fa[0]);
        for (std::uint32_t pos : listed)
            for (int b : by_field0[pos])
                builder.add_edge(a, b);
    }
    u.graph = std::move(builder).build();
    return u;
}

std::vector<int> embed_into_universal(const Graph& g, const UniversalGraph& u)
{
    const EncodedGraph enc = encode(g, u.params);
    std::vector<int> map;
    map.reserve(enc.labels.size());
    for (const Label& l : enc.labels) {
        const auto id = u.id_of(l);
        if (!id)
            throw Error("embed: encoder produced a label outside the universal graph");
        map.push_back(*id);
    }
    return map;
}

bool is_induced_embedding(const Graph& g, const Graph& host, std::span<const int> map)
{
    const int n = g.vertex_count();
    if (map.size() != static_cast<std::size_t>(n))
        return false;
    std::set<int> seen;
    for (int x : map) {
        if (x < 0 || x >= host.vertex_count() || !seen.insert(x).second)
            return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.adjacent(a, b) != host.adjacent(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

} // namespace labelkit
