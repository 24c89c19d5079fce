#pragma once

#include "labelkit/graph.hpp"
#include "labelkit/labeling.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace labelkit {

/// The graph whose vertices are all well-formed labels of a scheme and whose
/// adjacency is decode.
struct UniversalGraph {
    SchemeParams params;
    Graph graph;
    /// labels[id] is the label of universal vertex id (ascending code order).
    std::vector<Label> labels;

    /// Universal vertex carrying this label, if the label is well-formed.
    std::optional<int> id_of(const Label& label) const;

private:
    friend UniversalGraph build_universal_graph(const SchemeParams&, int);
    std::unordered_map<std::uint64_t, int> by_code_;
};

/// Throws GuardExceeded if 2^((k+1)w) exceeds 2^max_bits (max_bits <= 14 by default).
UniversalGraph build_universal_graph(const SchemeParams& p, int max_bits = 14);

/// Maps each vertex of g to the universal vertex of its label. Throws
/// DomainError if g is larger than the scheme or its degeneracy exceeds k.
std::vector<int> embed_into_universal(const Graph& g, const UniversalGraph& u);

/// True iff map is injective and u ~ v in g exactly when map[u] ~ map[v] in host.
bool is_induced_embedding(const Graph& g, const Graph& host, std::span<const int> map);

} // namespace labelkit
