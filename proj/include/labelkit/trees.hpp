#pragma once

#include "labelkit/graph.hpp"
#include "labelkit/isomorphism.hpp"

#include <cstdint>
#include <vector>

namespace labelkit {

/// A tree inside a host graph, in host vertex ids.
struct SubTree {
    /// V(T), ascending.
    std::vector<int> vertices;
    /// E(T), each with u < v, in attachment order.
    std::vector<Edge> edges;
};

/// Inclusion-maximal tree of g with maximum degree <= d, grown from vertex 0:
/// repeatedly attach the lowest-id outside vertex that has a tree neighbour of
/// tree-degree < d, through the lowest-id such neighbour. Needs d >= 1, n >= 1.
SubTree bounded_degree_max_tree(const Graph& g, int d);

/// True iff t is a tree of g with degrees <= d to which no outside vertex can
/// be attached.
bool is_maximal_bounded_tree(const Graph& g, const SubTree& t, int d);

struct DenseCore {
    /// g[V(T)], vertices renumbered in ascending original id.
    Graph h;
    /// T on the same renumbered vertices; spans h.
    Graph tree;
    /// original[i] = id in g of vertex i of h.
    std::vector<int> original;
};

/// H = g[V(T)] for T = bounded_degree_max_tree(g, d). Throws DomainError
/// unless g is non-empty with min degree >= d >= 1.
DenseCore dense_core(const Graph& g, int d);

/// True iff t is a spanning tree of g (same order, n-1 edges of g, connected).
bool is_spanning_tree(const Graph& t, const Graph& g);

struct FamilyStats {
    /// Spanning subgraphs F with T <= F <= G.
    std::uint64_t size = 0;
    /// 2^(m - n + 1).
    std::uint64_t expected_size = 0;
    std::size_t iso_classes = 0;
    std::uint64_t max_aut = 0;
    std::uint64_t aut_tree = 0;
    /// #Emb(T -> G).
    std::uint64_t emb_tree_host = 0;
    /// Members violating aut(F) <= #Sub(T -> F) aut(T) <= #Emb(T -> G).
    std::size_t chain_failures = 0;
};

/// Enumerates every F between T and g. Throws GuardExceeded when
/// m - n + 1 > max_free_edges (<= 20) or n exceeds the search limits, and
/// DomainError unless g is connected and T spans it.
FamilyStats spanning_family(const Graph& g, const Graph& tree, int max_free_edges = 20,
                            const SearchLimits& limits = {});

} // namespace labelkit
