#pragma once

#include "labelkit/bigint.hpp"
#include "labelkit/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace labelkit {

/// Size guard for the exhaustive permutation searches.
struct SearchLimits {
    /// Largest vertex count accepted by guarded operations.
    int max_vertices = 10;

    /// Hard ceiling: counts up to 20! still fit in 64 bits.
    static constexpr int ceiling = 20;

    /// Throws GuardExceeded when n is above the configured limit.
    void check(int n, const char* operation) const;
};

/// Bijection source vertex v -> permutation[v] of the target.
struct IsoCertificate {
    std::vector<int> permutation;
};

/// True iff the permutation maps the edge set of source exactly onto target.
bool validates(const IsoCertificate& cert, const Graph& source, const Graph& target);

/// Backtracking search with degree and neighbourhood-degree pruning.
std::optional<IsoCertificate> are_isomorphic(const Graph& g, const Graph& h);

/// |Aut(g)| by exhaustive search. Guarded.
std::uint64_t automorphism_count(const Graph& g, const SearchLimits& limits = {});

/// Number of permutations pi with pi(E(f)) contained in E(g) (#Emb(f -> g)).
/// Both graphs must have the same order. Guarded.
std::uint64_t count_embeddings(const Graph& f, const Graph& g, const SearchLimits& limits = {});

/// Number of edge subsets of g forming a graph isomorphic to f (#Sub(f -> g)).
std::uint64_t count_subgraph_copies(const Graph& f, const Graph& g, const SearchLimits& limits = {});

/// n! / aut(g): the number of labelled graphs isomorphic to g.
BigInt labeled_count(const Graph& g, const SearchLimits& limits = {});

/// Upper-triangle adjacency rows of the canonical relabelling. Row i holds
/// the n-1-i bits of pairs (i, i+1) .. (i, n-1), first pair most significant.
using CanonicalKey = std::vector<std::uint64_t>;

struct CanonicalForm {
    /// The canonical representative (lexicographically least edge list).
    Graph graph;
    /// position[v] = canonical id of original vertex v.
    std::vector<int> position;
    CanonicalKey key;

    /// Edge-List v1 document of the representative.
    std::string text() const;
};

/// Relabelling whose sorted edge list is lexicographically least among all
/// n! relabellings. Equal for isomorphic graphs only. Guarded.
CanonicalForm canonical_form(const Graph& g, const SearchLimits& limits = {});

/// Canonical key computed straight from adjacency bitmasks (n <= 64); the
/// fast path used by enumeration and closure search. Unguarded.
CanonicalKey canonical_key(std::span<const std::uint64_t> adjacency);

/// Rebuilds the representative graph from a key.
Graph graph_from_key(int n, const CanonicalKey& key);

} // namespace labelkit
