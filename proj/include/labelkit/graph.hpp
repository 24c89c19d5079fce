#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace labelkit {

struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, stored as a bit matrix.
///
/// Instances are immutable; build them with GraphBuilder or Graph::from_edges.
class Graph {
public:
    /// Dense storage bound (n^2 bits).
    static constexpr int max_vertices = 1 << 15;

    Graph() = default;
    explicit Graph(int n);

    /// Throws DomainError on out-of-range endpoints, loops or duplicate pairs.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const { return degree_.at(static_cast<std::size_t>(v)); }
    int max_degree() const noexcept;
    int min_degree() const noexcept;

    std::vector<int> neighbors(int v) const;
    /// Lexicographically sorted, u < v in every pair.
    std::vector<Edge> edges() const;

    /// Neighbourhood as a bitmask; only valid when vertex_count() <= 64.
    std::uint64_t neighbor_mask(int v) const;
    /// All neighbourhoods as bitmasks; only valid when vertex_count() <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    bool connected() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    std::uint64_t word(int u, std::size_t w) const { return bits_[static_cast<std::size_t>(u) * words_ + w]; }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;
    std::size_t m_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    /// Returns false if the edge was already present. Throws DomainError on
    /// loops or out-of-range endpoints.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
    int vertex_count() const noexcept { return g_.n_; }

    Graph build() &&;

private:
    Graph g_;
};

/// Sorted list of distinct vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    /// Throws DomainError unless the ids are strictly increasing and non-negative.
    explicit VertexSet(std::vector<int> ids);

    static VertexSet from_mask(std::uint64_t mask);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    const std::vector<int>& ids() const noexcept { return ids_; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    /// Throws DomainError if some id is not a vertex of g.
    void validate_for(const Graph& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> ids_;
};

/// Vertices relabelled 0..|s|-1 in the order of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Number of edges of g with both ends in s.
std::size_t induced_edge_count(const Graph& g, const VertexSet& s);

/// Graph with vertex v of g renamed perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

namespace graphs {

Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph petersen();

} // namespace graphs

} // namespace labelkit
