#include "labelkit/graph.hpp"

#include "labelkit/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace labelkit {

const char* to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::Malformed: return "malformed line";
    case ParseErrorKind::MissingHeader: return "missing header";
    case ParseErrorKind::EndpointOutOfRange: return "endpoint out of range";
    case ParseErrorKind::Loop: return "loop";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : Error("line " + std::to_string(line) + ": " + to_string(kind) + (detail.empty() ? "" : ": " + detail))
    , kind_(kind)
    , line_(line)
{
}

Graph::Graph(int n)
    : n_(n)
{
    if (n < 0 || n > max_vertices)
        throw DomainError("vertex count must be in [0, " + std::to_string(max_vertices) + "]");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    degree_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (const Edge& e : edges)
        if (!b.add_edge(e.u, e.v))
            throw DomainError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    return std::move(b).build();
}

bool Graph::adjacent(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("vertex id out of range");
    return (word(u, static_cast<std::size_t>(v) / 64) >> (v % 64)) & 1U;
}

int Graph::max_degree() const noexcept
{
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

int Graph::min_degree() const noexcept
{
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

std::vector<int> Graph::neighbors(int v) const
{
    if (v < 0 || v >= n_)
        throw DomainError("vertex id out of range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree_[static_cast<std::size_t>(v)]));
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = word(v, w);
        while (bits) {
            out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

std::uint64_t Graph::neighbor_mask(int v) const
{
    if (n_ > 64)
        throw DomainError("bitmask view requires at most 64 vertices");
    if (v < 0 || v >= n_)
        throw DomainError("vertex id out of range");
    return word(v, 0);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const
{
    if (n_ > 64)
        throw DomainError("bitmask view requires at most 64 vertices");
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
        out[static_cast<std::size_t>(v)] = word(v, 0);
    return out;
}

bool Graph::connected() const
{
    if (n_ <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : neighbors(u))
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n_;
}

GraphBuilder::GraphBuilder(int n)
    : g_(n)
{
}

bool GraphBuilder::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw DomainError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v)
        throw DomainError("loop at vertex " + std::to_string(u));
    if (g_.adjacent(u, v))
        return false;
    auto set = [this](int a, int b) {
        g_.bits_[static_cast<std::size_t>(a) * g_.words_ + static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
    };
    set(u, v);
    set(v, u);
    ++g_.degree_[static_cast<std::size_t>(u)];
    ++g_.degree_[static_cast<std::size_t>(v)];
    ++g_.m_;
    return true;
}

Graph GraphBuilder::build() &&
{
    return std::move(g_);
}

VertexSet::VertexSet(std::vector<int> ids)
    : ids_(std::move(ids))
{
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i] < 0)
            throw DomainError("negative vertex id");
        if (i > 0 && ids_[i - 1] >= ids_[i])
            throw DomainError("vertex set must be strictly increasing");
    }
}

VertexSet VertexSet::from_mask(std::uint64_t mask)
{
    std::vector<int> ids;
    while (mask) {
        ids.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return VertexSet(std::move(ids));
}

void VertexSet::validate_for(const Graph& g) const
{
    if (!ids_.empty() && ids_.back() >= g.vertex_count())
        throw DomainError("vertex id " + std::to_string(ids_.back()) + " not in graph of order " + std::to_string(g.vertex_count()));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    s.validate_for(g);
    const auto& ids = s.ids();
    GraphBuilder b(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j]))
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return std::move(b).build();
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& s)
{
    s.validate_for(g);
    std::size_t count = 0;
    const auto& ids = s.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            count += g.adjacent(ids[i], ids[j]) ? 1 : 0;
    return count;
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    if (perm.size() != static_cast<std::size_t>(g.vertex_count()))
        throw DomainError("permutation size does not match vertex count");
    GraphBuilder b(g.vertex_count());
    for (const Edge& e : g.edges())
        b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return std::move(b).build();
}

namespace graphs {

Graph empty(int n)
{
    return Graph(n);
}

Graph complete(int n)
{
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph path(int n)
{
    GraphBuilder b(n);
    for (int u = 0; u + 1 < n; ++u)
        b.add_edge(u, u + 1);
    return std::move(b).build();
}

Graph cycle(int n)
{
    if (n < 3)
        throw DomainError("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        b.add_edge(u, (u + 1) % n);
    return std::move(b).build();
}

Graph star(int leaves)
{
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        b.add_edge(0, v);
    return std::move(b).build();
}

Graph petersen()
{
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

} // namespace graphs

} // namespace labelkit
