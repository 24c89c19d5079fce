#include "labelkit/trees.hpp"

#include "labelkit/error.hpp"

#include <algorithm>
#include <set>

namespace labelkit {

SubTree bounded_degree_max_tree(const Graph& g, int d)
{
    const int n = g.vertex_count();
    if (d < 1)
        throw DomainError("bounded tree: d must be >= 1");
    if (n < 1)
        throw DomainError("bounded tree: graph has no vertices");

    std::vector<char> inside(static_cast<std::size_t>(n), 0);
    std::vector<int> tdeg(static_cast<std::size_t>(n), 0);
    SubTree t;
    inside[0] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int w = 0; w < n && !grew; ++w) {
            if (inside[static_cast<std::size_t>(w)])
                continue;
            for (int x : g.neighbors(w)) { // ascending
                if (inside[static_cast<std::size_t>(x)] && tdeg[static_cast<std::size_t>(x)] < d) {
                    inside[static_cast<std::size_t>(w)] = 1;
                    ++tdeg[static_cast<std::size_t>(x)];
                    ++tdeg[static_cast<std::size_t>(w)];
                    t.edges.push_back(Edge{std::min(w, x), std::max(w, x)});
                    grew = true;
                    break;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (inside[static_cast<std::size_t>(v)])
            t.vertices.push_back(v);
    return t;
}

bool is_maximal_bounded_tree(const Graph& g, const SubTree& t, int d)
{
    const int n = g.vertex_count();
    if (t.vertices.empty() || t.edges.size() + 1 != t.vertices.size())
        return false;
    std::vector<char> inside(static_cast<std::size_t>(n), 0);
    for (int v : t.vertices) {
        if (v < 0 || v >= n || inside[static_cast<std::size_t>(v)])
            return false;
        inside[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> tdeg(static_cast<std::size_t>(n), 0);
    // union-find over tree vertices for acyclicity
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        parent[static_cast<std::size_t>(v)] = v;
    const auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const Edge& e : t.edges) {
        if (e.u < 0 || e.v >= n || !inside[static_cast<std::size_t>(e.u)] || !inside[static_cast<std::size_t>(e.v)]
            || !g.adjacent(e.u, e.v))
            return false;
        const int a = find(e.u), b = find(e.v);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
        ++tdeg[static_cast<std::size_t>(e.u)];
        ++tdeg[static_cast<std::size_t>(e.v)];
    }
    for (int v : t.vertices) {
        if (tdeg[static_cast<std::size_t>(v)] > d)
            return false;
        if (tdeg[static_cast<std::size_t>(v)] < d)
            for (int w : g.neighbors(v))
                if (!inside[static_cast<std::size_t>(w)])
                    return false;
    }
    return true;
}

DenseCore dense_core(const Graph& g, int d)
{
    if (d < 1)
        throw DomainError("dense core: d must be >= 1");
    if (g.vertex_count() < 1)
        throw DomainError("dense core: graph has no vertices");
    if (g.min_degree() < d)
        throw DomainError("dense core: minimum degree " + std::to_string(g.min_degree()) + " is below d = "
                          + std::to_string(d));
    const SubTree t = bounded_degree_max_tree(g, d);
    DenseCore core;
    core.original = t.vertices;
    core.h = induced_subgraph(g, VertexSet(t.vertices));
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
        index[static_cast<std::size_t>(t.vertices[i])] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(t.vertices.size()));
    for (const Edge& e : t.edges)
        b.add_edge(index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]);
    core.tree = std::move(b).build();
    return core;
}

bool is_spanning_tree(const Graph& t, const Graph& g)
{
    const int n = g.vertex_count();
    if (t.vertex_count() != n || n == 0 || t.edge_count() + 1 != static_cast<std::size_t>(n) || !t.connected())
        return false;
    for (const Edge& e : t.edges())
        if (!g.adjacent(e.u, e.v))
            return false;
    return true;
}

FamilyStats spanning_family(const Graph& g, const Graph& tree, int max_free_edges, const SearchLimits& limits)
{
    const int n = g.vertex_count();
    if (!g.connected())
        throw DomainError("spanning family: host graph is not connected");
    if (!is_spanning_tree(tree, g))
        throw DomainError("spanning family: T is not a spanning tree of the host graph");
    limits.check(n, "spanning family");
    std::vector<Edge> extra;
    for (const Edge& e : g.edges())
        if (!tree.adjacent(e.u, e.v))
            extra.push_back(e);
    const int free = static_cast<int>(extra.size());
    const int guard = std::min(max_free_edges, 20);
    if (free > guard)
        throw GuardExceeded("spanning family: m - n + 1 = " + std::to_string(free) + " exceeds the guard of "
                            + std::to_string(guard));

    FamilyStats st;
    st.expected_size = std::uint64_t{1} << free;
    st.aut_tree = automorphism_count(tree, limits);
    st.emb_tree_host = count_embeddings(tree, g, limits);
    const auto tree_edges = tree.edges();
    std::set<CanonicalKey> classes;
    for (std::uint64_t mask = 0; mask < st.expected_size; ++mask) {
        std::vector<Edge> edges = tree_edges;
        for (int i = 0; i < free; ++i)
            if ((mask >> i) & 1u)
                edges.push_back(extra[static_cast<std::size_t>(i)]);
        const Graph f = Graph::from_edges(n, edges);
        ++st.size;
        const std::uint64_t aut = automorphism_count(f, limits);
        st.max_aut = std::max(st.max_aut, aut);
        const std::uint64_t emb_tf = count_subgraph_copies(tree, f, limits) * st.aut_tree;
        if (!(aut <= emb_tf && emb_tf <= st.emb_tree_host))
            ++st.chain_failures;
        classes.insert(canonical_key(f.adjacency_masks()));
    }
    st.iso_classes = classes.size();
    return st;
}

} // namespace labelkit
