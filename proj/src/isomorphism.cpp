#include "labelkit/isomorphism.hpp"

#include "labelkit/edge_list.hpp"
#include "labelkit/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace labelkit {

BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

void SearchLimits::check(int n, const char* operation) const
{
    const int limit = std::min(max_vertices, ceiling);
    if (n > limit)
        throw GuardExceeded(std::string(operation) + ": " + std::to_string(n) + " vertices exceeds the size guard of "
                            + std::to_string(limit));
}

namespace {

enum class MatchMode { Isomorphism, Embedding };

/// Injective maps pattern -> target over vertices of equal-order graphs.
class Matcher {
public:
    Matcher(const Graph& pattern, const Graph& target, MatchMode mode)
        : p_(pattern)
        , t_(target)
        , mode_(mode)
        , n_(pattern.vertex_count())
    {
        order_pattern();
        if (mode_ == MatchMode::Isomorphism) {
            p_sig_ = signatures(p_);
            t_sig_ = signatures(t_);
        }
        map_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), 0);
    }

    std::uint64_t count()
    {
        stop_at_first_ = false;
        found_ = 0;
        extend(0);
        return found_;
    }

    std::optional<std::vector<int>> first()
    {
        stop_at_first_ = true;
        found_ = 0;
        extend(0);
        if (found_ == 0)
            return std::nullopt;
        return first_map_;
    }

private:
    using Signature = std::vector<int>;

    static std::vector<Signature> signatures(const Graph& g)
    {
        std::vector<Signature> sig(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            Signature& s = sig[static_cast<std::size_t>(v)];
            s.push_back(g.degree(v));
            for (int w : g.neighbors(v))
                s.push_back(g.degree(w));
            std::sort(s.begin() + 1, s.end());
        }
        return sig;
    }

    void order_pattern()
    {
        std::vector<int> links(static_cast<std::size_t>(n_), 0);
        std::vector<char> placed(static_cast<std::size_t>(n_), 0);
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            for (int v = 0; v < n_; ++v) {
                if (placed[static_cast<std::size_t>(v)])
                    continue;
                if (best < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(best)]
                    || (links[static_cast<std::size_t>(v)] == links[static_cast<std::size_t>(best)]
                        && p_.degree(v) > p_.degree(best)))
                    best = v;
            }
            placed[static_cast<std::size_t>(best)] = 1;
            order_.push_back(best);
            for (int w : p_.neighbors(best))
                ++links[static_cast<std::size_t>(w)];
        }
        earlier_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                earlier_[static_cast<std::size_t>(i)].push_back(order_[static_cast<std::size_t>(j)]);
    }

    bool compatible(int depth, int pv, int tv) const
    {
        if (mode_ == MatchMode::Isomorphism) {
            if (p_sig_[static_cast<std::size_t>(pv)] != t_sig_[static_cast<std::size_t>(tv)])
                return false;
        } else if (p_.degree(pv) > t_.degree(tv)) {
            return false;
        }
        for (int pw : earlier_[static_cast<std::size_t>(depth)]) {
            const int tw = map_[static_cast<std::size_t>(pw)];
            const bool pe = p_.adjacent(pv, pw);
            const bool te = t_.adjacent(tv, tw);
            if (pe && !te)
                return false;
            if (mode_ == MatchMode::Isomorphism && te && !pe)
                return false;
        }
        return true;
    }

    void extend(int depth)
    {
        if (stop_at_first_ && found_ > 0)
            return;
        if (depth == n_) {
            if (found_ == 0)
                first_map_ = map_;
            ++found_;
            return;
        }
        const int pv = order_[static_cast<std::size_t>(depth)];
        for (int tv = 0; tv < n_; ++tv) {
            if (used_[static_cast<std::size_t>(tv)] || !compatible(depth, pv, tv))
                continue;
            map_[static_cast<std::size_t>(pv)] = tv;
            used_[static_cast<std::size_t>(tv)] = 1;
            extend(depth + 1);
            used_[static_cast<std::size_t>(tv)] = 0;
            map_[static_cast<std::size_t>(pv)] = -1;
            if (stop_at_first_ && found_ > 0)
                return;
        }
    }

    const Graph& p_;
    const Graph& t_;
    MatchMode mode_;
    int n_;
    std::vector<int> order_;
    std::vector<std::vector<int>> earlier_;
    std::vector<Signature> p_sig_;
    std::vector<Signature> t_sig_;
    std::vector<int> map_;
    std::vector<char> used_;
    std::vector<int> first_map_;
    std::uint64_t found_ = 0;
    bool stop_at_first_ = false;
};

std::vector<int> sorted_degrees(const Graph& g)
{
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

void require_same_order(const Graph& f, const Graph& g)
{
    if (f.vertex_count() != g.vertex_count())
        throw DomainError("pattern and host must have the same vertex count (" + std::to_string(f.vertex_count())
                          + " vs " + std::to_string(g.vertex_count()) + ")");
}

/// Search state for the canonical relabelling. Position i is filled from the
/// first cell of an ordered partition of the remaining vertices; choosing v
/// splits every cell into (neighbours of v, non-neighbours of v), which makes
/// row i of the relabelled matrix maximal, i.e. its edge list least.
class CanonicalSearch {
public:
    explicit CanonicalSearch(std::span<const std::uint64_t> adj)
        : adj_(adj)
        , n_(static_cast<int>(adj.size()))
    {
        const auto rows = static_cast<std::size_t>(std::max(n_ - 1, 0));
        cur_.assign(rows, 0);
        best_.assign(rows, 0);
        seq_.assign(static_cast<std::size_t>(n_), -1);
        cells_.assign(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1), 0);
        cell_count_.assign(static_cast<std::size_t>(n_ + 1), 0);
    }

    void run()
    {
        if (n_ == 0)
            return;
        cells_at(0)[0] = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        cell_count_[0] = 1;
        descend(0);
    }

    const CanonicalKey& key() const { return best_; }
    const std::vector<int>& sequence() const { return best_seq_; }

private:
    std::uint64_t* cells_at(int depth)
    {
        return cells_.data() + static_cast<std::size_t>(depth) * static_cast<std::size_t>(n_ + 1);
    }

    std::uint64_t row_for(int v, const std::uint64_t* cells, int count) const
    {
        const std::uint64_t nb = adj_[static_cast<std::size_t>(v)];
        const std::uint64_t self = std::uint64_t{1} << v;
        std::uint64_t row = 0;
        for (int c = 0; c < count; ++c) {
            const std::uint64_t cell = cells[c] & ~self;
            const int len = std::popcount(cell);
            if (len == 0)
                continue;
            const int ones = std::popcount(cell & nb);
            const std::uint64_t block = ones == 0 ? 0 : (((std::uint64_t{1} << ones) - 1) << (len - ones));
            row = (row << len) | block;
        }
        return row;
    }

    int compare_prefix(int depth) const
    {
        for (int i = 0; i <= depth; ++i) {
            if (cur_[static_cast<std::size_t>(i)] != best_[static_cast<std::size_t>(i)])
                return cur_[static_cast<std::size_t>(i)] > best_[static_cast<std::size_t>(i)] ? 1 : -1;
        }
        return 0;
    }

    void descend(int depth)
    {
        const std::uint64_t* cells = cells_at(depth);
        const int count = cell_count_[static_cast<std::size_t>(depth)];
        if (depth == n_ - 1) {
            seq_[static_cast<std::size_t>(depth)] = std::countr_zero(cells[0]);
            if (!have_best_ || compare_prefix(depth - 1) > 0) {
                best_ = cur_;
                best_seq_ = seq_;
                have_best_ = true;
            }
            return;
        }

        std::uint64_t best_row = 0;
        bool any = false;
        for (std::uint64_t first = cells[0]; first; first &= first - 1) {
            const std::uint64_t r = row_for(std::countr_zero(first), cells, count);
            if (!any || r > best_row) {
                best_row = r;
                any = true;
            }
        }
        cur_[static_cast<std::size_t>(depth)] = best_row;
        if (have_best_ && compare_prefix(depth) < 0)
            return;

        for (std::uint64_t first = cells[0]; first; first &= first - 1) {
            const int v = std::countr_zero(first);
            if (row_for(v, cells, count) != best_row)
                continue;
            const std::uint64_t nb = adj_[static_cast<std::size_t>(v)];
            const std::uint64_t self = std::uint64_t{1} << v;
            std::uint64_t* next = cells_at(depth + 1);
            int next_count = 0;
            for (int c = 0; c < count; ++c) {
                const std::uint64_t cell = cells[c] & ~self;
                if (cell & nb)
                    next[next_count++] = cell & nb;
                if (cell & ~nb)
                    next[next_count++] = cell & ~nb;
            }
            cell_count_[static_cast<std::size_t>(depth + 1)] = next_count;
            seq_[static_cast<std::size_t>(depth)] = v;
            cur_[static_cast<std::size_t>(depth)] = best_row;
            descend(depth + 1);
        }
    }

    std::span<const std::uint64_t> adj_;
    int n_;
    CanonicalKey cur_;
    CanonicalKey best_;
    std::vector<int> seq_;
    std::vector<int> best_seq_;
    std::vector<std::uint64_t> cells_;
    std::vector<int> cell_count_;
    bool have_best_ = false;
};

} // namespace

bool validates(const IsoCertificate& cert, const Graph& source, const Graph& target)
{
    const int n = source.vertex_count();
    if (target.vertex_count() != n || cert.permutation.size() != static_cast<std::size_t>(n))
        return false;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int image : cert.permutation) {
        if (image < 0 || image >= n || hit[static_cast<std::size_t>(image)])
            return false;
        hit[static_cast<std::size_t>(image)] = 1;
    }
    if (source.edge_count() != target.edge_count())
        return false;
    for (const Edge& e : source.edges())
        if (!target.adjacent(cert.permutation[static_cast<std::size_t>(e.u)], cert.permutation[static_cast<std::size_t>(e.v)]))
            return false;
    return true;
}

std::optional<IsoCertificate> are_isomorphic(const Graph& g, const Graph& h)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    if (sorted_degrees(g) != sorted_degrees(h))
        return std::nullopt;
    Matcher m(g, h, MatchMode::Isomorphism);
    auto map = m.first();
    if (!map)
        return std::nullopt;
    return IsoCertificate{std::move(*map)};
}

std::uint64_t automorphism_count(const Graph& g, const SearchLimits& limits)
{
    limits.check(g.vertex_count(), "automorphism_count");
    return Matcher(g, g, MatchMode::Isomorphism).count();
}

std::uint64_t count_embeddings(const Graph& f, const Graph& g, const SearchLimits& limits)
{
    require_same_order(f, g);
    limits.check(g.vertex_count(), "count_embeddings");
    if (f.edge_count() > g.edge_count())
        return 0;
    return Matcher(f, g, MatchMode::Embedding).count();
}

std::uint64_t count_subgraph_copies(const Graph& f, const Graph& g, const SearchLimits& limits)
{
    const std::uint64_t emb = count_embeddings(f, g, limits);
    return emb / automorphism_count(f, limits);
}

BigInt labeled_count(const Graph& g, const SearchLimits& limits)
{
    return factorial(g.vertex_count()) / automorphism_count(g, limits);
}

std::string CanonicalForm::text() const
{
    return serialize(graph);
}

CanonicalKey canonical_key(std::span<const std::uint64_t> adjacency)
{
    if (adjacency.size() > 64)
        throw DomainError("canonical_key requires at most 64 vertices");
    CanonicalSearch search(adjacency);
    search.run();
    return search.key();
}

CanonicalForm canonical_form(const Graph& g, const SearchLimits& limits)
{
    limits.check(g.vertex_count(), "canonical_form");
    const auto adj = g.adjacency_masks();
    CanonicalSearch search(adj);
    search.run();

    const int n = g.vertex_count();
    CanonicalForm out;
    out.key = search.key();
    out.position.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        out.position[static_cast<std::size_t>(search.sequence()[static_cast<std::size_t>(i)])] = i;
    out.graph = relabel(g, out.position);
    return out;
}

Graph graph_from_key(int n, const CanonicalKey& key)
{
    if (key.size() != static_cast<std::size_t>(std::max(n - 1, 0)))
        throw DomainError("canonical key does not match vertex count");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) {
        const int len = n - 1 - i;
        const std::uint64_t row = key[static_cast<std::size_t>(i)];
        for (int j = 0; j < len; ++j)
            if ((row >> (len - 1 - j)) & 1U)
                b.add_edge(i, i + 1 + j);
    }
    return std::move(b).build();
}

} // namespace labelkit
