#include "labelkit/goodness.hpp"

#include "labelkit/degeneracy.hpp"
#include "labelkit/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace labelkit {

double threshold(int k, int n, const GrowthFunction& f, double c)
{
    if (k < 2 || k > n)
        throw DomainError("threshold: need 2 <= k <= n (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
    if (!(c > 0.0) || !std::isfinite(c))
        throw DomainError("threshold: c must be positive");
    const auto kd = static_cast<double>(k);
    const double base = c * kd * f(kd);
    const bool small = static_cast<long long>(k) * k <= n;
    return small ? base / std::log2(kd) : base;
}

bool exceeds_threshold(std::size_t edges, double thr)
{
    return static_cast<double>(edges) > thr + 1e-9;
}

namespace {

/// Largest edge count that does not exceed thr.
std::size_t allowed_edges(double thr)
{
    const double t = std::floor(thr + 1e-9);
    if (t < 0.0)
        return 0;
    if (t >= 1e18)
        return static_cast<std::size_t>(1e18);
    return static_cast<std::size_t>(t);
}

class DenseSearch {
public:
    DenseSearch(const Graph& g, int k, const DensestOptions& options)
        : adj_(g.adjacency_masks())
        , n_(g.vertex_count())
        , k_(k)
        , options_(options)
    {
        if (options.early_exit_above)
            limit_ = allowed_edges(*options.early_exit_above);
    }

    DensestResult run()
    {
        greedy();
        if (!early_hit()) {
            const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
            search(0, all, 0, 0);
        }
        DensestResult r;
        r.edges = best_;
        r.witness = VertexSet::from_mask(best_mask_);
        r.nodes = nodes_;
        if (early_hit())
            r.status = DensestResult::Status::EarlyExit;
        else if (out_of_budget_)
            r.status = DensestResult::Status::Inconclusive;
        else if (limit_ && pruned_by_limit_)
            r.status = DensestResult::Status::WithinLimit;
        else
            r.status = DensestResult::Status::Exact;
        return r;
    }

private:
    bool early_hit() const { return limit_ && best_ > *limit_; }
    bool stopped() const { return out_of_budget_ || early_hit(); }

    std::size_t edges_in(std::uint64_t s) const
    {
        std::size_t twice = 0;
        for (std::uint64_t m = s; m; m &= m - 1)
            twice += static_cast<std::size_t>(std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(m))] & s));
        return twice / 2;
    }

    void offer(std::uint64_t s, std::size_t edges)
    {
        if (edges > best_ || best_mask_ == 0) {
            best_ = edges;
            best_mask_ = s;
        }
    }

    // Min-degree peeling down to k vertices.
    void greedy()
    {
        std::uint64_t s = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        for (int left = n_; left > k_; --left) {
            int pick = -1;
            int pick_deg = 65;
            for (std::uint64_t m = s; m; m &= m - 1) {
                const int v = std::countr_zero(m);
                const int d = std::popcount(adj_[static_cast<std::size_t>(v)] & s);
                if (d < pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            s &= ~(std::uint64_t{1} << pick);
        }
        offer(s, edges_in(s));
    }

    void search(std::uint64_t chosen, std::uint64_t cand, std::size_t edges, int size)
    {
        if (stopped())
            return;
        if (++nodes_ > options_.node_budget) {
            out_of_budget_ = true;
            return;
        }
        const int r = k_ - size;
        if (r == 0) {
            offer(chosen, edges);
            return;
        }
        const int pool = std::popcount(cand);
        if (pool < r)
            return;

        // Upper bound: each further vertex u brings |N(u) & chosen| edges
        // plus at most min(r-1, |N(u) & cand|) halves of edges among the
        // newcomers.
        std::array<int, 64> score{};
        std::array<int, 64> vertex{};
        int count = 0;
        int top_v = -1;
        int top_score = -1;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            const std::uint64_t nu = adj_[static_cast<std::size_t>(u)];
            const int sc = 2 * std::popcount(nu & chosen) + std::min(r - 1, std::popcount(nu & cand));
            score[static_cast<std::size_t>(count)] = sc;
            vertex[static_cast<std::size_t>(count)] = u;
            ++count;
            if (sc > top_score) {
                top_score = sc;
                top_v = u;
            }
        }
        std::nth_element(score.begin(), score.begin() + (r - 1), score.begin() + count, std::greater<>());
        int sum = 0;
        for (int i = 0; i < r; ++i)
            sum += score[static_cast<std::size_t>(i)];
        const std::size_t bound = edges + static_cast<std::size_t>(sum / 2);
        if (bound <= best_)
            return;
        if (limit_ && bound <= *limit_) {
            pruned_by_limit_ = true;
            return;
        }

        if (pool == r) {
            offer(chosen | cand, edges_in(chosen | cand));
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << top_v;
        const std::size_t gained = static_cast<std::size_t>(std::popcount(adj_[static_cast<std::size_t>(top_v)] & chosen));
        search(chosen | bit, cand & ~bit, edges + gained, size + 1);
        search(chosen, cand & ~bit, edges, size);
    }

    std::vector<std::uint64_t> adj_;
    int n_;
    int k_;
    DensestOptions options_;
    std::optional<std::size_t> limit_;
    std::size_t best_ = 0;
    std::uint64_t best_mask_ = 0;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    bool pruned_by_limit_ = false;
};

} // namespace

DensestResult max_edges_k_subgraph(const Graph& g, int k, const DensestOptions& options)
{
    const int n = g.vertex_count();
    if (k < 2 || k > n)
        throw DomainError("densest subgraph: need 2 <= k <= n (k = " + std::to_string(k) + ", n = " + std::to_string(n)
                          + ")");
    if (n > 64)
        throw GuardExceeded("densest subgraph: search supports at most 64 vertices, got " + std::to_string(n));
    return DenseSearch(g, k, options).run();
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Good:
        return "good";
    case Verdict::Violated:
        return "violated";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

const char* to_string(GoodnessRecord::Method m)
{
    switch (m) {
    case GoodnessRecord::Method::Searched:
        return "searched";
    case GoodnessRecord::Method::SkippedPairs:
        return "skipped-pairs";
    case GoodnessRecord::Method::SkippedDegeneracy:
        return "skipped-degeneracy";
    case GoodnessRecord::Method::EarlyExit:
        return "early-exit";
    case GoodnessRecord::Method::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

GoodnessReport is_f_good(const Graph& g, const GrowthFunction& f, double c, const GoodnessOptions& options)
{
    if (!(c > 0.0))
        throw DomainError("goodness: c must be positive");
    const int n = g.vertex_count();
    GoodnessReport report;
    if (n <= 1)
        return report;

    const bool refute = options.mode == GoodnessMode::Refute;
    const auto d = static_cast<std::size_t>(degeneracy(g));
    bool inconclusive = false;
    for (int k = 2; k <= n; ++k) {
        GoodnessRecord rec;
        rec.k = k;
        rec.threshold = threshold(k, n, f, c);
        const auto uk = static_cast<std::size_t>(k);
        const std::size_t pairs = uk * (uk - 1) / 2;
        // a d-degenerate graph has at most sum_{j<k} min(d, j) edges on k vertices
        const std::size_t degen = uk <= d ? pairs : d * (d - 1) / 2 + (uk - d) * d;

        if (refute && !exceeds_threshold(pairs, rec.threshold)) {
            rec.method = GoodnessRecord::Method::SkippedPairs;
            rec.upper_bound = pairs;
            rec.exhaustive = true;
        } else if (refute && !exceeds_threshold(degen, rec.threshold)) {
            rec.method = GoodnessRecord::Method::SkippedDegeneracy;
            rec.upper_bound = degen;
            rec.exhaustive = true;
        } else {
            DensestOptions dopt;
            dopt.node_budget = options.node_budget;
            if (refute)
                dopt.early_exit_above = rec.threshold;
            const DensestResult r = max_edges_k_subgraph(g, k, dopt);
            rec.max_edges = r.edges;
            switch (r.status) {
            case DensestResult::Status::Exact:
                rec.method = GoodnessRecord::Method::Searched;
                rec.exhaustive = true;
                rec.upper_bound = r.edges;
                break;
            case DensestResult::Status::WithinLimit:
                rec.method = GoodnessRecord::Method::Searched;
                rec.exhaustive = true;
                rec.upper_bound = std::max(r.edges, std::min({pairs, degen, allowed_edges(rec.threshold)}));
                break;
            case DensestResult::Status::EarlyExit:
                rec.method = GoodnessRecord::Method::EarlyExit;
                rec.upper_bound = std::min(pairs, degen);
                break;
            case DensestResult::Status::Inconclusive:
                rec.method = GoodnessRecord::Method::Inconclusive;
                rec.upper_bound = std::min(pairs, degen);
                inconclusive = true;
                break;
            }
            if (exceeds_threshold(r.edges, rec.threshold) && !report.witness)
                report.witness = GoodnessWitness{r.witness, r.edges, rec.threshold};
        }
        report.records.push_back(rec);
        if (report.witness && refute)
            break;
    }
    report.verdict = report.witness ? Verdict::Violated : inconclusive ? Verdict::Inconclusive : Verdict::Good;
    return report;
}

GoodnessReport naive_goodness_oracle(const Graph& g, const GrowthFunction& f, double c)
{
    const int n = g.vertex_count();
    if (n > 12)
        throw GuardExceeded("naive goodness oracle: " + std::to_string(n) + " vertices exceeds the guard of 12");
    if (!(c > 0.0))
        throw DomainError("goodness: c must be positive");
    GoodnessReport report;
    if (n <= 1)
        return report;

    const auto adj = g.adjacency_masks();
    const std::uint32_t total = 1u << n;
    std::vector<std::uint32_t> edges(total, 0);
    std::vector<std::size_t> best(static_cast<std::size_t>(n + 1), 0);
    std::vector<std::uint32_t> best_mask(static_cast<std::size_t>(n + 1), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    for (std::uint32_t m = 1; m < total; ++m) {
        const int low = std::countr_zero(m);
        const std::uint32_t rest = m & (m - 1);
        edges[m] = edges[rest] + static_cast<std::uint32_t>(std::popcount(adj[static_cast<std::size_t>(low)] & rest));
        const auto size = static_cast<std::size_t>(std::popcount(m));
        if (!seen[size] || edges[m] > best[size]) {
            seen[size] = true;
            best[size] = edges[m];
            best_mask[size] = m;
        }
    }
    for (int k = 2; k <= n; ++k) {
        GoodnessRecord rec;
        rec.k = k;
        rec.threshold = threshold(k, n, f, c);
        rec.max_edges = best[static_cast<std::size_t>(k)];
        rec.upper_bound = rec.max_edges;
        rec.exhaustive = true;
        report.records.push_back(rec);
        if (!report.witness && exceeds_threshold(rec.max_edges, rec.threshold))
            report.witness = GoodnessWitness{VertexSet::from_mask(best_mask[static_cast<std::size_t>(k)]), rec.max_edges,
                                             rec.threshold};
    }
    report.verdict = report.witness ? Verdict::Violated : Verdict::Good;
    return report;
}

} // namespace labelkit
