#pragma once

#include "labelkit/graph.hpp"
#include "labelkit/growth.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace labelkit {

/// Edge bound for k-vertex subgraphs of an n-vertex graph:
/// c k f(k) / log2 k when k*k <= n, c k f(k) otherwise. Needs 2 <= k <= n.
double threshold(int k, int n, const GrowthFunction& f, double c);

/// m edges violate a threshold iff m > threshold + 1e-9.
bool exceeds_threshold(std::size_t edges, double thr);

struct DensestOptions {
    /// Stop at the first k-set with more edges than this.
    std::optional<double> early_exit_above;
    /// Branch-and-bound nodes before giving up as inconclusive.
    std::uint64_t node_budget = 200'000'000;
};

struct DensestResult {
    /// Exact: `edges` is the maximum. EarlyExit: `witness` beats the limit.
    /// WithinLimit: the search finished below the early-exit limit, which
    /// bounds the maximum; `edges` is only the best found.
    enum class Status { Exact, EarlyExit, WithinLimit, Inconclusive };

    Status status = Status::Exact;
    /// Best edge count found.
    std::size_t edges = 0;
    VertexSet witness;
    std::uint64_t nodes = 0;

    bool exhaustive() const { return status == Status::Exact || status == Status::WithinLimit; }
};

/// Max of e(G[S]) over |S| = k by branch and bound on bitmasks (n <= 64).
DensestResult max_edges_k_subgraph(const Graph& g, int k, const DensestOptions& options = {});

enum class Verdict { Good, Violated, Inconclusive };
const char* to_string(Verdict v);

enum class GoodnessMode {
    /// Search every k to the exact maximum.
    Exact,
    /// Skip k whose edge count is bounded below threshold by C(k,2) or by the
    /// degeneracy, and stop searching at the first violating set.
    Refute,
};

struct GoodnessRecord {
    enum class Method { Searched, SkippedPairs, SkippedDegeneracy, EarlyExit, Inconclusive };

    int k = 0;
    /// Largest edge count found (exact for Searched).
    std::size_t max_edges = 0;
    /// Proven upper bound on e(G[S]) over |S| = k.
    std::size_t upper_bound = 0;
    double threshold = 0.0;
    /// True when the k was decided: exhaustively searched or soundly skipped.
    bool exhaustive = false;
    Method method = Method::Searched;
};

const char* to_string(GoodnessRecord::Method m);

struct GoodnessWitness {
    VertexSet vertices;
    std::size_t edges = 0;
    double threshold = 0.0;
};

struct GoodnessReport {
    Verdict verdict = Verdict::Good;
    /// Ascending k. In Refute mode, records stop at the violating k.
    std::vector<GoodnessRecord> records;
    std::optional<GoodnessWitness> witness;
};

struct GoodnessOptions {
    GoodnessMode mode = GoodnessMode::Exact;
    std::uint64_t node_budget = 200'000'000;
};

/// Checks every k in [2, n] against threshold(k, n, f, c). n <= 1 is good.
GoodnessReport is_f_good(const Graph& g, const GrowthFunction& f, double c, const GoodnessOptions& options = {});

/// Same report from all 2^n vertex subsets. Guarded at n <= 12.
GoodnessReport naive_goodness_oracle(const Graph& g, const GrowthFunction& f, double c);

} // namespace labelkit
