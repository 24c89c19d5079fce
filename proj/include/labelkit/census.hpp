#pragma once

#include "labelkit/bigint.hpp"
#include "labelkit/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace labelkit {

struct CensusRow {
    int n = 0;
    std::size_t unlabeled = 0;
    /// Sum of n!/aut over the representatives.
    BigInt labeled = 0;
    std::vector<Graph> representatives;
};

struct CensusTable {
    /// One row per n = 1..N.
    std::vector<CensusRow> rows;

    const CensusRow& row(int n) const;
};

/// Isomorphism classes of Mon(seeds) on up to max_n vertices, found by
/// deleting edges and vertices breadth-first with canonical-key dedup.
/// Throws GuardExceeded for max_n > 8, DomainError for seeds larger than max_n.
CensusTable mon_closure_census(std::span<const Graph> seeds, int max_n, bool keep_representatives = true);

struct SmallnessRow {
    int n = 0;
    /// (|X_n| / n!)^(1/n)
    double c = 0.0;
};

std::vector<SmallnessRow> smallness_probe(const CensusTable& table);

} // namespace labelkit
