#pragma once

#include "labelkit/graph.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace labelkit {

struct EnumerationOptions {
    int max_vertices = 7;
    /// When set, results are read from / written to
    /// <cache_dir>/unlabeled-n<N>.txt.
    std::optional<std::filesystem::path> cache_dir;
};

/// One canonical representative per isomorphism class of n-vertex graphs,
/// ordered by (edge count, canonical key). Generates all 2^C(n,2) labelled
/// graphs and deduplicates by canonical key.
std::vector<Graph> enumerate_unlabeled(int n, const EnumerationOptions& options = {});

} // namespace labelkit
