#pragma once

#include "labelkit/graph.hpp"

#include <vector>

namespace labelkit {

/// Result of min-degree peeling.
struct PeelOrdering {
    /// order[i] = vertex removed i-th.
    std::vector<int> order;
    /// position[v] = index of v in order.
    std::vector<int> position;
    /// later_neighbors[v] = positions of the neighbours of v removed after v,
    /// ascending.
    std::vector<std::vector<int>> later_neighbors;
    /// Largest residual degree seen at removal time.
    int k = 0;
};

/// Repeatedly removes a vertex of minimum residual degree, lowest id first.
PeelOrdering degeneracy_ordering(const Graph& g);

int degeneracy(const Graph& g);

} // namespace labelkit
