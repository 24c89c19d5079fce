#include "labelkit/degeneracy.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace labelkit {

PeelOrdering degeneracy_ordering(const Graph& g)
{
    const int n = g.vertex_count();
    const auto un = static_cast<std::size_t>(n);
    PeelOrdering p;
    p.order.reserve(un);
    p.position.assign(un, -1);
    p.later_neighbors.resize(un);

    std::vector<int> residual(un);
    std::set<std::pair<int, int>> queue; // (residual degree, vertex)
    for (int v = 0; v < n; ++v) {
        residual[static_cast<std::size_t>(v)] = g.degree(v);
        queue.emplace(g.degree(v), v);
    }

    while (!queue.empty()) {
        const auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        p.k = std::max(p.k, deg);
        p.position[static_cast<std::size_t>(v)] = static_cast<int>(p.order.size());
        p.order.push_back(v);
        for (int w : g.neighbors(v)) {
            auto& r = residual[static_cast<std::size_t>(w)];
            if (p.position[static_cast<std::size_t>(w)] >= 0)
                continue;
            queue.erase({r, w});
            --r;
            queue.emplace(r, w);
        }
    }

    for (int v = 0; v < n; ++v) {
        const int pv = p.position[static_cast<std::size_t>(v)];
        auto& later = p.later_neighbors[static_cast<std::size_t>(v)];
        for (int w : g.neighbors(v)) {
            const int pw = p.position[static_cast<std::size_t>(w)];
            if (pw > pv)
                later.push_back(pw);
        }
        std::sort(later.begin(), later.end());
    }
    return p;
}

int degeneracy(const Graph& g)
{
    return degeneracy_ordering(g).k;
}

} // namespace labelkit
