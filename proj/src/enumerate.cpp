#include "labelkit/enumerate.hpp"

#include "labelkit/error.hpp"
#include "labelkit/isomorphism.hpp"

#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace labelkit {

namespace {

constexpr const char* cache_magic = "labelkit-unlabeled v1";

std::filesystem::path cache_file(const std::filesystem::path& dir, int n)
{
    return dir / ("unlabeled-n" + std::to_string(n) + ".txt");
}

std::optional<std::vector<Graph>> load_cache(const std::filesystem::path& file, int n)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    std::string magic;
    std::getline(in, magic);
    int file_n = -1;
    std::size_t count = 0;
    std::string tag;
    if (magic != cache_magic || !(in >> tag >> file_n) || tag != "n" || file_n != n || !(in >> tag >> count) || tag != "count")
        return std::nullopt;
    std::string line;
    std::getline(in, line);
    std::vector<Graph> out;
    out.reserve(count);
    while (std::getline(in, line)) {
        std::istringstream row(line);
        GraphBuilder b(n);
        int u = 0;
        int v = 0;
        while (row >> u >> v)
            b.add_edge(u, v);
        out.push_back(std::move(b).build());
    }
    if (out.size() != count)
        return std::nullopt;
    return out;
}

void store_cache(const std::filesystem::path& file, int n, const std::vector<Graph>& graphs)
{
    std::filesystem::create_directories(file.parent_path());
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << cache_magic << "\nn " << n << "\ncount " << graphs.size() << "\n";
        for (const Graph& g : graphs) {
            bool first = true;
            for (const Edge& e : g.edges()) {
                out << (first ? "" : " ") << e.u << ' ' << e.v;
                first = false;
            }
            out << '\n';
        }
    }
    std::filesystem::rename(tmp, file);
}

} // namespace

std::vector<Graph> enumerate_unlabeled(int n, const EnumerationOptions& options)
{
    if (n < 0)
        throw DomainError("vertex count must be non-negative");
    if (n > options.max_vertices)
        throw GuardExceeded("enumerate_unlabeled: n = " + std::to_string(n) + " exceeds the limit of "
                            + std::to_string(options.max_vertices));
    if (n > 11)
        throw GuardExceeded("enumerate_unlabeled: 2^C(n,2) labelled graphs is beyond reach for n > 11");

    if (options.cache_dir) {
        if (auto cached = load_cache(cache_file(*options.cache_dir, n), n))
            return std::move(*cached);
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);

    std::set<std::pair<int, CanonicalKey>> classes;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(adj.begin(), adj.end(), 0);
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if ((mask >> b) & 1U) {
                adj[static_cast<std::size_t>(pairs[b].first)] |= std::uint64_t{1} << pairs[b].second;
                adj[static_cast<std::size_t>(pairs[b].second)] |= std::uint64_t{1} << pairs[b].first;
            }
        }
        classes.emplace(std::popcount(mask), canonical_key(adj));
    }

    std::vector<Graph> out;
    out.reserve(classes.size());
    for (const auto& [m, key] : classes)
        out.push_back(graph_from_key(n, key));

    if (options.cache_dir)
        store_cache(cache_file(*options.cache_dir, n), n, out);
    return out;
}

} // namespace labelkit
