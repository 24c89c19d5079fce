#include "labelkit/edge_list.hpp"

#include "labelkit/error.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace labelkit {

namespace {

constexpr long long max_vertices = Graph::max_vertices;

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool parse_int(std::string_view token, long long& out)
{
    if (token.empty())
        return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

} // namespace

Graph parse_graph(std::string_view text)
{
    std::optional<GraphBuilder> builder;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0].front() == '#')
            continue;

        if (!builder) {
            long long value = 0;
            if (tokens[0] != "n")
                throw ParseError(ParseErrorKind::MissingHeader, line_no, "expected 'n <N>' before any edge");
            if (tokens.size() != 2 || !parse_int(tokens[1], value) || value < 0 || value > max_vertices)
                throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'n <N>'");
            builder.emplace(static_cast<int>(value));
            continue;
        }

        long long u = 0;
        long long v = 0;
        const long long n = builder->vertex_count();
        if (tokens[0] != "e" || tokens.size() != 3 || !parse_int(tokens[1], u) || !parse_int(tokens[2], v))
            throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'e <u> <v>'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(ParseErrorKind::EndpointOutOfRange, line_no,
                             std::to_string(u) + " " + std::to_string(v) + " with n = " + std::to_string(n));
        if (u == v)
            throw ParseError(ParseErrorKind::Loop, line_no, "vertex " + std::to_string(u));
        if (u > v)
            throw ParseError(ParseErrorKind::Malformed, line_no, "endpoints must satisfy u < v");
        if (!builder->add_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(ParseErrorKind::DuplicateEdge, line_no, std::to_string(u) + " " + std::to_string(v));
    }
    if (!builder)
        throw ParseError(ParseErrorKind::MissingHeader, line_no, "document has no 'n <N>' line");
    return std::move(*builder).build();
}

Graph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open graph file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize(const Graph& g)
{
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

} // namespace labelkit
