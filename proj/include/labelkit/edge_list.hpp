#pragma once

#include "labelkit/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace labelkit {

/// Parses an Edge-List v1 document:
///
///     # comment
///     n 3
///     e 0 1
///     e 1 2
///
/// The first non-comment line is the header "n <N>"; every following line is
/// "e <u> <v>" with 0 <= u < v < N. Blank lines are ignored. Throws ParseError
/// naming the offending line.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::filesystem::path& path);

/// Canonical document: header, then edges in lexicographic order, LF endings.
std::string serialize(const Graph& g);

} // namespace labelkit
