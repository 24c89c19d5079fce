#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace labelkit::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain or input error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SubcommandInfo {
    /// e.g. "graph aut"
    std::string path;
    /// Library operations the subcommand reaches.
    std::vector<std::string> operations;
};

const std::vector<SubcommandInfo>& registry();

} // namespace labelkit::cli
