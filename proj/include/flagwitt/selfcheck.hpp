#pragma once

#include <string>
#include <utility>
#include <vector>

namespace flagwitt {

/// Built-in invariant suite backing the CLI `selfcheck` verb.
/// Returns (check name, passed) pairs.
std::vector<std::pair<std::string, bool>> run_selfcheck();

}  // namespace flagwitt
