#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>

#include "flagwitt/vanishing.hpp"

namespace flagwitt {

inline constexpr int kDefaultRankLimit = 12;

struct ClassificationRow {
  VertexSet theta;
  VertexSet lambda;
  VanishingVerdict verdict;
};

/// Exhaustive classification of all 3^n decorations of a diagram: each vertex
/// is in Theta, in Lambda, or in neither. Rows are sorted by Theta as an
/// ascending bitmask (vertex 1 = lowest bit), then Lambda ascending.
struct ClassificationTable {
  DiagramPtr diagram;
  std::vector<ClassificationRow> rows;
  std::map<std::string, std::size_t> totals;
};

/// Totals keyed by "vanishes", "inconclusive", "main_theorem",
/// "grassmannian_odd_odd".
std::map<std::string, std::size_t> tally(const std::vector<ClassificationRow>& rows);

ClassificationTable enumerate_decorations(DiagramPtr d,
                                          int rank_limit = kDefaultRankLimit);

using RowPredicate = std::function<bool(const ClassificationRow&)>;

/// Subtable preserving order, with totals recomputed.
ClassificationTable filter_rows(const ClassificationTable& t, const RowPredicate& keep);

}  // namespace flagwitt
