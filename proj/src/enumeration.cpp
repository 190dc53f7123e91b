#include "flagwitt/enumeration.hpp"

namespace flagwitt {

namespace {

VertexSet mask_to_set(std::uint32_t mask, int n) {
  VertexSet out;
  for (int v = 1; v <= n; ++v)
    if (mask & (1u << (v - 1))) out.push_back(v);
  return out;
}

}  // namespace

std::map<std::string, std::size_t> tally(const std::vector<ClassificationRow>& rows) {
  std::map<std::string, std::size_t> totals{{"vanishes", 0},
                                            {"inconclusive", 0},
                                            {"main_theorem", 0},
                                            {"grassmannian_odd_odd", 0}};
  for (const auto& row : rows) {
    if (row.verdict.vanishes()) {
      ++totals["vanishes"];
      if (std::holds_alternative<MainTheoremRule>(*row.verdict.rule))
        ++totals["main_theorem"];
      else
        ++totals["grassmannian_odd_odd"];
    } else {
      ++totals["inconclusive"];
    }
  }
  return totals;
}

ClassificationTable enumerate_decorations(DiagramPtr d, int rank_limit) {
  const int n = d->rank();
  if (n > rank_limit) throw RankLimitExceeded(n, rank_limit);
  ClassificationTable table;
  table.diagram = d;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t theta_mask = 0;; ++theta_mask) {
    ParabolicSubset p = make_parabolic(d, mask_to_set(theta_mask, n));
    const std::uint32_t comp = full & ~theta_mask;
    // Submasks of comp in increasing numerical order.
    std::uint32_t lam = 0;
    while (true) {
      LambdaSet ls{mask_to_set(lam, n)};
      table.rows.push_back({p.theta, ls.lambda, classify(p, ls)});
      if (lam == comp) break;
      lam = (lam - comp) & comp;
    }
    if (theta_mask == full) break;
  }
  table.totals = tally(table.rows);
  return table;
}

ClassificationTable filter_rows(const ClassificationTable& t, const RowPredicate& keep) {
  ClassificationTable out;
  out.diagram = t.diagram;
  for (const auto& row : t.rows)
    if (keep(row)) out.rows.push_back(row);
  out.totals = tally(out.rows);
  return out;
}

}  // namespace flagwitt
