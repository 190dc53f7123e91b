#pragma once

#include <optional>
#include <variant>

#include "flagwitt/picard.hpp"

namespace flagwitt {

enum class Status { VanishesAllDegrees, Inconclusive };

/// Vanishing forced by a witness vertex alpha in Lambda orthogonal to Theta.
struct MainTheoremRule {
  int witness;
  bool operator==(const MainTheoremRule&) const = default;
};

/// Vanishing for Gr(d, d+e) with d and e odd and L a Picard generator mod 2.
struct GrassmannianOddOddRule {
  int d;
  int e;
  bool operator==(const GrassmannianOddOddRule&) const = default;
};

using Rule = std::variant<MainTheoremRule, GrassmannianOddOddRule>;

/// One step of the projective-bundle reduction: X_Theta -> X_{Theta u {alpha}}
/// is the projectivization of a rank-2 vector bundle.
struct BundleReduction {
  int alpha;
  VertexSet theta_prime;  // Theta u {alpha}
  int fiber_rank = 2;

  bool operator==(const BundleReduction&) const = default;
};

/// Every verdict carries the standing hypothesis char(k) != 2 and never
/// asserts nonvanishing (the criterion is sufficient, not necessary).
struct VanishingVerdict {
  Status status = Status::Inconclusive;
  std::optional<Rule> rule;
  std::optional<BundleReduction> reduction;

  static constexpr const char* caveat = "assumes char(k) ≠ 2";

  bool vanishes() const { return status == Status::VanishesAllDegrees; }
};

/// All alpha in Lambda orthogonal to Theta, ascending; possibly empty.
VertexSet criterion_witnesses(const DynkinDiagram& d, const VertexSet& theta,
                              const VertexSet& lambda);

/// Matches the Grassmannian case: single component A_n, Theta a maximal
/// parabolic omitting exactly vertex d, Lambda = {d}, with d and e = n+1-d
/// both odd. Returns (d, e) on match.
std::optional<GrassmannianOddOddRule> grassmannian_odd_odd(
    const DynkinDiagram& d, const VertexSet& theta, const VertexSet& lambda);

/// Reduction record for an orthogonal alpha; throws NotOrthogonal otherwise.
BundleReduction bundle_reduction(const DynkinDiagram& d, const VertexSet& theta,
                                 int alpha);

/// The decision procedure: main theorem first (least witness), then the
/// Grassmannian odd/odd rule, else Inconclusive.
VanishingVerdict classify(const LineBundleClass& l);

/// Same, for a decoration given directly as a parity set.
VanishingVerdict classify(const ParabolicSubset& p, const LambdaSet& lam);

/// Borel specialization: Theta must be empty; vanishes iff Lambda(L) != {}.
VanishingVerdict borel_classify(const LineBundleClass& l);

}  // namespace flagwitt
