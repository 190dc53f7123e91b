#pragma once

#include "flagwitt/weights.hpp"

namespace flagwitt {

/// Subset Theta of the diagram vertices, defining X_Theta = G/P_Theta.
/// Theta empty is the Borel case G/B; Theta = Delta is the point.
struct ParabolicSubset {
  DiagramPtr diagram;
  VertexSet theta;  // sorted, in range

  bool operator==(const ParabolicSubset& other) const {
    return *diagram == *other.diagram && theta == other.theta;
  }
};

ParabolicSubset make_parabolic(DiagramPtr d, VertexSet theta);

/// A class in Pic(X_Theta), identified with its image in Pic(G/B): a weight
/// whose coefficients vanish on Theta.
struct LineBundleClass {
  ParabolicSubset parabolic;
  Weight weight;
};

/// The parity set Lambda(L), i.e. the class of L in Pic(X_Theta)/2 read as a
/// subset of Delta - Theta.
struct LambdaSet {
  VertexSet lambda;
};

/// Delta - Theta in ascending order: the vertices whose fundamental weights
/// generate Pic(X_Theta).
VertexSet picard_basis(const ParabolicSubset& p);

/// Checks the support constraint eagerly; throws NotInPicard naming the
/// offending theta vertex.
LineBundleClass line_bundle(const ParabolicSubset& p, Weight lambda);

/// { alpha in Delta - Theta : coefficient of omega_alpha is odd }.
/// Negative coefficients use mathematical parity (-3 is odd).
LambdaSet lambda_of(const LineBundleClass& l);

/// The class of sum_{alpha in Lambda} omega_alpha. Inverse to lambda_of on
/// subsets of Delta - Theta.
LineBundleClass lambda_to_class(const ParabolicSubset& p, const LambdaSet& lam);

}  // namespace flagwitt
