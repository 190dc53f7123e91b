#include "flagwitt/picard.hpp"

namespace flagwitt {

ParabolicSubset make_parabolic(DiagramPtr d, VertexSet theta) {
  theta = normalize_vertex_set(*d, std::move(theta));
  return ParabolicSubset{std::move(d), std::move(theta)};
}

VertexSet picard_basis(const ParabolicSubset& p) {
  VertexSet out;
  for (int v = 1; v <= p.diagram->rank(); ++v)
    if (!contains(p.theta, v)) out.push_back(v);
  return out;
}

LineBundleClass line_bundle(const ParabolicSubset& p, Weight lambda) {
  if (!(*lambda.diagram == *p.diagram)) throw DiagramMismatch();
  for (int beta : p.theta)
    if (lambda.coeffs[beta - 1] != 0) throw NotInPicard(beta);
  return LineBundleClass{p, std::move(lambda)};
}

LambdaSet lambda_of(const LineBundleClass& l) {
  VertexSet out;
  for (int v : picard_basis(l.parabolic))
    if (l.weight.coeffs[v - 1] % 2 != 0) out.push_back(v);
  return LambdaSet{std::move(out)};
}

LineBundleClass lambda_to_class(const ParabolicSubset& p, const LambdaSet& lam) {
  VertexSet lambda = normalize_vertex_set(*p.diagram, lam.lambda);
  for (int v : lambda)
    if (contains(p.theta, v)) throw LambdaMeetsTheta(v);
  Weight w = zero_weight(p.diagram);
  for (int v : lambda) w.coeffs[v - 1] = 1;
  return LineBundleClass{p, std::move(w)};
}

}  // namespace flagwitt
