#include "flagwitt/vanishing.hpp"

#include <algorithm>

namespace flagwitt {

namespace {

void check_disjoint(const VertexSet& theta, const VertexSet& lambda) {
  for (int v : lambda)
    if (contains(theta, v)) throw ThetaLambdaOverlap(v);
}

}  // namespace

VertexSet criterion_witnesses(const DynkinDiagram& d, const VertexSet& theta,
                              const VertexSet& lambda) {
  VertexSet th = normalize_vertex_set(d, theta);
  VertexSet lam = normalize_vertex_set(d, lambda);
  check_disjoint(th, lam);
  VertexSet out;
  for (int alpha : lam)
    if (d.orthogonal_to_set(alpha, th)) out.push_back(alpha);
  return out;
}

std::optional<GrassmannianOddOddRule> grassmannian_odd_odd(
    const DynkinDiagram& d, const VertexSet& theta, const VertexSet& lambda) {
  VertexSet th = normalize_vertex_set(d, theta);
  VertexSet lam = normalize_vertex_set(d, lambda);
  check_disjoint(th, lam);
  if (d.components().size() != 1 || d.components()[0].letter != Letter::A)
    return std::nullopt;
  const int n = d.rank();
  // Maximal parabolic: theta omits exactly one vertex, and lambda is that vertex.
  if (static_cast<int>(th.size()) != n - 1 || lam.size() != 1)
    return std::nullopt;
  const int dd = lam[0];
  if (contains(th, dd)) return std::nullopt;  // unreachable, disjointness checked
  const int e = n + 1 - dd;
  if (dd % 2 == 0 || e % 2 == 0) return std::nullopt;
  return GrassmannianOddOddRule{dd, e};
}

BundleReduction bundle_reduction(const DynkinDiagram& d, const VertexSet& theta,
                                 int alpha) {
  VertexSet th = normalize_vertex_set(d, theta);
  d.check_vertex(alpha);
  if (contains(th, alpha)) throw AlphaInTheta(alpha);
  for (int beta : th)
    if (d.adjacent(alpha, beta)) throw NotOrthogonal(alpha, beta);
  VertexSet prime = th;
  prime.insert(std::lower_bound(prime.begin(), prime.end(), alpha), alpha);
  return BundleReduction{alpha, std::move(prime), 2};
}

VanishingVerdict classify(const ParabolicSubset& p, const LambdaSet& lam) {
  const DynkinDiagram& d = *p.diagram;
  VertexSet witnesses = criterion_witnesses(d, p.theta, lam.lambda);
  if (!witnesses.empty()) {
    const int alpha = witnesses.front();
    return VanishingVerdict{Status::VanishesAllDegrees, MainTheoremRule{alpha},
                            bundle_reduction(d, p.theta, alpha)};
  }
  if (auto gr = grassmannian_odd_odd(d, p.theta, lam.lambda))
    return VanishingVerdict{Status::VanishesAllDegrees, *gr, std::nullopt};
  return VanishingVerdict{};
}

VanishingVerdict classify(const LineBundleClass& l) {
  return classify(l.parabolic, lambda_of(l));
}

VanishingVerdict borel_classify(const LineBundleClass& l) {
  if (!l.parabolic.theta.empty()) throw NotBorel();
  return classify(l);
}

}  // namespace flagwitt
