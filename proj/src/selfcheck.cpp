#include "flagwitt/selfcheck.hpp"

#include <random>

#include "flagwitt/enumeration.hpp"
#include "flagwitt/report.hpp"

namespace flagwitt {

namespace {

std::vector<DiagramPtr> roster() {
  std::vector<DiagramPtr> out;
  for (int n = 1; n <= 8; ++n) out.push_back(build_diagram({{Letter::A, n}}));
  for (int n = 2; n <= 8; ++n) out.push_back(build_diagram({{Letter::B, n}}));
  for (int n = 3; n <= 8; ++n) out.push_back(build_diagram({{Letter::C, n}}));
  for (int n = 4; n <= 8; ++n) out.push_back(build_diagram({{Letter::D, n}}));
  for (int n = 6; n <= 8; ++n) out.push_back(build_diagram({{Letter::E, n}}));
  out.push_back(build_diagram({{Letter::F, 4}}));
  out.push_back(build_diagram({{Letter::G, 2}}));
  out.push_back(build_diagram({{Letter::A, 2}, {Letter::B, 2}}));
  return out;
}

bool cartan_invariants() {
  for (const auto& d : roster()) {
    const int n = d->rank();
    for (int i = 1; i <= n; ++i) {
      if (d->cartan(i, i) != 2) return false;
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        if (d->cartan(i, j) > 0) return false;
        if ((d->cartan(i, j) == 0) != (d->cartan(j, i) == 0)) return false;
        if (d->component_of(i) != d->component_of(j) && d->cartan(i, j) != 0)
          return false;
        if (d->adjacent(i, j) != d->adjacent(j, i)) return false;
      }
      if (d->adjacent(i, i)) return false;
    }
  }
  return true;
}

bool pairing_duality() {
  for (const auto& d : roster()) {
    for (int a = 1; a <= d->rank(); ++a)
      for (int b = 1; b <= d->rank(); ++b) {
        if (pairing(fundamental_weight(d, a), b) != (a == b ? 1 : 0)) return false;
        if (pairing(root_as_weight(d, b), a) != d->cartan(a, b)) return false;
      }
  }
  return true;
}

bool lambda_round_trip() {
  auto d4 = build_diagram({{Letter::D, 4}});
  ParabolicSubset p = make_parabolic(d4, {2});
  VertexSet free = picard_basis(p);
  for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
    VertexSet lam;
    for (size_t k = 0; k < free.size(); ++k)
      if (mask & (1u << k)) lam.push_back(free[k]);
    if (lambda_of(lambda_to_class(p, LambdaSet{lam})).lambda != lam) return false;
  }
  return true;
}

bool borel_completeness() {
  auto a3 = build_diagram({{Letter::A, 3}});
  ParabolicSubset p = make_parabolic(a3, {});
  for (unsigned mask = 0; mask < 8; ++mask) {
    VertexSet lam;
    for (int v = 1; v <= 3; ++v)
      if (mask & (1u << (v - 1))) lam.push_back(v);
    auto verdict = classify(p, LambdaSet{lam});
    if (verdict.vanishes() != !lam.empty()) return false;
  }
  return true;
}

bool mod2_stability() {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (auto d : {build_diagram({{Letter::D, 4}}), build_diagram({{Letter::E, 6}})}) {
    const int n = d->rank();
    for (int trial = 0; trial < 200; ++trial) {
      VertexSet theta;
      for (int v = 1; v <= n; ++v)
        if (rng() % 3 == 0) theta.push_back(v);
      ParabolicSubset p = make_parabolic(d, theta);
      Weight w = zero_weight(d);
      Weight mu = zero_weight(d);
      for (int v : picard_basis(p)) {
        w.coeffs[v - 1] = coeff(rng);
        mu.coeffs[v - 1] = coeff(rng);
      }
      auto a = classify(line_bundle(p, w));
      auto b = classify(line_bundle(p, add(w, scale(2, mu))));
      if (a.status != b.status || a.rule != b.rule) return false;
    }
  }
  return true;
}

bool enumeration_counts() {
  std::size_t expected = 3;
  if (enumerate_decorations(build_diagram({{Letter::A, 1}})).rows.size() != expected)
    return false;
  if (enumerate_decorations(build_diagram({{Letter::A, 2}})).rows.size() != 9)
    return false;
  if (enumerate_decorations(build_diagram({{Letter::D, 4}})).rows.size() != 81)
    return false;
  return true;
}

}  // namespace

std::vector<std::pair<std::string, bool>> run_selfcheck() {
  return {
      {"cartan matrix invariants", cartan_invariants()},
      {"fundamental weight / coroot duality", pairing_duality()},
      {"lambda <-> subset round trip (D4, theta={2})", lambda_round_trip()},
      {"Borel completeness (A3)", borel_completeness()},
      {"mod-2 stability of classify (randomized)", mod2_stability()},
      {"enumeration row counts 3^n", enumeration_counts()},
  };
}

}  // namespace flagwitt
