#include <random>

#include "doctest.h"
#include "euclidean_oracle.hpp"
#include "flagwitt/vanishing.hpp"

using namespace flagwitt;

TEST_CASE("criterion witnesses on the D4 panel") {
  auto d4 = build_diagram({{Letter::D, 4}});
  CHECK(criterion_witnesses(*d4, {1, 4}, {2, 3}) == VertexSet{3});  // case (a)
  CHECK(criterion_witnesses(*d4, {1, 4}, {2}) == VertexSet{});      // case (b)
  CHECK(criterion_witnesses(*d4, {1, 4}, {3}) == VertexSet{3});     // case (c)
  CHECK(criterion_witnesses(*d4, {1, 4}, {}) == VertexSet{});       // case (d)
  // case (e): theta = {2} touches everything
  for (const VertexSet& lam :
       {VertexSet{1, 3, 4}, VertexSet{1}, VertexSet{3}, VertexSet{4}, VertexSet{1, 3}})
    CHECK(criterion_witnesses(*d4, {2}, lam) == VertexSet{});
  CHECK_THROWS_AS(criterion_witnesses(*d4, {1, 4}, {1}), ThetaLambdaOverlap);
}

TEST_CASE("criterion witnesses agree with the direct-definition oracle") {
  std::vector<std::vector<SimpleType>> roster;
  for (int n = 1; n <= 5; ++n) roster.push_back({{Letter::A, n}});
  for (int n = 2; n <= 5; ++n) roster.push_back({{Letter::B, n}});
  for (int n = 3; n <= 5; ++n) roster.push_back({{Letter::C, n}});
  for (int n = 4; n <= 5; ++n) roster.push_back({{Letter::D, n}});
  roster.push_back({{Letter::F, 4}});
  roster.push_back({{Letter::G, 2}});
  roster.push_back({{Letter::A, 1}, {Letter::A, 1}});
  roster.push_back({{Letter::A, 2}, {Letter::B, 2}});
  for (const auto& components : roster) {
    auto d = build_diagram(components);
    const int n = d->rank();
    // every ternary decoration: vertex in theta, in lambda, or in neither
    std::vector<int> code(n, 0);
    while (true) {
      VertexSet theta, lambda;
      for (int v = 1; v <= n; ++v) {
        if (code[v - 1] == 1) theta.push_back(v);
        if (code[v - 1] == 2) lambda.push_back(v);
      }
      CHECK(criterion_witnesses(*d, theta, lambda) ==
            oracle::witnesses(components, theta, lambda));
      int k = 0;
      while (k < n && code[k] == 2) code[k++] = 0;
      if (k == n) break;
      ++code[k];
    }
  }
}

TEST_CASE("grassmannian odd/odd rule") {
  auto a3 = build_diagram({{Letter::A, 3}});
  CHECK(grassmannian_odd_odd(*a3, {1, 3}, {2}) == std::nullopt);  // d = 2 even
  CHECK(grassmannian_odd_odd(*a3, {2, 3}, {1}) ==
        GrassmannianOddOddRule{1, 3});  // d=1, e=3

  auto a5 = build_diagram({{Letter::A, 5}});
  CHECK(grassmannian_odd_odd(*a5, {1, 2, 4, 5}, {3}) ==
        GrassmannianOddOddRule{3, 3});
  // not a maximal parabolic
  CHECK(grassmannian_odd_odd(*a5, {1, 2, 4}, {3}) == std::nullopt);
  // lambda must be exactly the omitted vertex
  CHECK(grassmannian_odd_odd(*a5, {1, 2, 4, 5}, {}) == std::nullopt);

  auto a1 = build_diagram({{Letter::A, 1}});
  CHECK(grassmannian_odd_odd(*a1, {}, {1}) == GrassmannianOddOddRule{1, 1});

  // wrong type letter never fires
  auto d4 = build_diagram({{Letter::D, 4}});
  CHECK(grassmannian_odd_odd(*d4, {1, 2, 3}, {4}) == std::nullopt);
  // products never fire
  auto a2a2 = build_diagram({{Letter::A, 2}, {Letter::A, 2}});
  CHECK(grassmannian_odd_odd(*a2a2, {2, 3, 4}, {1}) == std::nullopt);
}

TEST_CASE("classify on the D4 panel and the Grassmannian case") {
  auto d4 = build_diagram({{Letter::D, 4}});
  auto p = make_parabolic(d4, {1, 4});

  auto c = classify(p, LambdaSet{{3}});  // case (c)
  CHECK(c.vanishes());
  CHECK(std::get<MainTheoremRule>(*c.rule).witness == 3);
  CHECK(c.reduction->theta_prime == VertexSet{1, 3, 4});
  CHECK(c.reduction->fiber_rank == 2);

  auto inc = classify(p, LambdaSet{{}});  // case (d)
  CHECK_FALSE(inc.vanishes());
  CHECK_FALSE(inc.rule.has_value());

  auto a5 = build_diagram({{Letter::A, 5}});
  auto gr = classify(make_parabolic(a5, {1, 2, 4, 5}), LambdaSet{{3}});
  CHECK(gr.vanishes());
  CHECK(std::get<GrassmannianOddOddRule>(*gr.rule) == GrassmannianOddOddRule{3, 3});
  CHECK_FALSE(gr.reduction.has_value());
}

TEST_CASE("classify from a line bundle uses parity") {
  auto a5 = build_diagram({{Letter::A, 5}});
  auto p = make_parabolic(a5, {1, 2, 4, 5});
  // any class congruent to omega_3 mod 2
  auto v = classify(line_bundle(p, Weight{a5, {0, 0, -3, 0, 0}}));
  CHECK(v.vanishes());
  CHECK(std::holds_alternative<GrassmannianOddOddRule>(*v.rule));
}

TEST_CASE("rule priority: main theorem wins on A1") {
  auto a1 = build_diagram({{Letter::A, 1}});
  auto v = classify(make_parabolic(a1, {}), LambdaSet{{1}});
  CHECK(v.vanishes());
  CHECK(std::get<MainTheoremRule>(*v.rule).witness == 1);
}

TEST_CASE("borel_classify") {
  auto a2 = build_diagram({{Letter::A, 2}});
  auto borel = make_parabolic(a2, {});
  auto v = borel_classify(line_bundle(borel, Weight{a2, {1, 0}}));
  CHECK(v.vanishes());
  CHECK(std::get<MainTheoremRule>(*v.rule).witness == 1);

  CHECK_FALSE(borel_classify(line_bundle(borel, Weight{a2, {2, 4}})).vanishes());

  auto e8 = build_diagram({{Letter::E, 8}});
  Weight w = zero_weight(e8);
  w.coeffs[7] = 1;
  CHECK(borel_classify(line_bundle(make_parabolic(e8, {}), w)).vanishes());

  auto p = make_parabolic(a2, {1});
  CHECK_THROWS_AS(borel_classify(line_bundle(p, Weight{a2, {0, 1}})), NotBorel);
}

TEST_CASE("bundle_reduction") {
  auto d4 = build_diagram({{Letter::D, 4}});
  auto r = bundle_reduction(*d4, {1, 4}, 3);
  CHECK(r.alpha == 3);
  CHECK(r.theta_prime == VertexSet{1, 3, 4});
  CHECK(r.fiber_rank == 2);

  CHECK(bundle_reduction(*d4, {}, 2).theta_prime == VertexSet{2});
  CHECK_THROWS_AS(bundle_reduction(*d4, {2}, 1), NotOrthogonal);
  CHECK_THROWS_AS(bundle_reduction(*d4, {2}, 2), AlphaInTheta);
}

TEST_CASE("witness monotonicity when theta shrinks") {
  std::mt19937 rng(4242);
  for (auto d : {build_diagram({{Letter::D, 4}}), build_diagram({{Letter::E, 6}}),
                 build_diagram({{Letter::F, 4}})}) {
    const int n = d->rank();
    for (int trial = 0; trial < 300; ++trial) {
      VertexSet theta, lambda;
      for (int v = 1; v <= n; ++v) {
        switch (rng() % 3) {
          case 0: theta.push_back(v); break;
          case 1: lambda.push_back(v); break;
          default: break;
        }
      }
      VertexSet smaller;
      for (int v : theta)
        if (rng() % 2) smaller.push_back(v);
      const VertexSet big = criterion_witnesses(*d, theta, lambda);
      const VertexSet small = criterion_witnesses(*d, smaller, lambda);
      for (int alpha : big) CHECK(contains(small, alpha));
    }
  }
}
