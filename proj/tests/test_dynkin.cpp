#include <random>

#include "doctest.h"
#include "euclidean_oracle.hpp"

using namespace flagwitt;

namespace {

std::vector<std::vector<SimpleType>> admissible_roster() {
  std::vector<std::vector<SimpleType>> out;
  for (int n = 1; n <= 8; ++n) out.push_back({{Letter::A, n}});
  for (int n = 2; n <= 8; ++n) out.push_back({{Letter::B, n}});
  for (int n = 3; n <= 8; ++n) out.push_back({{Letter::C, n}});
  for (int n = 4; n <= 8; ++n) out.push_back({{Letter::D, n}});
  for (int n = 6; n <= 8; ++n) out.push_back({{Letter::E, n}});
  out.push_back({{Letter::F, 4}});
  out.push_back({{Letter::G, 2}});
  out.push_back({{Letter::A, 1}, {Letter::A, 1}});
  out.push_back({{Letter::A, 3}, {Letter::B, 2}});
  out.push_back({{Letter::G, 2}, {Letter::D, 5}, {Letter::A, 2}});
  return out;
}

}  // namespace

TEST_CASE("build_diagram basics") {
  auto a2 = build_diagram({{Letter::A, 2}});
  CHECK(a2->rank() == 2);
  CHECK(a2->edges() == std::vector<std::pair<int, int>>{{1, 2}});

  auto d4 = build_diagram({{Letter::D, 4}});
  CHECK(d4->edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}});

  auto a1a1 = build_diagram({{Letter::A, 1}, {Letter::A, 1}});
  CHECK(a1a1->rank() == 2);
  CHECK(a1a1->edges().empty());
  CHECK(a1a1->name() == "A1xA1");
}

TEST_CASE("inadmissible ranks are rejected, aliases included") {
  CHECK_THROWS_AS(build_diagram({{Letter::A, 0}}), InvalidRank);
  CHECK_THROWS_AS(build_diagram({{Letter::B, 1}}), InvalidRank);
  CHECK_THROWS_AS(build_diagram({{Letter::C, 2}}), InvalidRank);
  CHECK_THROWS_AS(build_diagram({{Letter::D, 3}}), InvalidRank);
  CHECK_THROWS_AS(build_diagram({{Letter::D, 2}}), InvalidRank);
  CHECK_THROWS_AS(build_diagram({{Letter::E, 5}}), InvalidRank);
  CHECK_THROWS_AS(build_diagram({{Letter::E, 9}}), InvalidRank);
  CHECK_THROWS_AS(build_diagram({{Letter::F, 3}}), InvalidRank);
  CHECK_THROWS_AS(build_diagram({{Letter::G, 3}}), InvalidRank);
}

TEST_CASE("cartan matrix small cases") {
  auto a2 = build_diagram({{Letter::A, 2}});
  CHECK(cartan_matrix(*a2) == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});

  auto a1 = build_diagram({{Letter::A, 1}});
  CHECK(cartan_matrix(*a1) == std::vector<std::vector<int>>{{2}});

  auto g2 = build_diagram({{Letter::G, 2}});
  CHECK(g2->cartan(1, 2) * g2->cartan(2, 1) == 3);
  CHECK(((g2->cartan(1, 2) == -3 && g2->cartan(2, 1) == -1)));
}

TEST_CASE("cartan matrix matches the Euclidean-realization oracle") {
  for (const auto& components : admissible_roster()) {
    auto d = build_diagram(components);
    const auto expect = oracle::cartan(components);
    INFO("diagram ", d->name());
    for (int i = 1; i <= d->rank(); ++i)
      for (int j = 1; j <= d->rank(); ++j)
        CHECK(d->cartan(i, j) == expect[i - 1][j - 1]);
  }
}

TEST_CASE("cartan determinants match the oracle") {
  for (const auto& components : admissible_roster()) {
    auto d = build_diagram(components);
    oracle::Mat ours(d->rank(), std::vector<std::int64_t>(d->rank()));
    for (int i = 1; i <= d->rank(); ++i)
      for (int j = 1; j <= d->rank(); ++j) ours[i - 1][j - 1] = d->cartan(i, j);
    INFO("diagram ", d->name());
    CHECK(oracle::det(ours) == oracle::det(oracle::cartan(components)));
  }
  // Sanity on the oracle itself: known closed forms.
  CHECK(oracle::det(oracle::cartan({SimpleType{Letter::A, 5}})) == 6);
  CHECK(oracle::det(oracle::cartan({SimpleType{Letter::D, 6}})) == 4);
  CHECK(oracle::det(oracle::cartan({SimpleType{Letter::E, 8}})) == 1);
}

TEST_CASE("adjacency relation") {
  auto d4 = build_diagram({{Letter::D, 4}});
  CHECK(d4->adjacent(1, 2));
  CHECK_FALSE(d4->adjacent(1, 3));
  CHECK_FALSE(d4->adjacent(2, 2));
  CHECK_THROWS_AS(d4->adjacent(0, 1), VertexOutOfRange);
  CHECK_THROWS_AS(d4->adjacent(1, 5), VertexOutOfRange);

  for (const auto& components : admissible_roster()) {
    auto d = build_diagram(components);
    for (int i = 1; i <= d->rank(); ++i)
      for (int j = 1; j <= d->rank(); ++j) {
        CHECK(d->adjacent(i, j) == d->adjacent(j, i));
        CHECK(d->adjacent(i, j) == oracle::adjacent(components, i, j));
        if (d->component_of(i) != d->component_of(j))
          CHECK_FALSE(d->adjacent(i, j));
      }
  }
}

TEST_CASE("orthogonal_to_set") {
  auto d4 = build_diagram({{Letter::D, 4}});
  CHECK(d4->orthogonal_to_set(3, {1, 4}));
  CHECK_FALSE(d4->orthogonal_to_set(2, {1, 4}));
  CHECK(d4->orthogonal_to_set(2, {}));
  CHECK_THROWS_AS(d4->orthogonal_to_set(1, {1, 4}), AlphaInTheta);
}

TEST_CASE("orthogonal_to_set splits over unions") {
  std::mt19937 rng(7);
  auto d = build_diagram({{Letter::E, 7}});
  for (int trial = 0; trial < 200; ++trial) {
    const int alpha = 1 + static_cast<int>(rng() % d->rank());
    VertexSet t1, t2;
    for (int v = 1; v <= d->rank(); ++v) {
      if (v == alpha) continue;
      if (rng() % 2) t1.push_back(v);
      if (rng() % 2) t2.push_back(v);
    }
    VertexSet both = t1;
    both.insert(both.end(), t2.begin(), t2.end());
    both = normalize_vertex_set(*d, both);
    CHECK(d->orthogonal_to_set(alpha, both) ==
          (d->orthogonal_to_set(alpha, t1) && d->orthogonal_to_set(alpha, t2)));
  }
}
