#include "flagwitt/dynkin.hpp"

#include <algorithm>

namespace flagwitt {

bool admissible(const SimpleType& t) {
  switch (t.letter) {
    case Letter::A: return t.rank >= 1;
    case Letter::B: return t.rank >= 2;
    case Letter::C: return t.rank >= 3;
    case Letter::D: return t.rank >= 4;
    case Letter::E: return t.rank >= 6 && t.rank <= 8;
    case Letter::F: return t.rank == 4;
    case Letter::G: return t.rank == 2;
  }
  return false;
}

namespace {

// Bonds of one simple component in Bourbaki numbering, as (i, j, a_ij, a_ji)
// with a_ij = <alpha_j, alpha_i^vee>. Vertices are 1-based within the component.
struct Bond {
  int i, j, aij, aji;
};

std::vector<Bond> bonds(const SimpleType& t) {
  const int n = t.rank;
  std::vector<Bond> out;
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) out.push_back({i, i + 1, -1, -1});
  };
  switch (t.letter) {
    case Letter::A:
      chain(n);
      break;
    case Letter::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      chain(n - 1);
      out.push_back({n - 1, n, -1, -2});
      break;
    case Letter::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      chain(n - 1);
      out.push_back({n - 1, n, -2, -1});
      break;
    case Letter::D:
      chain(n - 1);
      out.push_back({n - 2, n, -1, -1});
      break;
    case Letter::E:
      out.push_back({1, 3, -1, -1});
      out.push_back({2, 4, -1, -1});
      for (int i = 3; i < n; ++i) out.push_back({i, i + 1, -1, -1});
      break;
    case Letter::F:
      out.push_back({1, 2, -1, -1});
      out.push_back({2, 3, -1, -2});
      out.push_back({3, 4, -1, -1});
      break;
    case Letter::G:
      // alpha_1 short, alpha_2 long.
      out.push_back({1, 2, -3, -1});
      break;
  }
  return out;
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::vector<SimpleType> components)
    : components_(std::move(components)) {
  for (const auto& t : components_) {
    if (!admissible(t)) throw InvalidRank(static_cast<char>(t.letter), t.rank);
    offsets_.push_back(rank_);
    rank_ += t.rank;
  }
  cartan_.assign(static_cast<size_t>(rank_) * rank_, 0);
  auto at = [&](int i, int j) -> int& {
    return cartan_[static_cast<size_t>(i - 1) * rank_ + (j - 1)];
  };
  for (int v = 1; v <= rank_; ++v) at(v, v) = 2;
  for (size_t c = 0; c < components_.size(); ++c) {
    const int base = offsets_[c];
    for (const Bond& b : bonds(components_[c])) {
      at(base + b.i, base + b.j) = b.aij;
      at(base + b.j, base + b.i) = b.aji;
    }
  }
}

void DynkinDiagram::check_vertex(int v) const {
  if (v < 1 || v > rank_) throw VertexOutOfRange(v, rank_);
}

void DynkinDiagram::check_vertex_set(const VertexSet& s) const {
  for (int v : s) check_vertex(v);
}

int DynkinDiagram::cartan(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return cartan_[static_cast<size_t>(i - 1) * rank_ + (j - 1)];
}

bool DynkinDiagram::adjacent(int i, int j) const {
  return i != j && cartan(i, j) != 0;
}

bool DynkinDiagram::orthogonal_to_set(int alpha, const VertexSet& theta) const {
  check_vertex(alpha);
  check_vertex_set(theta);
  if (contains(theta, alpha)) throw AlphaInTheta(alpha);
  for (int beta : theta)
    if (adjacent(alpha, beta)) return false;
  return true;
}

std::vector<std::pair<int, int>> DynkinDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= rank_; ++i)
    for (int j = i + 1; j <= rank_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

int DynkinDiagram::edge_multiplicity(int i, int j) const {
  if (!adjacent(i, j)) return 0;
  return std::max(-cartan(i, j), -cartan(j, i));
}

int DynkinDiagram::component_of(int v) const {
  check_vertex(v);
  int c = 0;
  while (c + 1 < static_cast<int>(offsets_.size()) && offsets_[c + 1] < v) ++c;
  return c;
}

std::string DynkinDiagram::name() const {
  std::string out;
  for (size_t c = 0; c < components_.size(); ++c) {
    if (c) out += 'x';
    out += static_cast<char>(components_[c].letter);
    out += std::to_string(components_[c].rank);
  }
  return out;
}

DiagramPtr build_diagram(std::vector<SimpleType> components) {
  return std::make_shared<const DynkinDiagram>(std::move(components));
}

std::vector<std::vector<int>> cartan_matrix(const DynkinDiagram& d) {
  const int n = d.rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = d.cartan(i, j);
  return m;
}

VertexSet normalize_vertex_set(const DynkinDiagram& d, VertexSet s) {
  d.check_vertex_set(s);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const VertexSet& s, int v) {
  return std::find(s.begin(), s.end(), v) != s.end();
}

}  // namespace flagwitt
