#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "flagwitt/errors.hpp"

namespace flagwitt {

/// Sorted, duplicate-free list of 1-based vertex indices.
using VertexSet = std::vector<int>;

enum class Letter : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One simple component, e.g. D4 or E8.
struct SimpleType {
  Letter letter;
  int rank;

  bool operator==(const SimpleType&) const = default;
};

/// Rank admissibility per type. Low-rank aliases (B1, C1, C2, D2, D3)
/// are rejected so every diagram has exactly one spelling.
bool admissible(const SimpleType& t);

/// Dynkin diagram of a split semi-simple group: an ordered disjoint union of
/// simple components with global 1-based vertex numbering (Bourbaki within
/// each component, components concatenated in declaration order).
///
/// The Cartan matrix uses the column convention a[i][j] = <alpha_j, alpha_i^vee>,
/// so column j is the simple root alpha_j written in the fundamental-weight
/// basis. Immutable after construction.
class DynkinDiagram {
 public:
  explicit DynkinDiagram(std::vector<SimpleType> components);

  int rank() const { return rank_; }
  const std::vector<SimpleType>& components() const { return components_; }

  /// a[i][j] = <alpha_j, alpha_i^vee>, 1-based.
  int cartan(int i, int j) const;

  /// True iff i != j and the Cartan entry (i, j) is nonzero.
  bool adjacent(int i, int j) const;

  /// True iff alpha has no edge to any vertex of theta. Throws AlphaInTheta
  /// when alpha is itself in theta.
  bool orthogonal_to_set(int alpha, const VertexSet& theta) const;

  /// Edge list, each pair (i, j) with i < j, ascending.
  std::vector<std::pair<int, int>> edges() const;

  /// Bond multiplicity of an edge: 1 for simply-laced, 2 for B/C/F bonds,
  /// 3 for G2. Zero when not adjacent.
  int edge_multiplicity(int i, int j) const;

  /// 0-based index of the component containing vertex v.
  int component_of(int v) const;

  /// First global vertex of component c (1-based).
  int component_offset(int c) const { return offsets_[c] + 1; }

  /// Canonical spelling, e.g. "D4" or "A3xB2".
  std::string name() const;

  void check_vertex(int v) const;
  void check_vertex_set(const VertexSet& s) const;

  bool operator==(const DynkinDiagram& other) const {
    return components_ == other.components_;
  }

 private:
  std::vector<SimpleType> components_;
  std::vector<int> offsets_;  // global index base per component, 0-based
  int rank_ = 0;
  std::vector<int> cartan_;   // row-major rank x rank
};

using DiagramPtr = std::shared_ptr<const DynkinDiagram>;

/// Throws InvalidRank on inadmissible (letter, rank) pairs.
DiagramPtr build_diagram(std::vector<SimpleType> components);

/// Full Cartan matrix as a dense row-major copy.
std::vector<std::vector<int>> cartan_matrix(const DynkinDiagram& d);

/// Normalizes a vertex list: sorts, removes duplicates, range-checks.
VertexSet normalize_vertex_set(const DynkinDiagram& d, VertexSet s);

bool contains(const VertexSet& s, int v);

}  // namespace flagwitt
