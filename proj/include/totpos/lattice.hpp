#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "totpos/exact.hpp"

namespace totpos {

struct LatticePoint {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct Arc {
  LatticePoint from;
  LatticePoint to;
  Rational weight;
};

/// The weighted planar DAG T_n on
///   { (x, y) : x <= ceil(n/2)-1, y - x <= floor(n/2), x + y >= ceil(n/2)-1 }
/// with east arcs of weight 1 and north arcs (x,y) -> (x,y+1) of weight
/// w_y = C(n, y+1) / C(n, y) = (n - y) / (y + 1).
///
/// Sources s_i = (ceil(n/2)-1-i, i) for i < ceil(n/2) sit on the antidiagonal;
/// sinks t_j = (ceil(n/2)-1, j) for j < n sit on the rightmost column. The
/// path-weight matrix from sources (rows) to sinks (columns) is W_n.
class LatticeGraph {
 public:
  /// Throws std::domain_error for n < 2.
  explicit LatticeGraph(int n);

  int n() const { return n_; }
  /// Sorted lexicographically by (x, y).
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  bool contains(LatticePoint p) const;

  int source_count() const { return (n_ + 1) / 2; }
  int sink_count() const { return n_; }
  LatticePoint source(int i) const;
  LatticePoint sink(int j) const;

  Rational vertical_weight(int y) const;
  /// Arcs ordered by source vertex, east arc before north arc.
  std::vector<Arc> arcs() const;

 private:
  int n_;
  int last_column_;  // ceil(n/2) - 1
  int half_;         // floor(n/2)
  std::vector<LatticePoint> vertices_;
};

LatticeGraph build_t(int n);

/// Sum of weights of all directed paths from source i to sink j, by dynamic
/// programming over the vertices in (x + y, x) order. Throws std::out_of_range.
Rational path_weight_sum(const LatticeGraph& g, int i, int j);

/// C(n-i, n-j) - C(i, n-j) for i <= j, else 0.
Integer closed_form_w(int n, int i, int j);

struct PathFamily {
  std::vector<std::vector<LatticePoint>> paths;  // paths[t] runs source rows[t] -> sink cols[t]
  Rational weight;
};

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a vertex-disjoint family exists for a non-identity pairing of
/// sources and sinks, which planarity rules out.
class PlanarityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kFamilyMaxOrder = 3;
inline constexpr int kFamilyMaxN = 10;

/// All families of pairwise vertex-disjoint paths joining source rows[t] to
/// sink cols[t]. rows and cols must be strictly increasing and of equal size.
/// Throws EnumerationBudgetExceeded beyond kFamilyMaxOrder paths or
/// n > kFamilyMaxN, std::invalid_argument on malformed index lists, and
/// PlanarityViolation if any other pairing admits a disjoint family.
std::vector<PathFamily> enumerate_nonintersecting_families(const LatticeGraph& g,
                                                           std::span<const int> rows,
                                                           std::span<const int> cols);

/// Total weight of the non-intersecting families: by the
/// Lindstrom-Gessel-Viennot lemma, the minor of W_n on (rows, cols).
Rational minor_via_lgv(const LatticeGraph& g, std::span<const int> rows,
                       std::span<const int> cols);

/// Graphviz rendering: vertices labeled "(x,y)", north arcs labeled with
/// their weight in lowest terms. Byte-stable for a given n.
std::string export_dot(const LatticeGraph& g);

}  // namespace totpos
