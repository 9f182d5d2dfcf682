#include "totpos/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace totpos {

LatticeGraph::LatticeGraph(int n) : n_(n), last_column_((n + 1) / 2 - 1), half_(n / 2) {
  if (n < 2) throw std::domain_error("lattice graph T_n needs n >= 2, got " + std::to_string(n));
  // x >= 0 follows from combining y - x <= floor(n/2) with x + y >= ceil(n/2) - 1.
  for (int x = 0; x <= last_column_; ++x) {
    for (int y = std::max(0, last_column_ - x); y <= x + half_; ++y) {
      vertices_.push_back({x, y});
    }
  }
}

bool LatticeGraph::contains(LatticePoint p) const {
  return p.x <= last_column_ && p.y - p.x <= half_ && p.x + p.y >= last_column_;
}

LatticePoint LatticeGraph::source(int i) const {
  if (i < 0 || i >= source_count()) {
    throw std::out_of_range("source index " + std::to_string(i) + " outside 0.." +
                            std::to_string(source_count() - 1));
  }
  return {last_column_ - i, i};
}

LatticePoint LatticeGraph::sink(int j) const {
  if (j < 0 || j >= sink_count()) {
    throw std::out_of_range("sink index " + std::to_string(j) + " outside 0.." +
                            std::to_string(sink_count() - 1));
  }
  return {last_column_, j};
}

Rational LatticeGraph::vertical_weight(int y) const {
  if (y < 0 || y >= n_) throw std::out_of_range("no north arc leaves height " + std::to_string(y));
  return Rational(n_ - y, y + 1);
}

std::vector<Arc> LatticeGraph::arcs() const {
  std::vector<Arc> out;
  for (const auto& p : vertices_) {
    const LatticePoint east{p.x + 1, p.y};
    const LatticePoint north{p.x, p.y + 1};
    if (contains(east)) out.push_back({p, east, Rational(1)});
    if (contains(north)) out.push_back({p, north, vertical_weight(p.y)});
  }
  return out;
}

LatticeGraph build_t(int n) { return LatticeGraph(n); }

Rational path_weight_sum(const LatticeGraph& g, int i, int j) {
  const LatticePoint from = g.source(i);
  const LatticePoint to = g.sink(j);
  if (to.y < from.y) return Rational(0);

  // Only the box spanned by the endpoints can carry a monotone path.
  std::vector<LatticePoint> order;
  for (const auto& p : g.vertices()) {
    if (p.x >= from.x && p.x <= to.x && p.y >= from.y && p.y <= to.y) order.push_back(p);
  }
  std::sort(order.begin(), order.end(), [](LatticePoint a, LatticePoint b) {
    return std::pair(a.x + a.y, a.x) < std::pair(b.x + b.y, b.x);
  });

  std::map<LatticePoint, Rational> total;
  for (const auto& p : order) {
    Rational value(p == from ? 1 : 0);
    if (p != from) {
      if (auto it = total.find({p.x - 1, p.y}); it != total.end()) value += it->second;
      if (auto it = total.find({p.x, p.y - 1}); it != total.end()) {
        value += it->second * g.vertical_weight(p.y - 1);
      }
    }
    total.emplace(p, std::move(value));
  }
  return total.at(to);
}

Integer closed_form_w(int n, int i, int j) {
  if (i > j) return Integer(0);
  return binomial(n - i, n - j) - binomial(i, n - j);
}

namespace {

using FamilyVisitor =
    std::function<bool(const std::vector<std::vector<LatticePoint>>&, const Rational&)>;

// Depth-first search over vertex-disjoint path families joining starts[t] to
// ends[t]. The visitor returns false to stop early; returns false if stopped.
class FamilySearch {
 public:
  FamilySearch(const LatticeGraph& g, std::vector<LatticePoint> starts,
               std::vector<LatticePoint> ends, FamilyVisitor visit)
      : g_(g),
        starts_(std::move(starts)),
        ends_(std::move(ends)),
        visit_(std::move(visit)),
        width_(g.source_count()),
        occupied_(static_cast<std::size_t>(g.source_count()) * g.n(), false) {}

  bool run() { return start_path(0, Rational(1)); }

 private:
  std::vector<bool>::reference cell(LatticePoint p) {
    return occupied_[static_cast<std::size_t>(p.y) * width_ + p.x];
  }

  bool start_path(std::size_t t, const Rational& weight) {
    if (t == starts_.size()) return visit_(paths_, weight);
    const LatticePoint s = starts_[t];
    if (cell(s)) return true;
    paths_.push_back({s});
    cell(s) = true;
    const bool go_on = walk(t, s, weight);
    cell(s) = false;
    paths_.pop_back();
    return go_on;
  }

  bool walk(std::size_t t, LatticePoint at, const Rational& weight) {
    const LatticePoint target = ends_[t];
    if (at == target) return start_path(t + 1, weight);
    const LatticePoint east{at.x + 1, at.y};
    if (east.x <= target.x && g_.contains(east) && !cell(east)) {
      if (!step(t, east, weight)) return false;
    }
    const LatticePoint north{at.x, at.y + 1};
    if (north.y <= target.y && g_.contains(north) && !cell(north)) {
      if (!step(t, north, weight * g_.vertical_weight(at.y))) return false;
    }
    return true;
  }

  bool step(std::size_t t, LatticePoint next, const Rational& weight) {
    cell(next) = true;
    paths_[t].push_back(next);
    const bool go_on = walk(t, next, weight);
    paths_[t].pop_back();
    cell(next) = false;
    return go_on;
  }

  const LatticeGraph& g_;
  std::vector<LatticePoint> starts_;
  std::vector<LatticePoint> ends_;
  FamilyVisitor visit_;
  int width_;
  std::vector<bool> occupied_;
  std::vector<std::vector<LatticePoint>> paths_;
};

void check_request(const LatticeGraph& g, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("row and column index lists differ in length");
  }
  if (rows.empty()) throw std::invalid_argument("empty index lists");
  if (!std::is_sorted(rows.begin(), rows.end(), std::less_equal<>()) ||
      !std::is_sorted(cols.begin(), cols.end(), std::less_equal<>())) {
    throw std::invalid_argument("index lists must be strictly increasing");
  }
  if (rows.size() > static_cast<std::size_t>(kFamilyMaxOrder) || g.n() > kFamilyMaxN) {
    throw EnumerationBudgetExceeded(
        "path family enumeration is limited to " + std::to_string(kFamilyMaxOrder) +
        " paths on T_n with n <= " + std::to_string(kFamilyMaxN));
  }
  for (int i : rows) (void)g.source(i);
  for (int j : cols) (void)g.sink(j);
}

// Identity pairing only; any disjoint family for another pairing is an error.
void search_families(const LatticeGraph& g, std::span<const int> rows,
                     std::span<const int> cols, const FamilyVisitor& visit) {
  check_request(g, rows, cols);
  std::vector<LatticePoint> starts;
  for (int i : rows) starts.push_back(g.source(i));

  std::vector<std::size_t> pairing(cols.size());
  std::iota(pairing.begin(), pairing.end(), 0);
  do {
    std::vector<LatticePoint> ends;
    for (auto p : pairing) ends.push_back(g.sink(cols[p]));
    if (std::is_sorted(pairing.begin(), pairing.end())) {
      FamilySearch(g, starts, ends, visit).run();
      continue;
    }
    bool found = false;
    FamilySearch(g, starts, ends, [&](const auto&, const Rational&) {
      found = true;
      return false;
    }).run();
    if (found) {
      throw PlanarityViolation("T_" + std::to_string(g.n()) +
                               " admits a disjoint path family under a non-identity pairing");
    }
  } while (std::next_permutation(pairing.begin(), pairing.end()));
}

}  // namespace

std::vector<PathFamily> enumerate_nonintersecting_families(const LatticeGraph& g,
                                                           std::span<const int> rows,
                                                           std::span<const int> cols) {
  std::vector<PathFamily> out;
  search_families(g, rows, cols, [&](const auto& paths, const Rational& weight) {
    out.push_back({paths, weight});
    return true;
  });
  return out;
}

Rational minor_via_lgv(const LatticeGraph& g, std::span<const int> rows,
                       std::span<const int> cols) {
  Rational sum(0);
  search_families(g, rows, cols, [&](const auto&, const Rational& weight) {
    sum += weight;
    return true;
  });
  return sum;
}

std::string export_dot(const LatticeGraph& g) {
  auto id = [](LatticePoint p) {
    return "\"" + std::to_string(p.x) + "," + std::to_string(p.y) + "\"";
  };
  std::ostringstream out;
  out << "digraph T_" << g.n() << " {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (const auto& p : g.vertices()) {
    out << "  " << id(p) << " [label=\"(" << p.x << "," << p.y << ")\", pos=\"" << p.x << ","
        << p.y << "!\"];\n";
  }
  for (const auto& arc : g.arcs()) {
    out << "  " << id(arc.from) << " -> " << id(arc.to);
    if (arc.to.y != arc.from.y) out << " [label=\"" << to_string(arc.weight) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace totpos
