#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "totpos/exact.hpp"

namespace totpos {

/// Exact determinant by Bareiss fraction-free elimination. Every division is
/// exact, so an Integer matrix never leaves the integers.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) {
    throw std::invalid_argument("determinant of a non-square matrix");
  }
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  MatrixX<Scalar> a = input;
  bool negate = false;
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

struct Minor {
  std::vector<int> rows;
  std::vector<int> cols;
  Rational value;

  friend bool operator==(const Minor&, const Minor&) = default;
};

/// Calls visit(rows, cols, value) for every minor of the given order, with
/// row sets outer and column sets inner, both lexicographic.
template <typename Derived, typename Visitor>
void for_each_minor(const Eigen::MatrixBase<Derived>& m, int order, Visitor&& visit) {
  const auto limit = std::min(m.rows(), m.cols());
  if (order < 1 || order > limit) {
    throw std::out_of_range("minor order " + std::to_string(order) + " outside 1.." +
                            std::to_string(limit));
  }
  const auto row_sets = combinations(static_cast<int>(m.rows()), order);
  const auto col_sets = combinations(static_cast<int>(m.cols()), order);
  for (const auto& r : row_sets) {
    for (const auto& c : col_sets) {
      visit(r, c, determinant(m(r, c)));
    }
  }
}

std::vector<Minor> minors_of_order(const RationalMatrix& m, int order);

struct ScanOptions {
  std::optional<int> max_order;  // defaults to min(rows, cols)
  unsigned jobs = 1;
};

struct TnnReport {
  bool is_tnn = true;
  std::uint64_t minors_checked = 0;
  Rational min_minor;
  /// First negative minor in (order, row set, column set) order.
  std::optional<Minor> witness;
};

/// Exhaustive scan of every square minor up to max_order. The report,
/// witness included, does not depend on jobs. Throws std::invalid_argument
/// for an empty matrix or a max_order < 1.
TnnReport is_totally_nonnegative(const RationalMatrix& m, const ScanOptions& options = {});
TnnReport is_totally_nonnegative(const IntegerMatrix& m, const ScanOptions& options = {});

}  // namespace totpos
