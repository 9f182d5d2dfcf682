#pragma once

#include "totpos/exact.hpp"

namespace totpos {

/// McMullen transfer matrix M_d: (floor(d/2)+1) x d, rows i = 0..floor(d/2),
/// columns j = 0..d-1, entries C(d+1-i, d-j) - C(i, d-j). Maps a g-vector
/// to (f_0, ..., f_{d-1}) by right multiplication.
struct TransferMatrix {
  int d = 0;
  IntegerMatrix entries;
};

/// Path matrix W_n: ceil(n/2) x n, entries C(n-i, n-j) - C(i, n-j) on and
/// above the diagonal and 0 below. W_{d+1} is M_d with a leading column
/// (1, 0, ..., 0)^T that produces f_{-1} = 1.
struct PathMatrix {
  int n = 0;
  IntegerMatrix entries;
};

/// Throws std::domain_error for d < 1.
TransferMatrix build_m(int d);

/// Throws std::domain_error for n < 2.
PathMatrix build_w(int n);

/// Drops column 0 of W_n, giving M_{n-1}.
TransferMatrix strip_leading_column(const PathMatrix& w);

inline bool operator==(const TransferMatrix& a, const TransferMatrix& b) {
  return a.d == b.d && a.entries.rows() == b.entries.rows() &&
         a.entries.cols() == b.entries.cols() && a.entries == b.entries;
}

inline bool operator==(const PathMatrix& a, const PathMatrix& b) {
  return a.n == b.n && a.entries.rows() == b.entries.rows() &&
         a.entries.cols() == b.entries.cols() && a.entries == b.entries;
}

}  // namespace totpos
