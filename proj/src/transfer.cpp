#include "totpos/transfer.hpp"

#include <string>

namespace totpos {

TransferMatrix build_m(int d) {
  if (d < 1) throw std::domain_error("transfer matrix needs d >= 1, got " + std::to_string(d));
  const int rows = d / 2 + 1;
  TransferMatrix m{d, IntegerMatrix(rows, d)};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < d; ++j) {
      m.entries(i, j) = binomial(d + 1 - i, d - j) - binomial(i, d - j);
    }
  }
  return m;
}

PathMatrix build_w(int n) {
  if (n < 2) throw std::domain_error("path matrix needs n >= 2, got " + std::to_string(n));
  const int rows = (n + 1) / 2;
  PathMatrix w{n, IntegerMatrix(rows, n)};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) {
      w.entries(i, j) = i > j ? Integer(0) : binomial(n - i, n - j) - binomial(i, n - j);
    }
  }
  return w;
}

TransferMatrix strip_leading_column(const PathMatrix& w) {
  const auto cols = w.entries.cols();
  if (w.n < 2 || cols != w.n || w.entries.rows() != (w.n + 1) / 2) {
    throw std::invalid_argument("strip_leading_column: malformed path matrix");
  }
  return TransferMatrix{w.n - 1, w.entries.rightCols(cols - 1)};
}

}  // namespace totpos
