#include "totpos/minors.hpp"

#include <thread>

namespace totpos {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  for (int t = 0; t < k; ++t) pick[t] = t;
  while (true) {
    out.push_back(pick);
    int pos = k;
    while (pos > 0 && pick[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return out;
    ++pick[pos - 1];
    for (int t = pos; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

std::vector<Minor> minors_of_order(const RationalMatrix& m, int order) {
  std::vector<Minor> out;
  for_each_minor(m, order, [&](const std::vector<int>& r, const std::vector<int>& c,
                               const Rational& value) { out.push_back({r, c, value}); });
  return out;
}

namespace {

template <typename Scalar>
struct ChunkResult {
  std::optional<Scalar> min_value;
  // Index (within the order) of the first negative minor in this chunk.
  std::optional<std::size_t> first_negative;
};

template <typename Scalar>
ChunkResult<Scalar> scan_chunk(const MatrixX<Scalar>& m,
                               const std::vector<std::vector<int>>& row_sets,
                               const std::vector<std::vector<int>>& col_sets,
                               std::size_t begin, std::size_t end) {
  ChunkResult<Scalar> result;
  const std::size_t per_row = col_sets.size();
  for (std::size_t idx = begin; idx < end; ++idx) {
    Scalar value = determinant(m(row_sets[idx / per_row], col_sets[idx % per_row]));
    if (value < 0 && !result.first_negative) result.first_negative = idx;
    if (!result.min_value || value < *result.min_value) result.min_value = std::move(value);
  }
  return result;
}

template <typename Scalar>
TnnReport scan(const MatrixX<Scalar>& m, const ScanOptions& options) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw std::invalid_argument("total nonnegativity scan of an empty matrix");
  }
  const int full = static_cast<int>(std::min(m.rows(), m.cols()));
  if (options.max_order && *options.max_order < 1) {
    throw std::invalid_argument("max order must be >= 1");
  }
  const int top = options.max_order ? std::min(*options.max_order, full) : full;
  const unsigned jobs = std::max(1u, options.jobs);

  TnnReport report;
  std::optional<Scalar> min_value;
  for (int order = 1; order <= top; ++order) {
    const auto row_sets = combinations(static_cast<int>(m.rows()), order);
    const auto col_sets = combinations(static_cast<int>(m.cols()), order);
    const std::size_t total = row_sets.size() * col_sets.size();

    // Contiguous chunks, merged in chunk order: the result is independent of
    // how many workers ran.
    const std::size_t workers = std::min<std::size_t>(jobs, total);
    std::vector<ChunkResult<Scalar>> chunks(workers);
    auto bounds = [&](std::size_t w) { return total * w / workers; };
    if (workers == 1) {
      chunks[0] = scan_chunk(m, row_sets, col_sets, 0, total);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          chunks[w] = scan_chunk(m, row_sets, col_sets, bounds(w), bounds(w + 1));
        });
      }
    }

    for (auto& chunk : chunks) {
      if (chunk.min_value && (!min_value || *chunk.min_value < *min_value)) {
        min_value = std::move(chunk.min_value);
      }
      if (chunk.first_negative && !report.witness) {
        const std::size_t idx = *chunk.first_negative;
        const auto& r = row_sets[idx / col_sets.size()];
        const auto& c = col_sets[idx % col_sets.size()];
        report.witness = Minor{r, c, Rational(determinant(m(r, c)))};
      }
    }
    report.minors_checked += total;
  }
  report.min_minor = Rational(*min_value);
  report.is_tnn = !report.witness.has_value();
  return report;
}

}  // namespace

TnnReport is_totally_nonnegative(const IntegerMatrix& m, const ScanOptions& options) {
  return scan(m, options);
}

TnnReport is_totally_nonnegative(const RationalMatrix& m, const ScanOptions& options) {
  // Integer matrices take the cheaper integer path; minors are identical.
  if (m.unaryExpr([](const Rational& v) { return is_integral(v); }).all()) {
    IntegerMatrix integral =
        m.unaryExpr([](const Rational& v) { return Integer(boost::multiprecision::numerator(v)); });
    return scan(integral, options);
  }
  return scan(m, options);
}

}  // namespace totpos
