#include "symlab/linsolve.hpp"

#include <utility>

#include "symlab/errors.hpp"

namespace symlab {

RationalMatrix solve_exact(RationalMatrix a, RationalMatrix b) {
  const std::size_t m = a.size();
  if (m == 0) throw DegeneracyError("empty linear system");
  const std::size_t k = a.front().size();
  if (b.size() != m) throw DimensionError("solve_exact: row count mismatch");
  const std::size_t r = b.front().size();
  if (m < k) throw DegeneracyError("underdetermined linear system");

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw DegeneracyError("singular linear system (column " + std::to_string(col) + ")");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < k; ++j) a[col][j] *= inv;
    for (std::size_t j = 0; j < r; ++j) b[col][j] *= inv;
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = col; j < k; ++j) a[row][j] -= f * a[col][j];
      for (std::size_t j = 0; j < r; ++j) b[row][j] -= f * b[col][j];
    }
  }
  for (std::size_t row = k; row < m; ++row) {
    for (std::size_t j = 0; j < r; ++j) {
      if (b[row][j] != 0) throw DegeneracyError("inconsistent overdetermined linear system");
    }
  }
  b.resize(k);
  return b;
}

RationalVector solve_exact(RationalMatrix a, const RationalVector& b) {
  RationalMatrix bm(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bm[i] = {b[i]};
  const auto x = solve_exact(std::move(a), std::move(bm));
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i][0];
  return out;
}

std::size_t exact_rank(RationalMatrix a) {
  if (a.empty()) return 0;
  const std::size_t m = a.size(), k = a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t row = rank + 1; row < m; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[rank][col];
      for (std::size_t j = col; j < k; ++j) a[row][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace symlab
