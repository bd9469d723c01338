#include "mdeg/linear_solve.hpp"

#include <stdexcept>

namespace mdeg {

std::optional<std::vector<Q>> solve_exact(std::vector<std::vector<Q>> a,
                                          std::vector<Q> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_exact: shape mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    std::swap(b[pivot], b[row]);
    const Q inv = Q(1) / a[row][col];
    for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Q factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
      b[r] -= factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }

  for (std::size_t r = row; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;  // 0 = nonzero: inconsistent

  std::vector<Q> x(cols, Q(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = b[k];
  return x;
}

}  // namespace mdeg
