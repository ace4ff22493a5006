#include "r2k/linear_solve.hpp"

#include "r2k/error.hpp"

namespace r2k {

std::optional<LinearSolution> solve(const LinearSystem& system) {
  const std::size_t n = system.unknowns;
  const std::size_t m = system.rows.size();
  if (system.rhs.size() != m) throw Error(ErrorCode::InvalidArgument, "row/rhs count mismatch");

  // Augmented matrix, last column is the right-hand side.
  std::vector<std::vector<Scalar>> a(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (system.rows[i].size() != n) throw Error(ErrorCode::InvalidArgument, "ragged coefficient row");
    a[i] = system.rows[i];
    a[i].push_back(system.rhs[i]);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const Scalar inv = a[row][col].inverse();
    for (std::size_t j = col; j <= n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Scalar factor = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= factor * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  for (std::size_t i = row; i < m; ++i)
    if (!a[i][n].is_zero()) return std::nullopt;

  LinearSolution sol;
  sol.rank = row;
  sol.unique = row == n;
  sol.particular.assign(n, Scalar());
  for (std::size_t i = 0; i < row; ++i) sol.particular[pivot_col[i]] = a[i][n];
  return sol;
}

}  // namespace r2k
