#include "siegel/exact_linalg.hpp"

#include "siegel/error.hpp"

namespace siegel {

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

LinearSolution solve_linear(const RationalMatrix& a, const std::vector<Rational>& b,
                            const std::vector<Rational>* free_defaults) {
  if (a.size() != b.size()) throw DomainError("solve_linear: row count mismatch");
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (free_defaults && free_defaults->size() != cols)
    throw DomainError("solve_linear: free_defaults has wrong length");

  RationalMatrix aug = a;
  for (std::size_t i = 0; i < rows; ++i) {
    if (aug[i].size() != cols) throw DomainError("solve_linear: ragged matrix");
    aug[i].push_back(b[i]);
  }
  RowEchelon ech = row_reduce(aug);

  LinearSolution sol;
  sol.augmented_rank = ech.rank();
  sol.rank = 0;
  for (auto p : ech.pivots)
    if (p < cols) ++sol.rank;
  sol.consistent = sol.rank == sol.augmented_rank;

  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots)
    if (p < cols) is_pivot[p] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) sol.free_columns.push_back(c);

  sol.x.assign(cols, Rational(0));
  for (auto c : sol.free_columns) sol.x[c] = free_defaults ? (*free_defaults)[c] : Rational(0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    std::size_t pc = ech.pivots[r];
    if (pc >= cols) break;
    Rational v = ech.reduced[r][cols];
    for (auto c : sol.free_columns) v -= ech.reduced[r][c] * sol.x[c];
    sol.x[pc] = v;
  }

  if (!sol.consistent) {
    for (std::size_t i = 0; i < rows; ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < cols; ++j) lhs += a[i][j] * sol.x[j];
      if (lhs != b[i]) {
        sol.first_failing_row = i;
        break;
      }
    }
  }
  return sol;
}

}  // namespace siegel
