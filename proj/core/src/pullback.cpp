#include "siegel/pullback.hpp"

#include "siegel/error.hpp"
#include "siegel/exact_linalg.hpp"
#include "siegel/modular.hpp"

namespace siegel {

DoubleQExpansion restrict_diagonal(const FourierTable2& table, long n) {
  if (n < 0) throw DomainError("truncation must be nonnegative");
  if (table.max_det < n * n)
    throw DomainError("table maxDet " + std::to_string(table.max_det) + " is below N^2 = " + std::to_string(n * n));
  DoubleQExpansion dq;
  dq.weight = table.weight;
  dq.truncation = n;
  for (long m = 0; m <= n; ++m)
    for (long l = 0; l <= n; ++l) {
      Rational sum = 0;
      for (long b = 0; b * b <= 4 * m * l; ++b) {
        const Rational& v = table.coefficient({m, b, l});
        sum += b == 0 ? v : 2 * v;  // b and -b
      }
      dq.coeffs[{m, l}] = sum;
    }
  return dq;
}

bool PullbackDecomposition::off_diagonal_zero() const {
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs[i].size(); ++j)
      if (i != j && coeffs[i][j] != 0) return false;
  return true;
}

PullbackDecomposition decompose_pullback(const DoubleQExpansion& dq, int k, long n) {
  if (n > dq.truncation) throw DomainError("requested truncation exceeds the restricted table");
  const auto basis = qexp_basis(k, n);
  const std::size_t dim = basis.size();
  PullbackDecomposition out;
  out.weight = k;
  out.truncation = n;
  for (const auto& bf : basis) out.forms.push_back(bf.name);

  RationalMatrix a;
  std::vector<Rational> rhs;
  std::vector<std::pair<long, long>> row_index;
  for (long m = 0; m <= n; ++m)
    for (long l = 0; l <= n; ++l) {
      std::vector<Rational> row;
      row.reserve(dim * dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) row.push_back(basis[i].form[m] * basis[j].form[l]);
      a.push_back(std::move(row));
      rhs.push_back(dq.at(m, l));
      row_index.emplace_back(m, l);
    }
  out.equations = a.size();
  out.unknowns = dim * dim;
  LinearSolution sol = solve_linear(a, rhs);
  out.rank = sol.rank;
  out.residual_rank = sol.augmented_rank - sol.rank;
  if (!sol.consistent) {
    if (sol.first_failing_row) out.first_failing = row_index[*sol.first_failing_row];
    out.coeffs.assign(dim, std::vector<Rational>(dim, Rational(0)));
    return out;
  }
  if (!sol.free_columns.empty())
    throw DomainError("pullback system is underdetermined at truncation " + std::to_string(n));
  out.coeffs.assign(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out.coeffs[i][j] = sol.x[i * dim + j];
  return out;
}

}  // namespace siegel
