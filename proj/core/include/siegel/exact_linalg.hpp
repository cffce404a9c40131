#pragma once

#include "siegel/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace siegel {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix reduced;          // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination over Q. Pivot search is left to right, top to bottom.
RowEchelon row_reduce(RationalMatrix m);

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;             // rank of A
  std::size_t augmented_rank = 0;   // rank of [A | b]
  std::vector<Rational> x;          // valid only when consistent
  std::vector<std::size_t> free_columns;
  // First row i (in input order) with A x != b for the least-squares-free
  // particular solution; set only when inconsistent.
  std::optional<std::size_t> first_failing_row;
};

// Solves A x = b exactly. Free variables take the values in `free_defaults`
// (indexed by column) when provided, zero otherwise.
LinearSolution solve_linear(const RationalMatrix& a, const std::vector<Rational>& b,
                            const std::vector<Rational>* free_defaults = nullptr);

}  // namespace siegel
