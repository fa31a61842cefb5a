#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "terrainguard/rational.hpp"

namespace terrainguard {

// Covering program  min w.x  s.t.  A x >= 1, x >= 0  with a binary constraint
// matrix. Rows are covering constraints, columns are variables (guards).
class CoveringLP {
 public:
  // Throws InfeasibleError on an all-zero row (that constraint can never be
  // satisfied) and ValidationError on negative weights or ragged rows.
  CoveringLP(std::vector<std::vector<std::uint8_t>> matrix, std::vector<Rational> weights);

  std::size_t rows() const { return matrix_.size(); }
  std::size_t cols() const { return weights_.size(); }
  bool entry(std::size_t i, std::size_t j) const { return matrix_[i][j] != 0; }
  const std::vector<std::vector<std::uint8_t>>& matrix() const { return matrix_; }
  const std::vector<Rational>& weights() const { return weights_; }

  // Plain-text export for cross-checking with external solvers:
  // "min w1 w2 ..." then one "a1 a2 ... >= 1" line per constraint.
  std::string to_text() const;

 private:
  std::vector<std::vector<std::uint8_t>> matrix_;
  std::vector<Rational> weights_;
};

struct FractionalSolution {
  std::vector<Rational> values;
  Rational objective;
  bool is_basic = false;
  // Exact optimality certificate: dual feasible vector with
  // sum(dual) == objective. One entry per constraint row.
  std::vector<Rational> dual;
};

// Two-phase primal simplex over exact rationals with Bland's rule, so it
// always terminates and always returns a vertex of {x >= 0 : Ax >= 1}.
// Covering constraints are handled with surplus variables; phase-1 artificial
// variables never appear in the reported solution. The returned solution is
// verified against its own dual certificate before being handed back.
FractionalSolution solve_covering_lp(const CoveringLP& lp);

// True iff every value is exactly 0 or 1. No tolerances.
bool is_integral(const FractionalSolution& sol);

}  // namespace terrainguard
