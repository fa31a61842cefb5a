#include "terrainguard/lp.hpp"

#include <stdexcept>

#include "terrainguard/errors.hpp"

namespace terrainguard {

CoveringLP::CoveringLP(std::vector<std::vector<std::uint8_t>> matrix, std::vector<Rational> weights)
    : matrix_(std::move(matrix)), weights_(std::move(weights)) {
  for (const auto& w : weights_)
    if (w.sign() < 0) throw ValidationError("covering LP weights must be nonnegative");
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != weights_.size())
      throw ValidationError("covering LP row " + std::to_string(i) + " has wrong length");
    bool any = false;
    for (auto e : matrix_[i]) any = any || e != 0;
    if (!any)
      throw InfeasibleError("row " + std::to_string(i),
                            "covering constraint " + std::to_string(i) +
                                " has no variable: the corresponding point cannot be covered");
  }
}

std::string CoveringLP::to_text() const {
  std::string out = "min";
  for (const auto& w : weights_) {
    out.push_back(' ');
    out += w.str();
  }
  out.push_back('\n');
  for (const auto& row : matrix_) {
    bool first = true;
    for (auto e : row) {
      if (!first) out.push_back(' ');
      out.push_back(e ? '1' : '0');
      first = false;
    }
    out += " >= 1\n";
  }
  return out;
}

namespace {

// Dense tableau simplex. Column layout: [0,k) structural x, [k,k+m) surplus,
// [k+m,k+2m) artificial; the artificial columns are kept through phase 2
// (barred from entering) because the final tableau under them is B^{-1},
// which yields the dual vector for the optimality certificate.
class Tableau {
 public:
  Tableau(const CoveringLP& lp)
      : m_(lp.rows()), k_(lp.cols()), ncols_(k_ + 2 * m_), rows_(m_), basis_(m_), enterable_(ncols_, true) {
    for (std::size_t i = 0; i < m_; ++i) {
      rows_[i].assign(ncols_ + 1, Rational(0));
      for (std::size_t j = 0; j < k_; ++j)
        if (lp.entry(i, j)) rows_[i][j] = 1;
      rows_[i][k_ + i] = -1;       // surplus
      rows_[i][k_ + m_ + i] = 1;   // artificial, initial basis
      rows_[i][ncols_] = 1;        // rhs
      basis_[i] = k_ + m_ + i;
    }
  }

  // Bland's rule simplex for min cost.x over the current tableau. Returns the
  // reduced cost row at optimality.
  std::vector<Rational> run_phase(const std::vector<Rational>& cost) {
    std::vector<Rational> red(cost);
    red.resize(ncols_ + 1, Rational(0));
    red[ncols_] = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) red[j] -= cb * rows_[i][j];
    }

    for (;;) {
      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (enterable_[j] && red[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols_) return red;  // optimal

      std::size_t leave = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        if (leave == m_) {
          leave = i;
          continue;
        }
        const Rational cur = rows_[i][ncols_] / rows_[i][enter];
        const Rational best = rows_[leave][ncols_] / rows_[leave][enter];
        if (cur < best || (cur == best && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == m_)
        throw std::logic_error("covering LP unbounded: cannot happen with nonnegative weights");

      pivot(leave, enter, red);
    }
  }

  // Degenerate pivot that removes any artificial still in the basis after
  // phase 1. Always succeeds: the surplus block has full row rank.
  void evict_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < k_ + m_) continue;
      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < k_ + m_; ++j) {
        if (!rows_[i][j].is_zero()) {
          enter = j;
          break;
        }
      }
      if (enter == ncols_) throw std::logic_error("artificial row with no structural entry");
      std::vector<Rational> none;
      pivot(i, enter, none);
    }
    for (std::size_t j = k_ + m_; j < ncols_; ++j) enterable_[j] = false;
  }

  Rational basic_value(std::size_t var) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] == var) return rows_[i][ncols_];
    return 0;
  }

  std::size_t structural_count() const { return k_; }
  std::size_t row_count() const { return m_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t i) const { return rows_[i][ncols_]; }

 private:
  void pivot(std::size_t r, std::size_t c, std::vector<Rational>& red) {
    const Rational piv = rows_[r][c];
    for (auto& e : rows_[r]) e /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c].is_zero()) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (!red.empty() && !red[c].is_zero()) {
      const Rational f = red[c];
      for (std::size_t j = 0; j <= ncols_; ++j) red[j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_, k_, ncols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<bool> enterable_;
};

}  // namespace

FractionalSolution solve_covering_lp(const CoveringLP& lp) {
  const std::size_t m = lp.rows();
  const std::size_t k = lp.cols();

  FractionalSolution out;
  out.values.assign(k, Rational(0));
  out.is_basic = true;
  if (m == 0) {
    out.objective = 0;
    return out;  // the origin is the optimal vertex of {x >= 0}
  }

  Tableau t(lp);

  std::vector<Rational> phase1_cost(k + 2 * m, Rational(0));
  for (std::size_t j = k + m; j < k + 2 * m; ++j) phase1_cost[j] = 1;
  t.run_phase(phase1_cost);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] >= k + m && !t.rhs(i).is_zero())
      throw InfeasibleError("row " + std::to_string(i),
                            "covering constraint " + std::to_string(i) + " unsatisfiable");
  }
  t.evict_artificials();

  std::vector<Rational> phase2_cost(k + 2 * m, Rational(0));
  for (std::size_t j = 0; j < k; ++j) phase2_cost[j] = lp.weights()[j];
  const std::vector<Rational> red = t.run_phase(phase2_cost);

  for (std::size_t i = 0; i < m; ++i)
    if (t.basis()[i] < k) out.values[t.basis()[i]] = t.rhs(i);

  out.objective = 0;
  for (std::size_t j = 0; j < k; ++j) out.objective += lp.weights()[j] * out.values[j];

  out.dual.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.dual.push_back(-red[k + m + i]);

  // Exact certificate: primal feasible, dual feasible, objectives equal.
  Rational dual_total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (out.dual[i].sign() < 0) throw std::logic_error("negative dual multiplier");
    dual_total += out.dual[i];
    Rational lhs = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (lp.entry(i, j)) lhs += out.values[j];
    if (lhs < Rational(1)) throw std::logic_error("primal constraint violated");
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (out.values[j].sign() < 0) throw std::logic_error("negative primal value");
    Rational col = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (lp.entry(i, j)) col += out.dual[i];
    if (col > lp.weights()[j]) throw std::logic_error("dual constraint violated");
  }
  if (dual_total != out.objective) throw std::logic_error("duality gap in reported optimum");

  return out;
}

bool is_integral(const FractionalSolution& sol) {
  for (const auto& v : sol.values)
    if (!v.is_zero() && v != Rational(1)) return false;
  return true;
}

}  // namespace terrainguard
