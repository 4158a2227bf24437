#include "kminor/lp.hpp"

#include <algorithm>
#include <sstream>

#include "kminor/error.hpp"

namespace kminor {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

void LpProblem::validate() const {
  const std::size_t n = variables();
  if (b_eq.size() != a_eq.size()) throw input_error("LP: rhs length does not match row count");
  for (std::size_t i = 0; i < a_eq.size(); ++i) {
    if (a_eq[i].size() != n) throw input_error("LP: row " + std::to_string(i) + " has wrong length");
  }
  if (!lower.empty() && lower.size() != n) throw input_error("LP: lower bound vector has wrong length");
  if (!upper.empty() && upper.size() != n) throw input_error("LP: upper bound vector has wrong length");
}

namespace {

/// Internal column y >= 0 (optionally <= cap) standing for part of x_j.
struct Column {
  std::size_t original;
  int sign;  // x_j = offset_j + sign * y (free variables use two columns)
  std::optional<Rational> cap;
};

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::vector<std::optional<Rational>> caps,
          std::size_t structural)
      : t_(std::move(rows)), beta_(std::move(rhs)), caps_(std::move(caps)), structural_(structural) {
    const std::size_t m = t_.size();
    const std::size_t total = structural_ + m;
    at_upper_.assign(total, false);
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (beta_[i] < 0) {
        for (auto& v : t_[i]) v = -v;
        beta_[i] = -beta_[i];
      }
      t_[i].resize(total, Rational(0));
      t_[i][structural_ + i] = 1;
      basis_[i] = structural_ + i;
    }
    caps_.resize(total);
  }

  /// Runs Bland iterations against `cost` over columns [0, limit). Returns
  /// false when unbounded.
  bool optimise(const std::vector<Rational>& cost, std::size_t limit, std::size_t& iterations, std::size_t cap) {
    const std::size_t m = t_.size();
    std::vector<bool> basic(t_.empty() ? structural_ : t_[0].size(), false);
    while (true) {
      std::fill(basic.begin(), basic.end(), false);
      for (auto b : basis_) basic[b] = true;

      std::optional<std::size_t> entering;
      int direction = 0;
      for (std::size_t j = 0; j < limit && !entering; ++j) {
        if (basic[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < m; ++i) {
          if (t_[i][j] != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (!at_upper_[j] && reduced < 0) {
          entering = j;
          direction = 1;
        } else if (at_upper_[j] && reduced > 0) {
          entering = j;
          direction = -1;
        }
      }
      if (!entering) return true;
      if (++iterations > cap) throw budget_error("simplex iteration cap " + std::to_string(cap) + " exceeded");

      const std::size_t q = *entering;
      // Ratio test; ties broken by smallest variable index (Bland).
      std::optional<Rational> best;
      std::size_t best_var = 0;
      std::optional<std::size_t> best_row;
      bool leaves_at_upper = false;
      auto consider = [&](const Rational& ratio, std::size_t var, std::optional<std::size_t> row, bool upper) {
        if (!best || ratio < *best || (ratio == *best && var < best_var)) {
          best = ratio;
          best_var = var;
          best_row = row;
          leaves_at_upper = upper;
        }
      };
      if (caps_[q]) consider(*caps_[q], q, std::nullopt, false);
      for (std::size_t i = 0; i < m; ++i) {
        const Rational rate = t_[i][q] * direction;  // basic value falls by rate * step
        if (rate > 0) {
          consider(beta_[i] / rate, basis_[i], i, false);
        } else if (rate < 0 && caps_[basis_[i]]) {
          consider((*caps_[basis_[i]] - beta_[i]) / (-rate), basis_[i], i, true);
        }
      }
      if (!best) return false;

      const Rational step = *best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t_[i][q] != 0) beta_[i] -= t_[i][q] * direction * step;
      }
      if (!best_row) {
        at_upper_[q] = !at_upper_[q];
        continue;
      }
      const std::size_t r = *best_row;
      const Rational entering_value = (at_upper_[q] ? *caps_[q] : Rational(0)) + step * direction;
      at_upper_[basis_[r]] = leaves_at_upper;
      at_upper_[q] = false;
      pivot(r, q);
      beta_[r] = entering_value;
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    const Rational pv = t_[r][q];
    for (auto& v : t_[r]) v /= pv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][q] == 0) continue;
      const Rational factor = t_[i][q];
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        if (t_[r][j] != 0) t_[i][j] -= factor * t_[r][j];
      }
    }
    basis_[r] = q;
  }

  /// Pivots zero-valued artificials out of the basis; drops redundant rows.
  void expel_artificials() {
    for (std::size_t r = 0; r < t_.size();) {
      if (basis_[r] < structural_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (t_[r][j] != 0 && std::find(basis_.begin(), basis_.end(), j) == basis_.end()) {
          column = j;
          break;
        }
      }
      if (column) {
        const Rational value = at_upper_[*column] ? *caps_[*column] : Rational(0);
        pivot(r, *column);
        at_upper_[*column] = false;
        beta_[r] = value;
        ++r;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        beta_.erase(beta_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  Rational artificial_total() const {
    Rational total(0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] >= structural_) total += beta_[i];
    }
    return total;
  }

  std::vector<Rational> structural_values() const {
    std::vector<Rational> y(structural_, Rational(0));
    for (std::size_t j = 0; j < structural_; ++j) {
      if (at_upper_[j]) y[j] = *caps_[j];
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < structural_) y[basis_[i]] = beta_[i];
    }
    return y;
  }

  const std::vector<std::size_t>& basis() const noexcept { return basis_; }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> beta_;
  std::vector<std::optional<Rational>> caps_;
  std::size_t structural_;
  std::vector<bool> at_upper_;
  std::vector<std::size_t> basis_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total(0);
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

}  // namespace

LpSolution solve(const LpProblem& problem, const SolveOptions& options) {
  problem.validate();
  const std::size_t n = problem.variables();
  const std::size_t m = problem.rows();
  const Rational sense_factor = problem.sense == Sense::minimize ? 1 : -1;

  LpSolution solution;

  std::vector<Column> columns;
  std::vector<Rational> offset(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto lo = problem.lower_bound(j);
    const auto hi = problem.upper_bound(j);
    if (lo && hi && *hi < *lo) return solution;  // empty box
    if (lo) {
      offset[j] = *lo;
      columns.push_back({j, 1, hi ? std::optional<Rational>(*hi - *lo) : std::nullopt});
    } else if (hi) {
      offset[j] = *hi;
      columns.push_back({j, -1, std::nullopt});
    } else {
      columns.push_back({j, 1, std::nullopt});
      columns.push_back({j, -1, std::nullopt});
    }
  }
  const std::size_t structural = columns.size();

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(structural, Rational(0)));
  std::vector<Rational> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    rhs[i] = problem.b_eq[i] - dot(problem.a_eq[i], offset);
    for (std::size_t c = 0; c < structural; ++c) {
      rows[i][c] = problem.a_eq[i][columns[c].original] * columns[c].sign;
    }
  }
  std::vector<std::optional<Rational>> caps;
  for (const auto& c : columns) caps.push_back(c.cap);

  Tableau tableau(std::move(rows), std::move(rhs), std::move(caps), structural);

  std::vector<Rational> phase1(structural + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[structural + i] = 1;
  // Artificials never re-enter: only structural columns are eligible.
  tableau.optimise(phase1, structural, solution.iterations, options.iteration_cap);
  if (tableau.artificial_total() != 0) {
    solution.status = LpStatus::infeasible;
    return solution;
  }
  tableau.expel_artificials();

  std::vector<Rational> phase2(structural + m, Rational(0));
  for (std::size_t c = 0; c < structural; ++c) {
    phase2[c] = problem.objective[columns[c].original] * columns[c].sign * sense_factor;
  }
  if (!tableau.optimise(phase2, structural, solution.iterations, options.iteration_cap)) {
    solution.status = LpStatus::unbounded;
    return solution;
  }

  const auto y = tableau.structural_values();
  solution.x = offset;
  for (std::size_t c = 0; c < structural; ++c) solution.x[columns[c].original] += y[c] * columns[c].sign;
  for (auto b : tableau.basis()) solution.basis.push_back(columns[b].original);
  solution.objective_value = dot(problem.objective, solution.x);
  solution.status = LpStatus::optimal;
  return solution;
}

// ---------------------------------------------------------------------------
// Certification

namespace {

Certificate fail(std::string why) { return {false, std::move(why)}; }

/// Primal checks shared by certify and certify_point.
Certificate check_primal(const LpProblem& problem, const std::vector<Rational>& x) {
  if (x.size() != problem.variables()) return fail("solution has wrong dimension");
  for (std::size_t i = 0; i < problem.rows(); ++i) {
    if (dot(problem.a_eq[i], x) != problem.b_eq[i]) {
      return fail("equality row " + std::to_string(i) + " violated: lhs " + to_string(dot(problem.a_eq[i], x)) +
                  " != rhs " + to_string(problem.b_eq[i]));
    }
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto lo = problem.lower_bound(j);
    const auto hi = problem.upper_bound(j);
    if (lo && x[j] < *lo) return fail("variable " + std::to_string(j) + " below lower bound");
    if (hi && x[j] > *hi) return fail("variable " + std::to_string(j) + " above upper bound");
  }
  return {true, {}};
}

/// Any y with y^T a_j = c_j for j in basis, by exact Gaussian elimination.
std::optional<std::vector<Rational>> solve_duals(const LpProblem& problem, const std::vector<Rational>& cost,
                                                 const std::vector<std::size_t>& basis) {
  const std::size_t m = problem.rows();
  std::vector<std::vector<Rational>> aug;
  for (auto j : basis) {
    std::vector<Rational> row(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = problem.a_eq[i][j];
    row[m] = cost[j];
    aug.push_back(std::move(row));
  }
  std::vector<std::optional<std::size_t>> pivot_col;
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m && r < aug.size(); ++c) {
    std::size_t p = r;
    while (p < aug.size() && aug[p][c] == 0) ++p;
    if (p == aug.size()) continue;
    std::swap(aug[p], aug[r]);
    const Rational pv = aug[r][c];
    for (auto& v : aug[r]) v /= pv;
    for (std::size_t i = 0; i < aug.size(); ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t k = 0; k <= m; ++k) aug[i][k] -= f * aug[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < aug.size(); ++i) {
    if (aug[i][m] != 0) return std::nullopt;
  }
  std::vector<Rational> y(m, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = aug[i][m];
  return y;
}

}  // namespace

Certificate certify(const LpProblem& problem, const LpSolution& solution) {
  if (solution.status != LpStatus::optimal) return fail(std::string("status is ") + to_string(solution.status));
  if (auto primal = check_primal(problem, solution.x); !primal) return primal;
  if (dot(problem.objective, solution.x) != solution.objective_value) {
    return fail("objective mismatch: c^T x = " + to_string(dot(problem.objective, solution.x)) + ", reported " +
                to_string(solution.objective_value));
  }

  const std::size_t n = problem.variables();
  std::vector<Rational> cost = problem.objective;
  if (problem.sense == Sense::maximize) {
    for (auto& c : cost) c = -c;
  }
  for (auto j : solution.basis) {
    if (j >= n) return fail("basis index out of range");
  }
  const auto duals = solve_duals(problem, cost, solution.basis);
  if (!duals) return fail("dual system of the basis is inconsistent");

  std::vector<bool> basic(n, false);
  for (auto j : solution.basis) basic[j] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (basic[j]) continue;
    Rational reduced = cost[j];
    for (std::size_t i = 0; i < problem.rows(); ++i) reduced -= (*duals)[i] * problem.a_eq[i][j];
    const auto lo = problem.lower_bound(j);
    const auto hi = problem.upper_bound(j);
    const bool at_lo = lo && solution.x[j] == *lo;
    const bool at_hi = hi && solution.x[j] == *hi;
    if (at_lo && at_hi) continue;
    if (at_lo && reduced < 0) return fail("dual infeasible: reduced cost of variable " + std::to_string(j) + " < 0");
    if (at_hi && reduced > 0) return fail("dual infeasible: reduced cost of variable " + std::to_string(j) + " > 0");
    if (!at_lo && !at_hi && reduced != 0) {
      return fail("complementary slackness violated at nonbasic variable " + std::to_string(j));
    }
  }
  return {true, {}};
}

Certificate certify_point(const LpProblem& problem, const std::vector<Rational>& x, const Rational& optimum) {
  if (auto primal = check_primal(problem, x); !primal) return primal;
  if (dot(problem.objective, x) != optimum) {
    return fail("objective " + to_string(dot(problem.objective, x)) + " differs from optimum " + to_string(optimum));
  }
  return {true, {}};
}

std::string dump(const LpProblem& problem) {
  std::ostringstream out;
  out << (problem.sense == Sense::minimize ? "minimize" : "maximize") << "\n";
  out << "c:";
  for (const auto& c : problem.objective) out << " " << to_string(c);
  out << "\n";
  for (std::size_t i = 0; i < problem.rows(); ++i) {
    out << "r" << i << ":";
    for (const auto& a : problem.a_eq[i]) out << " " << to_string(a);
    out << " = " << to_string(problem.b_eq[i]) << "\n";
  }
  for (std::size_t j = 0; j < problem.variables(); ++j) {
    const auto lo = problem.lower_bound(j);
    const auto hi = problem.upper_bound(j);
    out << "x" << j << " in " << (lo ? "[" + to_string(*lo) : std::string("(-inf")) << ", "
        << (hi ? to_string(*hi) + "]" : std::string("+inf)")) << "\n";
  }
  return out.str();
}

}  // namespace kminor
