#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kminor/rational.hpp"

namespace kminor {

enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus status);

/// optimise c^T x  subject to  A x = b,  lower <= x <= upper.
///
/// An empty `lower` means every variable is nonnegative; an empty `upper`
/// means none is bounded above. A disengaged entry is an infinite bound.
struct LpProblem {
  Sense sense = Sense::minimize;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> a_eq;
  std::vector<Rational> b_eq;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;

  std::size_t variables() const noexcept { return objective.size(); }
  std::size_t rows() const noexcept { return a_eq.size(); }

  std::optional<Rational> lower_bound(std::size_t j) const {
    return lower.empty() ? std::optional<Rational>(Rational(0)) : lower[j];
  }
  std::optional<Rational> upper_bound(std::size_t j) const {
    return upper.empty() ? std::nullopt : upper[j];
  }

  /// Throws an input error on inconsistent dimensions.
  void validate() const;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;
  Rational objective_value;
  /// Original-variable indices of the final basis, one per non-redundant row.
  std::vector<std::size_t> basis;
  std::size_t iterations = 0;
};

struct SolveOptions {
  std::size_t iteration_cap = 1'000'000;
};

/// Two-phase dense-tableau primal simplex with Bland's rule, exact throughout.
/// Bounded variables are handled natively (nonbasic at lower or upper bound).
/// Infeasible and unbounded programs are statuses; exceeding the iteration
/// cap throws a budget error.
LpSolution solve(const LpProblem& problem, const SolveOptions& options = {});

struct Certificate {
  bool pass = false;
  std::string violation;  // empty on pass

  explicit operator bool() const noexcept { return pass; }
};

/// Independent audit: primal feasibility, objective value, and dual
/// feasibility of the reported basis (hence optimality).
Certificate certify(const LpProblem& problem, const LpSolution& solution);

/// Feasibility of `x` plus c^T x == `optimum`. With a certified optimum this
/// proves `x` optimal without needing a basis.
Certificate certify_point(const LpProblem& problem, const std::vector<Rational>& x, const Rational& optimum);

/// Plain-text dump with exact fractions.
std::string dump(const LpProblem& problem);

}  // namespace kminor
