#include <doctest.h>

#include <optional>
#include <random>

#include "kminor/bounds.hpp"
#include "kminor/error.hpp"
#include "kminor/lp.hpp"

using namespace kminor;

namespace {

/// Solves the square system M y = r; nullopt when singular.
std::optional<std::vector<Rational>> gauss(std::vector<std::vector<Rational>> m, std::vector<Rational> r) {
  const std::size_t n = r.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[row][c] -= f * m[col][c];
      r[row] -= f * r[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) r[i] /= m[i][i];
  return r;
}

/// Optimum over all vertices: choose m basic columns, fix every other
/// variable at one of its finite bounds, solve, keep the feasible points.
/// Returns nullopt when no vertex is feasible.
std::optional<Rational> brute_force_optimum(const LpProblem& original) {
  // Row-reduce [A | b] so the remaining rows are independent.
  LpProblem p = original;
  p.a_eq.clear();
  p.b_eq.clear();
  {
    auto a = original.a_eq;
    auto b = original.b_eq;
    const std::size_t cols = original.variables();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
      std::size_t piv = rank;
      while (piv < a.size() && a[piv][col] == 0) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[piv], a[rank]);
      std::swap(b[piv], b[rank]);
      for (std::size_t r = rank + 1; r < a.size(); ++r) {
        const Rational f = a[r][col] / a[rank][col];
        for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[rank][c];
        b[r] -= f * b[rank];
      }
      ++rank;
    }
    for (std::size_t r = rank; r < a.size(); ++r) {
      if (b[r] != 0) return std::nullopt;
    }
    a.resize(rank);
    b.resize(rank);
    p.a_eq = std::move(a);
    p.b_eq = std::move(b);
  }
  const std::size_t n = p.variables();
  const std::size_t m = p.rows();
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
    std::vector<std::size_t> basic, nonbasic;
    for (std::size_t j = 0; j < n; ++j) ((mask >> j) & 1U ? basic : nonbasic).push_back(j);
    for (std::uint32_t side = 0; side < (1U << nonbasic.size()); ++side) {
      std::vector<Rational> x(n);
      bool ok = true;
      for (std::size_t t = 0; t < nonbasic.size() && ok; ++t) {
        const auto j = nonbasic[t];
        const auto bound = (side >> t & 1U) ? p.upper_bound(j) : p.lower_bound(j);
        if (!bound) ok = false;
        else x[j] = *bound;
      }
      if (!ok) continue;
      std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m));
      std::vector<Rational> rhs(m);
      for (std::size_t i = 0; i < m; ++i) {
        rhs[i] = p.b_eq[i];
        for (auto j : nonbasic) rhs[i] -= p.a_eq[i][j] * x[j];
        for (std::size_t t = 0; t < m; ++t) mat[i][t] = p.a_eq[i][basic[t]];
      }
      const auto y = gauss(mat, rhs);
      if (!y) continue;
      for (std::size_t t = 0; t < m; ++t) x[basic[t]] = (*y)[t];
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (auto lo = p.lower_bound(j); lo && x[j] < *lo) ok = false;
        if (auto hi = p.upper_bound(j); hi && x[j] > *hi) ok = false;
      }
      if (!ok) continue;
      Rational value = 0;
      for (std::size_t j = 0; j < n; ++j) value += p.objective[j] * x[j];
      if (!best || (p.sense == Sense::minimize ? value < *best : value > *best)) best = value;
    }
  }
  return best;
}

LpProblem random_bounded_lp(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> vars(2, 6);
  LpProblem p;
  const std::size_t n = vars(rng);
  const std::size_t m = 1 + rng() % std::min<std::size_t>(3, n - 1);
  p.sense = rng() % 2 ? Sense::minimize : Sense::maximize;
  for (std::size_t j = 0; j < n; ++j) p.objective.emplace_back(entry(rng));
  // A known interior point keeps most instances feasible.
  std::vector<Rational> x0(n);
  for (auto& x : x0) x = Rational(static_cast<long>(rng() % 3));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(n);
    Rational b = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = Rational(entry(rng));
      b += row[j] * x0[j];
    }
    if (rng() % 5 == 0) b += 1;
    p.a_eq.push_back(row);
    p.b_eq.push_back(b);
  }
  // Every variable gets finite bounds so the program cannot be unbounded.
  for (std::size_t j = 0; j < n; ++j) {
    p.lower.emplace_back(Rational(-static_cast<long>(rng() % 3)));
    p.upper.emplace_back(Rational(2 + static_cast<long>(rng() % 3)));
  }
  return p;
}

LpProblem example_simple() {
  LpProblem p;
  p.objective = {1, 1};
  p.a_eq = {{1, 1}};
  p.b_eq = {1};
  return p;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("textbook examples") {
  const auto p = example_simple();
  const auto s = solve(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective_value == 1);
  CHECK(s.x == std::vector<Rational>{1, 0});
  CHECK(certify(p, s));

  LpProblem unbounded;
  unbounded.objective = {-1};
  CHECK(solve(unbounded).status == LpStatus::unbounded);

  LpProblem infeasible;
  infeasible.objective = {1, 1};
  infeasible.a_eq = {{1, 1}};
  infeasible.b_eq = {-1};
  CHECK(solve(infeasible).status == LpStatus::infeasible);
}

TEST_CASE("free and upper-bounded variables") {
  // max x0 s.t. x0 - x1 = 0, -1 <= x1 <= 1, x0 free.
  LpProblem p;
  p.sense = Sense::maximize;
  p.objective = {1, 0};
  p.a_eq = {{1, -1}};
  p.b_eq = {0};
  p.lower = {std::nullopt, Rational(-1)};
  p.upper = {std::nullopt, Rational(1)};
  const auto s = solve(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective_value == 1);
  CHECK(certify(p, s));
}

TEST_CASE("minor LP for the Hamming graph at k = 2") {
  const auto spec = spectrum_closed_form(FamilyTag::hamming(2, 7));
  const auto p = build_minor_lp(spec, 2);
  CHECK(p.rows() == 5);
  CHECK(p.variables() == 7);
  const auto s = solve(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(spec.mult(0) + s.objective_value == 16);
  CHECK(certify(p, s));
  std::size_t zeros = 0;
  for (const auto& x : s.x) zeros += x == 0 ? 1 : 0;
  CHECK(zeros >= 2);
}

TEST_CASE("tampered solutions fail certification") {
  const auto spec = spectrum_closed_form(FamilyTag::johnson(14, 7));
  for (int k = 1; k < spec.d(); ++k) {
    const auto p = build_minor_lp(spec, k);
    const auto s = solve(p);
    REQUIRE(certify(p, s));

    for (std::size_t j = 0; j < s.x.size(); ++j) {
      auto bad = s;
      bad.x[j] += Rational(1, 1000);
      const auto verdict = certify(p, bad);
      CHECK_FALSE(verdict);
      CHECK_FALSE(verdict.violation.empty());
    }
    auto bad_value = s;
    bad_value.objective_value += Rational(1, 1000);
    const auto verdict = certify(p, bad_value);
    CHECK_FALSE(verdict);
    CHECK(verdict.violation.find("objective") != std::string::npos);

    // A feasible but suboptimal basis fails the dual check.
    auto hoffman = s;
    hoffman.x.assign(s.x.size(), Rational(0));
    CHECK_FALSE(certify_point(p, hoffman.x, s.objective_value - 1));
  }
}

TEST_CASE("solver matches vertex enumeration") {
  std::mt19937_64 rng(12345);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_bounded_lp(rng);
    const auto expected = brute_force_optimum(p);
    const auto s = solve(p);
    if (!expected) {
      CHECK(s.status == LpStatus::infeasible);
      ++infeasible;
      continue;
    }
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == *expected);
    CHECK(certify(p, s));
    ++optimal;
  }
  CHECK(optimal > 100);
  CHECK(infeasible > 0);
}

TEST_CASE("nonnegative programs match vertex enumeration") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> entry(-3, 5);
  for (int trial = 0; trial < 200; ++trial) {
    LpProblem p;
    const std::size_t n = 3 + rng() % 4;
    const std::size_t m = 1 + rng() % 2;
    for (std::size_t j = 0; j < n; ++j) p.objective.emplace_back(entry(rng));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n);
      for (auto& a : row) a = Rational(entry(rng));
      p.a_eq.push_back(row);
      p.b_eq.emplace_back(static_cast<long>(rng() % 6));
    }
    const auto s = solve(p);
    const auto expected = brute_force_optimum(p);
    if (s.status == LpStatus::optimal) {
      REQUIRE(expected.has_value());
      CHECK(s.objective_value == *expected);
      CHECK(certify(p, s));
    } else if (s.status == LpStatus::infeasible) {
      CHECK_FALSE(expected.has_value());
    } else {
      // Unbounded: some vertex exists only if the program is feasible.
      CHECK(s.status == LpStatus::unbounded);
    }
  }
}

TEST_CASE("redundant and degenerate rows") {
  LpProblem p;
  p.objective = {1, 2, 3};
  p.a_eq = {{1, 1, 1}, {2, 2, 2}, {1, 0, -1}};
  p.b_eq = {2, 4, 0};
  const auto s = solve(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective_value == 4);
  CHECK(certify(p, s));
}

TEST_CASE("determinism") {
  const auto spec = spectrum_closed_form(FamilyTag::hamming(2, 7));
  const auto p = build_minor_lp(spec, 6);
  const auto first = solve(p);
  for (int run = 0; run < 5; ++run) {
    const auto again = solve(p);
    CHECK(again.basis == first.basis);
    CHECK(again.x == first.x);
    CHECK(again.iterations == first.iterations);
  }
}

TEST_CASE("malformed problems and caps") {
  LpProblem p = example_simple();
  p.b_eq.push_back(3);
  CHECK_THROWS_AS(solve(p), Error);
  const auto spec = spectrum_closed_form(FamilyTag::johnson(14, 7));
  SolveOptions tight;
  tight.iteration_cap = 1;
  CHECK_THROWS_AS(solve(build_minor_lp(spec, 1), tight), Error);
  CHECK(dump(example_simple()).find("1") != std::string::npos);
}

}
