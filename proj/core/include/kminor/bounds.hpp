#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kminor/graph.hpp"
#include "kminor/lp.hpp"
#include "kminor/mesh_polynomial.hpp"
#include "kminor/rational.hpp"
#include "kminor/spectrum.hpp"

namespace kminor {

// ---------------------------------------------------------------------------
// Minor and alternating polynomials

/// Variables hold p(theta_d), ..., p(theta_1) in that order (x_0 = 1 is
/// folded into the right-hand side); one row f[theta_0..theta_m] = 0 for each
/// m = k+1..d.
LpProblem build_minor_lp(const Spectrum& spectrum, int k);

struct MinorResult {
  MeshPolynomial poly;
  /// Psi(p_k) = sum_i m_i p_k(theta_i).
  Rational trace;
  LpProblem problem;
  LpSolution solution;
};

/// The k-minor polynomial, 0 <= k <= d.
MinorResult minor_polynomial(const Spectrum& spectrum, int k, const SolveOptions& options = {});

/// Maps an LP vector of build_minor_lp back to mesh values (x_0 = 1 first).
std::vector<Rational> minor_values_from_lp(const Spectrum& spectrum, const std::vector<Rational>& x);
std::vector<Rational> minor_lp_from_values(const Spectrum& spectrum, const std::vector<Rational>& values);

/// sum_i m_i p(theta_i) for p(theta_0) = 1 and p(theta_i) >= 0; otherwise an
/// inapplicable error naming the offending mesh point.
Rational bound_from_polynomial(const Spectrum& spectrum, const MeshPolynomial& p);

/// Variables x_0..x_d in mesh order, x_0 free, |x_i| <= 1 for i >= 1.
LpProblem build_alternating_lp(const Spectrum& spectrum, int k);

struct AlternatingResult {
  MeshPolynomial poly;
  /// P_k(theta_0).
  Rational value;
  LpProblem problem;
  LpSolution solution;
};

/// The k-alternating polynomial, 0 <= k <= d-1 (unbounded at k = d).
AlternatingResult alternating_polynomial(const Spectrum& spectrum, int k, const SolveOptions& options = {});

// ---------------------------------------------------------------------------
// Closed walks

/// Diagonals of A^0..A^k_max.
struct WalkProfile {
  enum class Source { spectral, matrix_power };

  Source source = Source::spectral;
  int k_max = 0;
  /// diag[j][u] = (A^j)_uu; the spectral source keeps one common value per j.
  std::vector<std::vector<Rational>> diag;

  Rational w(int k) const;          // min_u (A^k)_uu
  Rational W(int k) const;          // max_u (A^k)_uu
  Rational W_tilde(int k) const;    // max_u sum_{j=1..k} (A^j)_uu
  Rational W_sum(int k) const;      // max_u sum_{j=0..k} (A^j)_uu
  /// Smallest j <= k at which diag(A^j) is not constant.
  std::optional<int> first_irregular(int k) const;
};

/// Exact integer powers applied vertex by vertex.
WalkProfile walk_profile(const Graph& g, int k_max);

/// (1/n) sum_i m_i theta_i^j. Valid only for walk-regular graphs, which the
/// caller attests; a spectrum that is not regular or whose moments are not
/// nonnegative integers is rejected.
WalkProfile walk_profile(const Spectrum& spectrum, int k_max);

// ---------------------------------------------------------------------------
// Bounds

enum class Method {
  cvetkovic,
  hoffman,
  fiol_alternating,
  act_cvetkovic_like,
  act_hoffman_like,
  acf_k2,
  acf_odd,
  acf_even,
  acf_walkreg,
  minor,
};

const char* to_string(Method method);
/// Short label used as the row heading in tables.
const char* label(Method method);
std::vector<Method> all_methods();

struct BoundEntry {
  Method method = Method::minor;
  int k = 0;
  std::optional<Rational> raw;
  std::optional<Integer> floor;
  bool applicable = true;
  std::string note;
};

/// What is known about the graph behind a spectrum.
struct BoundContext {
  Spectrum spectrum;
  std::string id;
  /// When present, walk counts come from the graph and walk-regularity is checked.
  std::optional<Graph> graph;
  /// Caller attests walk-regularity (e.g. a distance-regular family).
  bool walk_regular = false;
};

/// Context for a named family: closed-form spectrum, walk-regular attested.
BoundContext family_context(const FamilyTag& family);

BoundEntry cvetkovic_bound(const BoundContext& ctx);
BoundEntry hoffman_bound(const BoundContext& ctx);
BoundEntry fiol_bound(const BoundContext& ctx, int k);
BoundEntry act_cvetkovic_bound(const BoundContext& ctx, int k);
BoundEntry act_hoffman_bound(const BoundContext& ctx, int k);
BoundEntry acf_k2_bound(const BoundContext& ctx);
BoundEntry acf_odd_bound(const BoundContext& ctx, int k);
BoundEntry acf_even_bound(const BoundContext& ctx, int k);
BoundEntry acf_walkreg_bound(const BoundContext& ctx, int k);
BoundEntry minor_bound(const BoundContext& ctx, int k);

/// Every method defined at k (cvetkovic/hoffman at k = 1 only, acf_k2 at
/// k = 2, acf_odd/acf_even at k > 2 by parity).
std::vector<BoundEntry> classic_bounds(const BoundContext& ctx, int k);

struct BoundReport {
  std::string graph_id;
  std::vector<int> ks;
  std::vector<BoundEntry> entries;
  /// Exact alpha_k per k when the oracle was run.
  std::vector<std::pair<int, Integer>> exact;

  const BoundEntry* find(Method method, int k) const;
};

BoundReport evaluate_bounds(const BoundContext& ctx, std::span<const int> ks);

// ---------------------------------------------------------------------------
// Antipodal distance-regular graphs and odd graphs

struct AntipodalBound {
  /// 1 + m_1 pi_1 / pi_0.
  Rational theta1_form;
  /// 1 + m_d pi_d / pi_0, odd d only.
  std::optional<Rational> thetad_form;
  /// Multiplicities match the r-antipodal pattern.
  bool pattern_ok = false;
  std::string note;
};

/// pi_i = prod_{j != i} |theta_i - theta_j|.
Rational mesh_gap_product(const Spectrum& spectrum, int i);

AntipodalBound antipodal_bound(const Spectrum& spectrum, int r);

struct OddGraphReport {
  int ell = 0;
  long n = 0;
  Rational alpha1;            // Hoffman form
  Rational alpha2;            // distance-k eigenvalue form
  Rational perfect_code_size; // n / (ell + 1)
  bool perfect_code_excluded = false;
  Rational alpha_d_minus_1;   // 1 + m_1 pi_1 / pi_0 for k = ell - 2
  /// minor bound for k = 1..d.
  std::vector<Rational> minor;
};

OddGraphReport odd_graph_suite(int ell);

}  // namespace kminor
