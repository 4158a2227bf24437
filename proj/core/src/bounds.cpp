#include "kminor/bounds.hpp"

#include <algorithm>
#include <limits>

#include "kminor/error.hpp"

namespace kminor {

namespace {

/// Coefficients of f[theta_0..theta_m] as a linear form in the values.
std::vector<Rational> divided_difference_row(const Spectrum& spectrum, int m) {
  std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    Rational denom(1);
    for (int l = 0; l <= m; ++l) {
      if (l != j) denom *= spectrum.theta(j) - spectrum.theta(l);
    }
    row[j] = 1 / denom;
  }
  return row;
}

void require_k(const Spectrum& spectrum, int k, int max_k) {
  if (k < 0 || k > max_k) {
    throw input_error("k = " + std::to_string(k) + " outside [0, " + std::to_string(max_k) + "] for spectrum " +
                      spectrum.to_string());
  }
}

Rational geometric_sum(const Rational& base, int from, int to) {
  Rational total(0);
  Rational power = pow(base, static_cast<unsigned>(from));
  for (int j = from; j <= to; ++j) {
    total += power;
    power *= base;
  }
  return total;
}

Rational as_rational(long value) { return Rational(value); }

}  // namespace

// ---------------------------------------------------------------------------
// Minor and alternating polynomials

LpProblem build_minor_lp(const Spectrum& spectrum, int k) {
  const int d = spectrum.d();
  require_k(spectrum, k, d);
  LpProblem lp;
  lp.sense = Sense::minimize;
  lp.objective.resize(d);
  for (int c = 0; c < d; ++c) lp.objective[c] = as_rational(spectrum.mult(d - c));
  for (int m = k + 1; m <= d; ++m) {
    const auto coef = divided_difference_row(spectrum, m);
    std::vector<Rational> row(d, Rational(0));
    for (int c = 0; c < d; ++c) {
      const int i = d - c;
      if (i <= m) row[c] = coef[i];
    }
    lp.a_eq.push_back(std::move(row));
    lp.b_eq.push_back(-coef[0]);
  }
  return lp;
}

std::vector<Rational> minor_values_from_lp(const Spectrum& spectrum, const std::vector<Rational>& x) {
  const int d = spectrum.d();
  std::vector<Rational> values(d + 1);
  values[0] = 1;
  for (int c = 0; c < d; ++c) values[d - c] = x[c];
  return values;
}

std::vector<Rational> minor_lp_from_values(const Spectrum& spectrum, const std::vector<Rational>& values) {
  const int d = spectrum.d();
  std::vector<Rational> x(d);
  for (int c = 0; c < d; ++c) x[c] = values[d - c];
  return x;
}

MinorResult minor_polynomial(const Spectrum& spectrum, int k, const SolveOptions& options) {
  auto problem = build_minor_lp(spectrum, k);
  auto solution = solve(problem, options);
  if (solution.status != LpStatus::optimal) {
    // The Hoffman point is always feasible and the objective is bounded below by 0.
    throw numeric_error(std::string("minor LP reported ") + to_string(solution.status) + " for k = " +
                        std::to_string(k));
  }
  MeshPolynomial poly(spectrum, minor_values_from_lp(spectrum, solution.x));
  Rational psi = trace(poly);
  return {std::move(poly), std::move(psi), std::move(problem), std::move(solution)};
}

Rational bound_from_polynomial(const Spectrum& spectrum, const MeshPolynomial& p) {
  if (!(p.mesh() == spectrum)) throw input_error("polynomial lives on a different mesh");
  if (p.value(0) != 1) {
    throw inapplicable_error("p(theta_0 = " + to_string(spectrum.theta(0)) + ") = " + to_string(p.value(0)) +
                             ", expected 1");
  }
  for (int i = 1; i <= spectrum.d(); ++i) {
    if (p.value(i) < 0) {
      throw inapplicable_error("p(theta_" + std::to_string(i) + " = " + to_string(spectrum.theta(i)) + ") = " +
                               to_string(p.value(i)) + " is negative");
    }
  }
  return trace(p);
}

LpProblem build_alternating_lp(const Spectrum& spectrum, int k) {
  const int d = spectrum.d();
  require_k(spectrum, k, d);
  LpProblem lp;
  lp.sense = Sense::maximize;
  lp.objective.assign(d + 1, Rational(0));
  lp.objective[0] = 1;
  lp.lower.assign(d + 1, Rational(-1));
  lp.upper.assign(d + 1, Rational(1));
  lp.lower[0] = std::nullopt;
  lp.upper[0] = std::nullopt;
  for (int m = k + 1; m <= d; ++m) {
    auto coef = divided_difference_row(spectrum, m);
    coef.resize(d + 1, Rational(0));
    lp.a_eq.push_back(std::move(coef));
    lp.b_eq.push_back(Rational(0));
  }
  return lp;
}

AlternatingResult alternating_polynomial(const Spectrum& spectrum, int k, const SolveOptions& options) {
  auto problem = build_alternating_lp(spectrum, k);
  auto solution = solve(problem, options);
  if (solution.status == LpStatus::unbounded) {
    throw inapplicable_error("alternating LP is unbounded for k = " + std::to_string(k) + " (needs k < d = " +
                             std::to_string(spectrum.d()) + ")");
  }
  if (solution.status != LpStatus::optimal) {
    throw numeric_error(std::string("alternating LP reported ") + to_string(solution.status));
  }
  MeshPolynomial poly(spectrum, solution.x);
  Rational value = solution.x[0];
  return {std::move(poly), std::move(value), std::move(problem), std::move(solution)};
}

// ---------------------------------------------------------------------------
// Closed walks

namespace {

const std::vector<Rational>& diag_row(const WalkProfile& profile, int k) {
  if (k < 0 || k > profile.k_max) {
    throw input_error("walk profile holds powers up to " + std::to_string(profile.k_max) + ", asked for " +
                      std::to_string(k));
  }
  return profile.diag[k];
}

template <class Reduce>
Rational reduce_sums(const WalkProfile& profile, int from, int k, Reduce better) {
  diag_row(profile, k);
  const std::size_t vertices = profile.diag[0].size();
  Rational best;
  for (std::size_t u = 0; u < vertices; ++u) {
    Rational total(0);
    for (int j = from; j <= k; ++j) total += profile.diag[j][u];
    if (u == 0 || better(total, best)) best = total;
  }
  return best;
}

}  // namespace

Rational WalkProfile::w(int k) const {
  const auto& row = diag_row(*this, k);
  return *std::min_element(row.begin(), row.end());
}

Rational WalkProfile::W(int k) const {
  const auto& row = diag_row(*this, k);
  return *std::max_element(row.begin(), row.end());
}

Rational WalkProfile::W_tilde(int k) const {
  return reduce_sums(*this, 1, k, [](const Rational& a, const Rational& b) { return a > b; });
}

Rational WalkProfile::W_sum(int k) const {
  return reduce_sums(*this, 0, k, [](const Rational& a, const Rational& b) { return a > b; });
}

std::optional<int> WalkProfile::first_irregular(int k) const {
  for (int j = 0; j <= std::min(k, k_max); ++j) {
    const auto& row = diag[j];
    for (const auto& value : row) {
      if (value != row[0]) return j;
    }
  }
  return std::nullopt;
}

WalkProfile walk_profile(const Graph& g, int k_max) {
  if (k_max < 0) throw input_error("k_max must be nonnegative");
  const std::size_t n = g.order();
  WalkProfile profile;
  profile.source = WalkProfile::Source::matrix_power;
  profile.k_max = k_max;
  profile.diag.assign(k_max + 1, std::vector<Rational>(n, Rational(0)));

  std::vector<long> current(n), next(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(current.begin(), current.end(), 0);
    current[u] = 1;
    profile.diag[0][u] = 1;
    for (int j = 1; j <= k_max; ++j) {
      for (std::size_t v = 0; v < n; ++v) {
        long total = 0;
        for (auto w : g.neighbors(v)) {
          if (__builtin_add_overflow(total, current[w], &total)) {
            throw numeric_error("closed-walk count overflows 64 bits at power " + std::to_string(j));
          }
        }
        next[v] = total;
      }
      std::swap(current, next);
      profile.diag[j][u] = as_rational(current[u]);
    }
  }
  return profile;
}

WalkProfile walk_profile(const Spectrum& spectrum, int k_max) {
  if (k_max < 0) throw input_error("k_max must be nonnegative");
  if (!spectrum.regular()) throw inapplicable_error("spectral walk profile needs a regular spectrum");
  WalkProfile profile;
  profile.source = WalkProfile::Source::spectral;
  profile.k_max = k_max;
  for (int j = 0; j <= k_max; ++j) {
    Rational mean = spectrum.mean_closed_walks(static_cast<unsigned>(j));
    if (!is_integer(mean) || mean < 0) {
      throw inapplicable_error("mean closed-walk count of length " + std::to_string(j) + " is " + to_string(mean) +
                               ", not a nonnegative integer; the spectrum is not walk-regular");
    }
    profile.diag.push_back({std::move(mean)});
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Bounds

const char* to_string(Method method) {
  switch (method) {
    case Method::cvetkovic: return "cvetkovic";
    case Method::hoffman: return "hoffman";
    case Method::fiol_alternating: return "fiol_alternating";
    case Method::act_cvetkovic_like: return "act_cvetkovic_like";
    case Method::act_hoffman_like: return "act_hoffman_like";
    case Method::acf_k2: return "acf_k2";
    case Method::acf_odd: return "acf_odd";
    case Method::acf_even: return "acf_even";
    case Method::acf_walkreg: return "acf_walkreg";
    case Method::minor: return "minor";
  }
  return "?";
}

const char* label(Method method) {
  switch (method) {
    case Method::cvetkovic: return "Cvetkovic inertia";
    case Method::hoffman: return "Hoffman ratio";
    case Method::fiol_alternating: return "Alternating polynomial 2n/(P_k(theta_0)+1)";
    case Method::act_cvetkovic_like: return "ACT Cvetkovic-like";
    case Method::act_hoffman_like: return "ACT Hoffman-like";
    case Method::acf_k2: return "ACF k=2";
    case Method::acf_odd: return "ACF odd k";
    case Method::acf_even: return "ACF even k";
    case Method::acf_walkreg: return "ACF walk-regular q_k";
    case Method::minor: return "Minor polynomial trace";
  }
  return "?";
}

std::vector<Method> all_methods() {
  return {Method::cvetkovic,      Method::hoffman,        Method::fiol_alternating, Method::act_cvetkovic_like,
          Method::act_hoffman_like, Method::acf_k2,       Method::acf_odd,          Method::acf_even,
          Method::acf_walkreg,    Method::minor};
}

namespace {

/// Relative slack when flooring values computed from a rounded (inexact) mesh.
const Rational kInexactFloorSlack(1, 1'000'000'000);

BoundEntry make_entry(const Spectrum& spectrum, Method method, int k, Rational raw, bool applicable = true,
                      std::string note = {}) {
  BoundEntry e;
  e.method = method;
  e.k = k;
  if (spectrum.exact()) {
    e.floor = floor(raw);
  } else {
    const Rational scale = std::max(Rational(1), abs(raw));
    e.floor = floor(raw + kInexactFloorSlack * scale);
    if (!note.empty()) note += "; ";
    note += "inexact spectrum: floored with 1e-9 relative slack";
  }
  e.raw = std::move(raw);
  e.applicable = applicable;
  e.note = std::move(note);
  return e;
}

BoundEntry missing_entry(Method method, int k, std::string note) {
  BoundEntry e;
  e.method = method;
  e.k = k;
  e.applicable = false;
  e.note = std::move(note);
  return e;
}

const char* kNotRegular = "requires a regular graph";

struct ProfileLookup {
  std::optional<WalkProfile> profile;
  std::string why_missing;
};

/// Walk counts up to k from the graph if one is present, else from the spectrum
/// when walk-regularity is attested (or implied, for k <= 2 on regular spectra).
ProfileLookup profile_for(const BoundContext& ctx, int k) {
  if (ctx.graph) return {walk_profile(*ctx.graph, k), {}};
  const bool implied = k <= 1 || (k == 2 && ctx.spectrum.regular());
  if (!ctx.walk_regular && !implied) {
    return {std::nullopt, "needs closed-walk counts: supply a graph or attest walk-regularity"};
  }
  try {
    return {walk_profile(ctx.spectrum, k), {}};
  } catch (const Error& e) {
    return {std::nullopt, e.what()};
  }
}

/// Whether the graph is k-partially walk-regular, with a reason when it is not.
std::pair<bool, std::string> partially_walk_regular(const BoundContext& ctx, int k) {
  if (ctx.graph) {
    const auto bad = walk_profile(*ctx.graph, k).first_irregular(k);
    if (bad) return {false, "not " + std::to_string(k) + "-partially walk-regular (diag A^" + std::to_string(*bad) +
                                " varies)"};
    return {true, {}};
  }
  if (ctx.walk_regular || k <= 1 || (k == 2 && ctx.spectrum.regular())) return {true, {}};
  return {false, "requires " + std::to_string(k) + "-partial walk-regularity (not attested)"};
}

}  // namespace

BoundContext family_context(const FamilyTag& family) {
  return {spectrum_closed_form(family), family.name(), std::nullopt, true};
}

BoundEntry cvetkovic_bound(const BoundContext& ctx) {
  const auto& s = ctx.spectrum;
  long nonneg = 0, nonpos = 0;
  for (int i = 0; i <= s.d(); ++i) {
    if (s.theta(i) >= 0) nonneg += s.mult(i);
    if (s.theta(i) <= 0) nonpos += s.mult(i);
  }
  return make_entry(ctx.spectrum, Method::cvetkovic, 1, as_rational(std::min(nonneg, nonpos)));
}

BoundEntry hoffman_bound(const BoundContext& ctx) {
  const auto& s = ctx.spectrum;
  if (s.d() < 1) return missing_entry(Method::hoffman, 1, "needs at least two distinct eigenvalues");
  Rational raw = Rational(s.n()) * (-s.theta(s.d())) / (s.theta(0) - s.theta(s.d()));
  const bool regular = s.regular();
  return make_entry(ctx.spectrum, Method::hoffman, 1, std::move(raw), regular, regular ? "" : kNotRegular);
}

BoundEntry fiol_bound(const BoundContext& ctx, int k) {
  const auto& s = ctx.spectrum;
  if (k < 0 || k >= s.d()) {
    return missing_entry(Method::fiol_alternating, k, "defined for 0 <= k <= d-1");
  }
  const auto alt = alternating_polynomial(s, k);
  Rational raw = 2 * Rational(s.n()) / (alt.value + 1);
  const bool regular = s.regular();
  return make_entry(ctx.spectrum, Method::fiol_alternating, k, std::move(raw), regular,
                    "P_k(theta_0) = " + to_string(alt.value) + (regular ? "" : std::string("; ") + kNotRegular));
}

BoundEntry act_cvetkovic_bound(const BoundContext& ctx, int k) {
  auto lookup = profile_for(ctx, k);
  if (!lookup.profile) return missing_entry(Method::act_cvetkovic_like, k, lookup.why_missing);
  const auto& s = ctx.spectrum;
  const Rational wk = lookup.profile->w(k);
  const Rational Wk = lookup.profile->W(k);
  long above = 0, below = 0;
  for (int i = 0; i <= s.d(); ++i) {
    const Rational power = pow(s.theta(i), static_cast<unsigned>(k));
    if (power >= wk) above += s.mult(i);
    if (power <= Wk) below += s.mult(i);
  }
  return make_entry(ctx.spectrum, Method::act_cvetkovic_like, k, as_rational(std::min(above, below)), true,
                    "w_k = " + to_string(wk) + ", W_k = " + to_string(Wk));
}

BoundEntry act_hoffman_bound(const BoundContext& ctx, int k) {
  const auto& s = ctx.spectrum;
  if (s.d() < 1) return missing_entry(Method::act_hoffman_like, k, "needs at least two distinct eigenvalues");
  auto lookup = profile_for(ctx, k);
  if (!lookup.profile) return missing_entry(Method::act_hoffman_like, k, lookup.why_missing);
  const Rational theta = std::max(abs(s.theta(1)), abs(s.theta(s.d())));
  const Rational& delta = s.theta(0);
  const Rational theta_sum = geometric_sum(theta, 1, k);
  const Rational Wt = lookup.profile->W_tilde(k);
  Rational raw = Rational(s.n()) * (Wt + theta_sum) / (geometric_sum(delta, 1, k) + theta_sum);
  const bool regular = s.regular();
  return make_entry(ctx.spectrum, Method::act_hoffman_like, k, std::move(raw), regular,
                    "W~_k = " + to_string(Wt) + ", theta = " + to_string(theta) +
                        (regular ? "" : std::string("; ") + kNotRegular));
}

BoundEntry acf_k2_bound(const BoundContext& ctx) {
  const auto& s = ctx.spectrum;
  int i = -1;
  for (int j = 0; j <= s.d(); ++j) {
    if (s.theta(j) <= -1) {
      i = j;
      break;
    }
  }
  if (i < 1) return missing_entry(Method::acf_k2, 2, "no eigenvalue <= -1 below theta_0");
  const Rational& t0 = s.theta(0);
  const Rational& ti = s.theta(i);
  const Rational& tp = s.theta(i - 1);
  Rational raw = Rational(s.n()) * (t0 + ti * tp) / ((t0 - ti) * (t0 - tp));
  const bool regular = s.regular();
  return make_entry(ctx.spectrum, Method::acf_k2, 2, std::move(raw), regular,
                    "theta_i = " + to_string(ti) + (regular ? "" : std::string("; ") + kNotRegular));
}

namespace {

std::string alternative_w_note(const BoundContext& ctx, const WalkProfile& profile, int k,
                               const Rational& numerator_shift, const Rational& denominator) {
  // The j = 1..k reading of W_k, for comparison.
  const Rational alt = Rational(ctx.spectrum.n()) * (profile.W_tilde(k) + numerator_shift) / denominator;
  return "W_k = max_u sum_{j=0..k} (A^j)_uu = " + to_string(profile.W_sum(k)) + "; with j=1..k: " + to_string(alt) +
         " (floor " + floor(alt).get_str() + ")";
}

}  // namespace

BoundEntry acf_odd_bound(const BoundContext& ctx, int k) {
  if (k <= 2 || k % 2 == 0) return missing_entry(Method::acf_odd, k, "defined for odd k > 2");
  auto lookup = profile_for(ctx, k);
  if (!lookup.profile) return missing_entry(Method::acf_odd, k, lookup.why_missing);
  const auto& s = ctx.spectrum;
  const Rational td_sum = geometric_sum(s.theta(s.d()), 0, k);
  const Rational denominator = geometric_sum(s.theta(0), 0, k) - td_sum;
  Rational raw = Rational(s.n()) * (lookup.profile->W_sum(k) - td_sum) / denominator;
  const bool regular = s.regular();
  std::string note = alternative_w_note(ctx, *lookup.profile, k, -td_sum, denominator);
  if (!regular) note += std::string("; ") + kNotRegular;
  return make_entry(ctx.spectrum, Method::acf_odd, k, std::move(raw), regular, std::move(note));
}

BoundEntry acf_even_bound(const BoundContext& ctx, int k) {
  if (k <= 2 || k % 2 != 0) return missing_entry(Method::acf_even, k, "defined for even k > 2");
  auto lookup = profile_for(ctx, k);
  if (!lookup.profile) return missing_entry(Method::acf_even, k, lookup.why_missing);
  const auto& s = ctx.spectrum;
  const Rational half(1, 2);
  const Rational denominator = geometric_sum(s.theta(0), 0, k) + half;
  Rational raw = Rational(s.n()) * (lookup.profile->W_sum(k) + half) / denominator;
  const bool regular = s.regular();
  std::string note = alternative_w_note(ctx, *lookup.profile, k, half, denominator);
  if (!regular) note += std::string("; ") + kNotRegular;
  return make_entry(ctx.spectrum, Method::acf_even, k, std::move(raw), regular, std::move(note));
}

BoundEntry acf_walkreg_bound(const BoundContext& ctx, int k) {
  const auto& s = ctx.spectrum;
  if (k < 1 || k > s.d()) return missing_entry(Method::acf_walkreg, k, "defined for 1 <= k <= d");
  if (s.d() < 2) return missing_entry(Method::acf_walkreg, k, "needs at least three distinct eigenvalues");
  const auto q = partial_sums(predistance(s)).polys[k];
  Rational lambda = q.value(2);
  for (int i = 3; i <= s.d(); ++i) lambda = std::min(lambda, q.value(i));
  Rational raw = Rational(s.n()) * (1 - lambda) / (q.value(0) - lambda);
  auto [walk_regular, why] = partially_walk_regular(ctx, s.d());
  const bool applicable = walk_regular && s.connected_regular();
  std::string note = "lambda(q_k) = " + to_string(lambda);
  if (!walk_regular) note += "; requires a walk-regular graph";
  if (!s.connected_regular()) note += "; requires a connected regular graph";
  return make_entry(ctx.spectrum, Method::acf_walkreg, k, std::move(raw), applicable, std::move(note));
}

BoundEntry minor_bound(const BoundContext& ctx, int k) {
  const auto result = minor_polynomial(ctx.spectrum, k);
  auto [ok, why] = partially_walk_regular(ctx, k);
  return make_entry(ctx.spectrum, Method::minor, k, result.trace, ok, why);
}

std::vector<BoundEntry> classic_bounds(const BoundContext& ctx, int k) {
  std::vector<BoundEntry> out;
  if (k == 1) {
    out.push_back(cvetkovic_bound(ctx));
    out.push_back(hoffman_bound(ctx));
  }
  if (k >= 1 && k < ctx.spectrum.d()) out.push_back(fiol_bound(ctx, k));
  if (k >= 1) {
    out.push_back(act_cvetkovic_bound(ctx, k));
    out.push_back(act_hoffman_bound(ctx, k));
  }
  if (k == 2) out.push_back(acf_k2_bound(ctx));
  if (k > 2 && k % 2 == 1) out.push_back(acf_odd_bound(ctx, k));
  if (k > 2 && k % 2 == 0) out.push_back(acf_even_bound(ctx, k));
  if (k >= 1 && k <= ctx.spectrum.d() && ctx.spectrum.d() >= 2) out.push_back(acf_walkreg_bound(ctx, k));
  return out;
}

const BoundEntry* BoundReport::find(Method method, int k) const {
  for (const auto& e : entries) {
    if (e.method == method && e.k == k) return &e;
  }
  return nullptr;
}

BoundReport evaluate_bounds(const BoundContext& ctx, std::span<const int> ks) {
  BoundReport report;
  report.graph_id = ctx.id;
  for (int k : ks) {
    require_k(ctx.spectrum, k, ctx.spectrum.d());
    report.ks.push_back(k);
    for (auto& e : classic_bounds(ctx, k)) report.entries.push_back(std::move(e));
    report.entries.push_back(minor_bound(ctx, k));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Antipodal distance-regular graphs and odd graphs

Rational mesh_gap_product(const Spectrum& spectrum, int i) {
  Rational product(1);
  for (int j = 0; j <= spectrum.d(); ++j) {
    if (j != i) product *= abs(spectrum.theta(i) - spectrum.theta(j));
  }
  return product;
}

AntipodalBound antipodal_bound(const Spectrum& spectrum, int r) {
  const int d = spectrum.d();
  if (d < 1) throw input_error("antipodal bound needs d >= 1");
  if (r < 2) throw input_error("fibre size r must be at least 2");
  const Rational pi0 = mesh_gap_product(spectrum, 0);
  AntipodalBound out;
  out.theta1_form = 1 + Rational(spectrum.mult(1)) * mesh_gap_product(spectrum, 1) / pi0;
  if (d % 2 == 1) out.thetad_form = 1 + Rational(spectrum.mult(d)) * mesh_gap_product(spectrum, d) / pi0;
  out.pattern_ok = true;
  for (int i = 0; i <= d; ++i) {
    const Rational expected = (i % 2 == 0 ? Rational(1) : Rational(r - 1)) * pi0 / mesh_gap_product(spectrum, i);
    if (expected != Rational(spectrum.mult(i))) {
      out.pattern_ok = false;
      out.note = "m_" + std::to_string(i) + " = " + std::to_string(spectrum.mult(i)) + ", r-antipodal pattern needs " +
                 to_string(expected);
      break;
    }
  }
  return out;
}

OddGraphReport odd_graph_suite(int ell) {
  if (ell < 3) throw input_error("odd graph suite needs ell >= 3");
  const auto ctx = family_context(FamilyTag::odd(ell));
  const auto& s = ctx.spectrum;
  OddGraphReport out;
  out.ell = ell;
  out.n = s.n();
  out.alpha1 = *hoffman_bound(ctx).raw;
  out.alpha2 = *acf_k2_bound(ctx).raw;
  out.perfect_code_size = Rational(s.n()) / (ell + 1);
  out.perfect_code_excluded = out.alpha2 < out.perfect_code_size;
  out.alpha_d_minus_1 = 1 + Rational(s.mult(1)) * mesh_gap_product(s, 1) / mesh_gap_product(s, 0);
  for (int k = 1; k <= s.d(); ++k) out.minor.push_back(minor_polynomial(s, k).trace);
  return out;
}

}  // namespace kminor
