#include "kminor/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kminor/error.hpp"

namespace kminor {

Spectrum::Spectrum(std::vector<Rational> theta, std::vector<long> mult, bool exact)
    : theta_(std::move(theta)), mult_(std::move(mult)), exact_(exact) {
  if (theta_.empty()) throw input_error("spectrum needs at least one eigenvalue");
  if (theta_.size() != mult_.size()) {
    throw input_error("spectrum has " + std::to_string(theta_.size()) + " eigenvalues but " +
                      std::to_string(mult_.size()) + " multiplicities");
  }
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] <= 0) {
      throw input_error("nonpositive multiplicity " + std::to_string(mult_[i]) + " at index " + std::to_string(i));
    }
    n_ += mult_[i];
  }
  for (std::size_t i = 1; i < theta_.size(); ++i) {
    if (!(theta_[i] < theta_[i - 1])) {
      throw input_error("eigenvalues must be strictly decreasing (index " + std::to_string(i) + ": " +
                        kminor::to_string(theta_[i - 1]) + " then " + kminor::to_string(theta_[i]) + ")");
    }
  }
}

Rational Spectrum::power_sum(unsigned j) const {
  Rational total(0);
  for (std::size_t i = 0; i < theta_.size(); ++i) total += Rational(mult_[i]) * pow(theta_[i], j);
  return total;
}

bool Spectrum::regular() const { return theta_[0] * Rational(n_) == power_sum(2); }

std::vector<Rational> Spectrum::eigenvalues() const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < theta_.size(); ++i) out.insert(out.end(), static_cast<std::size_t>(mult_[i]), theta_[i]);
  return out;
}

std::string Spectrum::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < theta_.size(); ++i) {
    if (i) out << ", ";
    out << (exact_ ? kminor::to_string(theta_[i]) : kminor::to_decimal(theta_[i], 9)) << "^" << mult_[i];
  }
  out << "}";
  return out.str();
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

long to_multiplicity(const Integer& value) {
  if (!value.fits_slong_p()) throw input_error("multiplicity exceeds 64-bit range");
  return value.get_si();
}

Spectrum sorted_spectrum(std::vector<std::pair<Rational, long>> pairs, bool exact) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Rational> theta;
  std::vector<long> mult;
  for (auto& [t, m] : pairs) {
    if (!theta.empty() && theta.back() == t) {
      mult.back() += m;
    } else {
      theta.push_back(t);
      mult.push_back(m);
    }
  }
  return Spectrum(std::move(theta), std::move(mult), exact);
}

}  // namespace

Spectrum spectrum_closed_form(const FamilyTag& family) {
  const auto& p = family.params;
  std::vector<std::pair<Rational, long>> pairs;
  bool exact = true;
  switch (family.kind) {
    case FamilyTag::Kind::hamming: {
      const long q = p[0], len = p[1];
      if (q < 2 || len < 1) throw input_error("hamming requires q >= 2 and len >= 1");
      for (long i = 0; i <= len; ++i) {
        Integer q1pow;
        mpz_ui_pow_ui(q1pow.get_mpz_t(), static_cast<unsigned long>(q - 1), static_cast<unsigned long>(i));
        pairs.emplace_back(Rational(len * (q - 1) - q * i), to_multiplicity(binomial(len, i) * q1pow));
      }
      break;
    }
    case FamilyTag::Kind::johnson: {
      const long v = p[0], k = p[1];
      if (k <= 0 || k >= v) throw input_error("johnson requires 0 < k < v");
      for (long j = 0; j <= std::min(k, v - k); ++j) {
        pairs.emplace_back(Rational((k - j) * (v - k - j) - j), to_multiplicity(binomial(v, j) - binomial(v, j - 1)));
      }
      break;
    }
    case FamilyTag::Kind::odd: {
      const long ell = p[0];
      if (ell < 2) throw input_error("odd graph requires ell >= 2");
      for (long i = 0; i < ell; ++i) {
        const long sign = (i % 2 == 0) ? 1 : -1;
        pairs.emplace_back(Rational(sign * (ell - i)),
                           to_multiplicity(binomial(2 * ell - 1, i) - binomial(2 * ell - 1, i - 1)));
      }
      break;
    }
    case FamilyTag::Kind::cycle: {
      const long n = p[0];
      if (n < 3) throw input_error("cycle requires n >= 3");
      for (long j = 0; 2 * j <= n; ++j) {
        const long m = (j == 0 || 2 * j == n) ? 1 : 2;
        // 2cos(2 pi j / n) is rational only at these angles.
        if (j == 0) {
          pairs.emplace_back(Rational(2), m);
        } else if (6 * j == n) {
          pairs.emplace_back(Rational(1), m);
        } else if (4 * j == n) {
          pairs.emplace_back(Rational(0), m);
        } else if (3 * j == n) {
          pairs.emplace_back(Rational(-1), m);
        } else if (2 * j == n) {
          pairs.emplace_back(Rational(-2), m);
        } else {
          exact = false;
          pairs.emplace_back(from_double(2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                                        static_cast<double>(n))),
                             m);
        }
      }
      break;
    }
    case FamilyTag::Kind::custom:
      throw input_error("closed-form spectrum unsupported: graph has no family tag");
  }
  return sorted_spectrum(std::move(pairs), exact);
}

Spectrum spectrum_closed_form(const Graph& g) { return spectrum_closed_form(g.family()); }

// ---------------------------------------------------------------------------
// Numeric eigensolve

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw input_error("matrix size does not match n");
  if (n == 0) return {};
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  std::vector<double> d(n, 0.0), e(n, 0.0);

  // Householder reduction to tridiagonal form.
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);

  // Implicit-shift QL on the tridiagonal matrix.
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  constexpr int kMaxIterations = 60;
  const double eps = std::numeric_limits<double>::epsilon();
  // Absolute floor for the deflation test; the relative test alone never
  // fires next to a cluster of zero eigenvalues.
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, std::abs(d[i]) + std::abs(e[i]));
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * std::max(dd, norm)) break;
      }
      if (m != l) {
        if (iter++ == kMaxIterations) {
          throw numeric_error("QL iteration did not converge for eigenvalue " + std::to_string(l) + " after " +
                              std::to_string(kMaxIterations) + " iterations");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t ii = m; ii-- > l;) {
          double f = s * e[ii];
          const double b = c * e[ii];
          e[ii + 1] = (r = std::hypot(f, g));
          if (r == 0.0) {
            d[ii + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[ii + 1] - p;
          r = (d[ii] - g) * s + 2.0 * c * b;
          d[ii + 1] = g + (p = s * r);
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Spectrum spectrum_numeric(const Graph& g, const NumericSpectrumOptions& options) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (const auto& e : g.edges()) {
    a[e.u * n + e.v] = 1.0;
    a[e.v * n + e.u] = 1.0;
  }
  const auto values = symmetric_eigenvalues(std::move(a), n);
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double tol = options.relative_tolerance * std::max(scale, 1.0);

  std::vector<std::pair<Rational, long>> pairs;
  bool exact = true;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double total = values[i];
    while (j < values.size() && values[j - 1] - values[j] <= tol) total += values[j++];
    const double mean = total / static_cast<double>(j - i);
    const double nearest = std::round(mean);
    if (options.snap_integers && std::abs(mean - nearest) <= tol) {
      pairs.emplace_back(Rational(static_cast<long>(nearest)), static_cast<long>(j - i));
    } else {
      exact = false;
      pairs.emplace_back(from_double(mean), static_cast<long>(j - i));
    }
    i = j;
  }
  return sorted_spectrum(std::move(pairs), exact);
}

// ---------------------------------------------------------------------------
// JSON

Spectrum parse_spectrum_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("spectrum JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("theta") || !doc.contains("mult")) {
    throw input_error("spectrum JSON must be an object with 'theta' and 'mult'");
  }
  std::vector<Rational> theta;
  std::vector<long> mult;
  bool exact = true;
  try {
    for (const auto& t : doc.at("theta")) {
      if (t.is_string()) {
        theta.push_back(parse_rational(t.get<std::string>()));
      } else if (t.is_number_integer()) {
        theta.push_back(Rational(t.get<long>()));
      } else if (t.is_number_float()) {
        theta.push_back(from_double(t.get<double>()));
        if (!is_integer(theta.back())) exact = false;
      } else {
        throw input_error("spectrum JSON: eigenvalues must be numbers or \"p/q\" strings");
      }
    }
    for (const auto& m : doc.at("mult")) {
      if (!m.is_number_integer()) throw input_error("spectrum JSON: multiplicities must be integers");
      mult.push_back(m.get<long>());
    }
    if (doc.contains("exact") && doc.at("exact").is_boolean() && !doc.at("exact").get<bool>()) exact = false;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("spectrum JSON: ") + e.what());
  }
  Spectrum spectrum(std::move(theta), std::move(mult), exact);
  const bool from_graph = doc.contains("from_graph") && doc.at("from_graph").is_boolean() && doc.at("from_graph").get<bool>();
  if (from_graph && spectrum.power_sum(1) != 0) {
    throw input_error("spectrum marked from_graph has trace " + to_string(spectrum.power_sum(1)) + " != 0");
  }
  return spectrum;
}

std::string to_spectrum_json(const Spectrum& spectrum, bool from_graph) {
  nlohmann::ordered_json doc;
  auto theta = nlohmann::ordered_json::array();
  for (const auto& t : spectrum.theta()) {
    if (is_integer(t) && t.get_num().fits_slong_p()) {
      theta.push_back(t.get_num().get_si());
    } else {
      theta.push_back(to_string(t));
    }
  }
  doc["theta"] = std::move(theta);
  doc["mult"] = spectrum.mult();
  doc["from_graph"] = from_graph;
  if (!spectrum.exact()) doc["exact"] = false;
  return doc.dump() + "\n";
}

}  // namespace kminor
