#include "kminor/mesh_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kminor/error.hpp"

namespace kminor {

DividedDifferences::DividedDifferences(const std::vector<Rational>& mesh, const std::vector<Rational>& values) {
  const std::size_t size = mesh.size();
  if (values.size() != size) throw input_error("value count does not match mesh size");
  table_.resize(size);
  for (std::size_t j = 0; j < size; ++j) {
    table_[j].resize(j + 1);
    table_[j][j] = values[j];
    for (std::size_t i = j; i-- > 0;) {
      table_[j][i] = (table_[j][i + 1] - table_[j - 1][i]) / (mesh[j] - mesh[i]);
    }
  }
}

std::vector<Rational> DividedDifferences::leading() const {
  std::vector<Rational> out;
  out.reserve(table_.size());
  for (const auto& row : table_) out.push_back(row[0]);
  return out;
}

int DividedDifferences::degree() const {
  for (std::size_t m = table_.size(); m-- > 0;) {
    if (table_[m][0] != 0) return static_cast<int>(m);
  }
  return 0;
}

// ---------------------------------------------------------------------------

MeshPolynomial::MeshPolynomial(Spectrum mesh, std::vector<Rational> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (values_.size() != mesh_.theta().size()) {
    throw input_error("polynomial has " + std::to_string(values_.size()) + " values for a mesh of " +
                      std::to_string(mesh_.theta().size()) + " points");
  }
}

MeshPolynomial MeshPolynomial::monomial(const Spectrum& mesh, unsigned j) {
  std::vector<Rational> values;
  for (const auto& t : mesh.theta()) values.push_back(pow(t, j));
  return {mesh, std::move(values)};
}

MeshPolynomial MeshPolynomial::constant(const Spectrum& mesh, const Rational& c) {
  return {mesh, std::vector<Rational>(mesh.theta().size(), c)};
}

Rational MeshPolynomial::evaluate(const Rational& x) const {
  const auto coeffs = newton_coefficients();
  const auto& theta = mesh_.theta();
  Rational result = coeffs.back();
  for (std::size_t m = coeffs.size() - 1; m-- > 0;) {
    result = result * (x - theta[m]) + coeffs[m];
  }
  return result;
}

std::vector<Rational> MeshPolynomial::coefficients() const {
  const auto newton = newton_coefficients();
  const auto& theta = mesh_.theta();
  const int deg = divided_differences().degree();
  // Expand sum_m f_m prod_{l<m} (x - theta_l), highest term first.
  std::vector<Rational> poly{newton[static_cast<std::size_t>(deg)]};
  for (int m = deg - 1; m >= 0; --m) {
    // poly = poly * (x - theta_m) + f_m
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * theta[static_cast<std::size_t>(m)];
    }
    next[0] += newton[static_cast<std::size_t>(m)];
    poly = std::move(next);
  }
  return poly;
}

void MeshPolynomial::require_same_mesh(const MeshPolynomial& other) const {
  if (!(mesh_ == other.mesh_)) throw input_error("polynomials live on different meshes");
}

MeshPolynomial& MeshPolynomial::operator+=(const MeshPolynomial& other) {
  require_same_mesh(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

MeshPolynomial& MeshPolynomial::operator-=(const MeshPolynomial& other) {
  require_same_mesh(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

MeshPolynomial& MeshPolynomial::operator*=(const MeshPolynomial& other) {
  require_same_mesh(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

MeshPolynomial& MeshPolynomial::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

Rational inner_product(const MeshPolynomial& f, const MeshPolynomial& g) {
  if (!(f.mesh() == g.mesh())) throw input_error("inner product of polynomials on different meshes");
  const auto& mesh = f.mesh();
  Rational total(0);
  for (std::size_t i = 0; i < f.values().size(); ++i) total += Rational(mesh.mult(i)) * f.value(i) * g.value(i);
  return total / Rational(mesh.n());
}

Rational trace(const MeshPolynomial& p) {
  Rational total(0);
  for (std::size_t i = 0; i < p.values().size(); ++i) total += Rational(p.mesh().mult(i)) * p.value(i);
  return total;
}

PolynomialSequence predistance(const Spectrum& spectrum) {
  PolynomialSequence out;
  out.kind = PolynomialSequence::Kind::predistance;
  std::vector<Rational> norms;
  for (int i = 0; i <= spectrum.d(); ++i) {
    auto v = MeshPolynomial::monomial(spectrum, static_cast<unsigned>(i));
    for (std::size_t j = 0; j < out.polys.size(); ++j) {
      v -= out.polys[j] * Rational(inner_product(v, out.polys[j]) / norms[j]);
    }
    const Rational norm = inner_product(v, v);
    if (norm == 0) throw numeric_error("Gram-Schmidt breakdown at degree " + std::to_string(i));
    // Scale c so that c^2 <v,v> = c v(theta_0).
    const Rational c = v.value(0) / norm;
    if (c == 0) throw numeric_error("predistance polynomial " + std::to_string(i) + " vanishes at theta_0");
    v *= c;
    norms.push_back(inner_product(v, v));
    out.polys.push_back(std::move(v));
  }
  return out;
}

PolynomialSequence partial_sums(const PolynomialSequence& sequence) {
  PolynomialSequence out;
  out.kind = PolynomialSequence::Kind::sum;
  for (const auto& p : sequence.polys) {
    out.polys.push_back(out.polys.empty() ? p : out.polys.back() + p);
  }
  return out;
}

MeshPolynomial hoffman_polynomial(const Spectrum& spectrum) {
  if (spectrum.mult(0) != 1) {
    throw inapplicable_error("Hoffman polynomial needs a simple largest eigenvalue (m_0 = " +
                             std::to_string(spectrum.mult(0)) + ")");
  }
  std::vector<Rational> values(spectrum.theta().size(), Rational(0));
  values[0] = 1;
  return {spectrum, std::move(values)};
}

// ---------------------------------------------------------------------------
// Root isolation

namespace {

using Poly = std::vector<Rational>;  // low to high, no trailing zeros (empty = 0)

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(out);
  return out;
}

/// Remainder of a / b.
Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly quotient(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

int sign(const Rational& v) { return sgn(v); }

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int sign_changes_at(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    const int s = sign(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_changes_at_infinity(const std::vector<Poly>& chain, bool positive) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign(q.back());
    if (!positive && (q.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Number of distinct roots in (a, b] for a square-free chain.
int count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

}  // namespace

RootReport real_roots(const MeshPolynomial& p, const RootOptions& options) {
  Poly poly = p.coefficients();
  trim(poly);
  if (poly.empty()) throw numeric_error("root isolation of the zero polynomial");

  RootReport report;
  if (poly.size() == 1) return report;

  const Poly g = gcd(poly, derivative(poly));
  const Poly square_free = g.size() > 1 ? quotient(poly, g) : poly;
  const auto chain = sturm_chain(square_free);
  report.total_real_roots = sign_changes_at_infinity(chain, false) - sign_changes_at_infinity(chain, true);

  const auto& theta = p.mesh().theta();
  const Rational pad = from_double(options.padding);
  const Rational lo = theta.back() - pad;
  const Rational hi = theta.front() + pad;
  const Rational width = from_double(options.width);

  // Recursive isolation: split until each interval (a, b] holds one root.
  struct Interval {
    Rational a, b;
    int count;
  };
  std::vector<Interval> stack{{lo, hi, count_roots(chain, lo, hi)}};
  std::vector<Rational> found;
  int guard = 0;
  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    if (iv.count == 0) continue;
    if (++guard > 100000) {
      throw numeric_error("root isolation failed after finding " + std::to_string(found.size()) + " roots");
    }
    if (iv.count == 1) {
      // Bisect on the sign of the square-free part; (a, b] holds exactly one simple root.
      Rational a = iv.a, b = iv.b;
      if (sign(eval(square_free, b)) == 0) {
        found.push_back(b);
        continue;
      }
      while (b - a > width) {
        Rational mid = (a + b) / 2;
        const int sm = sign(eval(square_free, mid));
        if (sm == 0) {
          a = b = mid;
          break;
        }
        if (count_roots(chain, a, mid) == 1) {
          b = mid;
        } else {
          a = mid;
        }
      }
      found.push_back((a + b) / 2);
      continue;
    }
    Rational mid = (iv.a + iv.b) / 2;
    stack.push_back({mid, iv.b, count_roots(chain, mid, iv.b)});
    stack.push_back({iv.a, mid, count_roots(chain, iv.a, mid)});
  }
  std::sort(found.begin(), found.end());
  for (const auto& r : found) {
    report.roots.push_back(to_double(r));
    report.max_residual = std::max(report.max_residual, std::abs(to_double(eval(poly, r))));
    // gcd(h, h') drops every root's multiplicity by one.
    int mult = 1;
    for (Poly h = g; h.size() > 1; h = gcd(h, derivative(h))) {
      const Poly h_gcd = gcd(h, derivative(h));
      const Poly h_free = h_gcd.size() > 1 ? quotient(h, h_gcd) : h;
      if (count_roots(sturm_chain(h_free), r - width, r + width) == 0) break;
      ++mult;
    }
    report.multiplicity.push_back(mult);
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string to_polynomial_json(const MeshPolynomial& p) {
  nlohmann::ordered_json doc;
  auto theta = nlohmann::ordered_json::array();
  auto values = nlohmann::ordered_json::array();
  for (const auto& t : p.mesh().theta()) theta.push_back(to_string(t));
  for (const auto& v : p.values()) values.push_back(to_string(v));
  doc["theta"] = std::move(theta);
  doc["values"] = std::move(values);
  return doc.dump() + "\n";
}

std::string to_polynomial_csv(const MeshPolynomial& p) {
  std::ostringstream out;
  out << "theta,multiplicity,value\n";
  for (std::size_t i = 0; i < p.values().size(); ++i) {
    out << to_string(p.mesh().theta(i)) << "," << p.mesh().mult(i) << "," << to_string(p.value(i)) << "\n";
  }
  return out.str();
}

}  // namespace kminor
