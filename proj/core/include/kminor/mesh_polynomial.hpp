#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kminor/rational.hpp"
#include "kminor/spectrum.hpp"

namespace kminor {

/// Newton divided differences f[theta_i, ..., theta_j] of a value vector.
class DividedDifferences {
 public:
  DividedDifferences(const std::vector<Rational>& mesh, const std::vector<Rational>& values);

  /// f[theta_i, ..., theta_j] for 0 <= i <= j <= d.
  const Rational& operator()(std::size_t i, std::size_t j) const { return table_[j][i]; }

  /// Leading entries f[theta_0, ..., theta_m], m = 0..d.
  std::vector<Rational> leading() const;

  /// Largest m with f[theta_0, ..., theta_m] != 0 (0 for the zero polynomial).
  int degree() const;

 private:
  // table_[j][i] holds f[theta_i..theta_j]; row j has j + 1 entries.
  std::vector<std::vector<Rational>> table_;
};

/// A polynomial of degree at most d stored by its values on the spectral mesh.
class MeshPolynomial {
 public:
  MeshPolynomial(Spectrum mesh, std::vector<Rational> values);

  /// Values of x^j on the mesh.
  static MeshPolynomial monomial(const Spectrum& mesh, unsigned j);
  static MeshPolynomial constant(const Spectrum& mesh, const Rational& c);

  const Spectrum& mesh() const noexcept { return mesh_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& value(std::size_t i) const { return values_[i]; }

  DividedDifferences divided_differences() const { return {mesh_.theta(), values_}; }
  int degree() const { return divided_differences().degree(); }

  /// f[theta_0], f[theta_0, theta_1], ..., f[theta_0..theta_d].
  std::vector<Rational> newton_coefficients() const { return divided_differences().leading(); }

  /// Horner evaluation of the Newton form.
  Rational evaluate(const Rational& x) const;

  /// Monomial coefficients c_0 + c_1 x + ..., trimmed to the degree.
  std::vector<Rational> coefficients() const;

  // Pointwise arithmetic on the mesh, i.e. in R[x] modulo the minimal polynomial.
  MeshPolynomial& operator+=(const MeshPolynomial& other);
  MeshPolynomial& operator-=(const MeshPolynomial& other);
  MeshPolynomial& operator*=(const MeshPolynomial& other);
  MeshPolynomial& operator*=(const Rational& c);
  friend MeshPolynomial operator+(MeshPolynomial a, const MeshPolynomial& b) { return a += b; }
  friend MeshPolynomial operator-(MeshPolynomial a, const MeshPolynomial& b) { return a -= b; }
  friend MeshPolynomial operator*(MeshPolynomial a, const MeshPolynomial& b) { return a *= b; }
  friend MeshPolynomial operator*(MeshPolynomial a, const Rational& c) { return a *= c; }

  bool operator==(const MeshPolynomial& other) const {
    return values_ == other.values_ && mesh_ == other.mesh_;
  }

 private:
  void require_same_mesh(const MeshPolynomial& other) const;

  Spectrum mesh_;
  std::vector<Rational> values_;
};

/// <f, g>_G = (1/n) sum_i m_i f(theta_i) g(theta_i). Throws on mesh mismatch.
Rational inner_product(const MeshPolynomial& f, const MeshPolynomial& g);

/// tr p(A) = sum_i m_i p(theta_i).
Rational trace(const MeshPolynomial& p);

struct PolynomialSequence {
  enum class Kind { predistance, sum };

  Kind kind = Kind::predistance;
  std::vector<MeshPolynomial> polys;
};

/// Orthogonal p_0 = 1, p_1, ..., p_d with ||p_i||^2 = p_i(theta_0).
PolynomialSequence predistance(const Spectrum& spectrum);

/// q_k = p_0 + ... + p_k for k = 0..d.
PolynomialSequence partial_sums(const PolynomialSequence& sequence);

/// p_d = H/n: value 1 at theta_0 and 0 elsewhere. Requires m_0 = 1.
MeshPolynomial hoffman_polynomial(const Spectrum& spectrum);

struct RootReport {
  /// Distinct real zeros inside [theta_d - padding, theta_0 + padding], increasing.
  std::vector<double> roots;
  std::vector<int> multiplicity;
  /// Distinct real zeros on the whole line.
  int total_real_roots = 0;
  /// max |p(r)| over the reported approximations.
  double max_residual = 0.0;
};

struct RootOptions {
  double padding = 1.0;
  /// Bisection stops once the bracket is narrower than this.
  double width = 1e-13;
};

/// Exact Sturm-sequence isolation followed by bisection on exact values.
/// The zero polynomial has no isolated roots and is rejected.
RootReport real_roots(const MeshPolynomial& p, const RootOptions& options = {});

/// {"theta": [...], "values": [...]} with rationals as "p/q" strings.
std::string to_polynomial_json(const MeshPolynomial& p);
/// theta,multiplicity,value (one row per mesh point).
std::string to_polynomial_csv(const MeshPolynomial& p);

}  // namespace kminor
