#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kminor/graph.hpp"
#include "kminor/rational.hpp"

namespace kminor {

/// Distinct eigenvalues theta_0 > ... > theta_d with multiplicities.
///
/// `exact()` is false when the eigenvalues were read off a floating-point
/// eigensolve and could not be snapped; those values are still held as the
/// exact rationals of their binary64 representation, so everything downstream
/// runs in exact arithmetic either way.
class Spectrum {
 public:
  /// Throws input errors for a non-decreasing mesh or nonpositive multiplicity.
  Spectrum(std::vector<Rational> theta, std::vector<long> mult, bool exact = true);

  const std::vector<Rational>& theta() const noexcept { return theta_; }
  const Rational& theta(std::size_t i) const { return theta_[i]; }
  const std::vector<long>& mult() const noexcept { return mult_; }
  long mult(std::size_t i) const { return mult_[i]; }

  /// Number of vertices, sum of multiplicities.
  long n() const noexcept { return n_; }
  /// Index of the smallest eigenvalue.
  int d() const noexcept { return static_cast<int>(theta_.size()) - 1; }
  bool exact() const noexcept { return exact_; }

  /// sum_i m_i theta_i^j, i.e. tr A^j.
  Rational power_sum(unsigned j) const;

  /// (1/n) tr A^j; the common diagonal entry of A^j for walk-regular graphs.
  Rational mean_closed_walks(unsigned j) const { return power_sum(j) / Rational(n_); }

  /// theta_0 equals the average degree tr(A^2)/n exactly when the graph is regular.
  bool regular() const;
  /// Regular with a simple largest eigenvalue.
  bool connected_regular() const { return regular() && mult_[0] == 1; }

  /// Eigenvalues with repetition, decreasing.
  std::vector<Rational> eigenvalues() const;

  /// "{3^1, 1^5, -2^4}"
  std::string to_string() const;

  bool operator==(const Spectrum& other) const { return theta_ == other.theta_ && mult_ == other.mult_; }

 private:
  std::vector<Rational> theta_;
  std::vector<long> mult_;
  long n_ = 0;
  bool exact_ = true;
};

/// Classical spectra of the Hamming, Johnson and odd graphs, and cycles.
/// Needs only the tag, so families too large to build are still supported.
Spectrum spectrum_closed_form(const FamilyTag& family);
Spectrum spectrum_closed_form(const Graph& g);

struct NumericSpectrumOptions {
  /// Eigenvalues closer than this times max|lambda| merge into one cluster.
  double relative_tolerance = 1e-7;
  /// Replace cluster means lying within the tolerance of an integer by it.
  bool snap_integers = true;
};

Spectrum spectrum_numeric(const Graph& g, const NumericSpectrumOptions& options = {});

/// All eigenvalues of a dense symmetric matrix (row-major, n*n), decreasing.
/// Householder tridiagonalisation followed by implicit-shift QL.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

/// {"theta": [...], "mult": [...], "from_graph": bool}. Entries of "theta"
/// may be JSON numbers or "p/q" strings. With from_graph set, tr A = 0 is
/// enforced.
Spectrum parse_spectrum_json(std::string_view text);
std::string to_spectrum_json(const Spectrum& spectrum, bool from_graph = false);

}  // namespace kminor
