#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kminor/graph.hpp"
#include "kminor/rational.hpp"

namespace kminor {

struct OracleOptions {
  /// Graphs above this order get a greedy lower bound only.
  std::size_t max_vertices = 200;
  /// Branch-and-bound nodes before giving up on optimality.
  std::uint64_t node_budget = 20'000'000;
};

struct IndependenceCertificate {
  int k = 1;
  std::size_t alpha_k = 0;
  /// Increasing vertex ids at pairwise distance > k.
  std::vector<std::uint32_t> witness;
  std::uint64_t nodes_explored = 0;
  /// False when the search stopped early; alpha_k is then a lower bound only.
  bool optimal = false;
};

/// Maximum set at pairwise distance > k: a maximum clique of the complement
/// of the k-th power graph, by bitset branch-and-bound with greedy-colouring
/// bounds. Deterministic: vertices are ordered by complement degree
/// (descending, index tie-break).
IndependenceCertificate exact_alpha_k(const Graph& g, int k, const OracleOptions& options = {});

struct WitnessAudit {
  bool pass = false;
  std::string violation;

  explicit operator bool() const noexcept { return pass; }
};

/// Re-checks every witness pair with its own breadth-first searches,
/// independently of the distance matrix used by the search.
WitnessAudit audit_witness(const Graph& g, const IndependenceCertificate& certificate);

struct WalkRegularity {
  bool regular = true;
  /// Smallest l with diag(A^l) not constant, and two vertices that differ.
  std::optional<int> failing_length;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
  std::vector<long> first_row_values;  // (A^l)_00 for l = 0..k
};

WalkRegularity is_k_partially_walk_regular(const Graph& g, int k);

struct BoundValidation {
  std::size_t alpha_k = 0;
  Integer floor_bound;
  /// floor(bound) - alpha_k.
  Integer margin;
};

class BoundViolation : public std::runtime_error {
 public:
  BoundViolation(const std::string& what, IndependenceCertificate certificate)
      : std::runtime_error(what), certificate_(std::move(certificate)) {}

  const IndependenceCertificate& certificate() const noexcept { return certificate_; }

 private:
  IndependenceCertificate certificate_;
};

/// Throws BoundViolation when the exact alpha_k exceeds floor(bound), and a
/// budget error when the oracle cannot certify optimality.
BoundValidation validate_bound(const Graph& g, int k, const Rational& bound, const OracleOptions& options = {});

/// {"k":, "alpha_k":, "witness": [...], "nodes_explored":, "optimal":}
std::string to_certificate_json(const IndependenceCertificate& certificate);

}  // namespace kminor
