#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kminor/bitset.hpp"

namespace kminor {

/// Largest vertex count any generator or parser will build (dense bit rows).
inline constexpr std::size_t kMaxVertices = 8192;

/// Provenance of a generated graph; drives the closed-form spectrum.
struct FamilyTag {
  enum class Kind { custom, hamming, johnson, odd, cycle };

  Kind kind = Kind::custom;
  std::vector<int> params;

  static FamilyTag hamming(int q, int len) { return {Kind::hamming, {q, len}}; }
  static FamilyTag johnson(int v, int k) { return {Kind::johnson, {v, k}}; }
  static FamilyTag odd(int ell) { return {Kind::odd, {ell}}; }
  static FamilyTag cycle(int n) { return {Kind::cycle, {n}}; }

  bool is_custom() const noexcept { return kind == Kind::custom; }

  /// "hamming(2,7)", "johnson(14,7)", "odd(3)", "cycle(5)" or "custom".
  std::string name() const;

  /// Inverse of name(); throws on anything else.
  static FamilyTag parse(std::string_view text);

  /// Closed-form vertex count; throws a capacity error past 2^62.
  std::uint64_t order() const;

  /// Closed-form valency.
  int valency() const;

  bool operator==(const FamilyTag&) const = default;
};

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  auto operator<=>(const Edge&) const = default;
};

using VertexLabel = std::vector<int>;

/// Simple undirected graph; immutable after construction.
class Graph {
 public:
  /// Duplicate edges collapse; loops and out-of-range endpoints throw.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<VertexLabel> labels = {},
        FamilyTag family = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted, each with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const BitRow& row(std::size_t u) const { return rows_[u]; }
  const std::vector<std::uint32_t>& neighbors(std::size_t u) const { return adjacency_[u]; }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  std::size_t degree(std::size_t u) const { return adjacency_[u].size(); }

  /// Common degree when every vertex has the same one.
  std::optional<std::size_t> regular_degree() const;

  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  const FamilyTag& family() const noexcept { return family_; }

  /// Edge set and labels equal; the family tag is provenance and ignored.
  bool same_structure(const Graph& other) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<BitRow> rows_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<VertexLabel> labels_;
  FamilyTag family_;
};

// Generators. Subset-based families label vertices with sorted tuples.
Graph generate_hamming(int q, int len);
Graph generate_johnson(int v, int k);
Graph generate_odd(int ell);
Graph generate_cycle(int n);
Graph generate_complete(int n);
Graph generate_complete_bipartite(int a, int b);
Graph generate_path(int n);

/// Builds a graph from a tag, e.g. the one returned by FamilyTag::parse.
Graph generate_family(const FamilyTag& family);

// Text formats.
Graph parse_edge_list(std::string_view text);
Graph parse_graph_json(std::string_view text);
/// Sniffs JSON (leading '{') versus edge list.
Graph parse_graph(std::string_view text);
std::string to_edge_list(const Graph& g);
std::string to_graph_json(const Graph& g);

/// All-pairs BFS distances; unreachable pairs hold `unreachable`.
class DistanceMatrix {
 public:
  static constexpr std::uint16_t unreachable = 0xFFFF;

  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  std::uint16_t at(std::size_t u, std::size_t v) const { return dist_[u * n_ + v]; }
  /// Largest finite distance.
  int diameter() const noexcept { return diameter_; }
  bool connected() const noexcept { return connected_; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> dist_;
  int diameter_ = 0;
  bool connected_ = true;
};

inline DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

struct BallSizes {
  std::vector<std::size_t> per_vertex;
  std::optional<std::size_t> common;
};

/// n_k(u) = |{v : dist(u, v) <= k}|.
BallSizes ball_size(const DistanceMatrix& dist, int k);
BallSizes ball_size(const Graph& g, int k);

}  // namespace kminor
