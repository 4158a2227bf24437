#pragma once

// Fixtures and hand-rolled generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kminor/graph.hpp"
#include "kminor/rational.hpp"
#include "kminor/spectrum.hpp"

namespace kminor::testing {

inline Spectrum make_spectrum(std::vector<long> theta, std::vector<long> mult) {
  std::vector<Rational> t;
  for (long v : theta) t.emplace_back(v);
  return Spectrum(std::move(t), std::move(mult));
}

/// Integer spectra of small connected regular graphs.
inline std::vector<std::pair<std::string, Spectrum>> spectrum_pool() {
  return {
      {"K2", make_spectrum({1, -1}, {1, 1})},
      {"K3", make_spectrum({2, -1}, {1, 2})},
      {"K4", make_spectrum({3, -1}, {1, 3})},
      {"K5", make_spectrum({4, -1}, {1, 4})},
      {"C4", make_spectrum({2, 0, -2}, {1, 2, 1})},
      {"C6", make_spectrum({2, 1, -1, -2}, {1, 2, 2, 1})},
      {"K33", make_spectrum({3, 0, -3}, {1, 4, 1})},
      {"Petersen", make_spectrum({3, 1, -2}, {1, 5, 4})},
      {"K44", make_spectrum({4, 0, -4}, {1, 6, 1})},
  };
}

/// Spectrum of the Cartesian product: eigenvalues add, multiplicities multiply.
inline Spectrum cartesian_product(const Spectrum& a, const Spectrum& b) {
  std::map<Rational, long, std::greater<>> merged;
  for (int i = 0; i <= a.d(); ++i) {
    for (int j = 0; j <= b.d(); ++j) merged[a.theta(i) + b.theta(j)] += a.mult(i) * b.mult(j);
  }
  std::vector<Rational> theta;
  std::vector<long> mult;
  for (const auto& [t, m] : merged) {
    theta.push_back(t);
    mult.push_back(m);
  }
  return Spectrum(std::move(theta), std::move(mult));
}

/// Random exact spectra of connected regular graphs (products of one to
/// three pool graphs), keeping 2 <= d <= max_d.
class ProductSpectrumGenerator {
 public:
  explicit ProductSpectrumGenerator(std::uint64_t seed, int max_d = 10) : rng_(seed), max_d_(max_d) {}

  std::pair<std::string, Spectrum> next() {
    const auto pool = spectrum_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> factors(1, 3);
    while (true) {
      const int count = factors(rng_);
      auto [name, spectrum] = pool[pick(rng_)];
      for (int f = 1; f < count; ++f) {
        const auto& [other_name, other] = pool[pick(rng_)];
        name += "x" + other_name;
        spectrum = cartesian_product(spectrum, other);
      }
      if (spectrum.d() >= 2 && spectrum.d() <= max_d_) return {name, spectrum};
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int max_d_;
};

/// Random simple graph with edge probability p.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

/// Floyd-Warshall distances (-1 for unreachable), independent of BFS.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t u = 0; u < n; ++u) d[u][u] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

/// alpha_k by exhaustive subset enumeration (n <= 20).
inline std::size_t brute_force_alpha(const Graph& g, int k) {
  const auto d = floyd_warshall(g);
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1U)) continue;
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        if ((mask >> v & 1U) && d[u][v] >= 0 && d[u][v] <= k) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

/// Graphs used by the soundness harness.
inline std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (int n = 4; n <= 12; ++n) out.push_back(generate_cycle(n));
  out.push_back(generate_odd(3));
  out.push_back(generate_odd(4));
  out.push_back(generate_hamming(2, 3));
  out.push_back(generate_complete(5));
  out.push_back(generate_complete_bipartite(3, 3));
  return out;
}

}  // namespace kminor::testing
