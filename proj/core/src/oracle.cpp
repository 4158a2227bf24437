#include "kminor/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <nlohmann/json.hpp>

#include "kminor/bitset.hpp"
#include "kminor/error.hpp"

namespace kminor {

namespace {

/// Maximum clique search (colour-ordered branch and bound) on dense bit rows.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<BitRow> adjacency, std::uint64_t budget)
      : adj_(std::move(adjacency)), budget_(budget) {}

  void seed(std::vector<std::size_t> clique) { best_ = std::move(clique); }

  /// Returns false when the node budget ran out.
  bool run() {
    BitRow candidates(adj_.size());
    candidates.set_all();
    std::vector<std::size_t> current;
    expand(current, candidates);
    return !exhausted_;
  }

  const std::vector<std::size_t>& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void expand(std::vector<std::size_t>& current, BitRow candidates) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      BitRow next = candidates & adj_[v];
      if (next.any()) {
        expand(current, next);
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      candidates.reset(v);
      if (exhausted_) return;
    }
  }

  /// Greedy colouring in index order; vertices listed by nondecreasing colour.
  void colour_sort(const BitRow& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
    BitRow uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      BitRow available = uncoloured;
      for (auto v = available.next(); v != BitRow::npos; v = available.next(v + 1)) {
        available.subtract(adj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  std::vector<BitRow> adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> best_;
};

std::vector<int> bfs_from(const Graph& g, std::uint32_t source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<std::uint32_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

IndependenceCertificate exact_alpha_k(const Graph& g, int k, const OracleOptions& options) {
  if (k < 0) throw input_error("k must be nonnegative");
  const std::size_t n = g.order();
  IndependenceCertificate cert;
  cert.k = k;
  const DistanceMatrix dist(g);
  auto far = [&](std::size_t u, std::size_t v) { return u != v && dist.at(u, v) > k; };

  // Complement of the k-th power graph, in a fixed search order.
  std::vector<std::size_t> far_degree(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) far_degree[u] += far(u, v) ? 1 : 0;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return far_degree[a] > far_degree[b]; });

  // Greedy incumbent along the search order.
  std::vector<std::size_t> greedy;
  for (std::size_t i = 0; i < n; ++i) {
    const bool fits = std::all_of(greedy.begin(), greedy.end(), [&](std::size_t j) { return far(order[i], order[j]); });
    if (fits) greedy.push_back(i);
  }

  std::vector<std::size_t> chosen = greedy;
  if (n <= options.max_vertices) {
    std::vector<BitRow> adjacency(n, BitRow(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (far(order[i], order[j])) adjacency[i].set(j);
      }
    }
    CliqueSearch search(std::move(adjacency), options.node_budget);
    search.seed(greedy);
    cert.optimal = search.run();
    cert.nodes_explored = search.nodes();
    chosen = search.best();
  }

  for (auto i : chosen) cert.witness.push_back(static_cast<std::uint32_t>(order[i]));
  std::sort(cert.witness.begin(), cert.witness.end());
  cert.alpha_k = cert.witness.size();
  return cert;
}

WitnessAudit audit_witness(const Graph& g, const IndependenceCertificate& certificate) {
  if (certificate.witness.size() != certificate.alpha_k) {
    return {false, "witness size " + std::to_string(certificate.witness.size()) + " != alpha_k " +
                       std::to_string(certificate.alpha_k)};
  }
  for (std::size_t a = 0; a < certificate.witness.size(); ++a) {
    const auto u = certificate.witness[a];
    if (u >= g.order()) return {false, "witness vertex " + std::to_string(u) + " out of range"};
    const auto dist = bfs_from(g, u);
    for (std::size_t b = a + 1; b < certificate.witness.size(); ++b) {
      const auto v = certificate.witness[b];
      if (v >= g.order()) return {false, "witness vertex " + std::to_string(v) + " out of range"};
      if (u == v) return {false, "witness repeats vertex " + std::to_string(u)};
      if (dist[v] >= 0 && dist[v] <= certificate.k) {
        return {false, "vertices " + std::to_string(u) + " and " + std::to_string(v) + " at distance " +
                           std::to_string(dist[v]) + " <= " + std::to_string(certificate.k)};
      }
    }
  }
  return {true, {}};
}

WalkRegularity is_k_partially_walk_regular(const Graph& g, int k) {
  if (k < 0) throw input_error("k must be nonnegative");
  const std::size_t n = g.order();
  WalkRegularity out;
  // diag[l][u] by repeated sparse products, one start vertex at a time.
  std::vector<std::vector<long>> diag(k + 1, std::vector<long>(n, 0));
  std::vector<long> current(n), next(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(current.begin(), current.end(), 0);
    current[u] = 1;
    diag[0][u] = 1;
    for (int l = 1; l <= k; ++l) {
      for (std::size_t v = 0; v < n; ++v) {
        long total = 0;
        for (auto w : g.neighbors(v)) {
          if (__builtin_add_overflow(total, current[w], &total)) {
            throw numeric_error("closed-walk count overflows 64 bits at length " + std::to_string(l));
          }
        }
        next[v] = total;
      }
      std::swap(current, next);
      diag[l][u] = current[u];
    }
  }
  if (n == 0) return out;
  for (int l = 0; l <= k; ++l) {
    out.first_row_values.push_back(diag[l][0]);
    for (std::size_t u = 1; u < n && out.regular; ++u) {
      if (diag[l][u] != diag[l][0]) {
        out.regular = false;
        out.failing_length = l;
        out.witness = std::make_pair(std::uint32_t{0}, static_cast<std::uint32_t>(u));
      }
    }
  }
  return out;
}

BoundValidation validate_bound(const Graph& g, int k, const Rational& bound, const OracleOptions& options) {
  auto cert = exact_alpha_k(g, k, options);
  BoundValidation out;
  out.alpha_k = cert.alpha_k;
  out.floor_bound = floor(bound);
  out.margin = out.floor_bound - Integer(static_cast<unsigned long>(cert.alpha_k));
  if (out.margin < 0) {
    // Even a lower bound from a partial search already refutes the claimed bound.
    throw BoundViolation("alpha_" + std::to_string(k) + " >= " + std::to_string(cert.alpha_k) + " exceeds bound " +
                             to_string(bound) + " (floor " + out.floor_bound.get_str() + ")",
                         std::move(cert));
  }
  if (!cert.optimal) {
    throw budget_error("oracle budget exhausted at " + std::to_string(cert.nodes_explored) +
                       " nodes; alpha_k >= " + std::to_string(cert.alpha_k) + " is a lower bound only");
  }
  return out;
}

std::string to_certificate_json(const IndependenceCertificate& certificate) {
  nlohmann::ordered_json doc;
  doc["k"] = certificate.k;
  doc["alpha_k"] = certificate.alpha_k;
  doc["witness"] = certificate.witness;
  doc["nodes_explored"] = certificate.nodes_explored;
  doc["optimal"] = certificate.optimal;
  if (!certificate.optimal) doc["note"] = "lower bound only";
  return doc.dump(2);
}

}  // namespace kminor
