#include "kminor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kminor/error.hpp"
#include "kminor/rational.hpp"

namespace kminor {

namespace {

const Integer kOrderCap = Integer(1) << 62;

std::uint64_t checked_order(const Integer& n) {
  if (n > kOrderCap) throw input_error("family order exceeds capacity");
  return static_cast<std::uint64_t>(n.get_ui());
}

std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return checked_order(result);
}

void require_capacity(std::uint64_t n, const std::string& what) {
  if (n > kMaxVertices) {
    throw input_error(what + " has " + std::to_string(n) + " vertices; capacity is " +
                      std::to_string(kMaxVertices));
  }
}

std::vector<std::vector<int>> k_subsets(int v, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 0);
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == v - k + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FamilyTag

std::string FamilyTag::name() const {
  auto joined = [this] {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(params[i]);
    }
    return s;
  };
  switch (kind) {
    case Kind::hamming: return "hamming(" + joined() + ")";
    case Kind::johnson: return "johnson(" + joined() + ")";
    case Kind::odd: return "odd(" + joined() + ")";
    case Kind::cycle: return "cycle(" + joined() + ")";
    case Kind::custom: break;
  }
  return "custom";
}

FamilyTag FamilyTag::parse(std::string_view text) {
  if (text == "custom") return {};
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw input_error("malformed family tag '" + std::string(text) + "'");
  }
  const auto head = text.substr(0, open);
  std::vector<int> params;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto token = body.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw input_error("malformed family tag '" + std::string(text) + "'");
    }
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  FamilyTag tag;
  std::size_t arity = 0;
  if (head == "hamming") {
    tag.kind = Kind::hamming;
    arity = 2;
  } else if (head == "johnson") {
    tag.kind = Kind::johnson;
    arity = 2;
  } else if (head == "odd") {
    tag.kind = Kind::odd;
    arity = 1;
  } else if (head == "cycle") {
    tag.kind = Kind::cycle;
    arity = 1;
  } else {
    throw input_error("unknown family '" + std::string(head) + "'");
  }
  if (params.size() != arity) throw input_error("wrong parameter count in family tag '" + std::string(text) + "'");
  tag.params = std::move(params);
  return tag;
}

std::uint64_t FamilyTag::order() const {
  switch (kind) {
    case Kind::hamming: {
      Integer n;
      mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(params[0]), static_cast<unsigned long>(params[1]));
      return checked_order(n);
    }
    case Kind::johnson:
      return checked_binomial(static_cast<std::uint64_t>(params[0]), static_cast<std::uint64_t>(params[1]));
    case Kind::odd:
      return checked_binomial(static_cast<std::uint64_t>(2 * params[0] - 1),
                              static_cast<std::uint64_t>(params[0] - 1));
    case Kind::cycle: return static_cast<std::uint64_t>(params[0]);
    case Kind::custom: break;
  }
  throw input_error("custom graphs have no closed-form order");
}

int FamilyTag::valency() const {
  switch (kind) {
    case Kind::hamming: return params[1] * (params[0] - 1);
    case Kind::johnson: return params[1] * (params[0] - params[1]);
    case Kind::odd: return params[0];
    case Kind::cycle: return 2;
    case Kind::custom: break;
  }
  throw input_error("custom graphs have no closed-form valency");
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<VertexLabel> labels, FamilyTag family)
    : n_(n), labels_(std::move(labels)), family_(std::move(family)) {
  if (n == 0) throw input_error("graph must have at least one vertex");
  require_capacity(n, "graph");
  if (!labels_.empty() && labels_.size() != n) {
    throw input_error("label count " + std::to_string(labels_.size()) + " does not match n = " + std::to_string(n));
  }
  if (!family_.is_custom() && family_.order() != n) {
    throw input_error("family " + family_.name() + " requires n = " + std::to_string(family_.order()) +
                      ", got " + std::to_string(n));
  }
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for n = " +
                        std::to_string(n));
    }
    if (e.u == e.v) throw input_error("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  rows_.assign(n, BitRow(n));
  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    rows_[e.u].set(e.v);
    rows_[e.v].set(e.u);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::regular_degree() const {
  const std::size_t d0 = degree(0);
  for (std::size_t u = 1; u < n_; ++u) {
    if (degree(u) != d0) return std::nullopt;
  }
  return d0;
}

bool Graph::same_structure(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
}

// ---------------------------------------------------------------------------
// Generators

Graph generate_hamming(int q, int len) {
  if (q < 2 || len < 1) throw input_error("hamming requires q >= 2 and len >= 1");
  const FamilyTag tag = FamilyTag::hamming(q, len);
  const std::uint64_t n = tag.order();
  require_capacity(n, tag.name());

  std::vector<VertexLabel> labels(n, VertexLabel(static_cast<std::size_t>(len)));
  std::vector<std::uint64_t> place(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    place[static_cast<std::size_t>(i)] = (i == len - 1) ? 1 : place[static_cast<std::size_t>(i + 1)] * static_cast<std::uint64_t>(q);
  }
  std::vector<Edge> edges;
  for (std::uint64_t w = 0; w < n; ++w) {
    std::uint64_t rest = w;
    for (int i = len - 1; i >= 0; --i) {
      labels[w][static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    for (int i = 0; i < len; ++i) {
      const auto digit = static_cast<std::uint64_t>(labels[w][static_cast<std::size_t>(i)]);
      for (std::uint64_t s = digit + 1; s < static_cast<std::uint64_t>(q); ++s) {
        const std::uint64_t other = w + (s - digit) * place[static_cast<std::size_t>(i)];
        edges.push_back({static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(other)});
      }
    }
  }
  return Graph(n, edges, std::move(labels), tag);
}

Graph generate_johnson(int v, int k) {
  if (k <= 0 || k >= v) throw input_error("johnson requires 0 < k < v");
  const FamilyTag tag = FamilyTag::johnson(v, k);
  require_capacity(tag.order(), tag.name());

  auto subsets = k_subsets(v, k);
  std::map<std::vector<int>, std::uint32_t> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subsets[i], static_cast<std::uint32_t>(i));

  std::vector<Edge> edges;
  std::vector<bool> member(static_cast<std::size_t>(v));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& s = subsets[i];
    std::fill(member.begin(), member.end(), false);
    for (int x : s) member[static_cast<std::size_t>(x)] = true;
    for (std::size_t out = 0; out < s.size(); ++out) {
      for (int in = 0; in < v; ++in) {
        if (member[static_cast<std::size_t>(in)]) continue;
        auto t = s;
        t[out] = in;
        std::sort(t.begin(), t.end());
        const auto j = index.at(t);
        if (i < j) edges.push_back({static_cast<std::uint32_t>(i), j});
      }
    }
  }
  const std::size_t n = subsets.size();
  return Graph(n, edges, std::move(subsets), tag);
}

Graph generate_odd(int ell) {
  if (ell < 2) throw input_error("odd graph requires ell >= 2");
  const FamilyTag tag = FamilyTag::odd(ell);
  require_capacity(tag.order(), tag.name());

  auto subsets = k_subsets(2 * ell - 1, ell - 1);
  std::vector<std::uint64_t> masks;
  masks.reserve(subsets.size());
  for (const auto& s : subsets) {
    std::uint64_t m = 0;
    for (int x : s) m |= std::uint64_t{1} << x;
    masks.push_back(m);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if ((masks[i] & masks[j]) == 0) edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
  }
  const std::size_t n = subsets.size();
  return Graph(n, edges, std::move(subsets), tag);
}

Graph generate_cycle(int n) {
  if (n < 3) throw input_error("cycle requires n >= 3");
  require_capacity(static_cast<std::uint64_t>(n), "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % n)});
  }
  return Graph(static_cast<std::size_t>(n), edges, {}, FamilyTag::cycle(n));
}

Graph generate_complete(int n) {
  if (n < 1) throw input_error("complete graph requires n >= 1");
  if (n == 1) return Graph(1, {});
  // K_n is the Hamming graph with one coordinate over n symbols.
  return generate_hamming(n, 1);
}

Graph generate_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw input_error("complete bipartite graph requires a, b >= 1");
  require_capacity(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b), "complete bipartite graph");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(a + j)});
  }
  return Graph(static_cast<std::size_t>(a + b), edges);
}

Graph generate_path(int n) {
  if (n < 1) throw input_error("path requires n >= 1");
  require_capacity(static_cast<std::uint64_t>(n), "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1)});
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph generate_family(const FamilyTag& family) {
  const auto& p = family.params;
  switch (family.kind) {
    case FamilyTag::Kind::hamming: return generate_hamming(p[0], p[1]);
    case FamilyTag::Kind::johnson: return generate_johnson(p[0], p[1]);
    case FamilyTag::Kind::odd: return generate_odd(p[0]);
    case FamilyTag::Kind::cycle: return generate_cycle(p[0]);
    case FamilyTag::Kind::custom: break;
  }
  throw input_error("cannot generate a custom family");
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_index(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> declared_n;
  FamilyTag family;
  std::vector<std::pair<std::string_view, std::string_view>> pairs;
  std::vector<std::size_t> pair_lines;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      // Recognised directives: "# n <count>" and "# family <tag>".
      const auto words = split_ws(line.substr(hash + 1));
      if (hash == 0 && words.size() == 2 && words[0] == "n") {
        std::uint64_t n = 0;
        if (!parse_index(words[1], n)) throw input_error(at_line(line_no) + "malformed vertex count directive");
        declared_n = n;
      } else if (hash == 0 && words.size() == 2 && words[0] == "family") {
        family = FamilyTag::parse(words[1]);
      }
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw input_error(at_line(line_no) + "expected 'u v', found " + std::to_string(tokens.size()) + " tokens");
    }
    if (tokens[0] == tokens[1]) throw input_error(at_line(line_no) + "self-loop at vertex " + std::string(tokens[0]));
    pairs.emplace_back(tokens[0], tokens[1]);
    pair_lines.push_back(line_no);
  }

  bool numeric = true;
  for (const auto& [a, b] : pairs) {
    std::uint64_t x = 0;
    if (!parse_index(a, x) || !parse_index(b, x)) {
      numeric = false;
      break;
    }
  }

  std::vector<Edge> edges;
  std::uint64_t n = 0;
  if (numeric) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::uint64_t a = 0, b = 0;
      parse_index(pairs[i].first, a);
      parse_index(pairs[i].second, b);
      if (a >= kMaxVertices || b >= kMaxVertices) {
        throw input_error(at_line(pair_lines[i]) + "vertex id exceeds capacity");
      }
      if (declared_n && (a >= *declared_n || b >= *declared_n)) {
        throw input_error(at_line(pair_lines[i]) + "vertex id out of range for declared n = " +
                          std::to_string(*declared_n));
      }
      n = std::max({n, a + 1, b + 1});
      edges.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
    }
  } else {
    std::map<std::string_view, std::uint32_t> ids;
    auto id_of = [&](std::string_view name) {
      auto [it, inserted] = ids.emplace(name, static_cast<std::uint32_t>(ids.size()));
      return it->second;
    };
    for (const auto& [a, b] : pairs) edges.push_back({id_of(a), id_of(b)});
    n = ids.size();
    if (declared_n && *declared_n < n) {
      throw input_error("declared n = " + std::to_string(*declared_n) + " but " + std::to_string(n) +
                        " named vertices appear");
    }
  }
  if (declared_n) n = *declared_n;
  if (n == 0) throw input_error("edge list defines no vertices");
  return Graph(static_cast<std::size_t>(n), edges, {}, family);
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("graph JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
      throw input_error("graph JSON must be an object with 'n' and 'edges'");
    }
    const auto n = doc.at("n").get<std::int64_t>();
    if (n <= 0) throw input_error("graph JSON: n must be positive");
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw input_error("graph JSON: each edge must be a pair [u, v]");
      const auto u = e[0].get<std::int64_t>();
      const auto v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw input_error("graph JSON: edge [" + std::to_string(u) + "," + std::to_string(v) +
                          "] inconsistent with n = " + std::to_string(n));
      }
      edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
    }
    std::vector<VertexLabel> labels;
    if (doc.contains("labels") && !doc.at("labels").is_null()) {
      labels = doc.at("labels").get<std::vector<VertexLabel>>();
    }
    FamilyTag family;
    if (doc.contains("family")) family = FamilyTag::parse(doc.at("family").get<std::string>());
    return Graph(static_cast<std::size_t>(n), edges, std::move(labels), family);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("graph JSON: ") + e.what());
  }
}

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_edge_list(text);
  }
  throw input_error("empty graph input");
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.order() << "\n";
  if (!g.family().is_custom()) out << "# family " << g.family().name() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

std::string to_graph_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (!g.labels().empty()) doc["labels"] = g.labels();
  if (!g.family().is_custom()) doc["family"] = g.family().name();
  return doc.dump() + "\n";
}

// ---------------------------------------------------------------------------
// Distances

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), dist_(g.order() * g.order(), unreachable) {
  std::vector<std::uint32_t> queue(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    std::uint16_t* row = dist_.data() + s * n_;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<std::uint32_t>(s);
    while (head < tail) {
      const auto u = queue[head++];
      for (auto v : g.neighbors(u)) {
        if (row[v] == unreachable) {
          row[v] = static_cast<std::uint16_t>(row[u] + 1);
          diameter_ = std::max(diameter_, static_cast<int>(row[v]));
          queue[tail++] = v;
        }
      }
    }
    if (tail != n_) connected_ = false;
  }
}

BallSizes ball_size(const DistanceMatrix& dist, int k) {
  BallSizes out;
  const std::size_t n = dist.order();
  out.per_vertex.assign(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const auto d = dist.at(u, v);
      if (d != DistanceMatrix::unreachable && static_cast<int>(d) <= k) ++count;
    }
    out.per_vertex[u] = count;
  }
  if (std::all_of(out.per_vertex.begin(), out.per_vertex.end(), [&](std::size_t c) { return c == out.per_vertex[0]; })) {
    out.common = out.per_vertex[0];
  }
  return out;
}

BallSizes ball_size(const Graph& g, int k) { return ball_size(DistanceMatrix(g), k); }

}  // namespace kminor
