// kminor: command-line front end for minor polynomials and k-independence bounds.

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kminor/bounds.hpp"
#include "kminor/error.hpp"
#include "kminor/graph.hpp"
#include "kminor/oracle.hpp"
#include "kminor/report.hpp"
#include "kminor/spectrum.hpp"

namespace {

using namespace kminor;

enum Exit { ok = 0, inapplicable = 1, bad_input = 2, budget = 3, violated = 4 };

struct Config {
  std::vector<std::string> family;
  std::string file;
  std::string spectrum_file;
  std::string k_range;
  std::string format;
  std::string mode = "exact";
  std::string out;
  std::uint64_t budget = 0;
  bool decimal = false;
  bool walk_regular = false;
};

/// Loaded input: always a spectrum, plus the graph or family when known.
struct Source {
  Spectrum spectrum;
  std::optional<Graph> graph;
  std::optional<FamilyTag> family;
  std::string id;
  bool walk_regular = false;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  return read_all(in);
}

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw input_error("invalid " + what + ": '" + std::string(text) + "'");
  return value;
}

FamilyTag family_from_words(const std::vector<std::string>& words) {
  if (words.empty()) throw input_error("--family needs a name");
  if (words.size() == 1) return FamilyTag::parse(words[0]);
  std::string text = words[0] + "(";
  for (std::size_t i = 1; i < words.size(); ++i) text += (i > 1 ? "," : "") + words[i];
  return FamilyTag::parse(text + ")");
}

bool looks_like_spectrum(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{' && text.find("\"theta\"") != std::string::npos;
}

Source from_graph(Graph g, const Config& cfg) {
  const bool closed = cfg.mode == "exact" && !g.family().is_custom();
  Source src{closed ? spectrum_closed_form(g) : spectrum_numeric(g), std::nullopt, std::nullopt, {}, false};
  src.id = g.family().is_custom() ? "graph(n=" + std::to_string(g.order()) + ")" : g.family().name();
  if (!g.family().is_custom()) src.family = g.family();
  src.graph = std::move(g);
  return src;
}

Source from_text(const std::string& text, const Config& cfg, const std::string& name) {
  if (looks_like_spectrum(text)) {
    Source src{parse_spectrum_json(text), std::nullopt, std::nullopt, name, cfg.walk_regular};
    return src;
  }
  return from_graph(parse_graph(text), cfg);
}

Source resolve_source(const Config& cfg, bool need_graph = false) {
  const int given = !cfg.family.empty() + !cfg.file.empty() + !cfg.spectrum_file.empty();
  if (given > 1) throw input_error("give exactly one of --family, --file, --spectrum");
  if (cfg.mode != "exact" && cfg.mode != "float") throw input_error("--mode must be exact or float");
  if (!cfg.family.empty()) {
    const auto tag = family_from_words(cfg.family);
    if (need_graph || cfg.mode == "float") return from_graph(generate_family(tag), cfg);
    Source src{spectrum_closed_form(tag), std::nullopt, tag, tag.name(), true};
    return src;
  }
  if (!cfg.spectrum_file.empty()) {
    Source src{parse_spectrum_json(read_file(cfg.spectrum_file)), std::nullopt, std::nullopt, cfg.spectrum_file,
               cfg.walk_regular};
    return src;
  }
  if (!cfg.file.empty()) return from_text(read_file(cfg.file), cfg, cfg.file);
  return from_text(read_all(std::cin), cfg, "stdin");
}

/// Graph needed for the oracle; families are generated on demand.
Graph require_graph(const Source& src) {
  if (src.graph) return *src.graph;
  if (src.family) return generate_family(*src.family);
  throw input_error("this command needs a graph, not a bare spectrum");
}

/// "3", "1..7", "2,4,6" or a mix; empty means `fallback_from..d`.
std::vector<int> parse_k_range(const std::string& text, int d, int fallback_from) {
  std::vector<int> ks;
  if (text.empty()) {
    for (int k = fallback_from; k <= d; ++k) ks.push_back(k);
    return ks;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      ks.push_back(parse_int(part, "k"));
    } else {
      const int lo = parse_int(std::string_view(part).substr(0, dots), "k");
      const int hi = parse_int(std::string_view(part).substr(dots + 2), "k");
      if (hi < lo) throw input_error("empty k range " + part);
      for (int k = lo; k <= hi; ++k) ks.push_back(k);
    }
  }
  for (int k : ks) {
    if (k < 0 || k > d) throw input_error("k = " + std::to_string(k) + " outside [0, " + std::to_string(d) + "]");
  }
  return ks;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw input_error("cannot write " + cfg.out);
  out << text;
}

RenderOptions render(const Config& cfg) { return {cfg.decimal, 6}; }

SolveOptions solve_options(const Config& cfg) {
  SolveOptions options;
  if (cfg.budget > 0) options.iteration_cap = cfg.budget;
  return options;
}

std::string pick_format(const Config& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw input_error("unsupported --format " + format);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_gen(const Config& cfg, const std::vector<std::string>& words) {
  if (words.empty()) throw input_error("gen needs a family, e.g. 'gen odd 3'");
  const std::string& name = words[0];
  std::vector<int> params;
  for (std::size_t i = 1; i < words.size(); ++i) params.push_back(parse_int(words[i], "parameter"));
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw input_error(name + " takes " + std::to_string(count) + " parameter" + (count == 1 ? "" : "s"));
    }
  };
  std::optional<Graph> g;
  if (name == "complete") {
    need(1);
    g = generate_complete(params[0]);
  } else if (name == "bipartite") {
    need(2);
    g = generate_complete_bipartite(params[0], params[1]);
  } else if (name == "path") {
    need(1);
    g = generate_path(params[0]);
  } else {
    g = generate_family(family_from_words(words));
  }
  const auto format = pick_format(cfg, "edges");
  require_format(format, {"edges", "json"});
  emit(cfg, format == "json" ? to_graph_json(*g) + "\n" : to_edge_list(*g));
  return ok;
}

int cmd_spectrum(const Config& cfg) {
  const auto src = resolve_source(cfg);
  const auto format = pick_format(cfg, "json");
  require_format(format, {"json", "text"});
  if (format == "text") {
    emit(cfg, src.spectrum.to_string() + "\n");
  } else {
    emit(cfg, to_spectrum_json(src.spectrum, src.graph.has_value()) + "\n");
  }
  return ok;
}

int cmd_minor(const Config& cfg) {
  const auto src = resolve_source(cfg);
  const auto ks = parse_k_range(cfg.k_range, src.spectrum.d(), 0);
  std::vector<MinorRow> rows;
  for (int k : ks) {
    auto result = minor_polynomial(src.spectrum, k, solve_options(cfg));
    rows.push_back({k, result.poly.values(), result.trace});
  }
  const auto format = pick_format(cfg, "markdown");
  require_format(format, {"json", "csv", "markdown"});
  if (format == "json") emit(cfg, minor_table_json(src.spectrum, rows, render(cfg)));
  if (format == "csv") emit(cfg, minor_table_csv(src.spectrum, rows, render(cfg)));
  if (format == "markdown") emit(cfg, minor_table_markdown(src.spectrum, rows, render(cfg)));
  return ok;
}

int cmd_alternating(const Config& cfg) {
  const auto src = resolve_source(cfg);
  const auto ks = parse_k_range(cfg.k_range, src.spectrum.d() - 1, 0);
  std::vector<MinorRow> rows;
  for (int k : ks) {
    auto result = alternating_polynomial(src.spectrum, k, solve_options(cfg));
    rows.push_back({k, result.poly.values(), result.value});
  }
  const auto format = pick_format(cfg, "markdown");
  require_format(format, {"json", "csv", "markdown"});
  // The "trace" column carries P_k(theta_0) here.
  std::string text = format == "json"  ? minor_table_json(src.spectrum, rows, render(cfg))
                     : format == "csv" ? minor_table_csv(src.spectrum, rows, render(cfg))
                                       : minor_table_markdown(src.spectrum, rows, render(cfg));
  if (format != "json") {
    const auto pos = text.find("trace");
    if (pos != std::string::npos) text.replace(pos, 5, "P_k(theta_0)");
  }
  emit(cfg, text);
  return ok;
}

int cmd_bounds(const Config& cfg, bool exact_check, bool perfect_code, std::size_t max_vertices) {
  auto src = resolve_source(cfg);
  BoundContext ctx{src.spectrum, src.id, src.graph, src.walk_regular};
  const auto ks = parse_k_range(cfg.k_range, src.spectrum.d(), 1);
  auto report = evaluate_bounds(ctx, ks);

  int status = ok;
  std::string trailer;
  if (exact_check) {
    const Graph g = require_graph(src);
    OracleOptions options;
    options.max_vertices = max_vertices;
    if (cfg.budget > 0) options.node_budget = cfg.budget;
    for (int k : ks) {
      const auto cert = exact_alpha_k(g, k, options);
      if (!cert.optimal) {
        trailer += "exact check k=" + std::to_string(k) + ": budget exceeded, alpha_k >= " +
                   std::to_string(cert.alpha_k) + "\n";
        status = budget;
        continue;
      }
      report.exact.emplace_back(k, Integer(static_cast<unsigned long>(cert.alpha_k)));
      for (const auto& e : report.entries) {
        if (e.k == k && e.applicable && e.floor && *e.floor < Integer(static_cast<unsigned long>(cert.alpha_k))) {
          trailer += std::string("BOUND VIOLATED: ") + to_string(e.method) + " k=" + std::to_string(k) + " gives " +
                     e.floor->get_str() + " < alpha_k = " + std::to_string(cert.alpha_k) + "\n";
          status = violated;
        }
      }
    }
  }
  if (perfect_code) {
    if (!src.family || src.family->kind != FamilyTag::Kind::odd) {
      throw inapplicable_error("--perfect-code applies to odd graphs (--family odd L)");
    }
    trailer += perfect_code_verdict(odd_graph_suite(src.family->params[0])) + "\n";
  }

  const auto format = pick_format(cfg, "markdown");
  require_format(format, {"json", "csv", "markdown"});
  std::string text = format == "json"  ? to_json(report, render(cfg))
                     : format == "csv" ? to_csv(report, render(cfg))
                                       : to_markdown(report);
  emit(cfg, text + trailer);
  return status;
}

int cmd_exact(const Config& cfg, std::size_t max_vertices) {
  const auto src = resolve_source(cfg, true);
  const Graph g = require_graph(src);
  const auto ks = parse_k_range(cfg.k_range.empty() ? "1" : cfg.k_range, static_cast<int>(g.order()), 0);
  OracleOptions options;
  options.max_vertices = max_vertices;
  if (cfg.budget > 0) options.node_budget = cfg.budget;
  std::string text;
  int status = ok;
  for (int k : ks) {
    const auto cert = exact_alpha_k(g, k, options);
    if (!audit_witness(g, cert)) throw numeric_error("witness audit failed for k = " + std::to_string(k));
    text += to_certificate_json(cert) + "\n";
    if (!cert.optimal) status = budget;
  }
  emit(cfg, text);
  if (status == budget) std::cerr << "kminor: budget exceeded; reported alpha_k is a lower bound only\n";
  return status;
}

int cmd_check(const Config& cfg, const std::string& what) {
  const auto src = resolve_source(cfg, true);
  const Graph g = require_graph(src);
  const int k = cfg.k_range.empty() ? 2 : parse_int(cfg.k_range, "k");
  if (what == "walkreg") {
    const auto verdict = is_k_partially_walk_regular(g, k);
    std::ostringstream out;
    out << k << "-partially walk-regular: " << (verdict.regular ? "true" : "false");
    if (!verdict.regular) {
      out << " (fails at l=" << *verdict.failing_length << ": vertices " << verdict.witness->first << " and "
          << verdict.witness->second << " differ)";
    }
    emit(cfg, out.str() + "\n");
    return ok;
  }
  if (what == "regular") {
    const auto degree = g.regular_degree();
    emit(cfg, degree ? "regular of degree " + std::to_string(*degree) + "\n" : std::string("not regular\n"));
    return ok;
  }
  throw input_error("unknown check '" + what + "' (expected walkreg or regular)");
}

int cmd_report(const Config& cfg) {
  std::string text;
  const auto h27 = family_context(FamilyTag::hamming(2, 7));
  const auto j147 = family_context(FamilyTag::johnson(14, 7));
  for (const auto* ctx : {&h27, &j147}) {
    std::vector<MinorRow> rows;
    for (int k = 1; k <= ctx->spectrum.d(); ++k) {
      auto result = minor_polynomial(ctx->spectrum, k);
      rows.push_back({k, result.poly.values(), result.trace});
    }
    text += "## Minor polynomials of " + ctx->id + "\n\n" + minor_table_markdown(ctx->spectrum, rows) + "\n";
  }
  const std::vector<int> h_ks{1, 2, 3, 4, 5, 6, 7};
  const std::vector<int> j_ks{3, 4, 5, 6, 7};
  text += "## Bounds for " + h27.id + "\n\n" + to_markdown(evaluate_bounds(h27, h_ks)) + "\n";
  text += "## Bounds for " + j147.id + "\n\n" + to_markdown(evaluate_bounds(j147, j_ks)) + "\n";
  std::vector<OddGraphReport> odd;
  for (int ell = 4; ell <= 7; ++ell) odd.push_back(odd_graph_suite(ell));
  text += "## Odd graphs\n\n" + odd_graph_markdown(odd);
  emit(cfg, text);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minor polynomials and spectral bounds on the k-independence number"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--family", cfg.family, "Named family, e.g. 'hamming 2 7' or 'odd(3)'")->expected(1, 3);
  app.add_option("--file", cfg.file, "Graph (edge list or JSON) or spectrum JSON file");
  app.add_option("--spectrum", cfg.spectrum_file, "Spectrum JSON file");
  app.add_option("--k", cfg.k_range, "k, range a..b, or list");
  app.add_option("--format", cfg.format, "json | csv | markdown (edges | json for gen, json | text for spectrum)");
  app.add_option("--mode", cfg.mode, "exact (closed-form spectra) or float (numeric eigensolve)");
  app.add_option("--budget", cfg.budget, "Search-node budget for the oracle, iteration cap for the LP");
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_flag("--decimal", cfg.decimal, "Print rationals as decimals");
  app.add_flag("--walk-regular", cfg.walk_regular, "Attest that a bare spectrum comes from a walk-regular graph");

  std::vector<std::string> gen_words;
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family", gen_words, "hamming Q L | johnson V K | odd L | cycle N | complete N | bipartite A B | path N")
      ->required();

  auto* spectrum = app.add_subcommand("spectrum", "Print the spectrum");
  auto* minor = app.add_subcommand("minor", "k-minor polynomial values and traces");
  auto* alternating = app.add_subcommand("alternating", "k-alternating polynomials");

  bool exact_check = false;
  bool perfect_code = false;
  std::size_t max_vertices = OracleOptions{}.max_vertices;
  auto* bounds = app.add_subcommand("bounds", "Compare all bounds on alpha_k");
  bounds->add_flag("--exact-check", exact_check, "Run the exact oracle and validate every bound");
  bounds->add_flag("--perfect-code", perfect_code, "Odd graphs: decide 1-perfect code exclusion");
  bounds->add_option("--max-vertices", max_vertices, "Largest graph the oracle searches exactly");

  auto* exact = app.add_subcommand("exact", "Exact alpha_k with witness");
  exact->add_option("--max-vertices", max_vertices, "Largest graph the oracle searches exactly");

  std::string check_what;
  auto* check = app.add_subcommand("check", "Structural checks");
  check->add_option("what", check_what, "walkreg | regular")->required();

  bool paper_tables = false;
  auto* report = app.add_subcommand("report", "Regenerate the reference tables");
  report->add_flag("--paper-tables", paper_tables, "Minor tables, bound tables and the odd-graph table")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*gen) return cmd_gen(cfg, gen_words);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*minor) return cmd_minor(cfg);
    if (*alternating) return cmd_alternating(cfg);
    if (*bounds) return cmd_bounds(cfg, exact_check, perfect_code, max_vertices);
    if (*exact) return cmd_exact(cfg, max_vertices);
    if (*check) return cmd_check(cfg, check_what);
    if (*report) return cmd_report(cfg);
  } catch (const Error& e) {
    std::cerr << "kminor: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::inapplicable: return inapplicable;
      case ErrorKind::budget: return budget;
      case ErrorKind::input: return bad_input;
      case ErrorKind::numeric: return inapplicable;
    }
  } catch (const BoundViolation& e) {
    std::cerr << "kminor: " << e.what() << "\n" << to_certificate_json(e.certificate()) << "\n";
    return violated;
  } catch (const std::exception& e) {
    std::cerr << "kminor: " << e.what() << "\n";
    return bad_input;
  }
  return ok;
}
