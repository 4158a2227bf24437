#include "kminor/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kminor {

using json = nlohmann::ordered_json;

std::string format_rational(const Rational& value, const RenderOptions& options) {
  return options.decimal ? to_decimal(value, options.digits) : to_string(value);
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<Method> methods_present(const BoundReport& report) {
  std::vector<Method> out;
  for (auto m : all_methods()) {
    const bool present = std::any_of(report.entries.begin(), report.entries.end(),
                                     [m](const BoundEntry& e) { return e.method == m; });
    if (present) out.push_back(m);
  }
  return out;
}

std::string markdown_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string markdown_rule(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += "---|";
  return out + "\n";
}

}  // namespace

std::string to_json(const BoundReport& report, const RenderOptions& options) {
  json doc;
  doc["graph"] = report.graph_id;
  doc["ks"] = report.ks;
  doc["entries"] = json::array();
  for (const auto& e : report.entries) {
    json entry;
    entry["method"] = to_string(e.method);
    entry["k"] = e.k;
    entry["raw"] = e.raw ? json(format_rational(*e.raw, options)) : json(nullptr);
    entry["floor"] = e.floor ? json(e.floor->get_str()) : json(nullptr);
    entry["applicable"] = e.applicable;
    if (!e.note.empty()) entry["note"] = e.note;
    doc["entries"].push_back(std::move(entry));
  }
  if (!report.exact.empty()) {
    json exact = json::object();
    for (const auto& [k, alpha] : report.exact) exact[std::to_string(k)] = alpha.get_str();
    doc["exact"] = std::move(exact);
  }
  return doc.dump(2) + "\n";
}

std::string to_csv(const BoundReport& report, const RenderOptions& options) {
  std::ostringstream out;
  out << "method,k,raw,floor,applicable,note\n";
  for (const auto& e : report.entries) {
    out << to_string(e.method) << ',' << e.k << ',' << (e.raw ? format_rational(*e.raw, options) : "") << ','
        << (e.floor ? e.floor->get_str() : "") << ',' << (e.applicable ? "true" : "false") << ','
        << csv_field(e.note) << '\n';
  }
  for (const auto& [k, alpha] : report.exact) out << "exact," << k << ',' << alpha.get_str() << ',' << alpha.get_str()
                                                 << ",true,\n";
  return out.str();
}

std::string to_markdown(const BoundReport& report) {
  std::vector<std::string> header{report.graph_id.empty() ? "method / k" : report.graph_id + " / k"};
  for (int k : report.ks) header.push_back(std::to_string(k));
  std::string out = markdown_row(header) + markdown_rule(header.size());
  for (auto m : methods_present(report)) {
    std::vector<std::string> cells{label(m)};
    for (int k : report.ks) {
      const auto* e = report.find(m, k);
      if (!e || !e->floor) {
        cells.emplace_back("--");
      } else {
        cells.push_back(e->floor->get_str() + (e->applicable ? "" : " (n/a)"));
      }
    }
    out += markdown_row(cells);
  }
  if (!report.exact.empty()) {
    std::vector<std::string> cells{"Exact alpha_k"};
    for (int k : report.ks) {
      auto it = std::find_if(report.exact.begin(), report.exact.end(), [k](const auto& p) { return p.first == k; });
      cells.push_back(it == report.exact.end() ? "--" : it->second.get_str());
    }
    out += markdown_row(cells);
  }
  return out;
}

std::string minor_table_json(const Spectrum& spectrum, const std::vector<MinorRow>& rows,
                             const RenderOptions& options) {
  json doc;
  doc["spectrum"] = spectrum.to_string();
  json theta = json::array();
  for (int i = spectrum.d(); i >= 0; --i) theta.push_back(to_string(spectrum.theta(i)));
  doc["theta"] = std::move(theta);
  doc["rows"] = json::array();
  for (const auto& row : rows) {
    json values = json::array();
    for (int i = spectrum.d(); i >= 0; --i) values.push_back(format_rational(row.values[i], options));
    doc["rows"].push_back({{"k", row.k}, {"values", std::move(values)}, {"trace", format_rational(row.trace, options)},
                           {"floor", floor(row.trace).get_str()}});
  }
  return doc.dump(2) + "\n";
}

std::string minor_table_csv(const Spectrum& spectrum, const std::vector<MinorRow>& rows,
                            const RenderOptions& options) {
  std::ostringstream out;
  out << "k";
  for (int i = spectrum.d(); i >= 0; --i) out << ",x_" << i;
  out << ",trace\n";
  for (const auto& row : rows) {
    out << row.k;
    for (int i = spectrum.d(); i >= 0; --i) out << ',' << format_rational(row.values[i], options);
    out << ',' << format_rational(row.trace, options) << '\n';
  }
  return out.str();
}

std::string minor_table_markdown(const Spectrum& spectrum, const std::vector<MinorRow>& rows,
                                 const RenderOptions& options) {
  std::vector<std::string> header{"k"};
  for (int i = spectrum.d(); i >= 0; --i) header.push_back("x_" + std::to_string(i) + " (" + to_string(spectrum.theta(i)) + ")");
  header.emplace_back("trace");
  std::string out = markdown_row(header) + markdown_rule(header.size());
  for (const auto& row : rows) {
    std::vector<std::string> cells{std::to_string(row.k)};
    for (int i = spectrum.d(); i >= 0; --i) cells.push_back(format_rational(row.values[i], options));
    cells.push_back(format_rational(row.trace, options));
    out += markdown_row(cells);
  }
  return out;
}

std::string perfect_code_verdict(const OddGraphReport& report) {
  const std::string bound = floor(report.alpha2).get_str();
  const std::string size = to_string(report.perfect_code_size);
  if (report.perfect_code_excluded) return "1-perfect code excluded: " + bound + " < " + size;
  return "1-perfect code not excluded: " + bound + " >= " + size;
}

std::string odd_graph_markdown(const std::vector<OddGraphReport>& reports) {
  std::size_t max_k = 2;
  for (const auto& r : reports) {
    if (!r.minor.empty()) max_k = std::max(max_k, r.minor.size() - 1);
  }
  std::vector<std::string> header{"graph / k"};
  for (std::size_t k = 2; k <= max_k; ++k) header.push_back(std::to_string(k));
  header.emplace_back("n/(l+1)");
  header.emplace_back("perfect code");
  std::string out = markdown_row(header) + markdown_rule(header.size());
  for (const auto& r : reports) {
    std::vector<std::string> cells{"O_" + std::to_string(r.ell)};
    // minor[k-1] holds k; the k = d entry is always 1 and is shown as "--".
    for (std::size_t k = 2; k <= max_k; ++k) {
      cells.push_back(k < r.minor.size() ? floor(r.minor[k - 1]).get_str() : "--");
    }
    cells.push_back(to_string(r.perfect_code_size));
    cells.emplace_back(r.perfect_code_excluded ? "excluded" : "not excluded");
    out += markdown_row(cells);
  }
  return out;
}

std::string odd_graph_json(const OddGraphReport& report) {
  json doc;
  doc["ell"] = report.ell;
  doc["n"] = report.n;
  doc["alpha1_bound"] = to_string(report.alpha1);
  doc["alpha2_bound"] = to_string(report.alpha2);
  doc["perfect_code_size"] = to_string(report.perfect_code_size);
  doc["perfect_code_excluded"] = report.perfect_code_excluded;
  doc["verdict"] = perfect_code_verdict(report);
  doc["alpha_d_minus_1_bound"] = to_string(report.alpha_d_minus_1);
  json minor = json::object();
  for (std::size_t i = 0; i < report.minor.size(); ++i) {
    minor[std::to_string(i + 1)] = {{"raw", to_string(report.minor[i])}, {"floor", floor(report.minor[i]).get_str()}};
  }
  doc["minor"] = std::move(minor);
  return doc.dump(2) + "\n";
}

}  // namespace kminor
