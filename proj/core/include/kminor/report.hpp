#pragma once

#include <string>
#include <vector>

#include "kminor/bounds.hpp"

namespace kminor {

struct RenderOptions {
  /// Print raw values as decimals instead of "p/q".
  bool decimal = false;
  int digits = 4;
};

std::string format_rational(const Rational& value, const RenderOptions& options);

/// {"graph":, "ks": [...], "entries": [{"method", "k", "raw", "floor", "applicable", "note"}], "exact": {...}}
std::string to_json(const BoundReport& report, const RenderOptions& options = {});
/// method,k,raw,floor,applicable,note
std::string to_csv(const BoundReport& report, const RenderOptions& options = {});
/// Methods as rows, k as columns, floored values; "--" where undefined and
/// a trailing "(n/a)" where preconditions fail.
std::string to_markdown(const BoundReport& report);

struct MinorRow {
  int k = 0;
  std::vector<Rational> values;  // mesh order theta_0..theta_d
  Rational trace;
};

/// Value tables list the mesh from theta_d up to theta_0, as in the usual layout.
std::string minor_table_json(const Spectrum& spectrum, const std::vector<MinorRow>& rows,
                             const RenderOptions& options = {});
std::string minor_table_csv(const Spectrum& spectrum, const std::vector<MinorRow>& rows,
                            const RenderOptions& options = {});
std::string minor_table_markdown(const Spectrum& spectrum, const std::vector<MinorRow>& rows,
                                 const RenderOptions& options = {});

/// Rows O_ell, columns k = 2..; floored minor bounds plus the perfect-code verdict.
std::string odd_graph_markdown(const std::vector<OddGraphReport>& reports);
std::string odd_graph_json(const OddGraphReport& report);
/// "1-perfect code excluded: 13 < 21" or "... not excluded: 7 >= 7".
std::string perfect_code_verdict(const OddGraphReport& report);

}  // namespace kminor
