#include <doctest.h>

#include <nlohmann/json.hpp>

#include "kminor/report.hpp"

using namespace kminor;

TEST_SUITE("report") {

TEST_CASE("markdown bound table has methods as rows and k as columns") {
  const auto ctx = family_context(FamilyTag::hamming(2, 7));
  const std::vector<int> ks{1, 2, 3, 4, 5, 6, 7};
  const auto md = to_markdown(evaluate_bounds(ctx, ks));
  CHECK(md.find("| hamming(2,7) / k | 1 | 2 | 3 | 4 | 5 | 6 | 7 |") != std::string::npos);
  CHECK(md.find("| 64 | 16 | 8 | 3 | 2 | 2 | 1 |") != std::string::npos);
  CHECK(md.find("| 109 | 72 | 36 | 19 | 7 | 2 | -- |") != std::string::npos);
}

TEST_CASE("JSON and CSV carry exact raw values") {
  const auto ctx = family_context(FamilyTag::odd(5));
  const std::vector<int> ks{2};
  auto report = evaluate_bounds(ctx, ks);
  report.exact.emplace_back(2, Integer(12));
  const auto doc = nlohmann::json::parse(to_json(report));
  CHECK(doc["graph"] == "odd(5)");
  bool saw_minor = false;
  for (const auto& e : doc["entries"]) {
    if (e["method"] == "minor") {
      saw_minor = true;
      CHECK(e["raw"] == "27/2");
      CHECK(e["floor"] == "13");
    }
  }
  CHECK(saw_minor);
  CHECK(doc["exact"]["2"] == "12");
  const auto csv = to_csv(report);
  CHECK(csv.rfind("method,k,raw,floor,applicable,note\n", 0) == 0);
  CHECK(csv.find("minor,2,27/2,13,true,") != std::string::npos);
  CHECK(csv.find("exact,2,12,12,true,") != std::string::npos);
  RenderOptions decimal;
  decimal.decimal = true;
  decimal.digits = 2;
  CHECK(to_csv(report, decimal).find("minor,2,13.50,13") != std::string::npos);
}

TEST_CASE("minor tables list the mesh from theta_d to theta_0") {
  const auto s = spectrum_closed_form(FamilyTag::johnson(14, 7));
  const auto r = minor_polynomial(s, 5);
  const std::vector<MinorRow> rows{{5, r.poly.values(), r.trace}};
  CHECK(minor_table_markdown(s, rows).find("| 5 | 0 | 1/2860 | 0 | 0 | 0 | 0 | 27/260 | 1 | 27/10 |") !=
        std::string::npos);
  CHECK(minor_table_csv(s, rows).find("5,0,1/2860,0,0,0,0,27/260,1,27/10") != std::string::npos);
  const auto doc = nlohmann::json::parse(minor_table_json(s, rows));
  CHECK(doc["rows"][0]["floor"] == "2");
  CHECK(doc["theta"][0] == "-7");
}

TEST_CASE("odd-graph output") {
  CHECK(perfect_code_verdict(odd_graph_suite(5)) == "1-perfect code excluded: 13 < 21");
  CHECK(perfect_code_verdict(odd_graph_suite(4)) == "1-perfect code not excluded: 7 >= 7");
  const auto md = odd_graph_markdown({odd_graph_suite(4), odd_graph_suite(6)});
  CHECK(md.find("| O_6 | 66 | 21 | 11 |") != std::string::npos);
  const auto doc = nlohmann::json::parse(odd_graph_json(odd_graph_suite(7)));
  CHECK(doc["perfect_code_excluded"] == true);
  CHECK(doc["minor"]["2"]["floor"] == "158");
}

}
