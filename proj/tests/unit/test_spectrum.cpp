#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "kminor/error.hpp"
#include "kminor/spectrum.hpp"

using namespace kminor;
using kminor::testing::make_spectrum;
using kminor::testing::random_graph;

namespace {

long triangles(const Graph& g) {
  long count = 0;
  for (const auto& e : g.edges()) {
    for (std::size_t w = e.v + 1; w < g.order(); ++w) count += (g.adjacent(e.u, w) && g.adjacent(e.v, w)) ? 1 : 0;
  }
  return count;
}

std::vector<FamilyTag> numeric_families() {
  return {FamilyTag::hamming(2, 3), FamilyTag::hamming(3, 3), FamilyTag::hamming(2, 7), FamilyTag::hamming(4, 4),
          FamilyTag::johnson(6, 2), FamilyTag::johnson(8, 3), FamilyTag::johnson(10, 5), FamilyTag::odd(3),
          FamilyTag::odd(4),        FamilyTag::odd(5),        FamilyTag::cycle(5),       FamilyTag::cycle(6),
          FamilyTag::cycle(12),     FamilyTag::cycle(17)};
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("closed forms of the named families") {
  CHECK(spectrum_closed_form(FamilyTag::hamming(2, 7)) ==
        make_spectrum({7, 5, 3, 1, -1, -3, -5, -7}, {1, 7, 21, 35, 35, 21, 7, 1}));
  CHECK(spectrum_closed_form(FamilyTag::johnson(14, 7)) ==
        make_spectrum({49, 35, 23, 13, 5, -1, -5, -7}, {1, 13, 77, 273, 637, 1001, 1001, 429}));
  CHECK(spectrum_closed_form(FamilyTag::odd(3)) == make_spectrum({3, 1, -2}, {1, 5, 4}));
  CHECK(spectrum_closed_form(FamilyTag::odd(3)).to_string() == "{3^1, 1^5, -2^4}");
  CHECK(spectrum_closed_form(FamilyTag::cycle(6)) == make_spectrum({2, 1, -1, -2}, {1, 2, 2, 1}));
  CHECK_FALSE(spectrum_closed_form(FamilyTag::cycle(5)).exact());
}

TEST_CASE("numeric eigensolve agrees with the closed forms") {
  for (const auto& tag : numeric_families()) {
    CAPTURE(tag.name());
    const auto g = generate_family(tag);
    REQUIRE(g.order() <= 512);
    const auto closed = spectrum_closed_form(tag);
    const auto numeric = spectrum_numeric(g);
    REQUIRE(numeric.d() == closed.d());
    CHECK(numeric.mult() == closed.mult());
    for (int i = 0; i <= closed.d(); ++i) {
      CHECK(std::abs(to_double(numeric.theta(i)) - to_double(closed.theta(i))) < 1e-8);
    }
    CHECK(numeric.exact() == closed.exact());
  }
}

TEST_CASE("moments count vertices, edges and triangles") {
  std::mt19937_64 rng(5);
  std::vector<Graph> graphs;
  for (const auto& tag : numeric_families()) graphs.push_back(generate_family(tag));
  for (int trial = 0; trial < 12; ++trial) graphs.push_back(random_graph(rng, 24, 0.3));
  graphs.push_back(generate_complete_bipartite(2, 5));
  graphs.push_back(generate_path(7));
  for (const auto& g : graphs) {
    const auto s = spectrum_numeric(g);
    const double expected[4] = {static_cast<double>(g.order()), 0.0, 2.0 * static_cast<double>(g.edge_count()),
                                6.0 * static_cast<double>(triangles(g))};
    for (unsigned j = 0; j < 4; ++j) {
      CAPTURE(j);
      if (s.exact()) {
        CHECK(s.power_sum(j) == Rational(static_cast<long>(expected[j])));
      } else {
        CHECK(std::abs(to_double(s.power_sum(j)) - expected[j]) < 1e-6 * (1.0 + expected[j]));
      }
    }
  }
}

TEST_CASE("symmetric eigensolver on a small matrix") {
  // [[2,1],[1,2]] has eigenvalues 3 and 1.
  const auto values = symmetric_eigenvalues({2, 1, 1, 2}, 2);
  REQUIRE(values.size() == 2);
  CHECK(values[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(values[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("regularity is read off the spectrum") {
  CHECK(make_spectrum({3, 1, -2}, {1, 5, 4}).connected_regular());
  const auto path = spectrum_numeric(generate_path(3));
  CHECK_FALSE(path.regular());
  CHECK(spectrum_numeric(generate_complete_bipartite(2, 3)).exact() == false);
}

TEST_CASE("spectrum JSON") {
  const auto h = parse_spectrum_json(R"({"theta":[7,5,3,1,-1,-3,-5,-7],"mult":[1,7,21,35,35,21,7,1]})");
  CHECK(h == spectrum_closed_form(FamilyTag::hamming(2, 7)));
  CHECK(parse_spectrum_json(to_spectrum_json(h)) == h);
  CHECK(parse_spectrum_json(R"({"theta":["1/2","-1/2"],"mult":[1,1]})").theta(0) == Rational(1, 2));
  CHECK_NOTHROW(parse_spectrum_json(R"({"theta":[3,-2],"mult":[1,4]})"));
  CHECK_THROWS_AS(parse_spectrum_json(R"({"theta":[3,-2],"mult":[1,4],"from_graph":true})"), Error);
  CHECK_THROWS_AS(parse_spectrum_json(R"({"theta":[1,2],"mult":[1,1]})"), Error);
  CHECK_THROWS_AS(parse_spectrum_json(R"({"theta":[1,-1],"mult":[1,0]})"), Error);
  CHECK_THROWS_AS(parse_spectrum_json(R"({"theta":[1,-1]})"), Error);
  CHECK_THROWS_AS(parse_spectrum_json("not json"), Error);
}

}
