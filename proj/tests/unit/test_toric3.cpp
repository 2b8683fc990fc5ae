#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "pairloc/toric3.hpp"
#include "test_util.hpp"

using namespace pairloc;
using pairloc::testing::kind_name;
using pairloc::testing::thrown_kind;

namespace {

bool has_weight(const FixedPoint& p, const Weight& w) {
  return std::find(p.tangent_weights.begin(), p.tangent_weights.end(), w) != p.tangent_weights.end();
}

std::int64_t det3(const std::array<Weight, 3>& w) {
  return w[0][0] * (w[1][1] * w[2][2] - w[1][2] * w[2][1]) - w[0][1] * (w[1][0] * w[2][2] - w[1][2] * w[2][0]) +
         w[0][2] * (w[1][0] * w[2][1] - w[1][1] * w[2][0]);
}

}  // namespace

TEST_SUITE("toric3") {

TEST_CASE("catalog sizes") {
  CHECK(catalog_ids() == std::vector<std::string>{"p3", "p1xp2", "p1p1p1"});
  struct Expect {
    const char* id;
    std::size_t points, edges, rank;
  };
  for (const Expect& e : {Expect{"p3", 4, 6, 1}, Expect{"p1xp2", 6, 9, 2}, Expect{"p1p1p1", 8, 12, 3}}) {
    const auto X = catalog_geometry(e.id);
    CHECK(X.fixed_points.size() == e.points);
    CHECK(X.edges.size() == e.edges);
    CHECK(X.h2_rank == e.rank);
  }
}

TEST_CASE("edge data is consistent with the fixed points") {
  for (const auto& id : catalog_ids()) {
    const auto X = catalog_geometry(id);
    std::vector<int> valence(X.fixed_points.size(), 0);
    for (const auto& e : X.edges) {
      const auto& p = X.fixed_points[e.p];
      const auto& pp = X.fixed_points[e.pprime];
      ++valence[e.p];
      ++valence[e.pprime];
      CHECK(has_weight(p, -e.u0));
      CHECK(has_weight(pp, e.u0));
      for (int i = 0; i < 2; ++i) {
        CHECK(has_weight(p, e.nu[i]));
        CHECK(has_weight(pp, e.nuprime[i]));
        CHECK(e.nuprime[i] - e.nu[i] == e.m[i] * e.u0);
      }
      // c1 . C from the class and from the normal bundle
      std::int64_t c1 = 0;
      for (std::size_t k = 0; k < X.h2_rank; ++k) c1 += X.c1_degrees[k] * e.curve_class.coords[k];
      CHECK(c1 == e.c1_degree());
      const Edge r = e.reversed();
      CHECK(r.p == e.pprime);
      CHECK(r.u0 == -e.u0);
      CHECK(r.m == e.m);
    }
    for (int v : valence) CHECK(v == 3);
    for (const auto& p : X.fixed_points) CHECK(std::abs(det3(p.tangent_weights)) == 1);
  }
}

TEST_CASE("json roundtrip and validation failures") {
  for (const auto& id : catalog_ids()) {
    const auto X = catalog_geometry(id);
    const auto Y = geometry_from_json(X.to_json());
    CHECK(Y.to_json() == X.to_json());
    const auto Z = load_and_validate(std::string(PAIRLOC_DATA_DIR) + "/" + id + ".json");
    CHECK(Z.to_json() == X.to_json());
  }
  try {
    load_and_validate(std::string(PAIRLOC_DATA_DIR) + "/broken.json");
    FAIL("broken geometry accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(e.detail().find("edge 2") != std::string::npos);
    CHECK(e.detail().find("normal-matching") != std::string::npos);
  }
  CHECK(kind_name(ErrorKind::ParseError) == thrown_kind([] { load_and_validate("no-such-geometry"); }));
  auto doc = catalog_geometry("p3").to_json();
  doc["fixed_points"][0]["tangent_weights"][0] = {0, 0, 0};
  CHECK(kind_name(ErrorKind::ValidationError) == thrown_kind([&] { geometry_from_json(doc); }));
}

TEST_CASE("torus permutation relabels weights") {
  const auto X = catalog_geometry("p1xp2");
  const auto Y = permute_torus(X, {1, 2, 0});
  CHECK(Y.fixed_points.size() == X.fixed_points.size());
  const Weight w = X.fixed_points[0].tangent_weights[0];
  const Weight moved = Y.fixed_points[0].tangent_weights[0];
  CHECK(moved[1] == w[0]);
  CHECK(moved[2] == w[1]);
  CHECK(moved[0] == w[2]);
  const auto back = permute_torus(Y, {2, 0, 1});
  CHECK(back.to_json() == X.to_json());
}

TEST_CASE("curve classes") {
  const auto X = catalog_geometry("p1xp2");
  CHECK(parse_curve_class(X, "fiber").coords == std::vector<std::int64_t>{1, 0});
  CHECK(parse_curve_class(X, "2*fiber").coords == std::vector<std::int64_t>{2, 0});
  CHECK(parse_curve_class(X, "fiber+line").coords == std::vector<std::int64_t>{1, 1});
  CHECK(parse_curve_class(X, "0,3").coords == std::vector<std::int64_t>{0, 3});
  CHECK(virtual_dimension(X, parse_curve_class(X, "fiber")) == 2);
  CHECK(virtual_dimension(X, parse_curve_class(X, "line")) == 3);
  CHECK(virtual_dimension(X, parse_curve_class(X, "2*fiber")) == 4);
  CHECK(kind_name(ErrorKind::ParseError) == thrown_kind([&] { parse_curve_class(X, "plane"); }));
  CHECK(kind_name(ErrorKind::ZeroClass) == thrown_kind([&] { virtual_dimension(X, parse_curve_class(X, "0,0")); }));
  const auto Q = catalog_geometry("p1p1p1");
  CHECK(parse_curve_class(Q, "e1+e2").coords == std::vector<std::int64_t>{1, 1, 0});
  CHECK(virtual_dimension(Q, parse_curve_class(Q, "e1+e2")) == 4);
}

TEST_CASE("class decompositions") {
  const auto P = catalog_geometry("p3");
  const auto lines = decompose_class(P, parse_curve_class(P, "line"));
  CHECK(lines.size() == 6);
  for (const auto& d : lines) {
    REQUIRE(d.size() == 1);
    CHECK(d[0].multiplicity == 1);
  }
  const auto X = catalog_geometry("p1xp2");
  const auto two = decompose_class(X, parse_curve_class(X, "2*fiber"));
  // three doubled fibers and three pairs of distinct fibers
  CHECK(two.size() == 6);
  for (const auto& d : two) {
    std::int64_t total = 0;
    for (const auto& u : d) total += u.multiplicity;
    CHECK(total == 2);
  }
}

}
