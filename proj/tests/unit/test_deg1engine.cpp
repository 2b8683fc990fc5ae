#include "doctest.h"
#include "pairloc/deg1engine.hpp"
#include "test_util.hpp"

using namespace pairloc;
using pairloc::testing::kind_name;
using pairloc::testing::thrown_kind;

namespace {

// Sections of a degree-m bundle on the invariant P^1, summed directly:
// chi = sum_{k=0}^{m} t^{w0 + k u} for m >= 0, and -sum_{k=m+1}^{-1} t^{w0 + k u} below.
LaurentPoly chi_closed_form(const Weight& u, const Weight& w0, std::int64_t m) {
  LaurentPoly out;
  if (m >= 0) {
    for (std::int64_t k = 0; k <= m; ++k) out.add_term(w0 + k * u, Rat(1));
  } else {
    for (std::int64_t k = m + 1; k <= -1; ++k) out.add_term(w0 + k * u, Rat(-1));
  }
  return out;
}

struct Case {
  const char* geometry;
  const char* beta;
};
const Case kDegreeOne[] = {{"p3", "line"}, {"p1xp2", "fiber"}, {"p1xp2", "line"}, {"p1p1p1", "e1"}, {"p1p1p1", "e3"}};

}  // namespace

TEST_SUITE("deg1engine") {

TEST_CASE("two-point chi equals the section count") {
  for (const auto& id : catalog_ids()) {
    const auto X = catalog_geometry(id);
    for (const auto& e : X.edges) {
      for (std::int64_t m = -5; m <= 5; ++m) {
        const Weight w0{2, -1, 3};
        CHECK(cf_normalize(equivariant_chi(e, w0, m)) == chi_closed_form(e.u0, w0, m));
      }
    }
  }
}

TEST_CASE("enumeration") {
  const auto P = catalog_geometry("p3");
  const auto line = parse_curve_class(P, "line");
  CHECK(enumerate_deg1(P, line, 0).empty());
  for (std::int64_t n = 1; n <= 5; ++n) {
    const auto pairs = enumerate_deg1(P, line, n);
    CHECK(pairs.size() == static_cast<std::size_t>(6 * n));
    for (const auto& fp : pairs) CHECK(fp.n() == n);
  }
  const auto X = catalog_geometry("p1xp2");
  CHECK(kind_name(ErrorKind::NotDegreeOne) == thrown_kind([&] { enumerate_deg1(X, parse_curve_class(X, "2*fiber"), 1); }));
  const auto Q = catalog_geometry("p1p1p1");
  CHECK(kind_name(ErrorKind::NotDegreeOne) == thrown_kind([&] { enumerate_deg1(Q, parse_curve_class(Q, "e1+e2"), 2); }));
}

TEST_CASE("character invariants on every degree-one pair") {
  for (const auto& c : kDegreeOne) {
    const auto X = catalog_geometry(c.geometry);
    const auto beta = parse_curve_class(X, c.beta);
    const auto d = virtual_dimension(X, beta);
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (const auto& fp : enumerate_deg1(X, beta, n)) {
        const auto ch = tvir_character_deg1(X, fp);
        CHECK(ch.rank() == d);
        CHECK(ch.coefficient(Weight{}) == 0);
        const Edge& e = X.edges[fp.edge];
        CHECK(tvir_character_deg1(e.reversed(), fp.b, fp.a) == ch);
      }
    }
  }
}

TEST_CASE("unobstructed lines in P3 give an honest tangent space") {
  // P_1(P^3, line) is the Grassmannian of lines, smooth of the expected dimension.
  const auto P = catalog_geometry("p3");
  for (const auto& fp : enumerate_deg1(P, parse_curve_class(P, "line"), 1)) {
    const auto ch = tvir_character_deg1(P, fp);
    CHECK(ch.size() == 4);
    for (const auto& [w, c] : ch.terms()) CHECK(c == 1);
  }
}

TEST_CASE("invalid input") {
  const auto P = catalog_geometry("p3");
  CHECK(kind_name(ErrorKind::InvalidArgument) == thrown_kind([&] { tvir_character_deg1(P.edges[0], -1, 0); }));
}

}
