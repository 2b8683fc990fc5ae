#include "doctest.h"
#include "pairloc/chernloc.hpp"
#include "pairloc/upoly.hpp"
#include "test_util.hpp"

using namespace pairloc;
using pairloc::testing::kind_name;
using pairloc::testing::thrown_kind;

namespace {

// Truncated power series in one hyperplane class h with h^{dim+1} = 0.
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t len) {
  std::vector<Rat> out(len, Rat(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Chern numbers of a hypersurface of degree `deg` in P^{ambient} (deg = 1 is
/// the projective space of dimension ambient - 1), indexed like chern_indices.
std::vector<Rat> hypersurface_chern_numbers(int ambient, int deg) {
  const int dim = ambient - 1;
  const std::size_t len = static_cast<std::size_t>(dim) + 1;
  std::vector<Rat> c(len, Rat(0));
  c[0] = 1;
  std::vector<Rat> lin{Rat(1), Rat(1)};
  for (int k = 0; k <= ambient; ++k) c = series_mul(c, lin, len);
  // divide by (1 + deg h)
  std::vector<Rat> inv(len, Rat(0));
  for (std::size_t i = 0; i < len; ++i) inv[i] = pow(Rat(-deg), static_cast<long>(i));
  c = series_mul(c, inv, len);
  std::vector<Rat> out;
  for (const auto& I : chern_indices(dim)) {
    Rat v = deg;  // integral of h^dim
    for (std::size_t k = 0; k < I.exps.size(); ++k) v *= pow(c[k + 1], static_cast<long>(I.exps[k]));
    out.push_back(v);
  }
  return out;
}

std::vector<Rat> localizer_numbers(const char* id, const char* beta, std::int64_t n, const EngineOptions& opts = {}) {
  const auto X = catalog_geometry(id);
  Localizer loc(X, parse_curve_class(X, beta), opts);
  return loc.chern_numbers(n, chern_indices(loc.dimension())).values;
}

}  // namespace

TEST_SUITE("chernloc") {

TEST_CASE("index enumeration") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11};
  for (std::int64_t d = 0; d <= 6; ++d) {
    const auto idx = chern_indices(d);
    CHECK(idx.size() == counts[d]);
    for (const auto& I : idx) CHECK(I.degree() == d);
    CHECK(std::is_sorted(idx.rbegin(), idx.rend()));
  }
  std::vector<std::string> names;
  for (const auto& I : chern_indices(4)) names.push_back(to_string(I));
  CHECK(names == std::vector<std::string>{"(4)", "(2,1)", "(1,0,1)", "(0,2)", "(0,0,0,1)"});
  CHECK(parse_chern_index("0,1", 2) == chern_indices(2)[1]);
  CHECK(parse_chern_index("(2)", 2) == chern_indices(2)[0]);
  CHECK(kind_name(ErrorKind::InvalidArgument) == thrown_kind([] { parse_chern_index("3", 2); }));
  CHECK(kind_name(ErrorKind::ParseError) == thrown_kind([] { parse_chern_index("a,b", 2); }));
}

TEST_CASE("chern data of a virtual representation") {
  const Weight w1{1, 0, 0}, w2{0, 1, 0}, w3{1, 1, 1};
  LaurentPoly ch{{w1, Rat(1)}, {w2, Rat(1)}};
  ch.add_term(w3, Rat(-1));
  const auto data = character_to_chern_data(ch, 2);
  const std::array<Rat, 3> s{Rat(2), Rat(5), Rat(-3)};
  // c = (1 + x1)(1 + x2)/(1 + x3) with x1 = 2, x2 = 5, x3 = 4
  CHECK(data.c[0].evaluate(s) == 3);
  CHECK(data.c[1].evaluate(s) == 10 - 4 * 7 + 16);
  CHECK(localized_contribution(ch, 2, s, chern_indices(2)) == std::vector<Rat>{make_rat(36, 10), make_rat(-8, 10)});
  CHECK(kind_name(ErrorKind::ZeroWeightPresent) ==
        thrown_kind([&] { character_to_chern_data(ch + LaurentPoly::constant(1), 2); }));
}

TEST_CASE("degree-one moduli that are smooth match their classical Chern numbers") {
  // fibers of P1xP2 form P^2; lines in P^3 form a quadric fourfold
  CHECK(localizer_numbers("p1xp2", "fiber", 1) == hypersurface_chern_numbers(3, 1));
  CHECK(localizer_numbers("p3", "line", 1) == hypersurface_chern_numbers(5, 2));
  // lines in the P^2 factor: P^1 x P^2, numbers (54, 24, 6)
  CHECK(localizer_numbers("p1xp2", "line", 1) == std::vector<Rat>{Rat(54), Rat(24), Rat(6)});
}

TEST_CASE("small coefficients") {
  CHECK(chern_number(catalog_geometry("p1xp2"), CurveClass{{1, 0}}, 1, parse_chern_index("2", 2)) == 9);
  CHECK(chern_number(catalog_geometry("p1xp2"), CurveClass{{1, 0}}, 1, parse_chern_index("0,1", 2)) == 3);
  CHECK(chern_number(catalog_geometry("p1xp2"), CurveClass{{1, 0}}, 2, parse_chern_index("2", 2)) == 0);
}

TEST_CASE("results do not depend on the specialization or the torus labelling") {
  const auto base = localizer_numbers("p3", "line", 3);
  for (std::uint64_t seed : {1ull, 99ull, 123456789ull}) {
    EngineOptions opts;
    opts.seed = seed;
    opts.specializations = 3;
    CHECK(localizer_numbers("p3", "line", 3, opts) == base);
  }
  const auto X = catalog_geometry("p1xp2");
  const auto beta = parse_curve_class(X, "line");
  Localizer a(X, beta);
  Localizer b(permute_torus(X, {2, 0, 1}), beta);
  for (std::int64_t n = 1; n <= 3; ++n) CHECK(a.chern_numbers(n, chern_indices(3)).values == b.chern_numbers(n, chern_indices(3)).values);
}

TEST_CASE("contributions are homogeneous of degree zero") {
  const auto X = catalog_geometry("p3");
  Localizer loc(X, parse_curve_class(X, "line"));
  const auto pairs = loc.fixed_pairs(2);
  const std::array<Rat, 3> s{Rat(3), Rat(-7), Rat(11)};
  const std::array<Rat, 3> scaled{Rat(21), Rat(-49), Rat(77)};
  std::vector<Rat> at_s(5, Rat(0)), at_scaled(5, Rat(0));
  for (const auto& rec : *pairs) {
    const auto u = localized_contribution(rec.character, 4, s, chern_indices(4));
    const auto v = localized_contribution(rec.character, 4, scaled, chern_indices(4));
    for (int k = 0; k < 5; ++k) {
      at_s[k] += u[k];
      at_scaled[k] += v[k];
      CHECK(u[k] == v[k]);
    }
  }
  CHECK(at_s == loc.chern_numbers(2, chern_indices(4)).values);
}

TEST_CASE("thread count does not change results") {
  EngineOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto X = catalog_geometry("p3");
  const auto beta = parse_curve_class(X, "line");
  Localizer a(X, beta, one), b(X, beta, four);
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto ra = a.chern_numbers(n, chern_indices(4));
    const auto rb = b.chern_numbers(n, chern_indices(4));
    CHECK(ra.values == rb.values);
    CHECK(ra.specializations.size() == rb.specializations.size());
    for (std::size_t k = 0; k < ra.specializations.size(); ++k) CHECK(ra.specializations[k].s == rb.specializations[k].s);
  }
}

TEST_CASE("specializations") {
  EngineOptions opts;
  opts.specializations = 5;
  const std::vector<Weight> ws{{1, -1, 0}, {0, 1, -1}, {1, 1, 1}};
  const auto sp = draw_specializations(ws, opts);
  REQUIRE(sp.size() == 5);
  for (const auto& x : sp) {
    for (const auto& w : ws) CHECK(evaluate(w, x.s) != 0);
    CHECK(x.s[0] != 0);
    CHECK(x.s[0] != x.s[1]);
  }
  const auto again = draw_specializations(ws, opts);
  for (std::size_t k = 0; k < sp.size(); ++k) CHECK(again[k].s == sp[k].s);
  CHECK(kind_name(ErrorKind::DegenerateSpecialization) == thrown_kind([&] { draw_specializations({Weight{}}, opts); }));
  opts.specializations = 1;
  CHECK(kind_name(ErrorKind::InvalidArgument) == thrown_kind([&] { draw_specializations(ws, opts); }));
}

TEST_CASE("non-integral sums are caught by the second specialization") {
  // c_1 / e of t^{e1} + t^{e2} is (s1 + s2)/(s1 s2), not a number
  LaurentPoly ch{{Weight{1, 0, 0}, Rat(1)}, {Weight{0, 1, 0}, Rat(1)}};
  CHECK(kind_name(ErrorKind::SpecializationMismatch) ==
        thrown_kind([&] { localize({ch}, 2, {parse_chern_index("0,1", 2), parse_chern_index("2", 2)}, EngineOptions{}); }));
}

TEST_CASE("engine selection") {
  const auto X = catalog_geometry("p1xp2");
  CHECK(kind_name(ErrorKind::EngineUnavailable) == thrown_kind([&] { Localizer(X, parse_curve_class(X, "2*fiber")); }));
  Localizer loc(X, parse_curve_class(X, "fiber"));
  CHECK(loc.engine() == EngineKind::Degree1);
  CHECK(loc.dimension() == 2);
  CHECK(loc.fixed_pairs(0)->empty());
  CHECK(loc.fixed_pairs(2)->size() == 6);
  CHECK(loc.fixed_pairs(2).get() == loc.fixed_pairs(2).get());
}

}
