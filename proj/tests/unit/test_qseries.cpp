#include <random>

#include "doctest.h"
#include "pairloc/qseries.hpp"
#include "reference_functions.hpp"
#include "test_util.hpp"

using namespace pairloc;
using pairloc::testing::kind_name;
using pairloc::testing::thrown_kind;

namespace {

UPoly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.push_back(Rat(x));
  return UPoly(v);
}

CoeffSeries series_of(const RationalFn& f, std::size_t count) {
  CoeffSeries s;
  s.geometry = "test";
  s.beta = "test";
  const auto all = expand(f, count + 1);
  s.coeffs.assign(all.begin() + 1, all.end());
  return s;
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("polynomial arithmetic") {
  const UPoly a = P({1, 1});
  CHECK(pow(a, 3) == P({1, 3, 3, 1}));
  CHECK(P({0, 0, 5}).valuation() == 2);
  CHECK(UPoly().degree() == -1);
  CHECK(P({1, 2, 3}).reversed() == P({3, 2, 1}));
  CHECK(P({1, 2}).shifted(2) == P({0, 0, 1, 2}));
  const auto [q, r] = divmod(P({-1, 0, 1}), P({1, 1}));
  CHECK(q == P({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(P({-1, 0, 1}), P({2, 2})) == P({1, 1}));
  CHECK(P({1, 0, 1}).derivative() == P({0, 2}));
  CHECK(P({2, 4}).monic() == UPoly({make_rat(1, 2), Rat(1)}));
  CHECK(kind_name(ErrorKind::InvalidArgument) == thrown_kind([] { divmod(P({1}), UPoly()); }));
  CHECK(to_string(P({0, 9, 36})) == "9*q + 36*q^2");
}

TEST_CASE("square-free decomposition and roots") {
  // (q+1)^4 (q-2) (q^2+1)^2
  const UPoly p = pow(P({1, 1}), 4) * P({-2, 1}) * pow(P({1, 0, 1}), 2);
  const auto sf = squarefree_decomposition(p);
  REQUIRE(sf.size() == 4);
  CHECK(sf[0] == P({-2, 1}));
  CHECK(sf[1] == P({1, 0, 1}));
  CHECK(sf[2] == UPoly::constant(1));
  CHECK(sf[3] == P({1, 1}));
  CHECK(rational_roots(P({6, -5, 1})) == std::vector<Rat>{Rat(2), Rat(3)});
  CHECK(rational_roots(P({-1, 0, 2})).empty());
  CHECK(rational_roots(P({1, 2})) == std::vector<Rat>{make_rat(-1, 2)});
}

TEST_CASE("rational functions and expansion") {
  const auto f = make_rational(P({0, 2, 2}), P({4, 4}));
  CHECK(f.num == UPoly({Rat(0), make_rat(1, 2)}));
  CHECK(f.den == UPoly::constant(1));
  const auto g = make_rational(P({0, 1}), pow(P({1, -1}), 2));
  CHECK(expand(g, 6) == std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
  CHECK(kind_name(ErrorKind::InvalidArgument) == thrown_kind([] { make_rational(P({1}), UPoly()); }));
  const auto& a = pairloc::testing::fiber_p1xp2().functions[0];
  CHECK(expand(a.fn(), 6) == std::vector<Rat>{Rat(0), Rat(9), Rat(0), Rat(216), Rat(-864), Rat(2160)});
}

TEST_CASE("fits recover known functions") {
  const auto geo = make_rational(P({0, 1}), P({1, -1}));
  const auto r = fit_rational(series_of(geo, 8));
  CHECK(r.fn == geo);
  CHECK(r.holdout >= 2);
  for (const auto* table : {&pairloc::testing::fiber_p1xp2(), &pairloc::testing::line_p1xp2(), &pairloc::testing::line_p3()}) {
    for (const auto& f : table->functions) {
      const auto fn = f.fn();
      const auto s = series_of(fn, static_cast<std::size_t>(fn.num.degree() + fn.den.degree() + 3));
      CHECK(fit_rational(s).fn == fn);
      FitOptions ansatz;
      ansatz.mode = FitMode::Ansatz;
      CHECK(fit_rational(s, ansatz).fn == fn);
    }
  }
}

TEST_CASE("fit after expand is the identity on random functions") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rat> num{Rat(0)}, den{Rat(1)};
    const int p = 1 + static_cast<int>(rng() % 4);
    const int r = static_cast<int>(rng() % 4);
    for (int i = 0; i < p; ++i) num.push_back(Rat(coeff(rng)));
    for (int i = 0; i < r; ++i) den.push_back(Rat(coeff(rng)));
    if (num.back() == 0) num.back() = 1;
    const auto fn = make_rational(UPoly(num), UPoly(den));
    const auto s = series_of(fn, static_cast<std::size_t>(p + r + 4));
    const auto fit = fit_rational(s);
    CHECK(fit.fn == fn);
    CHECK(fit.holdout >= 2);
  }
}

TEST_CASE("no fit for a non-rational sequence") {
  CoeffSeries s;
  for (long prime : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) s.coeffs.push_back(Rat(prime));
  CHECK(kind_name(ErrorKind::NoFit) == thrown_kind([&] { fit_rational(s); }));
  FitOptions ansatz;
  ansatz.mode = FitMode::Ansatz;
  CHECK(kind_name(ErrorKind::NoFit) == thrown_kind([&] { fit_rational(s, ansatz); }));
  CoeffSeries tiny;
  tiny.coeffs = {Rat(1)};
  CHECK(kind_name(ErrorKind::NoFit) == thrown_kind([&] { fit_rational(tiny); }));
}

TEST_CASE("functional equation") {
  const auto sym = make_rational(P({0, 1}), pow(P({1, 1}), 2));
  CHECK(check_functional_equation(sym, 0).holds);
  CHECK_FALSE(check_functional_equation(sym, 1).holds);
  const auto bad = make_rational(P({0, 1}), P({1, -2}));
  for (int d = -3; d <= 3; ++d) CHECK_FALSE(check_functional_equation(bad, d).holds);
  CHECK_FALSE(check_functional_equation(bad, 0).residual.is_zero());
  for (const auto* table : {&pairloc::testing::fiber_p1xp2(), &pairloc::testing::line_p1xp2(), &pairloc::testing::line_p3(),
                            &pairloc::testing::double_fiber_p1xp2(), &pairloc::testing::two_lines_p1p1p1()}) {
    for (const auto& f : table->functions) {
      CHECK(check_functional_equation(f.fn(), table->d).holds);
      CHECK_FALSE(check_functional_equation(f.fn(), table->d + 1).holds);
    }
  }
}

TEST_CASE("common poles") {
  const auto a = make_rational(P({0, 1}), pow(P({1, 1}), 4));
  const auto b = make_rational(P({0, 3, 1}), pow(P({1, 1}), 4));
  auto rep = check_common_poles({a, b});
  CHECK(rep.same_support);
  CHECK(rep.same_multiplicities);
  REQUIRE(rep.per_function[0].size() == 1);
  CHECK(rep.per_function[0][0].root == Rat(-1));
  CHECK(rep.per_function[0][0].multiplicity == 4);
  rep = check_common_poles({a, make_rational(P({1}), pow(P({1, 1}), 2))});
  CHECK(rep.same_support);
  CHECK_FALSE(rep.same_multiplicities);
  rep = check_common_poles({make_rational(P({1}), P({1, -1})), make_rational(P({1}), P({1, 1}))});
  CHECK_FALSE(rep.same_support);
  rep = check_common_poles({make_rational(P({1}), P({1, 0, 1}))});
  REQUIRE(rep.per_function[0].size() == 1);
  CHECK_FALSE(rep.per_function[0][0].root.has_value());
}

TEST_CASE("assembling series") {
  const auto X = catalog_geometry("p1xp2");
  const auto beta = parse_curve_class(X, "fiber");
  const auto s = assemble(X, beta, parse_chern_index("2", 2), 5);
  CHECK(s.n_min == 1);
  CHECK(s.n_max() == 5);
  CHECK(s.coeffs == std::vector<Rat>{Rat(9), Rat(0), Rat(216), Rat(-864), Rat(2160)});
  CHECK(s.at(0) == 0);
  CHECK(assemble(X, beta, parse_chern_index("2", 2), 0).coeffs.empty());
  Localizer loc(X, beta);
  const auto both = assemble(loc, chern_indices(2), 3);
  REQUIRE(both.size() == 2);
  CHECK(both[1].coeffs.front() == 3);
}

TEST_CASE("fit record") {
  const auto fn = pairloc::testing::fiber_p1xp2().functions[0].fn();
  auto s = series_of(fn, 12);
  s.d = 2;
  s.index = parse_chern_index("2", 2);
  const auto fit = fit_rational(s);
  const auto fe = check_functional_equation(fit.fn, 2);
  const auto j = fit_record(s, fit, fe);
  CHECK(j.at("functional_equation") == true);
  CHECK(j.at("coefficients").size() == 12);
  CHECK(j.at("coefficients")[0] == "9");
  CHECK(j.at("holdout") == fit.holdout);
  CHECK(j.contains("fit"));
  CHECK_FALSE(j.contains("functional_equation_residual"));
}

}
