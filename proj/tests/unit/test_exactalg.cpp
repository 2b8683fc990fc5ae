#include <random>

#include "doctest.h"
#include "pairloc/char_fraction.hpp"
#include "pairloc/multipoly.hpp"
#include "pairloc/parallel.hpp"
#include "pairloc/rat_matrix.hpp"
#include "test_util.hpp"

using namespace pairloc;
using pairloc::testing::kind_name;
using pairloc::testing::thrown_kind;

namespace {

Weight generic_functional(std::mt19937_64& rng, const std::vector<Weight>& den) {
  for (;;) {
    Weight phi = pairloc::testing::random_nonzero_weight(rng, 1000);
    bool ok = true;
    for (const auto& v : den) ok = ok && pairing(phi, v) != 0;
    if (ok) return phi;
  }
}

std::int64_t phi_span(const LaurentPoly& p, const Weight& phi) {
  std::int64_t m = 0;
  for (const auto& [w, c] : p.terms()) m = std::max(m, std::abs(pairing(phi, w)));
  return m;
}

}  // namespace

TEST_SUITE("exactalg") {

TEST_CASE("rationals stay canonical") {
  CHECK(make_rat(6, -4) == make_rat(-3, 2));
  CHECK(to_string(make_rat(-3, 2)) == "-3/2");
  CHECK(parse_rat("10/4") == make_rat(5, 2));
  CHECK(pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(is_integer(make_rat(8, 4)));
}

TEST_CASE("laurent ring axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = pairloc::testing::random_laurent(rng, 5, 3);
    auto b = pairloc::testing::random_laurent(rng, 5, 3);
    auto c = pairloc::testing::random_laurent(rng, 5, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a * b).rank() == a.rank() * b.rank());
  }
}

TEST_CASE("one_minus and exact division") {
  const Weight v{1, -2, 0};
  LaurentPoly p{{Weight{0, 0, 0}, Rat(3)}, {Weight{1, 1, 1}, Rat(-2)}};
  CHECK(divide_one_minus(p * LaurentPoly::one_minus(v), v) == p);
  CHECK(kind_name(ErrorKind::NotPolynomial) == thrown_kind([&] { divide_one_minus(p, v); }));
  CHECK(kind_name(ErrorKind::InvalidArgument) == thrown_kind([] { CharFraction(LaurentPoly::constant(1), {Weight{}}); }));
}

TEST_CASE("geometric series example") {
  // (1 - t^{3v}) / (1 - t^v) = 1 + t^v + t^{2v}
  const Weight v{0, 1, 0};
  CharFraction f(LaurentPoly::one_minus(3 * v), {v});
  LaurentPoly expect{{Weight{}, Rat(1)}, {v, Rat(1)}, {2 * v, Rat(1)}};
  CHECK(cf_normalize(f) == expect);
  CHECK(cf_normalize(f.oriented()) == expect);
  CHECK(series_oracle(f, Weight{0, 1, 0}, -10, 10) == expect);
  CHECK(series_oracle(f, Weight{0, -1, 0}, -10, 10) == expect);
  CHECK(kind_name(ErrorKind::NotPolynomial) ==
        thrown_kind([&] { cf_normalize(CharFraction(LaurentPoly::constant(1), {v})); }));
  CHECK(kind_name(ErrorKind::DegenerateFunctional) == thrown_kind([&] { series_oracle(f, Weight{1, 0, 0}, 0, 5); }));
}

TEST_CASE("series oracle agrees with normalization on random polynomial fractions") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 100; ++trial) {
    auto [f, expect] = pairloc::testing::random_polynomial_fraction(rng);
    const LaurentPoly q = cf_normalize(f);
    CHECK(q == expect);
    const Weight phi = generic_functional(rng, f.denominator());
    const std::int64_t span = phi_span(expect, phi) + 1;
    CHECK(series_oracle(f, phi, -span, span) == expect);
  }
}

TEST_CASE("combining fractions adds them") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto [f, pf] = pairloc::testing::random_polynomial_fraction(rng);
    auto [g, pg] = pairloc::testing::random_polynomial_fraction(rng);
    CHECK(cf_normalize(cf_combine(f, g)) == pf + pg);
    CHECK(cf_normalize(f * g) == pf * pg);
    CHECK(cf_normalize(f.conjugate()) == pf.conjugate());
  }
}

TEST_CASE("multipoly arithmetic") {
  const auto x = MultiPoly::variable(0, 2);
  const auto y = MultiPoly::variable(1, 2);
  const auto one = MultiPoly::constant(1, 2);
  const auto sq = (x + y) * (x + y);
  CHECK(sq.coefficient({1, 1}) == 2);
  CHECK(sq.coefficient({2, 0}) == 1);
  CHECK((x - x).is_zero());
  CHECK(sq.truncated({1, 2}, 2) == x * x);
  CHECK(MultiPoly::mul_truncated(x + y, x + y, {1, 1}, 1).is_zero());
  // substitute x -> y + 1, y -> 2
  const auto s = sq.substitute({y + one, Rat(2) * one});
  CHECK(s == (y + Rat(3) * one) * (y + Rat(3) * one));
  CHECK(to_string(x * y + Rat(-2) * one, {"a", "b"}).find("a") != std::string::npos);
  const auto z = MultiPoly::variable(2, 3);
  CHECK(z.restrict_variables(2, 1) == MultiPoly::variable(0, 1));
}

TEST_CASE("rational matrices") {
  RatMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = -1;
  a(1, 0) = -1;
  a(1, 1) = 2;
  const RatMatrix inv = a.inverse();
  CHECK(a * inv == RatMatrix::identity(2));
  CHECK(inv(0, 0) == 2);
  CHECK(inv(0, 1) == 1);
  CHECK(a.rank() == 2);
  RatMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK(s.rank() == 1);
  CHECK(kind_name(ErrorKind::SingularMatrix) == thrown_kind([&] { s.inverse(); }));
  auto sol = solve_consistent(s, {Rat(3), Rat(6)});
  REQUIRE(sol.has_value());
  CHECK(s.apply(*sol) == std::vector<Rat>{Rat(3), Rat(6)});
  CHECK_FALSE(solve_consistent(s, {Rat(3), Rat(5)}).has_value());
}

TEST_CASE("parallel_for covers every index once and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, 4);
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK(kind_name(ErrorKind::InvalidArgument) == thrown_kind([] {
          parallel_for(10, [](std::size_t i) {
            if (i == 7) throw Error(ErrorKind::InvalidArgument, "x");
          }, 3);
        }));
}

}
