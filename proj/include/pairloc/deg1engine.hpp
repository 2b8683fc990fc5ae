#pragma once

#include <cstdint>
#include <vector>

#include "pairloc/char_fraction.hpp"
#include "pairloc/toric3.hpp"

namespace pairloc {

/// T-fixed pair [O_X -> O_C(a p + b p')] on the invariant curve of one edge.
struct FixedPairDeg1 {
  std::size_t edge = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t n() const { return 1 + a + b; }
  friend auto operator<=>(const FixedPairDeg1&, const FixedPairDeg1&) = default;
};

/// Fixed pairs with chi = n for a class whose every decomposition is a single
/// edge with multiplicity one. Throws NotDegreeOne otherwise.
std::vector<FixedPairDeg1> enumerate_deg1(const ToricThreefold& X, const CurveClass& beta, std::int64_t n);

/// Two-point localization of the equivariant Euler characteristic of a degree-m
/// line bundle on the edge curve whose fiber at p has weight w0:
///   t^{w0}/(1 - t^{u0}) + t^{w0 + m u0}/(1 - t^{-u0}).
CharFraction equivariant_chi(const Edge& edge, const Weight& w0, std::int64_t m);

/// Character of T^vir at the pair:
///   chi(L) + chi(L^v (x) det N) - chi(O_C) + chi(N1) + chi(N2) - chi(N1 (x) N2)
/// with L = O_C(a p + b p') lifted so that its canonical section has weight 0.
/// This is chi(O,F) + chi(F,O) - chi(F,F) computed with local-to-global Ext on
/// a curve of codimension two.
LaurentPoly tvir_character_deg1(const Edge& edge, std::int64_t a, std::int64_t b);
LaurentPoly tvir_character_deg1(const ToricThreefold& X, const FixedPairDeg1& pair);

}  // namespace pairloc
