#include "pairloc/deg1engine.hpp"

#include "pairloc/error.hpp"

namespace pairloc {

std::vector<FixedPairDeg1> enumerate_deg1(const ToricThreefold& X, const CurveClass& beta, std::int64_t n) {
  std::vector<std::size_t> admissible;
  for (const auto& dec : decompose_class(X, beta)) {
    if (dec.size() != 1 || dec.front().multiplicity != 1) {
      throw Error(ErrorKind::NotDegreeOne, "class " + to_string(beta) + " has a decomposition with several edges or a multiple edge");
    }
    admissible.push_back(dec.front().edge);
  }
  std::vector<FixedPairDeg1> pairs;
  if (n <= 0) return pairs;
  for (auto e : admissible) {
    for (std::int64_t a = n - 1; a >= 0; --a) pairs.push_back({e, a, n - 1 - a});
  }
  return pairs;
}

CharFraction equivariant_chi(const Edge& edge, const Weight& w0, std::int64_t m) {
  const CharFraction at_p(LaurentPoly::monomial(w0), {edge.u0});
  const CharFraction at_pprime(LaurentPoly::monomial(w0 + m * edge.u0), {-edge.u0});
  return cf_combine(at_p, at_pprime);
}

LaurentPoly tvir_character_deg1(const Edge& edge, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "negative cokernel length");
  const Weight& u = edge.u0;
  const Weight det = edge.nu[0] + edge.nu[1];
  const std::int64_t mdet = edge.m[0] + edge.m[1];
  auto chi = [&](const Weight& w0, std::int64_t m) { return cf_normalize(equivariant_chi(edge, w0, m)); };

  LaurentPoly ch = chi(-a * u, a + b);
  ch += chi(a * u + det, mdet - a - b);
  ch -= chi(Weight{}, 0);
  ch += chi(edge.nu[0], edge.m[0]);
  ch += chi(edge.nu[1], edge.m[1]);
  ch -= chi(det, mdet);

  if (ch.coefficient(Weight{}) != 0) {
    throw Error(ErrorKind::NonIsolatedFixedPoint, "trivial weight in T^vir on edge with (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  if (ch.rank() != edge.c1_degree()) {
    throw Error(ErrorKind::InvalidArgument, "character rank differs from the virtual dimension");
  }
  return ch;
}

LaurentPoly tvir_character_deg1(const ToricThreefold& X, const FixedPairDeg1& pair) {
  return tvir_character_deg1(X.edges.at(pair.edge), pair.a, pair.b);
}

}  // namespace pairloc
