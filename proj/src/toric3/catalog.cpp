#include <utility>

#include "pairloc/error.hpp"
#include "pairloc/toric3.hpp"

namespace pairloc {

namespace {

// P^3 with torus characters lambda_0 = 0, lambda_i = e_i. The tangent space at
// p_i has weights lambda_j - lambda_i.
ToricThreefold make_p3() {
  const std::array<Weight, 4> lam{Weight{0, 0, 0}, Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}};
  ToricThreefold X;
  X.source = "p3";
  X.h2_rank = 1;
  X.c1_degrees = {4};
  for (std::size_t i = 0; i < 4; ++i) {
    FixedPoint fp{"p" + std::to_string(i), {}};
    std::size_t k = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != i) fp.tangent_weights[k++] = lam[j] - lam[i];
    }
    X.fixed_points.push_back(fp);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::array<std::size_t, 2> rest{};
      std::size_t r = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        if (k != i && k != j) rest[r++] = k;
      }
      Edge e;
      e.p = i;
      e.pprime = j;
      e.u0 = lam[i] - lam[j];
      for (std::size_t a = 0; a < 2; ++a) {
        e.nu[a] = lam[rest[a]] - lam[i];
        e.nuprime[a] = lam[rest[a]] - lam[j];
      }
      e.curve_class = CurveClass{{1}};
      X.edges.push_back(e);
    }
  }
  X.named_classes["line"] = CurveClass{{1}};
  return X;
}

// P^1 x P^2. H_2 basis: (fiber [P^1 x pt], line [pt x L]); c1 pairs to (2, 3).
ToricThreefold make_p1xp2() {
  const Weight e1{1, 0, 0};
  const std::array<Weight, 3> lam{Weight{0, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}};
  ToricThreefold X;
  X.source = "p1xp2";
  X.h2_rank = 2;
  X.c1_degrees = {2, 3};
  auto index = [](std::size_t s, std::size_t i) { return 3 * s + i; };
  for (std::size_t s = 0; s < 2; ++s) {
    const Weight along = s == 0 ? e1 : -e1;
    for (std::size_t i = 0; i < 3; ++i) {
      FixedPoint fp{"s" + std::to_string(s) + "q" + std::to_string(i), {}};
      fp.tangent_weights[0] = along;
      std::size_t k = 1;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) fp.tangent_weights[k++] = lam[j] - lam[i];
      }
      X.fixed_points.push_back(fp);
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    Edge e;
    e.p = index(0, i);
    e.pprime = index(1, i);
    e.u0 = -e1;
    std::size_t k = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) {
        e.nu[k] = lam[j] - lam[i];
        e.nuprime[k] = e.nu[k];
        ++k;
      }
    }
    e.curve_class = CurveClass{{1, 0}};
    X.edges.push_back(e);
  }
  for (std::size_t s = 0; s < 2; ++s) {
    const Weight along = s == 0 ? e1 : -e1;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const std::size_t k = 3 - i - j;
        Edge e;
        e.p = index(s, i);
        e.pprime = index(s, j);
        e.u0 = lam[i] - lam[j];
        e.nu = {lam[k] - lam[i], along};
        e.nuprime = {lam[k] - lam[j], along};
        e.curve_class = CurveClass{{0, 1}};
        X.edges.push_back(e);
      }
    }
  }
  X.named_classes["fiber"] = CurveClass{{1, 0}};
  X.named_classes["line"] = CurveClass{{0, 1}};
  return X;
}

// P^1 x P^1 x P^1 with the i-th factor rotated by e_i.
ToricThreefold make_p1p1p1() {
  const std::array<Weight, 3> e{Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}};
  ToricThreefold X;
  X.source = "p1p1p1";
  X.h2_rank = 3;
  X.c1_degrees = {2, 2, 2};
  auto tangent = [&](unsigned bits, std::size_t k) { return (bits >> k & 1u) ? -e[k] : e[k]; };
  for (unsigned bits = 0; bits < 8; ++bits) {
    FixedPoint fp{std::string{char('0' + (bits & 1u)), char('0' + (bits >> 1 & 1u)), char('0' + (bits >> 2 & 1u))}, {}};
    for (std::size_t k = 0; k < 3; ++k) fp.tangent_weights[k] = tangent(bits, k);
    X.fixed_points.push_back(fp);
  }
  for (unsigned bits = 0; bits < 8; ++bits) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (bits >> k & 1u) continue;
      const unsigned other = bits | (1u << k);
      Edge edge;
      edge.p = bits;
      edge.pprime = other;
      edge.u0 = -tangent(bits, k);
      std::size_t a = 0;
      for (std::size_t l = 0; l < 3; ++l) {
        if (l == k) continue;
        edge.nu[a] = tangent(bits, l);
        edge.nuprime[a] = tangent(other, l);
        ++a;
      }
      edge.curve_class.coords.assign(3, 0);
      edge.curve_class.coords[k] = 1;
      X.edges.push_back(edge);
    }
  }
  X.named_classes["e1"] = CurveClass{{1, 0, 0}};
  X.named_classes["e2"] = CurveClass{{0, 1, 0}};
  X.named_classes["e3"] = CurveClass{{0, 0, 1}};
  return X;
}

}  // namespace

std::vector<std::string> catalog_ids() { return {"p3", "p1xp2", "p1p1p1"}; }

ToricThreefold catalog_geometry(std::string_view id) {
  ToricThreefold X;
  if (id == "p3") {
    X = make_p3();
  } else if (id == "p1xp2") {
    X = make_p1xp2();
  } else if (id == "p1p1p1") {
    X = make_p1p1p1();
  } else {
    throw Error(ErrorKind::ParseError, "unknown catalog geometry '" + std::string(id) + "'");
  }
  validate(X);
  return X;
}

}  // namespace pairloc
