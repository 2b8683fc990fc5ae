#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pairloc/chernloc.hpp"
#include "pairloc/multipoly.hpp"
#include "pairloc/rat_matrix.hpp"

namespace pairloc {

/// Polynomial in t_1, t_2, ...; a key is the exponent vector (i_1, i_2, ...)
/// without trailing zeros, and t^I has degree sum_k k i_k.
template <class Coeff>
struct BasicTPolynomial {
  std::map<std::vector<std::int64_t>, Coeff> terms;

  static std::vector<std::int64_t> canonical(std::vector<std::int64_t> exps) {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    return exps;
  }
  static std::int64_t degree_of(const std::vector<std::int64_t>& exps) {
    std::int64_t d = 0;
    for (std::size_t k = 0; k < exps.size(); ++k) d += static_cast<std::int64_t>(k + 1) * exps[k];
    return d;
  }
  friend bool operator==(const BasicTPolynomial&, const BasicTPolynomial&) = default;
};

using TPolynomial = BasicTPolynomial<Rat>;
/// Coefficients are polynomials in Chern classes or Chern roots.
using FormalTPolynomial = BasicTPolynomial<MultiPoly>;

std::string to_string(const TPolynomial& p);

/// One Chern root of a formal bundle, entering with the given sign.
struct RootTerm {
  std::size_t root = 0;
  int sign = 1;
};

/// Td_t^{-1} of sum_r sign_r L_r, where c_1(L_r) = x_r, up to t-degree D.
/// Coefficients are polynomials in x_0 .. x_{nroots-1}.
FormalTPolynomial todd_inverse_roots(const std::vector<RootTerm>& bundle, std::size_t nroots, int D);

/// Td_t^{-1}(sign * V) for a bundle V given through its total Chern class, up
/// to t-degree D. Coefficients are polynomials in c_1 .. c_D (variable k-1 is
/// c_k).
FormalTPolynomial todd_inverse_chern(int D, int sign = 1);

/// Product of two expansions truncated at t-degree D.
FormalTPolynomial multiply(const FormalTPolynomial& a, const FormalTPolynomial& b, int D);

struct BasisMatrix {
  std::int64_t d = 0;
  std::vector<ChernIndex> rows;  // t^I
  std::vector<ChernIndex> cols;  // prod_k c_k(V)^{j_k}
  RatMatrix matrix;              // c_I(-V) = sum_J matrix(I, J) c^J(V)
  RatMatrix inverse;
};

/// Throws SingularMatrix if the change of basis is not invertible.
BasisMatrix cf_basis_matrix(std::int64_t d);

/// Monomial Chern numbers int prod_k c_k(V)^{j_k} of a class of dimension d.
struct ChernVector {
  std::int64_t d = 0;
  std::map<ChernIndex, Rat> values;
};

/// sum_I (int c_I(-V)) t^I. Throws IncompleteVector if an index is missing.
TPolynomial cobordism_class_point(const ChernVector& v);

/// Inverse of cobordism_class_point.
ChernVector chern_vector_from_class(const TPolynomial& p, std::int64_t d);

struct SmoothClass {
  ChernVector numbers;
  TPolynomial cls;
  std::vector<Specialization> specializations;
};

/// Chern numbers of T_X by Bott localization at the fixed points, and the
/// resulting class of X -> pt.
SmoothClass smooth_variety_class(const ToricThreefold& X, const EngineOptions& opts = {});

}  // namespace pairloc
