#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pairloc/rat.hpp"
#include "pairloc/toric3.hpp"

namespace pairloc {

/// P^{n_1} x ... x P^{n_r}.
struct ProjectiveProduct {
  std::vector<int> dims;

  int dimension() const;
  friend bool operator==(const ProjectiveProduct&, const ProjectiveProduct&) = default;
};

/// "p3", "p1xp2", "p1p1p1" and the factors "p1", "p2". Throws UnsupportedSpace.
ProjectiveProduct projective_product(std::string_view id);
/// Catalog geometries only; throws UnsupportedSpace for anything else.
ProjectiveProduct projective_product_of(const ToricThreefold& X);

/// Exponents of the hyperplane classes h_1, ..., h_r.
using HMonomial = std::vector<int>;

/// Element of H*(P, Q) in the monomial basis of hyperplane classes.
class CohClass {
 public:
  explicit CohClass(ProjectiveProduct space) : space_(std::move(space)) {}
  static CohClass unit(const ProjectiveProduct& space);
  static CohClass monomial(const ProjectiveProduct& space, const HMonomial& e, const Rat& c = 1);

  const ProjectiveProduct& space() const { return space_; }
  const std::map<HMonomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const HMonomial& e, const Rat& c);
  /// Real cohomological degree of the nonzero terms; throws InvalidArgument
  /// when the class is not homogeneous.
  int degree() const;
  /// Degree-2k part.
  CohClass component(int real_degree) const;

  CohClass& operator+=(const CohClass& o);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend CohClass operator*(const Rat& k, CohClass a);
  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  ProjectiveProduct space_;
  std::map<HMonomial, Rat> terms_;
};

int real_degree(const HMonomial& e);

/// Td(T_P), the product of (h/(1 - e^{-h}))^{n+1} over the factors.
CohClass todd_class(const ProjectiveProduct& space);

/// delta_* 1 = sum_i u_i (x) v_i.
std::vector<std::pair<CohClass, CohClass>> kunneth_diagonal(const ProjectiveProduct& space);
/// delta_* gamma = (gamma (x) 1) delta_* 1, expanded in monomials.
std::vector<std::pair<CohClass, CohClass>> kunneth_diagonal(const ProjectiveProduct& space, const CohClass& gamma);

/// One summand a * pi_*(ch_i(F) ch_j(F) gamma) of the expansion of
/// ch_k(-T^vir). A summand with a single Chern character of F records j = 0,
/// the index of the unit factor coming from ch(O).
struct GrrTerm {
  Rat coeff;
  int i = 0;
  int j = 0;
  HMonomial gamma;
};

/// Raw expansion of the degree-k part of pi_*(ch(I) ch(I^v) Td(T_X)) with
/// ch(I) = 1 - ch(F) and ch_i(I^v) = (-1)^i ch_i(I); the ch(O) x ch(O) term
/// is dropped. Every term has 2i + 2j + deg(gamma) = 2k + 2 dim.
std::vector<GrrTerm> grr_terms(const ProjectiveProduct& space, int k);

/// tau[a](u), tau[a,b](u) with a <= b, or the ordered product tau[a](u) tau[b](v).
struct DescSymbol {
  enum class Kind { Generalized = 0, Single = 1, Product = 2 };
  Kind kind = Kind::Single;
  int a = 0;
  int b = 0;
  HMonomial u;
  HMonomial v;

  friend auto operator<=>(const DescSymbol&, const DescSymbol&) = default;
};

/// Degree on the moduli space, in real units: tau_a(u) has degree
/// 2(a + 2) + deg(u) - 2 dim, generalized symbols add the two Chern
/// characters, products add the factors.
int symbol_degree(const DescSymbol& s, const ProjectiveProduct& space);

struct DescendentExpr {
  ProjectiveProduct space;
  std::map<DescSymbol, Rat> terms;

  void add(const DescSymbol& s, const Rat& c);
  bool has_generalized() const;
  friend bool operator==(const DescendentExpr&, const DescendentExpr&) = default;
};

DescendentExpr operator+(const DescendentExpr& a, const DescendentExpr& b);
DescendentExpr operator*(const Rat& k, const DescendentExpr& e);

/// ch_k(-T^vir) in generalized descendents tau_{i-2, j-2}(gamma) and single
/// descendents tau_{i-2}(gamma); the two orders of a pair are merged.
DescendentExpr grr_expansion(const ProjectiveProduct& space, int k);

/// Rewrites every tau[a,b](gamma) as sum_i tau[a](u_i) tau[b](v_i) over
/// delta_* gamma = sum_i u_i (x) v_i.
DescendentExpr reduce_generalized(const DescendentExpr& e);

/// Plain text, one term per line:
///   a * tau[i,j](h1^p h2^q) | a * tau[i](...) | a * tau[i](...) * tau[j](...)
std::string to_text(const DescendentExpr& e);
std::string to_text(const HMonomial& m);

}  // namespace pairloc
