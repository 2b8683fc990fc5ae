#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "pairloc/rat.hpp"
#include "pairloc/weight.hpp"

namespace pairloc {

/// Finite Laurent polynomial in the three torus characters with rational
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Weight, Rat>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const Weight, Rat>> terms);

  static LaurentPoly constant(const Rat& c) { return monomial(Weight{}, c); }
  static LaurentPoly monomial(const Weight& w, const Rat& c = 1);
  /// 1 - t^v
  static LaurentPoly one_minus(const Weight& v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coefficient(const Weight& w) const;
  /// Sum of coefficients, i.e. the virtual rank of the character.
  Rat rank() const;

  void add_term(const Weight& w, const Rat& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rat& k);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(const Rat& k, LaurentPoly a) { return a *= k; }
  LaurentPoly operator-() const;

  /// Multiplication by the monomial t^w.
  LaurentPoly shifted(const Weight& w) const;
  /// Involution t^w -> t^{-w}.
  LaurentPoly conjugate() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

std::string to_string(const LaurentPoly& p);

}  // namespace pairloc
