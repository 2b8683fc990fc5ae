#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pairloc/rat.hpp"

namespace pairloc {

/// Univariate polynomial over Rat; coefficient i multiplies q^i. No trailing
/// zero coefficients are stored.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& c) { return UPoly({c}); }
  static UPoly monomial(int k, const Rat& c = 1);
  /// q - r
  static UPoly linear_root(const Rat& r) { return UPoly({-r, Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int i) const;
  const Rat& leading() const { return c_.back(); }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;

  Rat evaluate(const Rat& q) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// q^n p(1/q) with n = degree().
  UPoly reversed() const;
  /// q^k p(q) for k >= 0.
  UPoly shifted(int k) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& k);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rat& k, UPoly a) { return a *= k; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& p, int k);

/// Yun's square-free decomposition of a nonzero polynomial: p = lc * prod_i
/// factors[i]^(i+1), each factor monic and square-free, pairwise coprime.
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Distinct rational roots of p.
std::vector<Rat> rational_roots(const UPoly& p);

/// "9*q + 36*q^2", ascending powers.
std::string to_string(const UPoly& p, const std::string& var = "q");

}  // namespace pairloc
