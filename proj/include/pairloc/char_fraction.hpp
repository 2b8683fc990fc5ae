#pragma once

#include <vector>

#include "pairloc/laurent_poly.hpp"

namespace pairloc {

/// numerator / prod_v (1 - t^v). The denominator is a multiset of nonzero
/// weights, kept sorted.
class CharFraction {
 public:
  CharFraction() = default;
  explicit CharFraction(LaurentPoly numerator, std::vector<Weight> denominator = {});

  const LaurentPoly& numerator() const { return numerator_; }
  const std::vector<Weight>& denominator() const { return denominator_; }

  /// Equal fraction whose denominator weights all have positive lex sign,
  /// using 1/(1 - t^v) = -t^{-v}/(1 - t^{-v}).
  CharFraction oriented() const;

  CharFraction conjugate() const;

 private:
  LaurentPoly numerator_;
  std::vector<Weight> denominator_;
};

CharFraction operator*(const CharFraction& a, const CharFraction& b);
CharFraction operator*(const LaurentPoly& a, const CharFraction& b);

/// a + b over a common denominator (lcm of the oriented multisets).
CharFraction cf_combine(const CharFraction& a, const CharFraction& b);

/// Exact quotient in the Laurent polynomial ring; throws NotPolynomial.
LaurentPoly cf_normalize(const CharFraction& f);

/// Exact division of p by (1 - t^v); throws NotPolynomial on a remainder.
LaurentPoly divide_one_minus(const LaurentPoly& p, const Weight& v);

/// Expands f as a power series in the half-space phi > 0 and keeps the terms
/// whose phi-value lies in [lo, hi]. Throws DegenerateFunctional if phi
/// vanishes on a denominator weight.
LaurentPoly series_oracle(const CharFraction& f, const Weight& phi, std::int64_t lo, std::int64_t hi);

}  // namespace pairloc
