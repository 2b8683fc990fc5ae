#pragma once

#include <functional>
#include <random>

#include "pairloc/char_fraction.hpp"
#include "pairloc/error.hpp"
#include "pairloc/laurent_poly.hpp"

namespace pairloc::testing {

/// Name of the ErrorKind thrown by fn, or "none".
inline std::string thrown_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return std::string(to_string(e.kind()));
  }
  return "none";
}

inline std::string kind_name(ErrorKind k) { return std::string(to_string(k)); }

inline Weight random_weight(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  return {dist(rng), dist(rng), dist(rng)};
}

inline Weight random_nonzero_weight(std::mt19937_64& rng, int range) {
  for (;;) {
    Weight w = random_weight(rng, range);
    if (!w.is_zero()) return w;
  }
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int terms, int range) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(random_weight(rng, range), Rat(coeff(rng)));
  return p;
}

/// P * prod (1 - t^v) / prod (1 - t^v), so the quotient is known to be P.
inline std::pair<CharFraction, LaurentPoly> random_polynomial_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nden(0, 3);
  const LaurentPoly p = random_laurent(rng, 1 + static_cast<int>(rng() % 5), 3);
  std::vector<Weight> den;
  LaurentPoly num = p;
  const int k = nden(rng);
  for (int i = 0; i < k; ++i) {
    Weight v = random_nonzero_weight(rng, 2);
    den.push_back(v);
    num *= LaurentPoly::one_minus(v);
  }
  return {CharFraction(num, den), p};
}

}  // namespace pairloc::testing
