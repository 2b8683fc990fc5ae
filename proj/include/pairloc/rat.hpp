#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pairloc {

/// Arbitrary-precision rational, always canonical after arithmetic.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const BigInt& num, const BigInt& den);

/// Parses "a", "-a" or "a/b".
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat pow(const Rat& base, long exponent);

}  // namespace pairloc
