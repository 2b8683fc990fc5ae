#include "pairloc/rat.hpp"

#include "pairloc/error.hpp"

namespace pairloc {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::InvalidArgument, "negative power of zero");
    return pow(Rat(1) / base, -exponent);
  }
  Rat result = 1;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace pairloc
