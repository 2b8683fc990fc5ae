#include "pairloc/weight.hpp"

namespace pairloc {

Rat evaluate(const Weight& w, const std::array<Rat, 3>& s) {
  Rat r = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (w[i] != 0) r += Rat(static_cast<long>(w[i])) * s[i];
  }
  return r;
}

bool parallel(const Weight& a, const Weight& b) {
  // cross product vanishes
  return a[1] * b[2] - a[2] * b[1] == 0 && a[2] * b[0] - a[0] * b[2] == 0 &&
         a[0] * b[1] - a[1] * b[0] == 0;
}

std::string to_string(const Weight& w) {
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
}

}  // namespace pairloc
