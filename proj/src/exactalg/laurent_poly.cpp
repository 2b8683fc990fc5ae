#include "pairloc/laurent_poly.hpp"

namespace pairloc {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Weight, Rat>> terms) {
  for (const auto& [w, c] : terms) add_term(w, c);
}

LaurentPoly LaurentPoly::monomial(const Weight& w, const Rat& c) {
  LaurentPoly p;
  p.add_term(w, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus(const Weight& v) {
  LaurentPoly p = constant(1);
  p.add_term(v, -1);
  return p;
}

Rat LaurentPoly::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat LaurentPoly::rank() const {
  Rat r = 0;
  for (const auto& [w, c] : terms_) r += c;
  return r;
}

void LaurentPoly::add_term(const Weight& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= k;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) out.add_term(w1 + w2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [w, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::shifted(const Weight& s) const {
  LaurentPoly p;
  for (const auto& [w, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), w + s, c);
  return p;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly p;
  for (const auto& [w, c] : terms_) p.terms_.emplace(-w, c);
  return p;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c);
    if (!w.is_zero()) out += "*t^" + to_string(w);
  }
  return out;
}

}  // namespace pairloc
