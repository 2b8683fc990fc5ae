#include "pairloc/char_fraction.hpp"

#include <algorithm>
#include <map>

#include "pairloc/error.hpp"

namespace pairloc {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

CharFraction::CharFraction(LaurentPoly numerator, std::vector<Weight> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (const auto& v : denominator_) {
    if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero weight in a character denominator");
  }
  std::sort(denominator_.begin(), denominator_.end());
}

CharFraction CharFraction::oriented() const {
  LaurentPoly num = numerator_;
  std::vector<Weight> den;
  den.reserve(denominator_.size());
  for (const auto& v : denominator_) {
    if (v.lex_sign() > 0) {
      den.push_back(v);
    } else {
      num = -num.shifted(-v);
      den.push_back(-v);
    }
  }
  return CharFraction(std::move(num), std::move(den));
}

CharFraction CharFraction::conjugate() const {
  std::vector<Weight> den;
  den.reserve(denominator_.size());
  for (const auto& v : denominator_) den.push_back(-v);
  return CharFraction(numerator_.conjugate(), std::move(den));
}

CharFraction operator*(const CharFraction& a, const CharFraction& b) {
  std::vector<Weight> den = a.denominator();
  den.insert(den.end(), b.denominator().begin(), b.denominator().end());
  return CharFraction(a.numerator() * b.numerator(), std::move(den));
}

CharFraction operator*(const LaurentPoly& a, const CharFraction& b) {
  return CharFraction(a * b.numerator(), b.denominator());
}

CharFraction cf_combine(const CharFraction& a, const CharFraction& b) {
  const CharFraction oa = a.oriented();
  const CharFraction ob = b.oriented();
  std::map<Weight, int> ma, mb;
  for (const auto& v : oa.denominator()) ++ma[v];
  for (const auto& v : ob.denominator()) ++mb[v];
  std::map<Weight, int> lcm = ma;
  for (const auto& [v, k] : mb) lcm[v] = std::max(lcm[v], k);

  auto lift = [&](const CharFraction& f, std::map<Weight, int>& have) {
    LaurentPoly num = f.numerator();
    for (const auto& [v, k] : lcm) {
      for (int i = have[v]; i < k; ++i) num *= LaurentPoly::one_minus(v);
    }
    return num;
  };
  std::vector<Weight> den;
  for (const auto& [v, k] : lcm) den.insert(den.end(), static_cast<std::size_t>(k), v);
  return CharFraction(lift(oa, ma) + lift(ob, mb), std::move(den));
}

LaurentPoly divide_one_minus(const LaurentPoly& p, const Weight& v) {
  if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by 1 - t^0");
  std::size_t axis = 0;
  while (v[axis] == 0) ++axis;
  // Along each line w0 + k v the quotient coefficients are prefix sums.
  std::map<Weight, std::map<std::int64_t, Rat>> lines;
  for (const auto& [w, c] : p.terms()) {
    std::int64_t k = floor_div(w[axis], v[axis]);
    lines[w - k * v][k] += c;
  }
  LaurentPoly q;
  for (const auto& [base, coeffs] : lines) {
    Rat running = 0;
    auto last = std::prev(coeffs.end())->first;
    auto it = coeffs.begin();
    for (std::int64_t k = coeffs.begin()->first; k <= last; ++k) {
      if (it != coeffs.end() && it->first == k) {
        running += it->second;
        ++it;
      }
      if (k < last) q.add_term(base + k * v, running);
    }
    if (running != 0) {
      throw Error(ErrorKind::NotPolynomial, "not divisible by (1 - t^" + to_string(v) + ")");
    }
  }
  return q;
}

LaurentPoly cf_normalize(const CharFraction& f) {
  LaurentPoly q = f.numerator();
  for (const auto& v : f.denominator()) q = divide_one_minus(q, v);
  return q;
}

LaurentPoly series_oracle(const CharFraction& f, const Weight& phi, std::int64_t lo, std::int64_t hi) {
  LaurentPoly num = f.numerator();
  std::vector<Weight> steps;
  for (const auto& v : f.denominator()) {
    std::int64_t pv = pairing(phi, v);
    if (pv == 0) {
      throw Error(ErrorKind::DegenerateFunctional, "functional vanishes on " + to_string(v));
    }
    if (pv > 0) {
      steps.push_back(v);
    } else {
      num = -num.shifted(-v);
      steps.push_back(-v);
    }
  }
  if (num.is_zero() || lo > hi) return {};
  std::int64_t base = pairing(phi, num.terms().begin()->first);
  for (const auto& [w, c] : num.terms()) base = std::min(base, pairing(phi, w));
  const std::int64_t budget = hi - base;
  if (budget < 0) return {};

  LaurentPoly expansion = LaurentPoly::constant(1);
  for (const auto& v : steps) {
    const std::int64_t pv = pairing(phi, v);
    LaurentPoly next;
    for (const auto& [w, c] : expansion.terms()) {
      const std::int64_t pw = pairing(phi, w);
      for (std::int64_t k = 0; pw + k * pv <= budget; ++k) next.add_term(w + k * v, c);
    }
    expansion = std::move(next);
  }
  LaurentPoly out;
  for (const auto& [w1, c1] : num.terms()) {
    for (const auto& [w2, c2] : expansion.terms()) {
      Weight w = w1 + w2;
      std::int64_t pw = pairing(phi, w);
      if (pw >= lo && pw <= hi) out.add_term(w, c1 * c2);
    }
  }
  return out;
}

}  // namespace pairloc
