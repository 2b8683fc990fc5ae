#include "pairloc/upoly.hpp"

#include <algorithm>
#include <set>

#include "pairloc/error.hpp"

namespace pairloc {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(int k, const Rat& c) {
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v.back() = c;
  return UPoly(std::move(v));
}

Rat UPoly::coeff(int i) const {
  return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat(0) : c_[static_cast<std::size_t>(i)];
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rat UPoly::evaluate(const Rat& q) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * q + *it;
  return v;
}

UPoly UPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return (Rat(1) / c_.back()) * *this;
}

UPoly UPoly::reversed() const {
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return UPoly(std::move(r));
}

UPoly UPoly::shifted(int k) const {
  if (c_.empty()) return *this;
  std::vector<Rat> r(static_cast<std::size_t>(k), Rat(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return UPoly(std::move(r));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& k) {
  for (auto& x : c_) x *= k;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rat f = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly pow(const UPoly& p, int k) {
  UPoly r = UPoly::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "square-free decomposition of zero");
  std::vector<UPoly> out;
  const UPoly f = p.monic();
  if (f.degree() == 0) return out;
  UPoly a = gcd(f, f.derivative());
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(f.derivative(), a).first;
  UPoly d = c - b.derivative();
  while (true) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    if (b.degree() <= 0) break;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small;
  std::vector<BigInt> large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& p) {
  std::vector<Rat> roots;
  if (p.degree() <= 0) return roots;
  UPoly f = p;
  if (f.valuation() > 0) {
    roots.push_back(Rat(0));
    std::vector<Rat> c(f.coeffs().begin() + f.valuation(), f.coeffs().end());
    f = UPoly(std::move(c));
  }
  if (f.degree() <= 0) return roots;
  // Integer coefficients with the same roots.
  BigInt lcm = 1;
  for (const auto& x : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> ints;
  for (const auto& x : f.coeffs()) ints.push_back(BigInt(x * Rat(lcm)));
  const BigInt limit("1000000000000");
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) {
    throw Error(ErrorKind::InvalidArgument, "coefficients too large for rational root search");
  }
  std::set<Rat> found;
  for (const auto& num : divisors(ints.front())) {
    for (const auto& den : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        Rat r(BigInt(sign * num), den);
        r.canonicalize();
        if (!found.count(r) && f.evaluate(r) == 0) found.insert(r);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rat& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      s += to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += to_string(mag) + "*" + mono;
    }
  }
  return s;
}

}  // namespace pairloc
