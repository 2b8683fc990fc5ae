#include "pairloc/descent.hpp"

#include <numeric>

#include "pairloc/error.hpp"

namespace pairloc {

int ProjectiveProduct::dimension() const { return std::accumulate(dims.begin(), dims.end(), 0); }

ProjectiveProduct projective_product(std::string_view id) {
  if (id == "p3") return {{3}};
  if (id == "p1xp2") return {{1, 2}};
  if (id == "p1p1p1") return {{1, 1, 1}};
  if (id == "p1") return {{1}};
  if (id == "p2") return {{2}};
  throw Error(ErrorKind::UnsupportedSpace, "'" + std::string(id) + "' is not a supported product of projective spaces");
}

ProjectiveProduct projective_product_of(const ToricThreefold& X) { return projective_product(X.source); }

int real_degree(const HMonomial& e) { return 2 * std::accumulate(e.begin(), e.end(), 0); }

CohClass CohClass::unit(const ProjectiveProduct& space) {
  return monomial(space, HMonomial(space.dims.size(), 0));
}

CohClass CohClass::monomial(const ProjectiveProduct& space, const HMonomial& e, const Rat& c) {
  CohClass out(space);
  out.add_term(e, c);
  return out;
}

void CohClass::add_term(const HMonomial& e, const Rat& c) {
  if (e.size() != space_.dims.size()) throw Error(ErrorKind::InvalidArgument, "monomial has the wrong number of factors");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (e[i] > space_.dims[i]) return;  // vanishes in cohomology
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int CohClass::degree() const {
  if (terms_.empty()) return 0;
  const int d = real_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (real_degree(e) != d) throw Error(ErrorKind::InvalidArgument, "class is not homogeneous");
  }
  return d;
}

CohClass CohClass::component(int deg) const {
  CohClass out(space_);
  for (const auto& [e, c] : terms_) {
    if (real_degree(e) == deg) out.terms_.emplace(e, c);
  }
  return out;
}

CohClass& CohClass::operator+=(const CohClass& o) {
  if (!(o.space_ == space_)) throw Error(ErrorKind::InvalidArgument, "classes live on different spaces");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  if (!(a.space_ == b.space_)) throw Error(ErrorKind::InvalidArgument, "classes live on different spaces");
  CohClass out(a.space_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      HMonomial e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CohClass operator*(const Rat& k, CohClass a) {
  CohClass out(a.space_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, k * c);
  return out;
}

namespace {

// Coefficients of (h / (1 - e^{-h}))^{power} up to h^n.
std::vector<Rat> todd_series(int n, int power) {
  // (1 - e^{-h}) / h = sum_k (-1)^k h^k / (k+1)!
  std::vector<Rat> base(static_cast<std::size_t>(n) + 1);
  Rat fact = 1;
  for (int k = 0; k <= n; ++k) {
    fact *= k + 1;
    base[static_cast<std::size_t>(k)] = Rat(k % 2 == 0 ? 1 : -1) / fact;
  }
  std::vector<Rat> inv(base.size(), Rat(0));
  inv[0] = 1;
  for (std::size_t m = 1; m < base.size(); ++m) {
    Rat s = 0;
    for (std::size_t k = 1; k <= m; ++k) s += base[k] * inv[m - k];
    inv[m] = -s;
  }
  std::vector<Rat> out(base.size(), Rat(0));
  out[0] = 1;
  for (int p = 0; p < power; ++p) {
    std::vector<Rat> next(base.size(), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; i + j < out.size(); ++j) next[i + j] += out[i] * inv[j];
    out = std::move(next);
  }
  return out;
}

}  // namespace

CohClass todd_class(const ProjectiveProduct& space) {
  CohClass total = CohClass::unit(space);
  for (std::size_t f = 0; f < space.dims.size(); ++f) {
    const int n = space.dims[f];
    const auto series = todd_series(n, n + 1);
    CohClass factor(space);
    for (int k = 0; k <= n; ++k) {
      HMonomial e(space.dims.size(), 0);
      e[f] = k;
      factor.add_term(e, series[static_cast<std::size_t>(k)]);
    }
    total = total * factor;
  }
  return total;
}

std::vector<std::pair<CohClass, CohClass>> kunneth_diagonal(const ProjectiveProduct& space) {
  if (space.dims.empty()) throw Error(ErrorKind::UnsupportedSpace, "empty product");
  for (int n : space.dims) {
    if (n < 1) throw Error(ErrorKind::UnsupportedSpace, "factor of dimension " + std::to_string(n));
  }
  std::vector<std::pair<HMonomial, HMonomial>> acc{{{}, {}}};
  for (int n : space.dims) {
    std::vector<std::pair<HMonomial, HMonomial>> next;
    for (const auto& [u, v] : acc) {
      for (int i = 0; i <= n; ++i) {
        auto u2 = u;
        auto v2 = v;
        u2.push_back(i);
        v2.push_back(n - i);
        next.emplace_back(std::move(u2), std::move(v2));
      }
    }
    acc = std::move(next);
  }
  std::vector<std::pair<CohClass, CohClass>> out;
  for (const auto& [u, v] : acc) out.emplace_back(CohClass::monomial(space, u), CohClass::monomial(space, v));
  return out;
}

std::vector<std::pair<CohClass, CohClass>> kunneth_diagonal(const ProjectiveProduct& space, const CohClass& gamma) {
  std::vector<std::pair<CohClass, CohClass>> out;
  for (const auto& [u, v] : kunneth_diagonal(space)) {
    const CohClass gu = gamma * u;
    for (const auto& [e, c] : gu.terms()) out.emplace_back(CohClass::monomial(space, e, c), v);
  }
  return out;
}

std::vector<GrrTerm> grr_terms(const ProjectiveProduct& space, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const int dim = space.dimension();
  const int target = k + dim;  // complex degree on P x X
  const CohClass td = todd_class(space);
  std::vector<GrrTerm> out;
  // -ch(F) Td - ch(F^v) Td
  for (int i = 2; i <= target; ++i) {
    const Rat sign = (i % 2 == 0) ? Rat(-2) : Rat(0);
    if (sign == 0) continue;
    const CohClass part = td.component(2 * (target - i));
    for (const auto& [e, c] : part.terms()) out.push_back({sign * c, i, 0, e});
  }
  // ch(F) ch(F^v) Td
  for (int i = 2; i <= target; ++i) {
    for (int j = 2; i + j <= target; ++j) {
      const Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
      const CohClass part = td.component(2 * (target - i - j));
      for (const auto& [e, c] : part.terms()) out.push_back({sign * c, i, j, e});
    }
  }
  return out;
}

int symbol_degree(const DescSymbol& s, const ProjectiveProduct& space) {
  const int shift = 2 * space.dimension();
  switch (s.kind) {
    case DescSymbol::Kind::Single:
      return 2 * (s.a + 2) + real_degree(s.u) - shift;
    case DescSymbol::Kind::Generalized:
      return 2 * (s.a + 2) + 2 * (s.b + 2) + real_degree(s.u) - shift;
    case DescSymbol::Kind::Product:
      return 2 * (s.a + 2) + real_degree(s.u) - shift + 2 * (s.b + 2) + real_degree(s.v) - shift;
  }
  return 0;
}

void DescendentExpr::add(const DescSymbol& s, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool DescendentExpr::has_generalized() const {
  for (const auto& [s, c] : terms) {
    if (s.kind == DescSymbol::Kind::Generalized) return true;
  }
  return false;
}

DescendentExpr operator+(const DescendentExpr& a, const DescendentExpr& b) {
  if (!(a.space == b.space)) throw Error(ErrorKind::InvalidArgument, "expressions live on different spaces");
  DescendentExpr out = a;
  for (const auto& [s, c] : b.terms) out.add(s, c);
  return out;
}

DescendentExpr operator*(const Rat& k, const DescendentExpr& e) {
  DescendentExpr out{e.space, {}};
  for (const auto& [s, c] : e.terms) out.add(s, k * c);
  return out;
}

DescendentExpr grr_expansion(const ProjectiveProduct& space, int k) {
  DescendentExpr out{space, {}};
  for (const auto& t : grr_terms(space, k)) {
    DescSymbol s;
    if (t.j == 0) {
      s.kind = DescSymbol::Kind::Single;
      s.a = t.i - 2;
    } else {
      s.kind = DescSymbol::Kind::Generalized;
      s.a = std::min(t.i, t.j) - 2;
      s.b = std::max(t.i, t.j) - 2;
    }
    s.u = t.gamma;
    out.add(s, t.coeff);
  }
  return out;
}

DescendentExpr reduce_generalized(const DescendentExpr& e) {
  DescendentExpr out{e.space, {}};
  for (const auto& [s, c] : e.terms) {
    if (s.kind != DescSymbol::Kind::Generalized) {
      out.add(s, c);
      continue;
    }
    for (const auto& [u, v] : kunneth_diagonal(e.space, CohClass::monomial(e.space, s.u))) {
      for (const auto& [eu, cu] : u.terms()) {
        for (const auto& [ev, cv] : v.terms()) {
          DescSymbol p;
          p.kind = DescSymbol::Kind::Product;
          p.a = s.a;
          p.b = s.b;
          p.u = eu;
          p.v = ev;
          out.add(p, c * cu * cv);
        }
      }
    }
  }
  return out;
}

std::string to_text(const HMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "h" + std::to_string(i + 1);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_text(const DescendentExpr& e) {
  std::string out;
  for (const auto& [s, c] : e.terms) {
    out += to_string(c) + " * ";
    switch (s.kind) {
      case DescSymbol::Kind::Single:
        out += "tau[" + std::to_string(s.a) + "](" + to_text(s.u) + ")";
        break;
      case DescSymbol::Kind::Generalized:
        out += "tau[" + std::to_string(s.a) + "," + std::to_string(s.b) + "](" + to_text(s.u) + ")";
        break;
      case DescSymbol::Kind::Product:
        out += "tau[" + std::to_string(s.a) + "](" + to_text(s.u) + ") * tau[" + std::to_string(s.b) + "](" + to_text(s.v) + ")";
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace pairloc
