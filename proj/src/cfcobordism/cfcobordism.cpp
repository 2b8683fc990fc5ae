#include "pairloc/cfcobordism.hpp"

#include "pairloc/error.hpp"

namespace pairloc {

std::string to_string(const TPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& [exps, c] : p.terms) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      s += "*t" + std::to_string(k + 1);
      if (exps[k] != 1) s += "^" + std::to_string(exps[k]);
    }
  }
  return s;
}

namespace {

// Working ring: t_1..t_D followed by `extra` coefficient variables; only the
// t-weight is truncated.
struct Ring {
  int D;
  std::size_t extra;
  std::vector<int> weights;

  Ring(int d, std::size_t e) : D(d), extra(e), weights(static_cast<std::size_t>(d) + e, 0) {
    for (int i = 0; i < d; ++i) weights[static_cast<std::size_t>(i)] = i + 1;
  }
  std::size_t size() const { return weights.size(); }
  MultiPoly one() const { return MultiPoly::constant(1, size()); }
  MultiPoly t(int i) const { return MultiPoly::variable(static_cast<std::size_t>(i - 1), size()); }
  MultiPoly var(std::size_t j, int power = 1) const { return MultiPoly::variable(static_cast<std::size_t>(D) + j, size(), power); }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return MultiPoly::mul_truncated(a, b, weights, D); }

  // sum_{k=0}^{D} (-g)^k for g of positive t-weight.
  MultiPoly inverse_one_plus(const MultiPoly& g) const {
    MultiPoly total = one();
    MultiPoly power = one();
    MultiPoly neg = Rat(-1) * g;
    for (int k = 1; k <= D; ++k) {
      power = mul(power, neg);
      if (power.is_zero()) break;
      total += power;
    }
    return total;
  }

  FormalTPolynomial split(const MultiPoly& p) const {
    FormalTPolynomial out;
    for (const auto& [e, c] : p.terms()) {
      std::vector<std::int64_t> key(e.begin(), e.begin() + D);
      key = FormalTPolynomial::canonical(std::move(key));
      MultiPoly::Exponent rest(e.begin() + D, e.end());
      auto [it, inserted] = out.terms.try_emplace(key, MultiPoly(extra));
      it->second.add_term(rest, c);
      if (it->second.is_zero()) out.terms.erase(it);
    }
    return out;
  }
};

}  // namespace

FormalTPolynomial todd_inverse_roots(const std::vector<RootTerm>& bundle, std::size_t nroots, int D) {
  if (D < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  Ring R(D, nroots);
  MultiPoly total = R.one();
  for (const auto& term : bundle) {
    if (term.root >= nroots) throw Error(ErrorKind::InvalidArgument, "root index out of range");
    MultiPoly g(R.size());
    for (int i = 1; i <= D; ++i) g += R.mul(R.var(term.root, i), R.t(i));
    const MultiPoly factor = term.sign >= 0 ? R.one() + g : R.inverse_one_plus(g);
    total = R.mul(total, factor);
  }
  return R.split(total);
}

FormalTPolynomial todd_inverse_chern(int D, int sign) {
  if (D < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  // Variables: t_1..t_D, c_1..c_D, x. The t-weight controls truncation; x
  // tracks the degree in a single Chern root.
  Ring R(D, static_cast<std::size_t>(D) + 1);
  const std::size_t xi = static_cast<std::size_t>(D);
  auto c = [&](int k) { return R.var(static_cast<std::size_t>(k - 1)); };

  // log(1 + g) with g = sum_i x^i t_i.
  MultiPoly g(R.size());
  for (int i = 1; i <= D; ++i) g += R.mul(R.var(xi, i), R.t(i));
  MultiPoly log_f(R.size());
  MultiPoly power = R.one();
  for (int k = 1; k <= D; ++k) {
    power = R.mul(power, g);
    log_f += Rat(k % 2 == 1 ? 1 : -1, k) * power;
  }

  // Power sums of the Chern roots through Newton's identities.
  std::vector<MultiPoly> p(static_cast<std::size_t>(D) + 1, MultiPoly(R.size()));
  for (int m = 1; m <= D; ++m) {
    MultiPoly pm = Rat(m % 2 == 1 ? m : -m) * c(m);
    for (int i = 1; i < m; ++i) pm += Rat(i % 2 == 1 ? 1 : -1) * (c(i) * p[static_cast<std::size_t>(m - i)]);
    p[static_cast<std::size_t>(m)] = pm;
  }

  // sum_m g_m(t) p_m where g_m is the x^m coefficient of log f.
  MultiPoly L(R.size());
  for (const auto& [e, coeff] : log_f.terms()) {
    const int m = e[static_cast<std::size_t>(D) + xi];
    MultiPoly::Exponent tpart = e;
    tpart[static_cast<std::size_t>(D) + xi] = 0;
    MultiPoly mono(R.size());
    mono.add_term(tpart, coeff * sign);
    L += R.mul(mono, p[static_cast<std::size_t>(m)]);
  }

  MultiPoly total = R.one();
  MultiPoly term = R.one();
  for (int k = 1; k <= D; ++k) {
    term = Rat(1, k) * R.mul(term, L);
    if (term.is_zero()) break;
    total += term;
  }
  FormalTPolynomial out = R.split(total);
  for (auto& [key, coeff] : out.terms) coeff = coeff.restrict_variables(0, static_cast<std::size_t>(D));
  return out;
}

FormalTPolynomial multiply(const FormalTPolynomial& a, const FormalTPolynomial& b, int D) {
  FormalTPolynomial out;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      std::vector<std::int64_t> k(std::max(ka.size(), kb.size()), 0);
      for (std::size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
      for (std::size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
      if (FormalTPolynomial::degree_of(k) > D) continue;
      MultiPoly prod = ca * cb;
      auto [it, inserted] = out.terms.try_emplace(FormalTPolynomial::canonical(k), MultiPoly(prod.nvars()));
      it->second += prod;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

BasisMatrix cf_basis_matrix(std::int64_t d) {
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  BasisMatrix B;
  B.d = d;
  B.rows = chern_indices(d);
  B.cols = B.rows;
  const std::size_t n = B.rows.size();
  B.matrix = RatMatrix(n, n);
  if (d == 0) {
    B.matrix = RatMatrix::identity(1);
    B.inverse = B.matrix;
    return B;
  }
  const FormalTPolynomial expansion = todd_inverse_chern(static_cast<int>(d), -1);
  for (std::size_t r = 0; r < n; ++r) {
    auto it = expansion.terms.find(FormalTPolynomial::canonical(B.rows[r].exps));
    if (it == expansion.terms.end()) continue;
    for (std::size_t c = 0; c < n; ++c) {
      MultiPoly::Exponent e(B.cols[c].exps.begin(), B.cols[c].exps.end());
      B.matrix(r, c) = it->second.coefficient(e);
    }
  }
  B.inverse = B.matrix.inverse();
  return B;
}

TPolynomial cobordism_class_point(const ChernVector& v) {
  const BasisMatrix B = cf_basis_matrix(v.d);
  std::vector<Rat> x;
  for (const auto& J : B.cols) {
    auto it = v.values.find(J);
    if (it == v.values.end()) throw Error(ErrorKind::IncompleteVector, "missing Chern number for index " + to_string(J));
    x.push_back(it->second);
  }
  const auto y = B.matrix.apply(x);
  TPolynomial out;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r] != 0) out.terms.emplace(TPolynomial::canonical(B.rows[r].exps), y[r]);
  }
  return out;
}

ChernVector chern_vector_from_class(const TPolynomial& p, std::int64_t d) {
  const BasisMatrix B = cf_basis_matrix(d);
  std::vector<Rat> y;
  for (const auto& I : B.rows) {
    auto it = p.terms.find(TPolynomial::canonical(I.exps));
    y.push_back(it == p.terms.end() ? Rat(0) : it->second);
  }
  for (const auto& [k, c] : p.terms) {
    if (TPolynomial::degree_of(k) != d) throw Error(ErrorKind::InvalidArgument, "class is not homogeneous of degree " + std::to_string(d));
  }
  const auto x = B.inverse.apply(y);
  ChernVector v;
  v.d = d;
  for (std::size_t c = 0; c < x.size(); ++c) v.values.emplace(B.cols[c], x[c]);
  return v;
}

SmoothClass smooth_variety_class(const ToricThreefold& X, const EngineOptions& opts) {
  std::vector<LaurentPoly> chars;
  for (const auto& pt : X.fixed_points) {
    LaurentPoly ch;
    for (const auto& w : pt.tangent_weights) ch.add_term(w, 1);
    chars.push_back(std::move(ch));
  }
  const auto indices = chern_indices(3);
  auto res = localize(chars, 3, indices, opts);
  SmoothClass out;
  out.numbers.d = 3;
  for (std::size_t i = 0; i < indices.size(); ++i) out.numbers.values.emplace(indices[i], res.values[i]);
  out.cls = cobordism_class_point(out.numbers);
  out.specializations = std::move(res.specializations);
  return out;
}

}  // namespace pairloc
