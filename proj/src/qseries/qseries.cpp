#include "pairloc/qseries.hpp"

#include <algorithm>

#include "pairloc/error.hpp"
#include "pairloc/rat_matrix.hpp"

namespace pairloc {

RationalFn make_rational(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (num.is_zero()) return {UPoly(), UPoly::constant(1)};
  const UPoly g = gcd(num, den);
  UPoly n = divmod(num, g).first;
  UPoly m = divmod(den, g).first;
  const Rat scale = Rat(1) / m.coeffs()[static_cast<std::size_t>(m.valuation())];
  return {scale * n, scale * m};
}

std::vector<Rat> expand(const RationalFn& f, std::size_t count) {
  const Rat d0 = f.den.coeff(0);
  if (d0 == 0) throw Error(ErrorKind::InvalidArgument, "function has a pole at q = 0");
  std::vector<Rat> a(count, Rat(0));
  for (std::size_t n = 0; n < count; ++n) {
    Rat s = f.num.coeff(static_cast<int>(n));
    for (int j = 1; j <= f.den.degree() && static_cast<std::size_t>(j) <= n; ++j) s -= f.den.coeffs()[static_cast<std::size_t>(j)] * a[n - static_cast<std::size_t>(j)];
    a[n] = s / d0;
  }
  return a;
}

std::string to_string(const RationalFn& f) { return "(" + to_string(f.num) + ") / (" + to_string(f.den) + ")"; }

Rat CoeffSeries::at(std::int64_t n) const {
  if (n < n_min) return 0;
  const auto i = static_cast<std::size_t>(n - n_min);
  if (i >= coeffs.size()) throw Error(ErrorKind::InvalidArgument, "coefficient beyond the computed range");
  return coeffs[i];
}

std::vector<CoeffSeries> assemble(Localizer& loc, const std::vector<ChernIndex>& indices, std::int64_t n_max) {
  std::vector<CoeffSeries> out;
  for (const auto& I : indices) {
    CoeffSeries s;
    s.geometry = loc.geometry().source;
    s.beta = to_string(loc.beta());
    s.index = I;
    s.d = loc.dimension();
    s.n_min = 1;
    out.push_back(std::move(s));
  }
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto values = loc.chern_numbers(n, indices).values;
    for (std::size_t k = 0; k < indices.size(); ++k) out[k].coeffs.push_back(values[k]);
  }
  return out;
}

CoeffSeries assemble(const ToricThreefold& X, const CurveClass& beta, const ChernIndex& I, std::int64_t n_max, const EngineOptions& opts) {
  Localizer loc(X, beta, opts);
  return assemble(loc, {I}, n_max).front();
}

namespace {

// a_0 .. a_{N-1} from q^0.
std::vector<Rat> dense(const CoeffSeries& s) {
  if (s.n_min < 0) throw Error(ErrorKind::InvalidArgument, "series with negative powers of q");
  std::vector<Rat> a(static_cast<std::size_t>(s.n_min), Rat(0));
  a.insert(a.end(), s.coeffs.begin(), s.coeffs.end());
  return a;
}

bool reproduces(const RationalFn& f, const std::vector<Rat>& a) {
  if (f.den.coeff(0) == 0) return false;
  return expand(f, a.size()) == a;
}

std::optional<RationalFn> pade(const std::vector<Rat>& a, int L, int M, std::size_t used) {
  // Unknowns q_1..q_M then p_0..p_L; equations n = 0..used-1:
  //   a_n + sum_{j=1}^{M} q_j a_{n-j} - p_n = 0.
  const std::size_t unknowns = static_cast<std::size_t>(M + L + 1);
  RatMatrix A(used, unknowns);
  std::vector<Rat> b(used, Rat(0));
  for (std::size_t n = 0; n < used; ++n) {
    for (int j = 1; j <= M; ++j) {
      if (static_cast<std::size_t>(j) <= n) A(n, static_cast<std::size_t>(j - 1)) = a[n - static_cast<std::size_t>(j)];
    }
    if (n <= static_cast<std::size_t>(L)) A(n, static_cast<std::size_t>(M) + n) = -1;
    b[n] = -a[n];
  }
  const auto x = solve_consistent(A, b);
  if (!x) return std::nullopt;
  std::vector<Rat> q{Rat(1)};
  for (int j = 0; j < M; ++j) q.push_back((*x)[static_cast<std::size_t>(j)]);
  std::vector<Rat> p;
  for (int i = 0; i <= L; ++i) p.push_back((*x)[static_cast<std::size_t>(M + i)]);
  return make_rational(UPoly(p), UPoly(q));
}

}  // namespace

FitResult fit_rational(const CoeffSeries& s, const FitOptions& opts) {
  if (opts.holdout < 2) throw Error(ErrorKind::InvalidArgument, "holdout must be at least 2");
  const auto a = dense(s);
  const auto N = static_cast<int>(a.size());
  const int budget = N - opts.holdout;  // coefficients available to the solve
  if (budget < 1) throw Error(ErrorKind::NoFit, "series too short for the requested holdout");

  if (opts.mode == FitMode::Pade) {
    const int max_m = opts.max_den_degree < 0 ? budget - 1 : std::min(opts.max_den_degree, budget - 1);
    for (int M = 0; M <= max_m; ++M) {
      int max_l = budget - 1 - M;
      if (opts.max_num_degree >= 0) max_l = std::min(max_l, opts.max_num_degree);
      for (int L = 0; L <= max_l; ++L) {
        const auto used = static_cast<std::size_t>(budget);
        auto f = pade(a, L, M, used);
        if (f && reproduces(*f, a)) return {*f, N - (L + M + 1)};
      }
    }
    throw Error(ErrorKind::NoFit, "no rational function within the degree bounds reproduces the held-out coefficients");
  }

  // Ansatz: den = (1+q)^alpha (1-q)^gamma, ordered by total degree then alpha.
  const int total_max = opts.ansatz_max_plus + opts.ansatz_max_minus;
  for (int total = 0; total <= total_max; ++total) {
    for (int alpha = std::min(total, opts.ansatz_max_plus); alpha >= 0; --alpha) {
      const int gamma = total - alpha;
      if (gamma > opts.ansatz_max_minus) continue;
      const UPoly den = pow(UPoly({Rat(1), Rat(1)}), alpha) * pow(UPoly({Rat(1), Rat(-1)}), gamma);
      if (opts.max_den_degree >= 0 && den.degree() > opts.max_den_degree) continue;
      // Numerator = (series * den) truncated; smallest L with zero tail over the solve range.
      std::vector<Rat> prod(static_cast<std::size_t>(budget), Rat(0));
      for (int n = 0; n < budget; ++n)
        for (int j = 0; j <= den.degree() && j <= n; ++j) prod[static_cast<std::size_t>(n)] += den.coeffs()[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - j)];
      int L = budget - 1;
      while (L >= 0 && prod[static_cast<std::size_t>(L)] == 0) --L;
      if (L == budget - 1) continue;  // no vanishing tail: numerator not determined
      if (opts.max_num_degree >= 0 && L > opts.max_num_degree) continue;
      std::vector<Rat> num(prod.begin(), prod.begin() + (L + 1));
      const RationalFn f = make_rational(UPoly(num), den);
      if (reproduces(f, a)) return {f, N - (std::max(L, 0) + 1)};
    }
  }
  throw Error(ErrorKind::NoFit, "no (1+q)^a (1-q)^b ansatz reproduces the held-out coefficients");
}

FunctionalEquationCheck check_functional_equation(const RationalFn& f, std::int64_t d) {
  FunctionalEquationCheck out;
  if (f.num.is_zero()) {
    out.holds = true;
    return out;
  }
  const auto p = static_cast<std::int64_t>(f.num.degree());
  const auto r = static_cast<std::int64_t>(f.den.degree());
  const std::int64_t e = r - p + d;
  const UPoly lhs = f.num.reversed() * f.den;
  const UPoly rhs = f.num * f.den.reversed();
  out.residual = e >= 0 ? lhs.shifted(static_cast<int>(e)) - rhs : lhs - rhs.shifted(static_cast<int>(-e));
  out.holds = out.residual.is_zero();
  return out;
}

namespace {

std::vector<PoleFactor> pole_factors(const UPoly& den) {
  std::vector<PoleFactor> out;
  const auto levels = squarefree_decomposition(den);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    UPoly rest = levels[i];
    if (rest.degree() <= 0) continue;
    std::vector<Rat> roots;
    try {
      roots = rational_roots(rest);
    } catch (const Error&) {
      // leave the level unsplit
    }
    for (const auto& r : roots) {
      out.push_back({UPoly::linear_root(r), r, static_cast<int>(i + 1)});
      rest = divmod(rest, UPoly::linear_root(r)).first;
    }
    if (rest.degree() > 0) out.push_back({rest.monic(), std::nullopt, static_cast<int>(i + 1)});
  }
  return out;
}

UPoly radical(const UPoly& den) {
  UPoly r = UPoly::constant(1);
  for (const auto& f : squarefree_decomposition(den)) r = r * f;
  return r;
}

}  // namespace

PoleReport check_common_poles(const std::vector<RationalFn>& fns) {
  if (fns.empty()) throw Error(ErrorKind::InvalidArgument, "no functions to compare");
  PoleReport report;
  for (const auto& f : fns) report.per_function.push_back(pole_factors(f.den));
  report.same_support = true;
  report.same_multiplicities = true;
  const UPoly rad0 = radical(fns.front().den);
  const auto sq0 = squarefree_decomposition(fns.front().den);
  for (std::size_t k = 1; k < fns.size(); ++k) {
    if (!(radical(fns[k].den) == rad0)) report.same_support = false;
    if (!(squarefree_decomposition(fns[k].den) == sq0)) report.same_multiplicities = false;
  }
  if (!report.same_support) report.same_multiplicities = false;
  return report;
}

nlohmann::json to_json(const UPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

nlohmann::json to_json(const RationalFn& f) {
  return {{"num", to_json(f.num)}, {"den", to_json(f.den)}, {"text", to_string(f)}};
}

nlohmann::json to_json(const PoleReport& r) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& factors : r.per_function) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& pf : factors) {
      nlohmann::json item = {{"factor", to_json(pf.factor)}, {"multiplicity", pf.multiplicity}};
      item["root"] = pf.root ? nlohmann::json(to_string(*pf.root)) : nlohmann::json(nullptr);
      list.push_back(std::move(item));
    }
    per.push_back(std::move(list));
  }
  return {{"same_support", r.same_support}, {"same_multiplicities", r.same_multiplicities}, {"poles", per}};
}

nlohmann::json fit_record(const CoeffSeries& s, const std::optional<FitResult>& fit, const std::optional<FunctionalEquationCheck>& fe) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_string(c));
  nlohmann::json rec;
  rec["geometry"] = s.geometry;
  rec["beta"] = s.beta;
  rec["I"] = to_string(s.index);
  rec["d"] = s.d;
  rec["n_min"] = s.n_min;
  rec["coefficients"] = coeffs;
  rec["fit"] = fit ? to_json(fit->fn) : nlohmann::json(nullptr);
  rec["holdout"] = fit ? nlohmann::json(fit->holdout) : nlohmann::json(nullptr);
  if (fe) {
    rec["functional_equation"] = fe->holds;
    if (!fe->holds) rec["functional_equation_residual"] = to_json(fe->residual);
  } else {
    rec["functional_equation"] = nullptr;
  }
  return rec;
}

}  // namespace pairloc
