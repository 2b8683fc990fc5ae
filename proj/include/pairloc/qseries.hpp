#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pairloc/chernloc.hpp"
#include "pairloc/upoly.hpp"

namespace pairloc {

/// num / den in lowest terms; the lowest nonzero coefficient of den is 1.
struct RationalFn {
  UPoly num;
  UPoly den = UPoly::constant(1);

  friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

/// Cancels the gcd and normalizes; throws InvalidArgument for den = 0.
RationalFn make_rational(const UPoly& num, const UPoly& den);

/// Power-series coefficients of q^0 .. q^{count-1}; needs den(0) != 0.
std::vector<Rat> expand(const RationalFn& f, std::size_t count);

std::string to_string(const RationalFn& f);

/// Coefficients c_n for n = n_min .. n_min + coeffs.size() - 1, with c_n = 0
/// understood for 0 <= n < n_min.
struct CoeffSeries {
  std::string geometry;
  std::string beta;
  ChernIndex index;
  std::int64_t d = 0;
  std::int64_t n_min = 1;
  std::vector<Rat> coeffs;

  Rat at(std::int64_t n) const;
  std::int64_t n_max() const { return n_min + static_cast<std::int64_t>(coeffs.size()) - 1; }
};

/// c_n^I for 1 <= n <= n_max for each requested index, sharing the fixed-pair
/// characters across indices.
std::vector<CoeffSeries> assemble(Localizer& loc, const std::vector<ChernIndex>& indices, std::int64_t n_max);
CoeffSeries assemble(const ToricThreefold& X, const CurveClass& beta, const ChernIndex& I, std::int64_t n_max,
                     const EngineOptions& opts = {});

enum class FitMode { Pade, Ansatz };

struct FitOptions {
  FitMode mode = FitMode::Pade;
  int holdout = 2;
  int max_den_degree = -1;  // -1: limited only by the data
  int max_num_degree = -1;
  int ansatz_max_plus = 16;   // exponent of (1 + q)
  int ansatz_max_minus = 16;  // exponent of (1 - q)
};

struct FitResult {
  RationalFn fn;
  /// Coefficients beyond the unknowns of the fitted degrees, all reproduced
  /// exactly; at least FitOptions::holdout.
  int holdout = 0;
};

/// Minimal-degree rational function reproducing every coefficient; the last
/// `holdout` coefficients never enter the linear solve. Throws NoFit.
FitResult fit_rational(const CoeffSeries& s, const FitOptions& opts = {});

struct FunctionalEquationCheck {
  bool holds = false;
  /// q^{r-p+d} rev(P) Q - P rev(Q) with the shift moved to the side that
  /// keeps exponents nonnegative; zero iff f(1/q) = q^{-d} f(q).
  UPoly residual;
};

FunctionalEquationCheck check_functional_equation(const RationalFn& f, std::int64_t d);

struct PoleFactor {
  UPoly factor;             // monic
  std::optional<Rat> root;  // set for linear factors
  int multiplicity = 0;
};

struct PoleReport {
  bool same_support = false;
  bool same_multiplicities = false;
  std::vector<std::vector<PoleFactor>> per_function;
};

/// Square-free decomposition of each denominator with rational roots split
/// off; supports are compared through the radicals, multiplicities through
/// the full decompositions.
PoleReport check_common_poles(const std::vector<RationalFn>& fns);

nlohmann::json to_json(const UPoly& p);
nlohmann::json to_json(const RationalFn& f);
nlohmann::json to_json(const PoleReport& r);

/// {geometry, beta, I, d, coefficients, fit: {num, den}, functional_equation, holdout}
nlohmann::json fit_record(const CoeffSeries& s, const std::optional<FitResult>& fit,
                          const std::optional<FunctionalEquationCheck>& fe);

}  // namespace pairloc
