#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pairloc/laurent_poly.hpp"
#include "pairloc/toric3.hpp"
#include "pairloc/write_once_cache.hpp"

namespace pairloc {

/// Exponent vector (i_1, ..., i_d) of a monomial in Chern classes, with
/// sum_k k i_k = d.
struct ChernIndex {
  std::vector<std::int64_t> exps;

  std::int64_t degree() const;
  friend auto operator<=>(const ChernIndex&, const ChernIndex&) = default;
};

/// All indices of weighted degree d, lexicographically decreasing, so that
/// (d, 0, ...) comes first and (0, ..., 0, 1) last.
std::vector<ChernIndex> chern_indices(std::int64_t d);

/// "(0,1)" style, trailing zeros dropped: (2), (0,1), (4), (0,0,0,1).
std::string to_string(const ChernIndex& I);

/// "2" or "0,1" (parentheses optional), padded with zeros to length d.
ChernIndex parse_chern_index(std::string_view text, std::int64_t d);

/// Polynomial in s1, s2, s3 truncated above a fixed total degree.
class GradedPoly {
 public:
  using Exponent = std::array<int, 3>;

  explicit GradedPoly(int truncation = 0) : trunc_(truncation) {}
  static GradedPoly constant(const Rat& c, int truncation);
  static GradedPoly linear(const Weight& w, int truncation);

  int truncation() const { return trunc_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }

  /// Homogeneous part of total degree k.
  GradedPoly component(int k) const;
  Rat evaluate(const std::array<Rat, 3>& s) const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator*=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator*(GradedPoly a, const GradedPoly& b) { return a *= b; }
  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

 private:
  void add_term(const Exponent& e, const Rat& c);
  int trunc_;
  std::map<Exponent, Rat> terms_;
};

struct ChernData {
  std::vector<GradedPoly> c;                              // c[k-1] = c_k, k = 1..d
  std::vector<std::pair<Weight, std::int64_t>> euler;     // prod l_w^{n_w}
};

/// Symbolic Chern classes and Euler class of a virtual representation.
/// Throws ZeroWeightPresent when the trivial weight occurs.
ChernData character_to_chern_data(const LaurentPoly& ch, std::int64_t d);

/// sum over I of prod_k c_k^{i_k} / e evaluated at s; the numeric kernel.
std::vector<Rat> localized_contribution(const LaurentPoly& ch, std::int64_t d, const std::array<Rat, 3>& s,
                                        const std::vector<ChernIndex>& indices);

struct Specialization {
  std::array<Rat, 3> s;
  std::uint64_t seed = 0;
};

struct EngineOptions {
  bool enable_ptvertex = false;
  std::uint64_t seed = 20240601;
  int specializations = 2;
  unsigned threads = 0;
  int max_retries = 32;
};

/// Draws `count` generic specializations: distinct nonzero integers from a
/// seeded generator, rejected when any listed weight evaluates to zero.
/// Throws DegenerateSpecialization after the retry budget is spent.
std::vector<Specialization> draw_specializations(const std::vector<Weight>& weights, const EngineOptions& opts);

struct LocalizationResult {
  std::vector<Rat> values;  // aligned with the requested indices
  std::vector<Specialization> specializations;
};

/// Sums localized contributions of the given characters at every drawn
/// specialization and requires all of them to agree; throws
/// SpecializationMismatch otherwise.
LocalizationResult localize(const std::vector<LaurentPoly>& characters, std::int64_t d,
                            const std::vector<ChernIndex>& indices, const EngineOptions& opts);

enum class EngineKind { Degree1, Vertex };

struct FixedPairRecord {
  std::string label;
  LaurentPoly character;
};

/// Fixed-pair enumeration, characters and Chern numbers for one (X, beta).
/// Characters are computed once per n and shared across indices.
class Localizer {
 public:
  Localizer(ToricThreefold X, CurveClass beta, EngineOptions opts = {});

  const ToricThreefold& geometry() const { return X_; }
  const CurveClass& beta() const { return beta_; }
  std::int64_t dimension() const { return d_; }
  EngineKind engine() const { return engine_; }
  const EngineOptions& options() const { return opts_; }

  /// Sorted fixed pairs with their T^vir characters.
  std::shared_ptr<const std::vector<FixedPairRecord>> fixed_pairs(std::int64_t n);

  LocalizationResult chern_numbers(std::int64_t n, const std::vector<ChernIndex>& indices);

 private:
  std::vector<FixedPairRecord> compute_pairs(std::int64_t n) const;

  ToricThreefold X_;
  CurveClass beta_;
  EngineOptions opts_;
  std::int64_t d_ = 0;
  EngineKind engine_ = EngineKind::Degree1;
  WriteOnceCache<std::int64_t, std::vector<FixedPairRecord>> cache_;
};

Rat chern_number(const ToricThreefold& X, const CurveClass& beta, std::int64_t n, const ChernIndex& I,
                 const EngineOptions& opts = {});

}  // namespace pairloc
