#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pairloc/rat.hpp"

namespace pairloc {

/// Sparse polynomial over Rat in a fixed number of variables.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(const Rat& c, std::size_t nvars);
  static MultiPoly variable(std::size_t index, std::size_t nvars, int power = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& k);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const Rat& k, MultiPoly a) { return a *= k; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Drops every term whose weighted degree sum_i weights[i] e_i exceeds bound.
  MultiPoly truncated(const std::vector<int>& weights, int bound) const;

  /// Product truncated on the fly (same rule as truncated()).
  static MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, const std::vector<int>& weights, int bound);

  /// Replaces variable i by images[i]; all images share one variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  /// Same polynomial with variables [first, first + count) kept, renumbered
  /// from 0; the others must not occur.
  MultiPoly restrict_variables(std::size_t first, std::size_t count) const;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rat> terms_;
};

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names);

}  // namespace pairloc
