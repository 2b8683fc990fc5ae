#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "pairloc/rat.hpp"

namespace pairloc {

/// Character t1^a t2^b t3^c of the rank-3 torus, also read additively as the
/// linear form a*s1 + b*s2 + c*s3.
struct Weight {
  std::array<std::int64_t, 3> c{0, 0, 0};

  constexpr Weight() = default;
  constexpr Weight(std::int64_t a, std::int64_t b, std::int64_t d) : c{a, b, d} {}

  constexpr std::int64_t operator[](std::size_t i) const { return c[i]; }
  constexpr std::int64_t& operator[](std::size_t i) { return c[i]; }

  constexpr bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

  /// Sign of the first nonzero component; orientation used to canonicalize
  /// factors 1/(1 - t^v).
  constexpr int lex_sign() const {
    for (auto x : c) {
      if (x != 0) return x > 0 ? 1 : -1;
    }
    return 0;
  }

  constexpr Weight operator-() const { return {-c[0], -c[1], -c[2]}; }
  constexpr Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend constexpr Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend constexpr Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend constexpr Weight operator*(std::int64_t k, const Weight& w) {
    return {k * w.c[0], k * w.c[1], k * w.c[2]};
  }

  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
  friend constexpr bool operator==(const Weight&, const Weight&) = default;
};

/// Integer value of a linear functional on a weight.
constexpr std::int64_t pairing(const Weight& functional, const Weight& w) {
  return functional[0] * w[0] + functional[1] * w[1] + functional[2] * w[2];
}

/// Evaluation of the linear form l_w at exact rational parameters s.
Rat evaluate(const Weight& w, const std::array<Rat, 3>& s);

/// True when a and b are linearly dependent over Q.
bool parallel(const Weight& a, const Weight& b);

std::string to_string(const Weight& w);

}  // namespace pairloc

template <>
struct std::hash<pairloc::Weight> {
  std::size_t operator()(const pairloc::Weight& w) const noexcept {
    std::size_t h = 0;
    for (auto x : w.c) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
    return h;
  }
};
