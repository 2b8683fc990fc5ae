#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pairloc/deg1engine.hpp"
#include "pairloc/toric3.hpp"

namespace pairloc {

/// Integer partition with nonincreasing rows; box (x, y) has x < rows.size(),
/// y < rows[x].
struct Partition {
  std::vector<std::int64_t> rows;

  std::int64_t size() const;
  bool contains(std::int64_t x, std::int64_t y) const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::vector<Partition> partitions(std::int64_t k);
std::string to_string(const Partition& lambda);

/// Box of the vertex module in the local coordinates of a fixed point; a
/// negative entry means the box lies on a leg at negative depth.
using Box = std::array<std::int64_t, 3>;

struct LegAssignment {
  std::size_t edge = 0;
  Partition lambda;
  friend auto operator<=>(const LegAssignment&, const LegAssignment&) = default;
};

struct VertexBoxes {
  std::size_t vertex = 0;
  std::vector<Box> boxes;  // sorted
  friend auto operator<=>(const VertexBoxes&, const VertexBoxes&) = default;
};

/// T-fixed stable pair: a monomial Cohen-Macaulay curve given by a partition
/// on each used edge, plus the box configuration of the cokernel Q at each
/// vertex of its support.
struct GeneralFixedPair {
  std::vector<LegAssignment> legs;    // sorted by edge
  std::vector<VertexBoxes> vertices;  // every vertex touched by a leg, sorted
  std::int64_t chi_curve = 0;

  std::int64_t length() const;
  std::int64_t n() const { return chi_curve + length(); }
  std::string key() const;
  friend auto operator<=>(const GeneralFixedPair&, const GeneralFixedPair&) = default;
};

/// Leg of a curve at a fixed point, in that point's tangent frame.
struct VertexLeg {
  std::size_t edge = 0;
  int axis = 0;
  int dir1 = 0;
  int dir2 = 0;
  Partition lambda;

  bool contains(const Box& n) const;
};

struct VertexFrame {
  std::size_t vertex = 0;
  std::array<Weight, 3> tangent;
  std::vector<VertexLeg> legs;

  /// Character weight of box n: -sum_l n_l tau_l.
  Weight box_weight(const Box& n) const;
  int leg_count(const Box& n) const;
};

std::map<std::size_t, VertexFrame> vertex_frames(const ToricThreefold& X, const std::vector<LegAssignment>& legs);

/// Normalized character of O_C for the curve given by the legs.
LaurentPoly curve_character(const ToricThreefold& X, const std::vector<LegAssignment>& legs);

/// Finite box configurations of the given size closed under the torus
/// generators. Throws NonIsolatedFixedLocus when a three-leg vertex would
/// carry boxes, since its two-dimensional weight space then gives a positive
/// dimensional family of fixed pairs.
std::vector<std::vector<Box>> box_configurations(const VertexFrame& frame, std::int64_t size);

/// All T-fixed pairs with holomorphic Euler characteristic n in class beta.
std::vector<GeneralFixedPair> enumerate_general(const ToricThreefold& X, const CurveClass& beta, std::int64_t n);

/// T^vir character computed vertex by vertex for the whole pair.
LaurentPoly vertex_character(const ToricThreefold& X, const GeneralFixedPair& pair);

/// T^vir character, splitting the support into connected components and
/// routing reduced degree-one components through the edge formula.
LaurentPoly general_character(const ToricThreefold& X, const GeneralFixedPair& pair);

/// Same pair seen through the general description.
GeneralFixedPair from_deg1(const ToricThreefold& X, const FixedPairDeg1& pair);

}  // namespace pairloc
