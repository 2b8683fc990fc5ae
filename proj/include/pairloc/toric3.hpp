#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pairloc/weight.hpp"

namespace pairloc {

/// Element of H_2(X, Z) in the geometry's fixed basis.
struct CurveClass {
  std::vector<std::int64_t> coords;

  bool is_zero() const;
  CurveClass& operator+=(const CurveClass& o);
  friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
  friend CurveClass operator*(std::int64_t k, CurveClass a);
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

std::string to_string(const CurveClass& beta);

struct FixedPoint {
  std::string id;
  std::array<Weight, 3> tangent_weights;
};

/// T-invariant curve joining fixed points p and pprime.
///
/// u0 is the weight of the coordinate function along the curve at p (so -u0 is
/// the tangent weight of the curve at p). nu[i] at p and nuprime[i] at pprime
/// are matched normal directions with nuprime[i] - nu[i] = m[i] * u0.
struct Edge {
  std::size_t p = 0;
  std::size_t pprime = 0;
  Weight u0;
  std::array<Weight, 2> nu;
  std::array<Weight, 2> nuprime;
  std::array<std::int64_t, 2> m{0, 0};
  CurveClass curve_class;

  /// Integral of c1(X) over the curve.
  std::int64_t c1_degree() const { return m[0] + m[1] + 2; }
  /// Same curve with the roles of p and pprime exchanged.
  Edge reversed() const;
};

class ToricThreefold {
 public:
  std::string source;
  std::size_t h2_rank = 0;
  std::vector<std::int64_t> c1_degrees;
  std::vector<FixedPoint> fixed_points;
  std::vector<Edge> edges;
  /// Optional human names for classes ("fiber", "line", ...).
  std::map<std::string, CurveClass> named_classes;

  std::size_t point_index(std::string_view id) const;

  /// Canonical JSON in the geometry schema (edge degrees are derived, not stored).
  nlohmann::json to_json() const;
};

/// Built-in geometries: "p3", "p1xp2", "p1p1p1".
std::vector<std::string> catalog_ids();
ToricThreefold catalog_geometry(std::string_view id);

/// Parses the JSON geometry schema, derives edge degrees and validates.
ToricThreefold geometry_from_json(const nlohmann::json& doc, std::string source = "json");

/// Catalog id, or a path to a JSON geometry document.
ToricThreefold load_and_validate(std::string_view source);

/// Derives m1, m2 for every edge and checks every rule; throws ValidationError
/// naming the edge and the failing rule.
void validate(ToricThreefold& X);

/// Relabels the torus parameters: weight component i moves to perm[i].
ToricThreefold permute_torus(const ToricThreefold& X, const std::array<int, 3>& perm);

/// Parses "fiber", "2*fiber", "e1+e2" or a comma-separated integer vector.
CurveClass parse_curve_class(const ToricThreefold& X, std::string_view text);

std::int64_t virtual_dimension(const ToricThreefold& X, const CurveClass& beta);

struct EdgeUse {
  std::size_t edge = 0;
  std::int64_t multiplicity = 0;
  friend auto operator<=>(const EdgeUse&, const EdgeUse&) = default;
};
using Decomposition = std::vector<EdgeUse>;

/// All ways of writing beta = sum k_e [C_e], k_e >= 1, over subsets of edges.
std::vector<Decomposition> decompose_class(const ToricThreefold& X, const CurveClass& beta);

}  // namespace pairloc
