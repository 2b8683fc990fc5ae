#include "pairloc/toric3.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pairloc/error.hpp"

namespace pairloc {

bool CurveClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
}

CurveClass& CurveClass::operator+=(const CurveClass& o) {
  if (coords.size() != o.coords.size()) throw Error(ErrorKind::InvalidArgument, "curve class rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

CurveClass operator*(std::int64_t k, CurveClass a) {
  for (auto& x : a.coords) x *= k;
  return a;
}

std::string to_string(const CurveClass& beta) {
  std::string s = "[";
  for (std::size_t i = 0; i < beta.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(beta.coords[i]);
  }
  return s + "]";
}

Edge Edge::reversed() const {
  Edge e = *this;
  std::swap(e.p, e.pprime);
  e.u0 = -u0;
  e.nu = nuprime;
  e.nuprime = nu;
  return e;
}

std::size_t ToricThreefold::point_index(std::string_view id) const {
  for (std::size_t i = 0; i < fixed_points.size(); ++i) {
    if (fixed_points[i].id == id) return i;
  }
  throw Error(ErrorKind::ValidationError, "unknown fixed point '" + std::string(id) + "'");
}

namespace {

nlohmann::json weight_json(const Weight& w) { return nlohmann::json::array({w[0], w[1], w[2]}); }

Weight weight_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::ParseError, "weight must be an array of 3 integers");
  return Weight{j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

std::string id_from(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw Error(ErrorKind::ParseError, "fixed point id must be a string or an integer");
}

[[noreturn]] void fail(std::size_t edge, const std::string& rule, const std::string& what) {
  throw Error(ErrorKind::ValidationError, "edge " + std::to_string(edge) + " rule " + rule + ": " + what);
}

bool same_weights(std::array<Weight, 3> a, std::array<Weight, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

nlohmann::json ToricThreefold::to_json() const {
  nlohmann::json doc;
  doc["h2_rank"] = h2_rank;
  doc["c1_degrees"] = c1_degrees;
  auto& fps = doc["fixed_points"] = nlohmann::json::array();
  for (const auto& fp : fixed_points) {
    nlohmann::json tw = nlohmann::json::array();
    for (const auto& w : fp.tangent_weights) tw.push_back(weight_json(w));
    fps.push_back({{"id", fp.id}, {"tangent_weights", tw}});
  }
  auto& es = doc["edges"] = nlohmann::json::array();
  for (const auto& e : edges) {
    es.push_back({{"p", fixed_points[e.p].id},
                  {"pprime", fixed_points[e.pprime].id},
                  {"u0", weight_json(e.u0)},
                  {"nu", {weight_json(e.nu[0]), weight_json(e.nu[1])}},
                  {"nuprime", {weight_json(e.nuprime[0]), weight_json(e.nuprime[1])}},
                  {"class", e.curve_class.coords}});
  }
  if (!named_classes.empty()) {
    auto& nc = doc["named_classes"] = nlohmann::json::object();
    for (const auto& [name, cls] : named_classes) nc[name] = cls.coords;
  }
  return doc;
}

ToricThreefold geometry_from_json(const nlohmann::json& doc, std::string source) {
  ToricThreefold X;
  X.source = std::move(source);
  try {
    X.h2_rank = doc.at("h2_rank").get<std::size_t>();
    X.c1_degrees = doc.at("c1_degrees").get<std::vector<std::int64_t>>();
    for (const auto& fp : doc.at("fixed_points")) {
      FixedPoint p;
      p.id = id_from(fp.at("id"));
      const auto& tw = fp.at("tangent_weights");
      if (!tw.is_array() || tw.size() != 3) throw Error(ErrorKind::ParseError, "tangent_weights needs 3 weights");
      for (std::size_t i = 0; i < 3; ++i) p.tangent_weights[i] = weight_from(tw[i]);
      X.fixed_points.push_back(std::move(p));
    }
    for (const auto& ej : doc.at("edges")) {
      Edge e;
      const std::string p = id_from(ej.at("p"));
      const std::string pp = id_from(ej.at("pprime"));
      auto find = [&](const std::string& id) {
        for (std::size_t i = 0; i < X.fixed_points.size(); ++i) {
          if (X.fixed_points[i].id == id) return i;
        }
        throw Error(ErrorKind::ValidationError, "edge endpoint '" + id + "' is not a fixed point");
      };
      e.p = find(p);
      e.pprime = find(pp);
      e.u0 = weight_from(ej.at("u0"));
      const auto& nu = ej.at("nu");
      const auto& nup = ej.at("nuprime");
      if (nu.size() != 2 || nup.size() != 2) throw Error(ErrorKind::ParseError, "nu and nuprime need 2 weights");
      for (std::size_t i = 0; i < 2; ++i) {
        e.nu[i] = weight_from(nu[i]);
        e.nuprime[i] = weight_from(nup[i]);
      }
      e.curve_class.coords = ej.at("class").get<std::vector<std::int64_t>>();
      X.edges.push_back(std::move(e));
    }
    if (doc.contains("named_classes")) {
      for (const auto& [name, v] : doc.at("named_classes").items()) {
        X.named_classes[name] = CurveClass{v.get<std::vector<std::int64_t>>()};
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  validate(X);
  return X;
}

void validate(ToricThreefold& X) {
  if (X.c1_degrees.size() != X.h2_rank) {
    throw Error(ErrorKind::ValidationError, "c1_degrees must have h2_rank entries");
  }
  for (std::size_t i = 0; i < X.fixed_points.size(); ++i) {
    const auto& fp = X.fixed_points[i];
    for (std::size_t j = i + 1; j < X.fixed_points.size(); ++j) {
      if (X.fixed_points[j].id == fp.id) throw Error(ErrorKind::ValidationError, "duplicate fixed point id " + fp.id);
    }
    const auto& tw = fp.tangent_weights;
    for (std::size_t a = 0; a < 3; ++a) {
      if (tw[a].is_zero()) throw Error(ErrorKind::ValidationError, "fixed point " + fp.id + " has a zero tangent weight");
      for (std::size_t b = a + 1; b < 3; ++b) {
        if (parallel(tw[a], tw[b])) {
          throw Error(ErrorKind::ValidationError, "fixed point " + fp.id + " has dependent tangent weights");
        }
      }
    }
  }
  for (std::size_t k = 0; k < X.edges.size(); ++k) {
    Edge& e = X.edges[k];
    if (e.p >= X.fixed_points.size() || e.pprime >= X.fixed_points.size()) fail(k, "endpoints", "missing endpoint");
    if (e.p == e.pprime) fail(k, "endpoints", "endpoints coincide");
    if (e.u0.is_zero()) fail(k, "u0", "zero weight");
    if (e.curve_class.coords.size() != X.h2_rank) fail(k, "class", "class has wrong rank");
    if (e.curve_class.is_zero()) fail(k, "class", "zero curve class");
    for (auto x : e.curve_class.coords) {
      if (x < 0) fail(k, "class", "edge classes must be nonnegative in the chosen basis");
    }
    std::size_t axis = 0;
    while (e.u0[axis] == 0) ++axis;
    for (std::size_t i = 0; i < 2; ++i) {
      const Weight diff = e.nuprime[i] - e.nu[i];
      if (diff[axis] % e.u0[axis] != 0) fail(k, "normal-matching", "nu' - nu is not an integer multiple of u0");
      const std::int64_t m = diff[axis] / e.u0[axis];
      if (m * e.u0 != diff) fail(k, "normal-matching", "nu' - nu is not an integer multiple of u0");
      e.m[i] = m;
    }
    if (!same_weights({-e.u0, e.nu[0], e.nu[1]}, X.fixed_points[e.p].tangent_weights)) {
      fail(k, "tangent-at-p", "{-u0, nu1, nu2} differs from the tangent weights at p");
    }
    if (!same_weights({e.u0, e.nuprime[0], e.nuprime[1]}, X.fixed_points[e.pprime].tangent_weights)) {
      fail(k, "tangent-at-pprime", "{u0, nu1', nu2'} differs from the tangent weights at p'");
    }
    std::int64_t deg = 0;
    for (std::size_t b = 0; b < X.h2_rank; ++b) deg += e.curve_class.coords[b] * X.c1_degrees[b];
    if (deg != e.c1_degree()) {
      fail(k, "c1-degree", "class pairs to " + std::to_string(deg) + " with c1 but m1 + m2 + 2 = " +
                               std::to_string(e.c1_degree()));
    }
  }
  for (const auto& [name, cls] : X.named_classes) {
    if (cls.coords.size() != X.h2_rank) throw Error(ErrorKind::ValidationError, "named class " + name + " has wrong rank");
  }
}

ToricThreefold load_and_validate(std::string_view source) {
  for (const auto& id : catalog_ids()) {
    if (id == source) return catalog_geometry(source);
  }
  std::ifstream in{std::string(source)};
  if (!in) throw Error(ErrorKind::ParseError, "no catalog geometry or readable file named '" + std::string(source) + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  return geometry_from_json(doc, std::string(source));
}

ToricThreefold permute_torus(const ToricThreefold& X, const std::array<int, 3>& perm) {
  auto apply = [&](const Weight& w) {
    Weight r;
    for (std::size_t i = 0; i < 3; ++i) r[static_cast<std::size_t>(perm[i])] = w[i];
    return r;
  };
  ToricThreefold Y = X;
  for (auto& fp : Y.fixed_points) {
    for (auto& w : fp.tangent_weights) w = apply(w);
  }
  for (auto& e : Y.edges) {
    e.u0 = apply(e.u0);
    for (std::size_t i = 0; i < 2; ++i) {
      e.nu[i] = apply(e.nu[i]);
      e.nuprime[i] = apply(e.nuprime[i]);
    }
  }
  validate(Y);
  return Y;
}

CurveClass parse_curve_class(const ToricThreefold& X, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty curve class");
  const bool numeric = std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '-';
  });
  if (numeric) {
    CurveClass beta;
    std::stringstream ss(s);
    std::string item;
    try {
      while (std::getline(ss, item, ',')) beta.coords.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad curve class '" + s + "'");
    }
    if (beta.coords.size() != X.h2_rank) throw Error(ErrorKind::ParseError, "curve class has wrong rank");
    return beta;
  }
  CurveClass total{std::vector<std::int64_t>(X.h2_rank, 0)};
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::int64_t k = 1;
    std::string name = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      k = std::stoll(term.substr(0, star));
      name = term.substr(star + 1);
    } else {
      std::size_t digits = 0;
      while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
      if (digits > 0 && digits < term.size()) {
        k = std::stoll(term.substr(0, digits));
        name = term.substr(digits);
      }
    }
    auto it = X.named_classes.find(name);
    if (it == X.named_classes.end()) throw Error(ErrorKind::ParseError, "unknown curve class name '" + name + "'");
    total += k * it->second;
  }
  return total;
}

std::int64_t virtual_dimension(const ToricThreefold& X, const CurveClass& beta) {
  if (beta.coords.size() != X.h2_rank) throw Error(ErrorKind::InvalidArgument, "curve class has wrong rank");
  if (beta.is_zero()) throw Error(ErrorKind::ZeroClass, "beta = 0");
  std::int64_t d = 0;
  for (std::size_t b = 0; b < X.h2_rank; ++b) d += beta.coords[b] * X.c1_degrees[b];
  return d;
}

std::vector<Decomposition> decompose_class(const ToricThreefold& X, const CurveClass& beta) {
  if (beta.coords.size() != X.h2_rank) throw Error(ErrorKind::InvalidArgument, "curve class has wrong rank");
  if (beta.is_zero()) throw Error(ErrorKind::ZeroClass, "beta = 0");
  std::vector<Decomposition> out;
  Decomposition current;
  auto recurse = [&](auto&& self, std::size_t edge, std::vector<std::int64_t> remaining) -> void {
    if (std::all_of(remaining.begin(), remaining.end(), [](auto x) { return x == 0; })) {
      out.push_back(current);
      return;
    }
    if (edge == X.edges.size()) return;
    self(self, edge + 1, remaining);
    const auto& cls = X.edges[edge].curve_class.coords;
    for (std::int64_t k = 1;; ++k) {
      bool ok = true;
      for (std::size_t b = 0; b < remaining.size(); ++b) {
        remaining[b] -= cls[b];
        if (remaining[b] < 0) ok = false;
      }
      if (!ok) break;
      current.push_back({edge, k});
      self(self, edge + 1, remaining);
      current.pop_back();
    }
  };
  recurse(recurse, 0, beta.coords);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pairloc
