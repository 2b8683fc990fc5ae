#include "pairloc/ptvertex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "pairloc/char_fraction.hpp"
#include "pairloc/error.hpp"

namespace pairloc {

std::int64_t Partition::size() const { return std::accumulate(rows.begin(), rows.end(), std::int64_t{0}); }

bool Partition::contains(std::int64_t x, std::int64_t y) const {
  return x >= 0 && y >= 0 && x < static_cast<std::int64_t>(rows.size()) && y < rows[static_cast<std::size_t>(x)];
}

std::vector<Partition> partitions(std::int64_t k) {
  std::vector<Partition> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest, std::int64_t cap) {
    if (rest == 0) {
      out.push_back({cur});
      return;
    }
    for (std::int64_t f = std::min(rest, cap); f >= 1; --f) {
      cur.push_back(f);
      rec(rest - f, f);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(k, k);
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.rows.size(); ++i) s += (i ? "," : "") + std::to_string(lambda.rows[i]);
  return s + ")";
}

std::int64_t GeneralFixedPair::length() const {
  std::int64_t total = 0;
  for (const auto& v : vertices) total += static_cast<std::int64_t>(v.boxes.size());
  return total;
}

std::string GeneralFixedPair::key() const {
  std::string s;
  for (const auto& l : legs) s += "e" + std::to_string(l.edge) + to_string(l.lambda);
  s += "|";
  for (const auto& v : vertices) {
    s += "v" + std::to_string(v.vertex) + "[";
    for (const auto& b : v.boxes) s += "(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + ")";
    s += "]";
  }
  return s;
}

bool VertexLeg::contains(const Box& n) const {
  for (int l = 0; l < 3; ++l) {
    if (l != axis && n[static_cast<std::size_t>(l)] < 0) return false;
  }
  return lambda.contains(n[static_cast<std::size_t>(dir1)], n[static_cast<std::size_t>(dir2)]);
}

Weight VertexFrame::box_weight(const Box& n) const {
  Weight w;
  for (std::size_t l = 0; l < 3; ++l) w -= n[l] * tangent[l];
  return w;
}

int VertexFrame::leg_count(const Box& n) const {
  int c = 0;
  for (const auto& leg : legs) c += leg.contains(n) ? 1 : 0;
  return c;
}

namespace {

int tangent_index(const FixedPoint& pt, const Weight& w) {
  for (int i = 0; i < 3; ++i) {
    if (pt.tangent_weights[static_cast<std::size_t>(i)] == w) return i;
  }
  throw Error(ErrorKind::ValidationError, "weight " + to_string(w) + " is not tangent at " + pt.id);
}

// Largest partition extent among the legs, bounding the boxes of N^3 that lie
// in at least two legs.
std::int64_t frame_extent(const VertexFrame& f) {
  std::int64_t m = 0;
  for (const auto& leg : f.legs) {
    m = std::max<std::int64_t>(m, static_cast<std::int64_t>(leg.lambda.rows.size()));
    if (!leg.lambda.rows.empty()) m = std::max(m, leg.lambda.rows.front());
  }
  return m;
}

std::vector<Box> overlap_boxes(const VertexFrame& f, int min_legs) {
  std::vector<Box> out;
  const auto m = frame_extent(f);
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y)
      for (std::int64_t z = 0; z < m; ++z) {
        Box n{x, y, z};
        if (f.leg_count(n) >= min_legs) out.push_back(n);
      }
  return out;
}

struct LocalData {
  LaurentPoly curve_numerator;   // O_C numerator over the leg denominators
  LaurentPoly leg_product;       // prod_legs (1 - t^{a})
  std::vector<Weight> denominator;
};

LocalData local_data(const VertexFrame& f) {
  LocalData d;
  d.leg_product = LaurentPoly::constant(1);
  for (const auto& leg : f.legs) {
    const Weight a = -f.tangent[static_cast<std::size_t>(leg.axis)];
    d.denominator.push_back(a);
    d.leg_product *= LaurentPoly::one_minus(a);
  }
  for (std::size_t i = 0; i < f.legs.size(); ++i) {
    const auto& leg = f.legs[i];
    LaurentPoly cross;
    for (std::size_t x = 0; x < leg.lambda.rows.size(); ++x) {
      for (std::int64_t y = 0; y < leg.lambda.rows[x]; ++y) {
        Box n{0, 0, 0};
        n[static_cast<std::size_t>(leg.dir1)] = static_cast<std::int64_t>(x);
        n[static_cast<std::size_t>(leg.dir2)] = y;
        cross.add_term(f.box_weight(n), 1);
      }
    }
    for (std::size_t j = 0; j < f.legs.size(); ++j) {
      if (j != i) cross *= LaurentPoly::one_minus(-f.tangent[static_cast<std::size_t>(f.legs[j].axis)]);
    }
    d.curve_numerator += cross;
  }
  LaurentPoly overlaps;
  for (const auto& n : overlap_boxes(f, 2)) overlaps.add_term(f.box_weight(n), f.leg_count(n) - 1);
  d.curve_numerator -= overlaps * d.leg_product;
  return d;
}

CharFraction vertex_term(const VertexFrame& f, const std::vector<Box>& boxes) {
  const LocalData d = local_data(f);
  LaurentPoly qchar;
  for (const auto& b : boxes) qchar.add_term(f.box_weight(b), 1);
  const LaurentPoly N = d.curve_numerator + qchar * d.leg_product;
  const LaurentPoly Nbar = N.conjugate();

  LaurentPoly S = LaurentPoly::constant(1);
  for (const auto& leg : f.legs) S *= LaurentPoly::monomial(-f.tangent[static_cast<std::size_t>(leg.axis)], -1);
  LaurentPoly R = LaurentPoly::constant(1);
  for (int l = 0; l < 3; ++l) {
    const bool is_leg = std::any_of(f.legs.begin(), f.legs.end(), [&](const VertexLeg& leg) { return leg.axis == l; });
    if (!is_leg) R *= LaurentPoly::one_minus(f.tangent[static_cast<std::size_t>(l)]);
  }
  const LaurentPoly T = LaurentPoly::monomial(f.tangent[0] + f.tangent[1] + f.tangent[2]);
  return CharFraction(N - Nbar * S * T - Nbar * N * R, d.denominator);
}

LaurentPoly checked(LaurentPoly ch, std::int64_t expected_rank, const std::string& what) {
  if (ch.coefficient(Weight{}) != 0) {
    throw Error(ErrorKind::NonIsolatedFixedLocus, "trivial weight in T^vir at " + what);
  }
  if (ch.rank() != expected_rank) {
    throw Error(ErrorKind::InvalidArgument, "character rank differs from the virtual dimension at " + what);
  }
  return ch;
}

std::int64_t curve_degree(const ToricThreefold& X, const std::vector<LegAssignment>& legs) {
  std::int64_t d = 0;
  for (const auto& l : legs) d += l.lambda.size() * X.edges.at(l.edge).c1_degree();
  return d;
}

}  // namespace

std::map<std::size_t, VertexFrame> vertex_frames(const ToricThreefold& X, const std::vector<LegAssignment>& legs) {
  std::map<std::size_t, VertexFrame> frames;
  for (const auto& la : legs) {
    const Edge& e = X.edges.at(la.edge);
    for (int end = 0; end < 2; ++end) {
      const std::size_t v = end == 0 ? e.p : e.pprime;
      const FixedPoint& pt = X.fixed_points.at(v);
      auto& f = frames[v];
      f.vertex = v;
      f.tangent = pt.tangent_weights;
      const auto& nus = end == 0 ? e.nu : e.nuprime;
      VertexLeg leg;
      leg.edge = la.edge;
      leg.axis = tangent_index(pt, end == 0 ? -e.u0 : e.u0);
      leg.dir1 = tangent_index(pt, nus[0]);
      leg.dir2 = tangent_index(pt, nus[1]);
      leg.lambda = la.lambda;
      for (const auto& other : f.legs) {
        if (other.axis == leg.axis) throw Error(ErrorKind::InvalidArgument, "two legs share a tangent direction at " + pt.id);
      }
      f.legs.push_back(std::move(leg));
    }
  }
  return frames;
}

LaurentPoly curve_character(const ToricThreefold& X, const std::vector<LegAssignment>& legs) {
  CharFraction total;
  for (const auto& [v, f] : vertex_frames(X, legs)) {
    const LocalData d = local_data(f);
    total = cf_combine(total, CharFraction(d.curve_numerator, d.denominator));
  }
  return cf_normalize(total);
}

std::vector<std::vector<Box>> box_configurations(const VertexFrame& f, std::int64_t size) {
  if (size < 0) return {};
  if (size == 0) return {{}};
  if (f.legs.size() >= 3) {
    throw Error(ErrorKind::NonIsolatedFixedLocus,
                "three legs meet at fixed point " + std::to_string(f.vertex) + " with a nonempty cokernel there");
  }

  // 0: zero weight space, 1: type I (on a leg at negative depth), 2: in two legs.
  auto box_type = [&](const Box& n) -> int {
    bool nonneg = n[0] >= 0 && n[1] >= 0 && n[2] >= 0;
    if (nonneg) return f.leg_count(n) >= 2 ? 2 : 0;
    for (const auto& leg : f.legs) {
      if (n[static_cast<std::size_t>(leg.axis)] < 0 && leg.contains(n)) return 1;
    }
    return 0;
  };
  auto successors = [&](const Box& n) {
    std::vector<Box> out;
    const int t = box_type(n);
    for (std::size_t l = 0; l < 3; ++l) {
      Box m = n;
      ++m[l];
      if (t == 1) {
        const VertexLeg* home = nullptr;
        for (const auto& leg : f.legs) {
          if (n[static_cast<std::size_t>(leg.axis)] < 0 && leg.contains(n)) home = &leg;
        }
        if (!home->contains(m)) continue;
        if (m[static_cast<std::size_t>(home->axis)] < 0 || f.leg_count(m) == 2) out.push_back(m);
      } else {
        int shared = 0;
        for (const auto& leg : f.legs) shared += (leg.contains(n) && leg.contains(m)) ? 1 : 0;
        if (shared >= 2 && f.leg_count(m) == 2) out.push_back(m);
      }
    }
    return out;
  };

  std::set<Box> seeds;
  for (const auto& leg : f.legs) {
    for (std::size_t x = 0; x < leg.lambda.rows.size(); ++x) {
      for (std::int64_t y = 0; y < leg.lambda.rows[x]; ++y) {
        Box n{0, 0, 0};
        n[static_cast<std::size_t>(leg.axis)] = -1;
        n[static_cast<std::size_t>(leg.dir1)] = static_cast<std::int64_t>(x);
        n[static_cast<std::size_t>(leg.dir2)] = y;
        seeds.insert(n);
      }
    }
  }
  for (const auto& n : overlap_boxes(f, 2)) seeds.insert(n);

  std::set<std::vector<Box>> level{{}};
  for (std::int64_t s = 0; s < size; ++s) {
    std::set<std::vector<Box>> next;
    for (const auto& S : level) {
      std::set<Box> pool = seeds;
      for (const auto& n : S) {
        for (std::size_t l = 0; l < 3; ++l) {
          Box m = n;
          --m[l];
          pool.insert(m);
        }
      }
      for (const auto& c : pool) {
        if (std::binary_search(S.begin(), S.end(), c) || box_type(c) == 0) continue;
        const auto succ = successors(c);
        const bool closed = std::all_of(succ.begin(), succ.end(), [&](const Box& m) { return std::binary_search(S.begin(), S.end(), m); });
        if (!closed) continue;
        auto grown = S;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<GeneralFixedPair> enumerate_general(const ToricThreefold& X, const CurveClass& beta, std::int64_t n) {
  std::vector<GeneralFixedPair> out;
  for (const auto& dec : decompose_class(X, beta)) {
    std::vector<std::vector<Partition>> choices;
    for (const auto& use : dec) choices.push_back(partitions(use.multiplicity));
    std::vector<std::size_t> pick(dec.size(), 0);
    while (true) {
      std::vector<LegAssignment> legs;
      for (std::size_t i = 0; i < dec.size(); ++i) legs.push_back({dec[i].edge, choices[i][pick[i]]});
      const auto chi_rat = curve_character(X, legs).rank();
      const std::int64_t chi = chi_rat.get_num().get_si();
      const std::int64_t extra = n - chi;
      if (extra >= 0) {
        const auto frames = vertex_frames(X, legs);
        std::vector<const VertexFrame*> fv;
        for (const auto& [v, f] : frames) fv.push_back(&f);
        std::map<std::pair<std::size_t, std::int64_t>, std::vector<std::vector<Box>>> memo;
        auto configs = [&](std::size_t i, std::int64_t sz) -> const std::vector<std::vector<Box>>& {
          auto key = std::make_pair(i, sz);
          auto it = memo.find(key);
          if (it == memo.end()) it = memo.emplace(key, box_configurations(*fv[i], sz)).first;
          return it->second;
        };
        std::vector<std::vector<Box>> chosen(fv.size());
        std::function<void(std::size_t, std::int64_t)> place = [&](std::size_t i, std::int64_t rest) {
          if (i + 1 == fv.size()) {
            for (const auto& cfg : configs(i, rest)) {
              chosen[i] = cfg;
              GeneralFixedPair pair;
              pair.legs = legs;
              pair.chi_curve = chi;
              for (std::size_t k = 0; k < fv.size(); ++k) pair.vertices.push_back({fv[k]->vertex, chosen[k]});
              out.push_back(std::move(pair));
            }
            return;
          }
          for (std::int64_t sz = 0; sz <= rest; ++sz) {
            for (const auto& cfg : configs(i, sz)) {
              chosen[i] = cfg;
              place(i + 1, rest - sz);
            }
          }
        };
        place(0, extra);
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

LaurentPoly vertex_sum(const ToricThreefold& X, const std::vector<LegAssignment>& legs, const std::vector<VertexBoxes>& boxes) {
  CharFraction total;
  for (const auto& [v, f] : vertex_frames(X, legs)) {
    static const std::vector<Box> none;
    const std::vector<Box>* b = &none;
    for (const auto& vb : boxes) {
      if (vb.vertex == v) b = &vb.boxes;
    }
    total = cf_combine(total, vertex_term(f, *b));
  }
  return cf_normalize(total);
}

}  // namespace

LaurentPoly vertex_character(const ToricThreefold& X, const GeneralFixedPair& pair) {
  return checked(vertex_sum(X, pair.legs, pair.vertices), curve_degree(X, pair.legs), pair.key());
}

LaurentPoly general_character(const ToricThreefold& X, const GeneralFixedPair& pair) {
  // Connected components of the support, joined through shared vertices.
  std::vector<std::size_t> parent(pair.legs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  for (std::size_t i = 0; i < pair.legs.size(); ++i) {
    for (std::size_t j = i + 1; j < pair.legs.size(); ++j) {
      const Edge& a = X.edges.at(pair.legs[i].edge);
      const Edge& b = X.edges.at(pair.legs[j].edge);
      if (a.p == b.p || a.p == b.pprime || a.pprime == b.p || a.pprime == b.pprime) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<LegAssignment>> components;
  for (std::size_t i = 0; i < pair.legs.size(); ++i) components[find(i)].push_back(pair.legs[i]);

  auto boxes_at = [&](std::size_t v) -> std::int64_t {
    for (const auto& vb : pair.vertices) {
      if (vb.vertex == v) return static_cast<std::int64_t>(vb.boxes.size());
    }
    return 0;
  };

  LaurentPoly total;
  for (const auto& [root, legs] : components) {
    if (legs.size() == 1 && legs.front().lambda.rows == std::vector<std::int64_t>{1}) {
      const Edge& e = X.edges.at(legs.front().edge);
      total += tvir_character_deg1(e, boxes_at(e.p), boxes_at(e.pprime));
      continue;
    }
    std::vector<VertexBoxes> local;
    for (const auto& [v, f] : vertex_frames(X, legs)) {
      for (const auto& vb : pair.vertices) {
        if (vb.vertex == v) local.push_back(vb);
      }
    }
    total += vertex_sum(X, legs, local);
  }
  return checked(std::move(total), curve_degree(X, pair.legs), pair.key());
}

GeneralFixedPair from_deg1(const ToricThreefold& X, const FixedPairDeg1& pair) {
  const Edge& e = X.edges.at(pair.edge);
  GeneralFixedPair out;
  out.legs = {{pair.edge, Partition{{1}}}};
  out.chi_curve = 1;
  const auto frames = vertex_frames(X, out.legs);
  for (const auto& [v, f] : frames) {
    const std::int64_t depth = v == e.p ? pair.a : pair.b;
    VertexBoxes vb{v, {}};
    for (std::int64_t k = 1; k <= depth; ++k) {
      Box b{0, 0, 0};
      b[static_cast<std::size_t>(f.legs.front().axis)] = -k;
      vb.boxes.push_back(b);
    }
    std::sort(vb.boxes.begin(), vb.boxes.end());
    out.vertices.push_back(std::move(vb));
  }
  return out;
}

}  // namespace pairloc
