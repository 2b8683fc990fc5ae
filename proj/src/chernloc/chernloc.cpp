#include "pairloc/chernloc.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "pairloc/deg1engine.hpp"
#include "pairloc/error.hpp"
#include "pairloc/parallel.hpp"
#include "pairloc/ptvertex.hpp"

namespace pairloc {

std::int64_t ChernIndex::degree() const {
  std::int64_t d = 0;
  for (std::size_t k = 0; k < exps.size(); ++k) d += static_cast<std::int64_t>(k + 1) * exps[k];
  return d;
}

std::vector<ChernIndex> chern_indices(std::int64_t d) {
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  std::vector<ChernIndex> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(d), 0);
  // Fill i_1 first with the largest admissible value so the order is
  // lexicographically decreasing.
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t rest) {
    if (k == cur.size()) {
      if (rest == 0) out.push_back({cur});
      return;
    }
    const auto weight = static_cast<std::int64_t>(k + 1);
    for (std::int64_t i = rest / weight; i >= 0; --i) {
      cur[k] = i;
      rec(k + 1, rest - i * weight);
    }
    cur[k] = 0;
  };
  rec(0, d);
  return out;
}

std::string to_string(const ChernIndex& I) {
  std::size_t len = I.exps.size();
  while (len > 0 && I.exps[len - 1] == 0) --len;
  std::string s = "(";
  for (std::size_t k = 0; k < len; ++k) s += (k ? "," : "") + std::to_string(I.exps[k]);
  return s + ")";
}

ChernIndex parse_chern_index(std::string_view text, std::int64_t d) {
  std::string body(text);
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), body.end());
  ChernIndex I;
  std::size_t pos = 0;
  while (!body.empty() && pos <= body.size()) {
    auto comma = body.find(',', pos);
    auto piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      long long v = std::stoll(piece, &used);
      if (used != piece.size() || v < 0) throw std::invalid_argument(piece);
      I.exps.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad Chern index entry '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<std::int64_t>(I.exps.size()) > d) {
    for (auto k = static_cast<std::size_t>(std::max<std::int64_t>(d, 0)); k < I.exps.size(); ++k) {
      if (I.exps[k] != 0) throw Error(ErrorKind::InvalidArgument, "Chern index longer than the degree " + std::to_string(d));
    }
  }
  I.exps.resize(static_cast<std::size_t>(std::max<std::int64_t>(d, 0)), 0);
  if (I.degree() != d) {
    throw Error(ErrorKind::InvalidArgument, "Chern index " + to_string(I) + " has weighted degree " + std::to_string(I.degree()) +
                                                ", expected " + std::to_string(d));
  }
  return I;
}

// ---------------------------------------------------------------------------

GradedPoly GradedPoly::constant(const Rat& c, int truncation) {
  GradedPoly p(truncation);
  p.add_term({0, 0, 0}, c);
  return p;
}

GradedPoly GradedPoly::linear(const Weight& w, int truncation) {
  GradedPoly p(truncation);
  for (int i = 0; i < 3; ++i) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, Rat(w[static_cast<std::size_t>(i)]));
  }
  return p;
}

void GradedPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0 || e[0] + e[1] + e[2] > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPoly GradedPoly::component(int k) const {
  GradedPoly out(trunc_);
  for (const auto& [e, c] : terms_) {
    if (e[0] + e[1] + e[2] == k) out.terms_.emplace(e, c);
  }
  return out;
}

Rat GradedPoly::evaluate(const std::array<Rat, 3>& s) const {
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < 3; ++i) term *= pow(s[i], e[i]);
    total += term;
  }
  return total;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  std::erase_if(terms_, [&](const auto& kv) { return kv.first[0] + kv.first[1] + kv.first[2] > trunc_; });
  return *this;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& o) {
  GradedPoly out(std::min(trunc_, o.trunc_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return *this = std::move(out);
}

ChernData character_to_chern_data(const LaurentPoly& ch, std::int64_t d) {
  if (ch.coefficient(Weight{}) != 0) throw Error(ErrorKind::ZeroWeightPresent, "character has a trivial weight");
  const int trunc = static_cast<int>(d);
  GradedPoly total = GradedPoly::constant(1, trunc);
  ChernData out;
  for (const auto& [w, coeff] : ch.terms()) {
    const long n = coeff.get_num().get_si();
    const GradedPoly l = GradedPoly::linear(w, trunc);
    GradedPoly factor = GradedPoly::constant(1, trunc);
    if (n > 0) {
      factor += l;
    } else {
      // (1 + l)^{-1} = sum_k (-l)^k
      GradedPoly power = GradedPoly::constant(1, trunc);
      GradedPoly neg_l = GradedPoly::constant(-1, trunc) * l;
      for (int k = 1; k <= trunc; ++k) {
        power *= neg_l;
        factor += power;
      }
    }
    for (long i = 0; i < std::labs(n); ++i) total *= factor;
    out.euler.emplace_back(w, n);
  }
  for (int k = 1; k <= trunc; ++k) out.c.push_back(total.component(k));
  return out;
}

std::vector<Rat> localized_contribution(const LaurentPoly& ch, std::int64_t d, const std::array<Rat, 3>& s,
                                        const std::vector<ChernIndex>& indices) {
  if (ch.coefficient(Weight{}) != 0) throw Error(ErrorKind::ZeroWeightPresent, "character has a trivial weight");
  const auto D = static_cast<std::size_t>(std::max<std::int64_t>(d, 0));
  // Total Chern class as a polynomial in a formal grading variable x.
  std::vector<Rat> c(D + 1, Rat(0));
  c[0] = 1;
  Rat euler = 1;
  for (const auto& [w, coeff] : ch.terms()) {
    const Rat l = evaluate(w, s);
    if (l == 0) throw Error(ErrorKind::DegenerateSpecialization, "weight " + to_string(w) + " vanishes at the specialization");
    const long n = coeff.get_num().get_si();
    for (long rep = 0; rep < std::labs(n); ++rep) {
      if (n > 0) {
        for (std::size_t k = D; k >= 1; --k) c[k] += l * c[k - 1];
      } else {
        for (std::size_t k = 1; k <= D; ++k) c[k] -= l * c[k - 1];
      }
    }
    euler *= pow(l, n);
  }
  std::vector<Rat> out;
  out.reserve(indices.size());
  for (const auto& I : indices) {
    Rat v = 1;
    for (std::size_t k = 0; k < I.exps.size(); ++k) {
      if (I.exps[k] != 0) v *= pow(k + 1 <= D ? c[k + 1] : Rat(0), I.exps[k]);
    }
    out.push_back(v / euler);
  }
  return out;
}

std::vector<Specialization> draw_specializations(const std::vector<Weight>& weights, const EngineOptions& opts) {
  if (opts.specializations < 2) throw Error(ErrorKind::InvalidArgument, "at least two specializations are required");
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::int64_t> dist(-1000003, 1000003);
  std::vector<Specialization> out;
  int failures = 0;
  while (static_cast<int>(out.size()) < opts.specializations) {
    Specialization sp;
    sp.seed = opts.seed;
    std::array<std::int64_t, 3> raw{dist(rng), dist(rng), dist(rng)};
    bool ok = raw[0] != 0 && raw[1] != 0 && raw[2] != 0 && raw[0] != raw[1] && raw[1] != raw[2] && raw[0] != raw[2];
    for (std::size_t i = 0; i < 3; ++i) sp.s[i] = Rat(static_cast<long>(raw[i]));
    for (const auto& w : weights) {
      if (!ok) break;
      ok = evaluate(w, sp.s) != 0;
    }
    for (const auto& prev : out) {
      if (prev.s == sp.s) ok = false;
    }
    if (ok) {
      out.push_back(std::move(sp));
    } else if (++failures > opts.max_retries) {
      throw Error(ErrorKind::DegenerateSpecialization, "no generic specialization found after " + std::to_string(failures) + " draws");
    }
  }
  return out;
}

LocalizationResult localize(const std::vector<LaurentPoly>& characters, std::int64_t d, const std::vector<ChernIndex>& indices,
                            const EngineOptions& opts) {
  std::set<Weight> weight_set;
  for (const auto& ch : characters) {
    for (const auto& [w, c] : ch.terms()) weight_set.insert(w);
  }
  LocalizationResult result;
  result.specializations = draw_specializations({weight_set.begin(), weight_set.end()}, opts);

  std::vector<std::vector<Rat>> sums;
  for (const auto& sp : result.specializations) {
    std::vector<std::vector<Rat>> parts(characters.size());
    parallel_for(
        characters.size(), [&](std::size_t i) { parts[i] = localized_contribution(characters[i], d, sp.s, indices); }, opts.threads);
    std::vector<Rat> total(indices.size(), Rat(0));
    for (const auto& part : parts) {
      for (std::size_t j = 0; j < total.size(); ++j) total[j] += part[j];
    }
    sums.push_back(std::move(total));
  }
  for (std::size_t k = 1; k < sums.size(); ++k) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      if (sums[k][j] != sums[0][j]) {
        throw Error(ErrorKind::SpecializationMismatch, "index " + to_string(indices[j]) + ": " + to_string(sums[0][j]) + " vs " +
                                                           to_string(sums[k][j]));
      }
    }
  }
  result.values = indices.empty() ? std::vector<Rat>{} : sums.front();
  return result;
}

// ---------------------------------------------------------------------------

Localizer::Localizer(ToricThreefold X, CurveClass beta, EngineOptions opts)
    : X_(std::move(X)), beta_(std::move(beta)), opts_(opts) {
  d_ = virtual_dimension(X_, beta_);
  bool degree_one = true;
  for (const auto& dec : decompose_class(X_, beta_)) {
    if (dec.size() != 1 || dec.front().multiplicity != 1) degree_one = false;
  }
  if (degree_one) {
    engine_ = EngineKind::Degree1;
  } else if (opts_.enable_ptvertex) {
    engine_ = EngineKind::Vertex;
  } else {
    throw Error(ErrorKind::EngineUnavailable,
                "class " + to_string(beta_) + " is not a sum of single reduced edges; rerun with the vertex engine enabled");
  }
}

std::vector<FixedPairRecord> Localizer::compute_pairs(std::int64_t n) const {
  std::vector<FixedPairRecord> out;
  if (engine_ == EngineKind::Degree1) {
    const auto pairs = enumerate_deg1(X_, beta_, n);
    out.resize(pairs.size());
    parallel_for(
        pairs.size(),
        [&](std::size_t i) {
          const auto& p = pairs[i];
          out[i] = {"edge=" + std::to_string(p.edge) + " a=" + std::to_string(p.a) + " b=" + std::to_string(p.b),
                    tvir_character_deg1(X_, p)};
        },
        opts_.threads);
  } else {
    const auto pairs = enumerate_general(X_, beta_, n);
    out.resize(pairs.size());
    parallel_for(
        pairs.size(), [&](std::size_t i) { out[i] = {pairs[i].key(), general_character(X_, pairs[i])}; }, opts_.threads);
  }
  return out;
}

std::shared_ptr<const std::vector<FixedPairRecord>> Localizer::fixed_pairs(std::int64_t n) {
  if (n <= 0) return std::make_shared<const std::vector<FixedPairRecord>>();
  return cache_.get_or_compute(n, [&] { return compute_pairs(n); });
}

LocalizationResult Localizer::chern_numbers(std::int64_t n, const std::vector<ChernIndex>& indices) {
  for (const auto& I : indices) {
    if (I.degree() != d_) throw Error(ErrorKind::InvalidArgument, "Chern index " + to_string(I) + " does not have degree " + std::to_string(d_));
  }
  const auto pairs = fixed_pairs(n);
  std::vector<LaurentPoly> chars;
  chars.reserve(pairs->size());
  for (const auto& p : *pairs) chars.push_back(p.character);
  return localize(chars, d_, indices, opts_);
}

Rat chern_number(const ToricThreefold& X, const CurveClass& beta, std::int64_t n, const ChernIndex& I, const EngineOptions& opts) {
  Localizer loc(X, beta, opts);
  return loc.chern_numbers(n, {I}).values.front();
}

}  // namespace pairloc
