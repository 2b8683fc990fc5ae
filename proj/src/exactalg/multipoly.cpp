#include "pairloc/multipoly.hpp"

#include "pairloc/error.hpp"

namespace pairloc {

MultiPoly MultiPoly::constant(const Rat& c, std::size_t nvars) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t index, std::size_t nvars, int power) {
  if (index >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Exponent e(nvars, 0);
  e[index] = power;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

Rat MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

namespace {

int weighted(const MultiPoly::Exponent& e, const std::vector<int>& weights) {
  int s = 0;
  for (std::size_t i = 0; i < e.size() && i < weights.size(); ++i) s += e[i] * weights[i];
  return s;
}

}  // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::InvalidArgument, "variable counts differ");
  MultiPoly out(a.nvars_);
  MultiPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::truncated(const std::vector<int>& weights, int bound) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (weighted(e, weights) <= bound) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::mul_truncated(const MultiPoly& a, const MultiPoly& b, const std::vector<int>& weights, int bound) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::InvalidArgument, "variable counts differ");
  MultiPoly out(a.nvars_);
  MultiPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    const int wa = weighted(ea, weights);
    if (wa > bound) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (wa + weighted(eb, weights) > bound) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(c, target);
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::restrict_variables(std::size_t first, std::size_t count) const {
  MultiPoly out(count);
  for (const auto& [e, c] : terms_) {
    Exponent r(count, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i >= first && i < first + count) {
        r[i - first] = e[i];
      } else if (e[i] != 0) {
        throw Error(ErrorKind::InvalidArgument, "polynomial involves a dropped variable");
      }
    }
    out.add_term(r, c);
  }
  return out;
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = to_string(c);
    if (!s.empty()) {
      if (c < 0) {
        s += " - ";
        coeff = to_string(Rat(-c));
      } else {
        s += " + ";
      }
    }
    if (mono.empty()) {
      s += coeff;
    } else if (coeff == "1") {
      s += mono;
    } else if (coeff == "-1") {
      s += "-" + mono;
    } else {
      s += coeff + "*" + mono;
    }
  }
  return s;
}

}  // namespace pairloc
