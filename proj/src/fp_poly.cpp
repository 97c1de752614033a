#include "xverse/fp_poly.hpp"

#include <algorithm>
#include <cstring>

#include "xverse/error.hpp"

namespace xverse {

namespace {

bool exps_less(const FpTerm& a, const FpTerm& b) noexcept {
  return std::memcmp(a.exps.data(), b.exps.data(), kFpMaxVars) < 0;
}

bool exps_equal(const FpTerm& a, const FpTerm& b) noexcept {
  return std::memcmp(a.exps.data(), b.exps.data(), kFpMaxVars) == 0;
}

// x^e as a function on F_p: e >= p folds back to ((e - 1) mod (p - 1)) + 1.
std::uint8_t reduce_exp(unsigned e, std::uint32_t p) noexcept {
  if (e < p) return static_cast<std::uint8_t>(e);
  return static_cast<std::uint8_t>((e - 1) % (p - 1) + 1);
}

}  // namespace

std::uint32_t FpPoly::constant_term() const noexcept {
  if (!terms_.empty() && std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto e) { return e == 0; }))
    return terms_[0].coeff;
  return 0;
}

FpPoly FpPoly::constant(std::uint32_t c) {
  FpPoly p;
  if (c) p.terms_.push_back(FpTerm{{}, c});
  return p;
}

FpPoly FpPoly::variable(int v) {
  FpPoly p;
  FpTerm t;
  t.exps[static_cast<std::size_t>(v)] = 1;
  t.coeff = 1;
  p.terms_.push_back(t);
  p.mask_ = 1u << v;
  return p;
}

void FpPoly::refresh_mask() noexcept {
  mask_ = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kFpMaxVars; ++i)
      if (t.exps[static_cast<std::size_t>(i)]) mask_ |= 1u << i;
}

FpPoly FpPoly::from_terms(std::vector<FpTerm> terms, const PrimeField& f) {
  for (auto& t : terms)
    for (auto& e : t.exps) e = reduce_exp(e, f.p());
  std::sort(terms.begin(), terms.end(), exps_less);
  FpPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && exps_equal(out.terms_.back(), t)) {
      out.terms_.back().coeff = f.add(out.terms_.back().coeff, t.coeff);
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(t);
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  out.refresh_mask();
  return out;
}

std::uint32_t FpPoly::evaluate(const std::vector<std::uint32_t>& values, const PrimeField& f) const {
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.coeff;
    for (int i = 0; i < kFpMaxVars && v; ++i) {
      const unsigned e = t.exps[static_cast<std::size_t>(i)];
      if (e) v = f.mul(v, f.pow(values[static_cast<std::size_t>(i)], e));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

bool FpPoly::operator==(const FpPoly& o) const noexcept {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !exps_equal(terms_[i], o.terms_[i])) return false;
  return true;
}

FpPoly add(const FpPoly& a, const FpPoly& b, const PrimeField& f) {
  std::vector<FpTerm> t = a.terms();
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return FpPoly::from_terms(std::move(t), f);
}

FpPoly mul(const FpPoly& a, const FpPoly& b, const PrimeField& f) {
  std::vector<FpTerm> t;
  t.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      FpTerm z;
      for (int i = 0; i < kFpMaxVars; ++i) {
        const auto k = static_cast<std::size_t>(i);
        z.exps[k] = reduce_exp(static_cast<unsigned>(x.exps[k]) + y.exps[k], f.p());
      }
      z.coeff = f.mul(x.coeff, y.coeff);
      t.push_back(z);
    }
  return FpPoly::from_terms(std::move(t), f);
}

FpPoly scale(const FpPoly& a, std::uint32_t c, const PrimeField& f) {
  std::vector<FpTerm> t = a.terms();
  for (auto& x : t) x.coeff = f.mul(x.coeff, c);
  return FpPoly::from_terms(std::move(t), f);
}

FpPoly substitute_value(const FpPoly& p, int v, std::uint32_t value, const PrimeField& f) {
  if (!(p.mask() & (1u << v))) return p;
  std::vector<FpTerm> t = p.terms();
  for (auto& x : t) {
    auto& e = x.exps[static_cast<std::size_t>(v)];
    if (e) {
      x.coeff = f.mul(x.coeff, f.pow(value, e));
      e = 0;
    }
  }
  return FpPoly::from_terms(std::move(t), f);
}

FpPoly substitute_poly(const FpPoly& p, int v, const FpPoly& q, const PrimeField& f) {
  if (!(p.mask() & (1u << v))) return p;
  if (q.mask() & (1u << v)) throw StructuralError("substitution value contains the variable");
  std::vector<FpPoly> powers{FpPoly::constant(1)};
  std::vector<FpTerm> out;
  for (const auto& x : p.terms()) {
    const unsigned e = x.exps[static_cast<std::size_t>(v)];
    if (!e) {
      out.push_back(x);
      continue;
    }
    while (powers.size() <= e) powers.push_back(mul(powers.back(), q, f));
    for (const auto& y : powers[e].terms()) {
      FpTerm z;
      for (int i = 0; i < kFpMaxVars; ++i) {
        const auto k = static_cast<std::size_t>(i);
        z.exps[k] = reduce_exp(static_cast<unsigned>(i == v ? 0 : x.exps[k]) + y.exps[k], f.p());
      }
      z.coeff = f.mul(x.coeff, y.coeff);
      out.push_back(z);
    }
  }
  return FpPoly::from_terms(std::move(out), f);
}

FpPoly compose(const FpPoly& p, const std::vector<FpPoly>& images, const PrimeField& f) {
  // Variables mapped to themselves keep their exponent in place.
  std::uint32_t moved = 0;
  for (std::size_t v = 0; v < images.size(); ++v) {
    const auto& img = images[v];
    const bool identity = img.size() == 1 && img.terms()[0].coeff == 1 && img.mask() == (1u << v) &&
                          img.terms()[0].exps[v] == 1;
    if (!identity) moved |= 1u << v;
  }
  if (images.size() < static_cast<std::size_t>(kFpMaxVars) && (p.mask() >> images.size()))
    throw StructuralError("compose: no image for a variable");
  if (!(p.mask() & moved)) return p;

  std::vector<std::vector<FpPoly>> powers(images.size());
  std::vector<FpTerm> out;
  for (const auto& t : p.terms()) {
    FpTerm fixed = t;
    FpPoly prod;
    bool first = true;
    for (int v = 0; v < kFpMaxVars; ++v) {
      const unsigned e = t.exps[static_cast<std::size_t>(v)];
      if (!e || !((moved >> v) & 1u)) continue;
      fixed.exps[static_cast<std::size_t>(v)] = 0;
      auto& pw = powers[static_cast<std::size_t>(v)];
      if (pw.empty()) pw.push_back(FpPoly::constant(1));
      while (pw.size() <= e) pw.push_back(mul(pw.back(), images[static_cast<std::size_t>(v)], f));
      prod = first ? pw[e] : mul(prod, pw[e], f);
      first = false;
    }
    if (first) {
      out.push_back(t);
      continue;
    }
    for (const auto& u : prod.terms()) {
      FpTerm z;
      for (int v = 0; v < kFpMaxVars; ++v) {
        const auto k = static_cast<std::size_t>(v);
        z.exps[k] = reduce_exp(static_cast<unsigned>(fixed.exps[k]) + u.exps[k], f.p());
      }
      z.coeff = f.mul(t.coeff, u.coeff);
      if (z.coeff) out.push_back(z);
    }
  }
  return FpPoly::from_terms(std::move(out), f);
}

FpPoly to_fp_poly(const NCPoly& p, const std::vector<Generator>& vars, const PrimeField& f, const Scalars& s) {
  if (vars.size() > static_cast<std::size_t>(kFpMaxVars)) throw InvalidInput("too many variables for the counter");
  std::vector<FpTerm> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    FpTerm x;
    x.coeff = evaluate_scalar(t.coeff, t.base, f, s);
    if (!x.coeff) continue;
    std::array<unsigned, kFpMaxVars> e{};
    for (const auto& g : t.word) {
      auto it = std::find(vars.begin(), vars.end(), g);
      if (it == vars.end()) throw InvalidInput("generator " + g.to_string() + " is not a variable");
      ++e[static_cast<std::size_t>(it - vars.begin())];
    }
    for (int i = 0; i < kFpMaxVars; ++i)
      x.exps[static_cast<std::size_t>(i)] = reduce_exp(e[static_cast<std::size_t>(i)], f.p());
    out.push_back(x);
  }
  return FpPoly::from_terms(std::move(out), f);
}

}  // namespace xverse
