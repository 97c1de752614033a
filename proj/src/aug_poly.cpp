#include "xverse/aug_poly.hpp"

#include <algorithm>

#include "xverse/error.hpp"
#include "xverse/ht0.hpp"

namespace xverse {

CommPoly abelianize(const NCPoly& p, const std::vector<Generator>& vars) {
  if (vars.size() > static_cast<std::size_t>(kCommVars - kX0)) throw InvalidInput("too many variables to abelianize");
  CommPoly out;
  for (const auto& t : p.terms()) {
    CommExp e{};
    e[kLam] = static_cast<std::int16_t>(t.base.lam);
    e[kMu] = static_cast<std::int16_t>(t.base.mu);
    e[kU] = static_cast<std::int16_t>(t.base.u);
    e[kV] = static_cast<std::int16_t>(t.base.v);
    for (const auto& g : t.word) {
      auto it = std::find(vars.begin(), vars.end(), g);
      if (it == vars.end()) throw InvalidInput("generator " + g.to_string() + " is not a variable");
      e[static_cast<std::size_t>(kX0 + (it - vars.begin()))]++;
    }
    out += CommPoly::monomial(t.coeff, e);
  }
  return out;
}

namespace {

bool simpler(const CommPoly& a, const CommPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.size() < b.size();
}

void push_unique(std::vector<CommPoly>& v, CommPoly p) {
  if (p.is_zero()) return;
  p = normalize_up_to_unit(p);
  if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(std::move(p));
}

}  // namespace

AugPolyResult augmentation_polynomial_index2(const BraidWord& b) {
  if (b.strands() != 2) throw InvalidInput("the augmentation polynomial pipeline needs a 2-strand braid");
  const Ht0Presentation pres = ht0_relations(b, Flavor::Infinity);
  const ReducedHt0 red = reduce_presentation(pres);

  AugPolyResult out;
  out.variables_left = static_cast<int>(red.remaining.size());
  if (red.remaining.size() > 1) throw EliminationFailed("more than one variable survives the reduction");
  for (const auto& r : red.relations) push_unique(out.relations, abelianize(r, red.remaining).substitute(kV, 1));
  if (out.relations.empty()) throw EliminationFailed("no relations survive the reduction");

  if (red.remaining.empty()) {
    out.eliminants = out.relations;
  } else {
    const CommPoly* f = nullptr;
    for (const auto& r : out.relations) {
      if (r.degree(kX0) == 0) {
        push_unique(out.eliminants, r);
        continue;
      }
      if (!f || r.degree(kX0) < f->degree(kX0) || (r.degree(kX0) == f->degree(kX0) && r.size() < f->size())) f = &r;
    }
    if (f)
      for (const auto& r : out.relations)
        if (&r != f && r.degree(kX0) > 0) push_unique(out.eliminants, sylvester_resultant(*f, r, kX0));
    if (f && out.eliminants.empty()) throw EliminationFailed("a single relation in x remains");
  }
  if (out.eliminants.empty()) throw EliminationFailed("all eliminants vanish");

  const CommPoly* best = &out.eliminants.front();
  for (const auto& e : out.eliminants)
    if (simpler(e, *best)) best = &e;
  for (const auto& e : out.eliminants) {
    if (&e == best) continue;
    if (!e.divide_exact(*best))
      throw EliminationFailed("eliminant " + best->to_string() + " does not divide " + e.to_string());
  }
  out.poly = *best;
  return out;
}

}  // namespace xverse
