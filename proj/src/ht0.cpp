#include "xverse/ht0.hpp"

#include <algorithm>
#include <optional>

#include "xverse/braid_rep.hpp"
#include "xverse/error.hpp"

namespace xverse {

namespace {

std::vector<Generator> a_variables(int n) {
  std::vector<Generator> v;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) v.push_back(Generator::a(i, j));
  return v;
}

void collect(Ht0Presentation& out, const GenMatrix& rel_c, const GenMatrix& rel_d) {
  const int n = rel_c.n();
  for (const GenMatrix* m : {&rel_c, &rel_d})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NCPoly r = m->at(i, j);
        if (out.flavor == Flavor::Hat || out.flavor == Flavor::DoubleHat)
          r = specialize(r, out.flavor, out.self_linking);
        out.relations.push_back(std::move(r));
      }
}

NCPoly substitute(const NCPoly& p, Generator x, const NCPoly& value) {
  NCPoly out;
  for (const auto& t : p.terms()) {
    if (std::find(t.word.begin(), t.word.end(), x) == t.word.end()) {
      out += NCPoly(std::vector<Term>{t});
      continue;
    }
    NCPoly prod = NCPoly::scalar(t.coeff, t.base);
    for (const auto& g : t.word) prod = prod * (g == x ? value : NCPoly::gen(g));
    out += prod;
  }
  return out;
}

}  // namespace

Ht0Presentation ht0_relations(const BraidWord& b, Flavor flavor, const DgaOptions& options) {
  require_knot(b);
  const int n = b.strands();
  Ht0Presentation out;
  out.braid = b;
  out.flavor = flavor;
  out.self_linking = braid_stats(b).self_linking;
  out.variables = a_variables(n);
  std::vector<BaseMonomial> lam = default_lambda(b, flavor);
  if (options.lam_override) {
    check_lambda_override(b, flavor, *options.lam_override);
    lam = *options.lam_override;
  }
  out.lam = lam;
  const StructuredMatrices m = structured_matrices(n, lam);
  const PhiMatrices phi = phi_matrices(b);
  collect(out, m.Ahat - m.Lam * phi.left * m.Acheck, m.Acheck - m.Ahat * phi.right * m.LamInv);
  return out;
}

Ht0Presentation ht0_relations_split(const BraidWord& b1, const BraidWord& b2, Flavor flavor) {
  if (b1.strands() != b2.strands()) throw InvalidInput("split factors have different strand counts");
  const BraidWord b = b1 * b2;
  require_knot(b);
  const int n = b.strands();
  Ht0Presentation out;
  out.braid = b;
  out.flavor = flavor;
  out.self_linking = braid_stats(b).self_linking;
  out.variables = a_variables(n);
  out.lam = default_lambda(b, flavor);
  const StructuredMatrices m = structured_matrices(n, out.lam);
  const PhiMatrices left = phi_matrices(braid_transform(b1, TransformKind::Inverse));
  const PhiMatrices right = phi_matrices(b2);
  collect(out, left.left * m.Ahat - m.Lam * right.left * m.Acheck,
          m.Acheck * left.right - m.Ahat * right.right * m.LamInv);
  return out;
}

Ht0Presentation ht0_relations_cut(const BraidWord& b, std::size_t cut, Flavor flavor) {
  if (cut > b.length())
    throw InvalidInput("split position " + std::to_string(cut) + " exceeds braid length " +
                       std::to_string(b.length()));
  return ht0_relations_split(b.slice(0, cut), b.slice(cut, b.length()), flavor);
}

bool is_unit(const BaseMonomial& m, Flavor flavor) {
  return flavor == Flavor::Infinity || (m.u == 0 && m.v == 0);
}

NCPoly normalize_up_to_unit(const NCPoly& p, Flavor flavor) {
  if (p.is_zero()) return p;
  const Term& first = p.terms().front();
  BaseMonomial shift{-first.base.lam, -first.base.mu, 0, 0};
  if (flavor == Flavor::Infinity) shift = first.base.inverse();
  return p.scaled(first.coeff < 0 ? -1 : 1, shift);
}

std::vector<NCPoly> b_consequences(const Ht0Presentation& p) {
  const int n = p.braid.strands();
  const StructuredMatrices m = structured_matrices(n, p.lam);
  const GenMatrix db = m.A - m.Lam * phi_image(p.braid).apply(m.A) * m.LamInv;
  std::vector<NCPoly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      NCPoly r = db.at(i, j);
      if (p.flavor == Flavor::Hat || p.flavor == Flavor::DoubleHat) r = specialize(r, p.flavor, p.self_linking);
      out.push_back(std::move(r));
    }
  return out;
}

namespace {

constexpr int kMaxPasses = 64;
constexpr int kMaxDivisionSteps = 20000;

// Index of the unique longest term, or -1.
int lead_index(const NCPoly& s) {
  if (s.is_zero()) return -1;
  const auto& t = s.terms();
  const std::size_t len = t.back().word.size();
  if (len == 0) return -1;
  if (t.size() >= 2 && t[t.size() - 2].word.size() == len) return -1;
  return static_cast<int>(t.size()) - 1;
}

bool base_divides(const BaseMonomial& lead, const BaseMonomial& b, Flavor flavor) {
  if (flavor == Flavor::Infinity) return true;
  return b.u >= lead.u && b.v >= lead.v;
}

// One division step of r by s; returns false when no term of r is divisible.
bool divide_once(NCPoly& r, const NCPoly& s, Flavor flavor) {
  const int li = lead_index(s);
  if (li < 0) return false;
  const Term& lt = s.terms()[static_cast<std::size_t>(li)];
  const std::size_t L = lt.word.size();
  for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
    const Term& t = *it;
    if (t.word.size() < L) break;
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), lt.coeff.get_mpz_t())) continue;
    if (!base_divides(lt.base, t.base, flavor)) continue;
    for (std::size_t pos = 0; pos + L <= t.word.size(); ++pos) {
      if (!std::equal(lt.word.begin(), lt.word.end(), t.word.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
      const mpz_class q = t.coeff / lt.coeff;
      const BaseMonomial gamma{t.base.lam - lt.base.lam, t.base.mu - lt.base.mu, t.base.u - lt.base.u,
                               t.base.v - lt.base.v};
      const NCPoly left = NCPoly::word(q, gamma, Word(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(pos)));
      const NCPoly right = NCPoly::word(1, {}, Word(t.word.begin() + static_cast<std::ptrdiff_t>(pos + L), t.word.end()));
      r -= left * s * right;
      return true;
    }
  }
  return false;
}

struct Candidate {
  std::size_t rel;
  Generator var;
  std::size_t size;
};

std::optional<Candidate> find_elimination(const std::vector<NCPoly>& rels, const std::vector<Generator>& vars,
                                          Flavor flavor) {
  std::optional<Candidate> best;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (const auto& x : vars) {
      int occurrences = 0;
      const Term* lone = nullptr;
      for (const auto& t : rels[r].terms())
        for (const auto& g : t.word)
          if (g == x) {
            ++occurrences;
            lone = &t;
          }
      if (occurrences != 1 || lone->word.size() != 1) continue;
      if (abs(lone->coeff) != 1 || !is_unit(lone->base, flavor)) continue;
      const std::size_t size = rels[r].size() - 1;
      // Ties go to the later variable, so below-diagonal a_ij are solved first.
      if (!best || size < best->size || (size == best->size && best->var < x)) best = Candidate{r, x, size};
    }
  }
  return best;
}

void tidy(std::vector<NCPoly>& rels, Flavor flavor) {
  std::vector<NCPoly> out;
  for (const auto& q : rels) {
    if (q.is_zero()) continue;
    NCPoly n = normalize_up_to_unit(q, flavor);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  rels = std::move(out);
}

}  // namespace

ReducedHt0 reduce_presentation(const Ht0Presentation& p) {
  ReducedHt0 out;
  std::vector<NCPoly> rels = p.relations;
  for (auto& c : b_consequences(p)) rels.push_back(std::move(c));
  tidy(rels, p.flavor);
  std::vector<Generator> remaining = p.variables;

  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool changed = false;
    while (auto c = find_elimination(rels, remaining, p.flavor)) {
      const NCPoly& r = rels[c->rel];
      const Term* lone = nullptr;
      std::vector<Term> rest;
      for (const auto& t : r.terms()) {
        if (t.word.size() == 1 && t.word[0] == c->var)
          lone = &t;
        else
          rest.push_back(t);
      }
      // u x + rest = 0  =>  x = -u^-1 rest
      const mpz_class sign = lone->coeff > 0 ? -1 : 1;
      const NCPoly value = NCPoly(std::move(rest)).scaled(sign, lone->base.inverse());
      rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(c->rel));
      for (auto& [g, expr] : out.eliminated) expr = substitute(expr, c->var, value);
      for (auto& q : rels) q = substitute(q, c->var, value);
      out.eliminated.emplace_back(c->var, value);
      remaining.erase(std::find(remaining.begin(), remaining.end(), c->var));
      tidy(rels, p.flavor);
      changed = true;
    }

    int steps = 0;
    for (std::size_t i = 0; i < rels.size() && steps < kMaxDivisionSteps; ++i) {
      for (std::size_t j = 0; j < rels.size() && steps < kMaxDivisionSteps; ++j) {
        if (i == j || rels[j].is_zero()) continue;
        while (steps < kMaxDivisionSteps && divide_once(rels[i], rels[j], p.flavor)) {
          ++steps;
          changed = true;
        }
      }
    }
    tidy(rels, p.flavor);
    if (!changed) break;
  }
  out.relations = std::move(rels);
  out.remaining = std::move(remaining);
  return out;
}

nlohmann::json to_json(const Ht0Presentation& p) {
  nlohmann::json j;
  j["braid"] = p.braid.to_string();
  j["strands"] = p.braid.strands();
  j["flavor"] = flavor_name(p.flavor);
  j["sl"] = p.self_linking;
  j["variables"] = nlohmann::json::array();
  for (const auto& g : p.variables) j["variables"].push_back(g.to_string());
  j["relations"] = nlohmann::json::array();
  for (const auto& r : p.relations) j["relations"].push_back(r.to_string());
  return j;
}

nlohmann::json to_json(const ReducedHt0& r) {
  nlohmann::json j;
  j["remaining"] = nlohmann::json::array();
  for (const auto& g : r.remaining) j["remaining"].push_back(g.to_string());
  j["eliminated"] = nlohmann::json::array();
  for (const auto& [g, e] : r.eliminated) j["eliminated"].push_back({{"var", g.to_string()}, {"value", e.to_string()}});
  j["relations"] = nlohmann::json::array();
  for (const auto& q : r.relations) j["relations"].push_back(q.to_string());
  return j;
}

}  // namespace xverse
