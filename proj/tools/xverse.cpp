// xverse: command-line front end.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "xverse/aug_poly.hpp"
#include "xverse/augmentation.hpp"
#include "xverse/braid_rep.hpp"
#include "xverse/dga.hpp"
#include "xverse/error.hpp"
#include "xverse/ht0.hpp"
#include "xverse/verify.hpp"

using namespace xverse;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Common {
  bool json_out = false;
  int threads = 0;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
};

struct BraidArgs {
  std::string text;
  std::optional<int> strands;
  BraidWord parse() const { return parse_braid(text, strands); }
};

void add_braid(CLI::App* c, BraidArgs& b, const std::string& name = "--braid") {
  c->add_option(name, b.text, "braid word, e.g. \"1 -2 1\"")->required();
  c->add_option("--strands", b.strands, "strand count (default 1 + max index)");
}

void emit(const Common& c, const std::string& command, json body, const std::string& text) {
  if (c.json_out) {
    json out{{"schema", "xverse." + command}, {"version", kSchemaVersion}};
    out.update(body);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << text;
  }
}

CountOptions count_options(const Common& c) {
  CountOptions o;
  o.threads = c.threads;
  o.budget = c.budget.value_or(default_budget());
  return o;
}

std::uint64_t require_seed(const Common& c) {
  if (!c.seed && std::getenv("CI")) throw InvalidInput("--seed is required when CI is set");
  return c.seed.value_or(0);
}

json braid_json(const BraidWord& b) {
  const BraidStats s = braid_stats(b);
  return {{"writhe", s.writhe},         {"strands", s.strands},       {"sl", s.self_linking},
          {"knot", s.is_knot},          {"components", s.components}, {"permutation", s.permutation},
          {"braid", b.to_string()}};
}

std::string relations_text(const std::vector<Generator>& vars, const std::vector<NCPoly>& rels) {
  std::ostringstream o;
  o << "variables:";
  for (const auto& g : vars) o << ' ' << g.to_string();
  o << '\n';
  for (const auto& r : rels) o << r.to_string() << " = 0\n";
  return o.str();
}

std::string report_text(const CheckReport& r) {
  std::ostringstream o;
  o << check_name(r.check) << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.cases.size() << " cases)\n";
  for (const auto& c : r.cases)
    o << "  " << c.move << " @ " << to_string(c.point) << ": " << c.left << ' ' << c.right
      << (c.left == c.right ? "" : "  mismatch") << '\n';
  return o.str();
}

std::string identity_text(const std::string& what, const IdentityReport& r) {
  std::string s = what + ": " + (r.ok() ? "ok" : "FAIL") + "\n";
  for (const auto& f : r.failures) s += "  " + f + "\n";
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transverse DGA, degree-0 homology and augmentation counts of braid closures"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json_out, "JSON output");
  app.add_option("--threads", common.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", common.budget, "evaluation budget per count (default XVERSE_BUDGET or 1e8)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "seed for randomized commands");

  // braid
  BraidArgs braid_b;
  bool braid_phi = false;
  auto* braid = app.add_subcommand("braid", "writhe, self-linking number and components");
  add_braid(braid, braid_b);
  braid->add_flag("--phi", braid_phi, "include the Phi^L, Phi^R matrices (JSON only)");

  // dga
  BraidArgs dga_b;
  std::string dga_flavor = "minus";
  bool dga_modified = false;
  auto* dga = app.add_subcommand("dga", "generators and differentials");
  add_braid(dga, dga_b);
  dga->add_option("--flavor", dga_flavor, "minus, hat, doublehat or infinity");
  dga->add_flag("--modified", dga_modified, "reduced generator set");

  // ht0
  BraidArgs ht0_b;
  std::string ht0_flavor = "hat";
  std::optional<std::size_t> ht0_split;
  bool ht0_reduce = false;
  auto* ht0 = app.add_subcommand("ht0", "degree-0 presentation");
  add_braid(ht0, ht0_b);
  ht0->add_option("--flavor", ht0_flavor);
  ht0->add_option("--split", ht0_split, "cut position in the letter sequence");
  ht0->add_flag("--reduce", ht0_reduce, "eliminate variables that occur linearly with unit coefficient");

  // aug
  auto* aug = app.add_subcommand("aug", "augmentation numbers and polynomials");
  aug->require_subcommand(1);
  BraidArgs count_b;
  std::string count_flavor = "hat", count_kernel = "auto";
  std::uint32_t count_prime = 3, count_lam = 1, count_mu = 1;
  std::optional<std::uint32_t> count_u, count_v;
  std::optional<std::size_t> count_split;
  bool count_no_elim = false, count_plain = false;
  auto* count = aug->add_subcommand("count", "number of augmentations over Z/p");
  add_braid(count, count_b);
  count->add_option("--flavor", count_flavor);
  count->add_option("--prime", count_prime);
  count->add_option("--lam", count_lam);
  count->add_option("--mu", count_mu);
  count->add_option("--u0", count_u, "U value (infinity, minus)");
  count->add_option("--v0", count_v, "V value (infinity, minus)");
  count->add_option("--split", count_split, "cut position in the letter sequence");
  count->add_flag("--no-elim", count_no_elim, "disable linear elimination");
  count->add_flag("--plain", count_plain, "plain exhaustive enumeration");
  count->add_option("--kernel", count_kernel, "auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  BraidArgs poly_b;
  auto* poly = aug->add_subcommand("poly", "augmentation polynomial of a 2-braid");
  add_braid(poly, poly_b);

  BraidArgs cmp_a, cmp_b;
  std::string cmp_flavor = "hat";
  std::uint32_t cmp_prime = 3, cmp_lam = 1, cmp_mu = 1;
  bool cmp_grid = false;
  auto* compare = aug->add_subcommand("compare", "compare augmentation numbers of two braids");
  compare->add_option("--braid-a", cmp_a.text)->required();
  compare->add_option("--braid-b", cmp_b.text)->required();
  compare->add_option("--strands", cmp_a.strands);
  compare->add_option("--flavor", cmp_flavor);
  compare->add_option("--prime", cmp_prime);
  compare->add_option("--lam", cmp_lam);
  compare->add_option("--mu", cmp_mu);
  compare->add_flag("--grid", cmp_grid, "sweep every nonzero (lambda0, mu0)");

  // verify
  BraidArgs ver_b;
  std::string ver_check, ver_flavor = "hat", ver_grid;
  std::uint32_t ver_prime = 3;
  int ver_samples = 5;
  auto* verify = app.add_subcommand("verify", "invariance check on augmentation counts");
  add_braid(verify, ver_b);
  verify->add_option("--check", ver_check)
      ->required()
      ->check(CLI::IsMember({"conjugation", "stab_pos", "stab_neg_infinity", "mirror", "op_swap", "rescale",
                             "doublehat_stab", "lam_override"}));
  verify->add_option("--flavor", ver_flavor);
  verify->add_option("--prime", ver_prime);
  verify->add_option("--samples", ver_samples)->check(CLI::PositiveNumber);
  verify->add_option("--grid", ver_grid, "points \"lam,mu[,U,V];...\"");

  // table
  std::uint32_t table_prime = 3;
  std::string table_rows;
  auto* table = app.add_subcommand("table", "knot table over Z/3");
  table->add_option("--prime", table_prime);
  table->add_option("--rows", table_rows, "comma separated row names");

  // check
  BraidArgs chk_b;
  std::string chk_what, chk_flavor;
  auto* check = app.add_subcommand("check", "symbolic identities");
  check->add_option("what", chk_what)->required()->check(CLI::IsMember({"d2", "lemma29"}));
  add_braid(check, chk_b);
  check->add_option("--flavor", chk_flavor, "d2 only; default all flavors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*braid) {
      const BraidWord b = braid_b.parse();
      json j = braid_json(b);
      if (braid_phi) {
        const PhiMatrices m = phi_matrices(b);
        j["phi_left"] = to_json(m.left);
        j["phi_right"] = to_json(m.right);
      }
      const BraidStats s = braid_stats(b);
      std::ostringstream t;
      t << "writhe " << s.writhe << "\nstrands " << s.strands << "\nsl " << s.self_linking << "\nknot "
        << (s.is_knot ? "true" : "false") << "\ncomponents " << s.components << '\n';
      emit(common, "braid", j, t.str());
    } else if (*dga) {
      const BraidWord b = dga_b.parse();
      const Flavor fl = parse_flavor(dga_flavor);
      const DgaPresentation p = dga_modified ? build_modified_dga(b, fl) : build_dga(b, fl);
      json gens = json::array();
      std::ostringstream t;
      for (const auto& g : p.generators) {
        const NCPoly& d = p.d(g);
        gens.push_back({{"name", g.to_string()}, {"degree", g.degree()}, {"d", d.to_string()}, {"terms", to_json(d)}});
        t << "d(" << g.to_string() << ") = " << d.to_string() << '\n';
      }
      emit(common, "dga",
           {{"flavor", flavor_name(fl)}, {"modified", p.modified}, {"sl", p.self_linking}, {"generators", gens}},
           t.str());
    } else if (*ht0) {
      const BraidWord b = ht0_b.parse();
      const Flavor fl = parse_flavor(ht0_flavor);
      const Ht0Presentation p = ht0_split ? ht0_relations_cut(b, *ht0_split, fl) : ht0_relations(b, fl);
      if (ht0_reduce) {
        const ReducedHt0 r = reduce_presentation(p);
        emit(common, "ht0", to_json(r), relations_text(r.remaining, r.relations));
      } else {
        emit(common, "ht0", to_json(p), relations_text(p.variables, p.relations));
      }
    } else if (*count) {
      const BraidWord b = count_b.parse();
      CountOptions o = count_options(common);
      o.linear_elimination = !count_no_elim;
      o.pruning = !count_plain;
      o.kernel = count_kernel == "scalar" ? Kernel::Scalar : count_kernel == "avx2" ? Kernel::Avx2 : Kernel::Auto;
      const AugResult r = augmentation_number(b, parse_flavor(count_flavor), count_prime, count_lam, count_mu, count_u,
                                              count_split, o, count_v);
      json j = to_json(r);
      j.erase("elapsed_seconds");
      j["braid"] = b.to_string();
      j["flavor"] = count_flavor;
      j["prime"] = count_prime;
      j["lam"] = count_lam;
      j["mu"] = count_mu;
      emit(common, "aug.count", j, "count " + std::to_string(r.count) + "\n");
    } else if (*poly) {
      const AugPolyResult r = augmentation_polynomial_index2(poly_b.parse());
      emit(common, "aug.poly",
           {{"poly", r.poly.to_string()},
            {"variables_left", r.variables_left},
            {"squarefree_checked", r.squarefree_checked}},
           r.poly.to_string() + "\n");
    } else if (*compare) {
      const BraidWord a = cmp_a.parse(), b = parse_braid(cmp_b.text, cmp_a.strands);
      const Flavor fl = parse_flavor(cmp_flavor);
      const CountOptions o = count_options(common);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
      if (cmp_grid) {
        for (std::uint32_t l = 1; l < cmp_prime; ++l)
          for (std::uint32_t m = 1; m < cmp_prime; ++m) points.emplace_back(l, m);
      } else {
        points.emplace_back(cmp_lam, cmp_mu);
      }
      json rows = json::array();
      std::ostringstream t;
      bool distinct = false;
      for (const auto& [l, m] : points) {
        const std::uint64_t ca = augmentation_number(a, fl, cmp_prime, l, m, std::nullopt, std::nullopt, o).count;
        const std::uint64_t cb = augmentation_number(b, fl, cmp_prime, l, m, std::nullopt, std::nullopt, o).count;
        distinct = distinct || ca != cb;
        rows.push_back({{"lam", l}, {"mu", m}, {"a", ca}, {"b", cb}});
        t << "(" << l << "," << m << "): " << ca << ' ' << cb << '\n';
      }
      const std::string verdict = distinct ? "distinct transverse knots" : "not distinguished";
      t << verdict << '\n';
      emit(common, "aug.compare", {{"prime", cmp_prime}, {"flavor", cmp_flavor}, {"points", rows}, {"verdict", verdict}},
           t.str());
    } else if (*verify) {
      CheckSpec s;
      s.braid = ver_b.parse();
      s.check = parse_check(ver_check);
      s.flavor = parse_flavor(ver_flavor);
      s.prime = ver_prime;
      s.samples = ver_samples;
      s.seed = require_seed(common);
      if (!ver_grid.empty()) s.grid = parse_grid(ver_grid);
      s.options = count_options(common);
      const CheckReport r = run_check(s);
      json j = to_json(r);
      j["seed"] = s.seed;
      emit(common, "verify", j, report_text(r));
    } else if (*table) {
      const TableReport r = reproduce_table(table_prime, split_list(table_rows), count_options(common));
      std::ostringstream t;
      for (const auto& row : r.rows) {
        t << row.row.name << " (" << row.row.lam << "," << row.row.mu << ")";
        for (const auto& e : row.entries)
          t << "  " << (e.computed ? std::to_string(*e.computed) : std::string("budget")) << "/" << e.expected;
        t << "  " << (row.passed() ? "pass" : "FAIL") << '\n';
      }
      emit(common, "table", to_json(r), t.str());
    } else if (*check) {
      const BraidWord b = chk_b.parse();
      json j{{"what", chk_what}};
      std::string text;
      bool ok = true;
      if (chk_what == "d2") {
        std::vector<Flavor> flavors;
        if (chk_flavor.empty()) flavors = {Flavor::Minus, Flavor::Hat, Flavor::DoubleHat, Flavor::Infinity};
        else flavors = {parse_flavor(chk_flavor)};
        json results = json::array();
        for (Flavor fl : flavors)
          for (bool modified : {false, true}) {
            const DgaPresentation p = modified ? build_modified_dga(b, fl) : build_dga(b, fl);
            const DSquaredReport r = verify_d_squared(p);
            const auto graded = grading_violations(p);
            json fails = json::array();
            for (const auto& [g, dd] : r.failures) fails.push_back({{"generator", g.to_string()}, {"dd", dd.to_string()}});
            for (const auto& g : graded) fails.push_back({{"generator", g.to_string()}, {"grading", false}});
            const bool good = fails.empty();
            ok = ok && good;
            results.push_back({{"flavor", flavor_name(fl)}, {"modified", modified}, {"ok", good}, {"failures", fails}});
            text += std::string(flavor_name(fl)) + (modified ? " modified" : "") + ": " + (good ? "ok" : "FAIL") + "\n";
          }
        j["results"] = results;
      } else {
        const IdentityReport phi = verify_phi_factorization(b), deg0 = verify_degree0_identities(b);
        ok = phi.ok() && deg0.ok();
        j["phi_factorization"] = phi.failures;
        j["degree0_identities"] = deg0.failures;
        text = identity_text("phi factorization", phi) + identity_text("degree-0 identities", deg0);
      }
      j["ok"] = ok;
      emit(common, "check", j, text);
    }
    return 0;
  } catch (const BudgetExceeded& e) {
    std::cerr << "xverse: " << e.what() << '\n';
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "xverse: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "xverse: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "xverse: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "xverse: " << e.what() << '\n';
    return 1;
  }
}
