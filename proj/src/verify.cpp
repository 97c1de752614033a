#include "xverse/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "xverse/abelian.hpp"
#include "xverse/dga.hpp"
#include "xverse/error.hpp"

namespace xverse {

namespace {

constexpr std::pair<CheckKind, std::string_view> kCheckNames[] = {
    {CheckKind::Conjugation, "conjugation"},   {CheckKind::StabPos, "stab_pos"},
    {CheckKind::StabNegInfinity, "stab_neg_infinity"}, {CheckKind::Mirror, "mirror"},
    {CheckKind::OpSwap, "op_swap"},            {CheckKind::Rescale, "rescale"},
    {CheckKind::DoubleHatStab, "doublehat_stab"}, {CheckKind::LamOverride, "lam_override"},
};

std::optional<std::size_t> default_split(const BraidWord& b) {
  if (b.strands() >= 5) return b.length() / 2;
  return std::nullopt;
}

// One augmentation count to be computed.
struct Job {
  BraidWord braid;
  Flavor flavor = Flavor::Hat;
  GridPoint point;
  std::optional<std::vector<BaseMonomial>> lam;

  std::string key() const {
    std::ostringstream o;
    o << braid.strands() << '|' << braid.to_string() << '|' << flavor_name(flavor) << '|' << to_string(point);
    if (lam)
      for (const auto& m : *lam) o << '|' << m.lam << ',' << m.mu << ',' << m.u << ',' << m.v;
    return o.str();
  }
};

std::uint64_t run_job(const Job& j, std::uint32_t prime, const CountOptions& options) {
  if (j.lam) {
    const PrimeField f(prime);
    const Scalars s = flavor_scalars(j.flavor, prime, j.point.lam, j.point.mu, j.point.u, j.point.v);
    DgaOptions o;
    o.lam_override = j.lam;
    return count_augmentations(abelian_relations(j.braid, j.flavor, f, s, o), options).count;
  }
  return augmentation_number(j.braid, j.flavor, prime, j.point.lam, j.point.mu, j.point.u, default_split(j.braid),
                             options, j.point.v)
      .count;
}

// Computes each distinct job once. With several threads the jobs run
// concurrently and each count is single-threaded; results do not depend on
// the schedule. The first failure in job order is rethrown.
std::map<std::string, std::uint64_t> run_jobs(const std::vector<Job>& all, std::uint32_t prime,
                                              const CountOptions& options) {
  std::vector<const Job*> jobs;
  std::map<std::string, std::size_t> index;
  for (const auto& j : all)
    if (index.emplace(j.key(), jobs.size()).second) jobs.push_back(&j);

  std::vector<std::uint64_t> out(jobs.size());
  std::vector<std::exception_ptr> err(jobs.size());
  const int requested = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  const int workers = std::clamp(requested, 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  CountOptions inner = options;
  if (workers > 1) inner.threads = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < jobs.size();) {
      try {
        out[k] = run_job(*jobs[k], prime, inner);
      } catch (...) {
        err[k] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : err)
    if (e) std::rethrow_exception(e);

  std::map<std::string, std::uint64_t> result;
  for (const auto& [key, k] : index) result[key] = out[k];
  return result;
}

struct Pending {
  std::string move;
  GridPoint point;
  Job left;
  std::optional<Job> right;  // nullopt: the right count is zero
};

std::uint32_t pow_mod(std::uint32_t a, int e, const PrimeField& f) {
  if (e < 0) {
    a = f.inv(a);
    e = -e;
  }
  std::uint32_t r = 1;
  for (int i = 0; i < e; ++i) r = f.mul(r, a);
  return r;
}

}  // namespace

std::string_view check_name(CheckKind k) noexcept {
  for (const auto& [kind, name] : kCheckNames)
    if (kind == k) return name;
  return "?";
}

CheckKind parse_check(std::string_view text) {
  for (const auto& [kind, name] : kCheckNames)
    if (name == text) return kind;
  throw InvalidInput("unknown check '" + std::string(text) + "'");
}

std::string to_string(const GridPoint& g) {
  std::string s = std::to_string(g.lam) + "," + std::to_string(g.mu);
  if (g.u || g.v) s += "," + (g.u ? std::to_string(*g.u) : "-") + "," + (g.v ? std::to_string(*g.v) : "-");
  return s;
}

std::vector<GridPoint> parse_grid(std::string_view text) {
  std::vector<GridPoint> grid;
  std::string all(text);
  std::istringstream points(all);
  std::string item;
  while (std::getline(points, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::uint32_t> v;
    std::istringstream parts(item);
    std::string num;
    while (std::getline(parts, num, ',')) {
      std::size_t used = 0;
      unsigned long x = 0;
      try {
        x = std::stoul(num, &used);
      } catch (const std::exception&) {
        throw ParseError("bad grid value '" + num + "'");
      }
      if (num.find_first_not_of(" \t", used) != std::string::npos || num.find('-') != std::string::npos)
        throw ParseError("bad grid value '" + num + "'");
      v.push_back(static_cast<std::uint32_t>(x));
    }
    if (v.size() != 2 && v.size() != 4)
      throw ParseError("grid point '" + item + "' needs 2 or 4 values (lambda,mu[,U,V])");
    GridPoint g{v[0], v[1], std::nullopt, std::nullopt};
    if (v.size() == 4) {
      g.u = v[2];
      g.v = v[3];
    }
    grid.push_back(g);
  }
  if (grid.empty()) throw ParseError("empty grid");
  return grid;
}

std::vector<GridPoint> default_grid(Flavor flavor, std::uint32_t prime) {
  const bool free_uv = flavor == Flavor::Infinity || flavor == Flavor::Minus;
  std::vector<GridPoint> g;
  const std::uint32_t top = std::min<std::uint32_t>(2, prime - 1);
  for (std::uint32_t lam = 1; lam <= top; ++lam)
    for (std::uint32_t mu = 1; mu <= top; ++mu) {
      GridPoint p{lam, mu, std::nullopt, std::nullopt};
      if (free_uv) {
        p.u = mu;
        p.v = lam;
      }
      g.push_back(p);
    }
  return g;
}

Flavor check_flavor(const CheckSpec& s) {
  switch (s.check) {
    case CheckKind::StabNegInfinity:
    case CheckKind::OpSwap:
    case CheckKind::Rescale: return Flavor::Infinity;
    case CheckKind::DoubleHatStab: return Flavor::DoubleHat;
    default: return s.flavor;
  }
}

CheckReport run_check(const CheckSpec& spec) {
  if (spec.samples < 1) throw InvalidInput("samples must be at least 1");
  require_knot(spec.braid);
  const PrimeField f(spec.prime);
  const Flavor fl = check_flavor(spec);
  const std::vector<GridPoint> grid = spec.grid.empty() ? default_grid(fl, spec.prime) : spec.grid;
  for (const auto& g : grid) flavor_scalars(fl, spec.prime, g.lam, g.mu, g.u, g.v);

  const BraidWord& b = spec.braid;
  const int n = b.strands();
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto job = [&](const BraidWord& w, const GridPoint& g) { return Job{w, fl, g, std::nullopt}; };

  // A stabilization at a random place: rotate first, which is a conjugation.
  auto rotated = [&](std::string& desc) {
    const std::size_t r = b.length() > 1 ? static_cast<std::size_t>(uniform(0, static_cast<int>(b.length()) - 1)) : 0;
    desc = "rotate " + std::to_string(r) + ", ";
    return rotate(b, r);
  };

  std::vector<Pending> pending;
  switch (spec.check) {
    case CheckKind::Conjugation:
      if (n < 2) throw InvalidInput("conjugation needs at least 2 strands");
      for (int s = 0; s < spec.samples; ++s) {
        std::string desc;
        BraidWord w;
        if (b.length() > 1 && uniform(0, 1)) {
          const auto r = static_cast<std::size_t>(uniform(1, static_cast<int>(b.length()) - 1));
          w = rotate(b, r);
          desc = "rotate " + std::to_string(r);
        } else {
          const int k = uniform(1, n - 1), sign = uniform(0, 1) ? 1 : -1;
          w = markov_move(b, MarkovMove::conjugate(k, sign));
          desc = "conjugate by sigma_" + std::to_string(k) + (sign > 0 ? "" : "^-1");
        }
        for (const auto& g : grid) pending.push_back({desc, g, job(b, g), job(w, g)});
      }
      break;
    case CheckKind::StabPos:
    case CheckKind::StabNegInfinity:
      for (int s = 0; s < spec.samples; ++s) {
        std::string desc;
        const bool pos = spec.check == CheckKind::StabPos;
        const BraidWord w = markov_move(rotated(desc), pos ? MarkovMove::stab_pos() : MarkovMove::stab_neg());
        desc += pos ? "stab_pos" : "stab_neg";
        for (const auto& g : grid) pending.push_back({desc, g, job(b, g), job(w, g)});
      }
      break;
    case CheckKind::DoubleHatStab:
      for (int s = 0; s < spec.samples; ++s) {
        std::string desc;
        const BraidWord w = markov_move(rotated(desc), MarkovMove::stab_neg());
        desc += "stab_neg";
        for (const auto& g : grid) pending.push_back({desc, g, job(w, g), std::nullopt});
      }
      break;
    case CheckKind::Mirror: {
      const BraidWord w = braid_transform(b, TransformKind::Reverse);
      for (const auto& g : grid) pending.push_back({"reverse", g, job(b, g), job(w, g)});
      break;
    }
    case CheckKind::OpSwap:
      for (const auto& g : grid) {
        const GridPoint h{f.inv(g.lam), f.inv(g.mu), g.v.value_or(1), g.u.value_or(1)};
        pending.push_back({"swap U, V; invert lambda, mu -> " + to_string(h), g, job(b, g), job(b, h)});
      }
      break;
    case CheckKind::Rescale: {
      const int sl = braid_stats(b).self_linking;
      for (int s = 0; s < spec.samples; ++s) {
        const auto alpha = static_cast<std::uint32_t>(uniform(1, static_cast<int>(spec.prime) - 1));
        const std::uint32_t ainv = f.inv(alpha);
        for (const auto& g : grid) {
          const GridPoint h{f.mul(g.lam, pow_mod(alpha, -sl, f)), f.mul(g.mu, ainv), f.mul(g.u.value_or(1), alpha),
                            f.mul(g.v.value_or(1), ainv)};
          pending.push_back({"alpha " + std::to_string(alpha) + " -> " + to_string(h), g, job(b, g), job(b, h)});
        }
      }
      break;
    }
    case CheckKind::LamOverride: {
      const std::vector<BaseMonomial> base = default_lambda(b, fl);
      const BaseMonomial det = lambda_determinant(base);
      for (int s = 0; s < spec.samples; ++s) {
        std::vector<BaseMonomial> diag(base.size());
        BaseMonomial rest;
        for (std::size_t i = 1; i < diag.size(); ++i) {
          diag[i] = {uniform(-2, 2), uniform(-2, 2), 0, 0};
          if (fl == Flavor::Infinity) {
            const int e = uniform(-1, 1);
            diag[i].u = e;
            diag[i].v = -e;
          }
          rest = rest * diag[i];
        }
        diag[0] = det * rest.inverse();
        std::string desc = "Lambda = diag(";
        for (std::size_t i = 0; i < diag.size(); ++i) desc += (i ? ", " : "") + to_string(diag[i]);
        desc += ")";
        for (const auto& g : grid) pending.push_back({desc, g, job(b, g), Job{b, fl, g, diag}});
      }
      break;
    }
  }

  std::vector<Job> jobs;
  for (const auto& p : pending) {
    jobs.push_back(p.left);
    if (p.right) jobs.push_back(*p.right);
  }
  const auto counts = run_jobs(jobs, spec.prime, spec.options);

  CheckReport report;
  report.check = spec.check;
  for (const auto& p : pending) {
    CheckCase c{p.move, p.point, counts.at(p.left.key()), p.right ? counts.at(p.right->key()) : 0};
    report.passed = report.passed && c.left == c.right;
    report.cases.push_back(std::move(c));
  }
  return report;
}

namespace {

nlohmann::json point_json(const GridPoint& g) {
  nlohmann::json j{{"lam", g.lam}, {"mu", g.mu}};
  if (g.u) j["U"] = *g.u;
  if (g.v) j["V"] = *g.v;
  return j;
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"move", c.move}, {"point", point_json(c.point)}, {"left", c.left}, {"right", c.right}});
  return {{"check", check_name(r.check)}, {"passed", r.passed}, {"cases", cases}};
}

const std::vector<TableRow>& knot_table() {
  static const std::vector<TableRow> rows = {
      {"m72", {"3 3 -2 3 2 1 1 2 -1", "3 3 -2 3 2 -1 2 1 1"}, 2, 1, {0, 5}},
      {"m76", {"1 -2 1 -2 -3 2 3 3 3", "1 -2 1 -2 3 3 3 2 -3"}, 2, 1, {5, 0}},
      {"9_44", {"-3 1 2 -3 -2 3 1 -2 -3", "-2 -3 2 1 2 -3 -2 1 -2", "-2 1 -2 -3 2 1 2 -3 -2"}, 2, 1, {5, 0, 0}},
      {"9_48", {"-2 3 3 2 -1 2 -3 2 1 1 -2", "2 3 3 2 -1 -2 -2 -3 2 1 1"}, 2, 1, {4, 0}},
      {"m10_132", {"3 -2 -2 3 3 2 -3 -1 2 1 1", "3 -2 -2 3 3 2 -3 1 1 2 -1"}, 1, 1, {0, 1}},
      {"10_136", {"-1 2 -1 2 3 3 -2 1 -2 -3 2", "-2 3 -2 -1 -2 3 -2 1 1 1 3"}, 2, 1, {5, 0}},
      {"m10_140", {"1 1 -2 1 2 -1 -1 -3 2 3 3", "1 1 -2 1 2 -1 -1 3 3 2 -3"}, 2, 1, {1, 2}},
      {"m10_161", {"-1 2 1 1 1 2 2 1 1 2 -3", "2 -1 2 2 1 3 3 2 2 2 -1 2 -3"}, 1, 1, {0, 1}},
      {"m10_145", {"-2 3 3 2 -1 2 1 3 2 2 1 -4", "3 2 1 -3 -4 -2 -3 1 2 2 1 3 4 4"}, 1, 1, {0, 1}},
      {"12n591", {"3 2 3 2 -1 3 2 1 3 2 1 2 1 -4", "-2 -3 -1 -2 4 3 4 3 2 1 2 1 2 1 4 3 4 3"}, 1, 1, {0, 1}},
  };
  return rows;
}

bool TableRowReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const TableEntry& e) { return e.passed(); });
}

bool TableReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRowReport& r) { return r.passed(); });
}

TableReport reproduce_table(std::uint32_t prime, const std::vector<std::string>& rows, const CountOptions& options) {
  if (prime != 3) throw InvalidInput("the table lists counts over Z/3 only");
  for (const auto& name : rows)
    if (std::none_of(knot_table().begin(), knot_table().end(), [&](const TableRow& r) { return r.name == name; }))
      throw InvalidInput("unknown table row '" + name + "'");

  TableReport report;
  for (const auto& row : knot_table()) {
    if (!rows.empty() && std::find(rows.begin(), rows.end(), row.name) == rows.end()) continue;
    TableRowReport rr{row, {}};
    for (std::size_t k = 0; k < row.braids.size(); ++k) {
      const BraidWord b = parse_braid(row.braids[k]);
      TableEntry e;
      e.braid = row.braids[k];
      e.strands = b.strands();
      e.split = default_split(b);
      e.expected = row.expected[k];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        e.computed = augmentation_number(b, Flavor::Hat, prime, row.lam, row.mu, std::nullopt, e.split, options).count;
      } catch (const BudgetExceeded& x) {
        e.error = x.what();
      }
      e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rr.entries.push_back(std::move(e));
    }
    report.rows.push_back(std::move(rr));
  }
  return report;
}

nlohmann::json to_json(const TableReport& r, bool with_times) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : row.entries) {
      nlohmann::json j{{"braid", e.braid}, {"strands", e.strands}, {"expected", e.expected}, {"passed", e.passed()}};
      j["split"] = e.split ? nlohmann::json(*e.split) : nlohmann::json(nullptr);
      j["computed"] = e.computed ? nlohmann::json(*e.computed) : nlohmann::json(nullptr);
      if (!e.error.empty()) j["error"] = e.error;
      if (with_times) j["seconds"] = e.seconds;
      entries.push_back(std::move(j));
    }
    rows.push_back({{"name", row.row.name},
                    {"lam", row.row.lam},
                    {"mu", row.row.mu},
                    {"passed", row.passed()},
                    {"entries", entries}});
  }
  return {{"prime", 3}, {"passed", r.passed()}, {"rows", rows}};
}

}  // namespace xverse
