#include "xverse/augmentation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "xverse/error.hpp"

namespace xverse {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("XVERSE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw InvalidInput(std::string("XVERSE_BUDGET must be a positive integer, got ") + env);
  }
  return kDefaultBudget;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidInput("augmentation count does not fit in 64 bits");
  return r;
}

std::uint64_t checked_pow(std::uint64_t p, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = checked_mul(r, p);
  return r;
}

std::uint64_t saturating_pow(std::uint64_t p, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

constexpr std::size_t kGrowthFloor = 4096;

class Counter {
 public:
  Counter(const PrimeField& f, const CountOptions& o, Kernel k, std::uint64_t budget)
      : f_(f), opt_(o), kernel_(k), budget_(budget) {}

  std::uint64_t spent() const { return work_.load(); }

  std::uint64_t run(std::vector<FpPoly> sys, std::uint32_t free, int threads) {
    if (!opt_.pruning) {
      if (!simplify(sys)) return 0;
      std::uint32_t used = 0;
      for (const auto& r : sys) used |= r.mask();
      const KernelSystem ks = compile_system(sys, used, f_.p());
      charge(ks.assignments());
      return checked_mul(count_zeros(ks, kernel_), checked_pow(f_.p(), std::popcount(free & ~used)));
    }
    return node(std::move(sys), free, threads);
  }

 private:
  void charge(std::uint64_t n) {
    const std::uint64_t before = work_.fetch_add(n);
    if (n > budget_ || before > budget_ - n) throw BudgetExceeded(budget_, before > UINT64_MAX - n ? UINT64_MAX : before + n);
  }

  // Drops zero relations; false when some relation is a nonzero constant.
  static bool simplify(std::vector<FpPoly>& sys) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      if (sys[i].is_zero()) continue;
      if (sys[i].is_constant()) return false;
      if (w != i) sys[w] = std::move(sys[i]);
      ++w;
    }
    sys.resize(w);
    return true;
  }

  // A relation c*x + rest with c constant and x absent from rest.
  struct Linear {
    std::size_t rel;
    int var;
    std::uint32_t coeff;
  };

  // Among all linear solves, the one whose substitution creates the fewest
  // terms; none when every choice would grow the system past the cap.
  static std::optional<Linear> find_linear(const std::vector<FpPoly>& sys) {
    std::size_t total = 0;
    for (const auto& r : sys) total += r.size();
    const std::size_t cap = std::max<std::size_t>(kGrowthFloor, 2 * total);
    std::optional<Linear> best;
    std::size_t best_cost = 0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const auto& terms = sys[i].terms();
      for (const auto& t : terms) {
        int var = -1, deg = 0;
        for (int v = 0; v < kFpMaxVars; ++v)
          if (t.exps[static_cast<std::size_t>(v)]) {
            var = v;
            deg += t.exps[static_cast<std::size_t>(v)];
          }
        if (deg != 1) continue;
        int occurrences = 0;
        for (const auto& u : terms) occurrences += u.exps[static_cast<std::size_t>(var)] != 0;
        if (occurrences != 1) continue;
        const std::size_t cost = substitution_cost(sys, i, var, cap);
        if (cost <= cap && (!best || cost < best_cost)) {
          best = Linear{i, var, t.coeff};
          best_cost = cost;
        }
      }
    }
    return best;
  }

  // Upper bound on the term count after substituting for var from sys[rel].
  static std::size_t substitution_cost(const std::vector<FpPoly>& sys, std::size_t rel, int var, std::size_t cap) {
    const std::size_t width = sys[rel].size() - 1;
    std::size_t cost = 0;
    for (std::size_t j = 0; j < sys.size() && cost <= cap; ++j) {
      if (j == rel) continue;
      if (!((sys[j].mask() >> var) & 1u)) {
        cost += sys[j].size();
        continue;
      }
      for (const auto& t : sys[j].terms()) {
        std::size_t n = 1;
        for (unsigned e = t.exps[static_cast<std::size_t>(var)]; e && n <= cap; --e) n *= std::max<std::size_t>(width, 1);
        cost += n;
      }
    }
    return cost;
  }

  // Solves c*x + rest = 0 for x and substitutes everywhere.
  bool eliminate(std::vector<FpPoly>& sys, std::uint32_t& free, const Linear& l) {
    FpPoly rest = add(sys[l.rel], scale(FpPoly::variable(l.var), f_.neg(l.coeff), f_), f_);
    const FpPoly value = scale(rest, f_.neg(f_.inv(l.coeff)), f_);
    sys.erase(sys.begin() + static_cast<std::ptrdiff_t>(l.rel));
    for (auto& r : sys) r = substitute_poly(r, l.var, value, f_);
    free &= ~(1u << l.var);
    return simplify(sys);
  }

  std::uint64_t node(std::vector<FpPoly> sys, std::uint32_t free, int threads) {
    charge(1);
    if (!simplify(sys)) return 0;
    if (opt_.linear_elimination)
      while (auto l = find_linear(sys))
        if (!eliminate(sys, free, *l)) return 0;

    std::uint32_t used = 0;
    for (const auto& r : sys) used |= r.mask();
    const std::uint64_t spare = checked_pow(f_.p(), std::popcount(free & ~used));
    if (sys.empty()) return spare;

    const int k = std::popcount(used);
    if (saturating_pow(f_.p(), k) <= opt_.leaf_assignments) {
      const KernelSystem ks = compile_system(sys, used, f_.p());
      charge(ks.assignments());
      return checked_mul(count_zeros(ks, kernel_), spare);
    }

    // Branch on the roots of a univariate relation if there is one, else on
    // every value of the variable occurring in the most relations.
    int var = -1;
    std::vector<std::uint32_t> values;
    for (const auto& r : sys)
      if (std::has_single_bit(r.mask())) {
        var = std::countr_zero(r.mask());
        std::vector<std::uint32_t> x(kFpMaxVars, 0);
        for (std::uint32_t a = 0; a < f_.p(); ++a) {
          x[static_cast<std::size_t>(var)] = a;
          if (r.evaluate(x, f_) == 0) values.push_back(a);
        }
        break;
      }
    if (var < 0) {
      int best = -1;
      for (int v = 0; v < kFpMaxVars; ++v) {
        if (!(used >> v & 1u)) continue;
        int n = 0;
        for (const auto& r : sys) n += (r.mask() >> v) & 1u;
        if (n > best) {
          best = n;
          var = v;
        }
      }
      for (std::uint32_t a = 0; a < f_.p(); ++a) values.push_back(a);
    }

    const std::uint32_t child_free = free & used & ~(1u << var);
    auto child = [&](std::uint32_t a) {
      std::vector<FpPoly> next;
      next.reserve(sys.size());
      for (const auto& r : sys) next.push_back(substitute_value(r, var, a, f_));
      return node(std::move(next), child_free, 1);
    };

    std::uint64_t total = 0;
    if (threads > 1 && values.size() > 1) {
      std::vector<std::uint64_t> part(values.size(), 0);
      std::vector<std::exception_ptr> errors(values.size());
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), values.size());
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < values.size();) {
            try {
              part[i] = child(values[i]);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      for (auto& t : pool) t.join();
      for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
      for (auto c : part) total += c;
    } else {
      for (auto a : values) total += child(a);
    }
    return checked_mul(total, spare);
  }

  const PrimeField& f_;
  CountOptions opt_;
  Kernel kernel_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t> work_{0};
};

std::uint32_t nonzero_residue(std::uint32_t x, const PrimeField& f, const char* what) {
  const std::uint32_t r = x % f.p();
  if (r == 0) throw InvalidInput(std::string(what) + " must be nonzero in Z/" + std::to_string(f.p()));
  return r;
}

}  // namespace

AugResult count_system(const std::vector<FpPoly>& system, int nvars, const PrimeField& f, const CountOptions& options) {
  if (nvars < 0 || nvars > kFpMaxVars) throw InvalidInput("variable count out of range");
  const auto start = std::chrono::steady_clock::now();
  const Kernel kernel = resolve_kernel(options.kernel);
  const std::uint64_t budget = options.budget ? options.budget : default_budget();
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  const std::uint32_t all = nvars == kFpMaxVars ? ~0u : (1u << nvars) - 1;
  for (const auto& r : system)
    if (r.mask() & ~all) throw InvalidInput("relation uses a variable beyond nvars");

  Counter counter(f, options, kernel, budget);
  AugResult out;
  out.count = counter.run(system, all, threads);
  out.assignments_tested = counter.spent();
  out.variables = nvars;
  out.relations = static_cast<int>(system.size());
  out.kernel = kernel_name(kernel);
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Scalars flavor_scalars(Flavor flavor, std::uint32_t prime, std::uint32_t lam0, std::uint32_t mu0,
                       std::optional<std::uint32_t> u0, std::optional<std::uint32_t> v0) {
  if (!is_prime(prime)) throw InvalidInput("p = " + std::to_string(prime) + " is not prime");
  if (prime > PrimeField::kMaxPrime)
    throw InvalidInput("p = " + std::to_string(prime) + " exceeds " + std::to_string(PrimeField::kMaxPrime));
  const PrimeField f(prime);
  Scalars s;
  s.lam = nonzero_residue(lam0, f, "lambda0");
  s.mu = nonzero_residue(mu0, f, "mu0");
  switch (flavor) {
    case Flavor::Hat:
    case Flavor::DoubleHat:
      s.u = 0;
      s.v = flavor == Flavor::Hat ? 1 : 0;
      if ((u0 && *u0 % prime != s.u) || (v0 && *v0 % prime != s.v))
        throw InvalidInput("U0, V0 are fixed to (" + std::to_string(s.u) + ", " + std::to_string(s.v) + ") in the " +
                           std::string(flavor_name(flavor)) + " flavor");
      break;
    case Flavor::Infinity:
      s.u = nonzero_residue(u0.value_or(1), f, "U0");
      s.v = nonzero_residue(v0.value_or(1), f, "V0");
      break;
    case Flavor::Minus:
      s.u = u0.value_or(1) % prime;
      s.v = v0.value_or(1) % prime;
      break;
  }
  return s;
}

Scalars query_scalars(const AugQuery& q) {
  return flavor_scalars(q.presentation.flavor, q.prime, q.lam0, q.mu0, q.u0, q.v0);
}

AugResult count_augmentations(const AbelianPresentation& p, const CountOptions& options) {
  AugResult out = count_system(p.relations, static_cast<int>(p.variables.size()), PrimeField(p.prime), options);
  out.relations = static_cast<int>(p.relations.size());
  return out;
}

AugResult count_augmentations(const AugQuery& q, const CountOptions& options) {
  const Scalars s = query_scalars(q);
  return count_augmentations(abelianize(q.presentation, PrimeField(q.prime), s), options);
}

AugResult augmentation_number(const BraidWord& b, Flavor flavor, std::uint32_t prime, std::uint32_t lam0,
                              std::uint32_t mu0, std::optional<std::uint32_t> u0, std::optional<std::size_t> split,
                              const CountOptions& options, std::optional<std::uint32_t> v0) {
  const Scalars s = flavor_scalars(flavor, prime, lam0, mu0, u0, v0);
  const PrimeField f(prime);
  return count_augmentations(split ? abelian_relations_cut(b, *split, flavor, f, s) : abelian_relations(b, flavor, f, s),
                             options);
}

nlohmann::json to_json(const AugResult& r) {
  return nlohmann::json{{"count", r.count},
                        {"assignments_tested", r.assignments_tested},
                        {"elapsed_seconds", r.elapsed_seconds},
                        {"variables", r.variables},
                        {"relations", r.relations},
                        {"kernel", r.kernel}};
}

}  // namespace xverse
