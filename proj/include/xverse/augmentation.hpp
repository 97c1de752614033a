#pragma once

// Augmentation numbers: the number of points over Z/p of the abelianized
// degree-0 presentation at fixed values of lambda, mu, U, V.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xverse/abelian.hpp"
#include "xverse/fp_poly.hpp"
#include "xverse/ht0.hpp"
#include "xverse/kernels.hpp"

namespace xverse {

constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// XVERSE_BUDGET if set to a positive integer, else kDefaultBudget.
std::uint64_t default_budget();

struct AugQuery {
  Ht0Presentation presentation;
  std::uint32_t prime = 3;
  std::uint32_t lam0 = 1;
  std::uint32_t mu0 = 1;
  /// Hat fixes (U, V) = (0, 1) and double-hat (0, 0); infinity and minus
  /// default to (1, 1). Infinity needs both nonzero.
  std::optional<std::uint32_t> u0;
  std::optional<std::uint32_t> v0;
};

struct CountOptions {
  bool linear_elimination = true;
  /// false: one exhaustive pass over every variable, nothing else.
  bool pruning = true;
  int threads = 0;           // 0: hardware concurrency
  std::uint64_t budget = 0;  // 0: default_budget()
  Kernel kernel = Kernel::Auto;
  /// Largest p^k handed to the exhaustive kernel at a leaf.
  std::uint64_t leaf_assignments = 4096;
};

struct AugResult {
  std::uint64_t count = 0;
  std::uint64_t assignments_tested = 0;  // kernel evaluations plus search nodes
  double elapsed_seconds = 0;
  int variables = 0;
  int relations = 0;
  std::string kernel;
};

/// Scalar values for a flavor; validates p, lambda0, mu0 and the U0, V0
/// rules stated on AugQuery.
Scalars flavor_scalars(Flavor flavor, std::uint32_t prime, std::uint32_t lam0, std::uint32_t mu0,
                       std::optional<std::uint32_t> u0 = std::nullopt, std::optional<std::uint32_t> v0 = std::nullopt);
Scalars query_scalars(const AugQuery& q);

AugResult count_augmentations(const AugQuery& q, const CountOptions& options = {});
AugResult count_augmentations(const AbelianPresentation& p, const CountOptions& options = {});

/// Counts common zeros in F_p^nvars of an abelian system.
AugResult count_system(const std::vector<FpPoly>& system, int nvars, const PrimeField& f,
                       const CountOptions& options = {});

/// Builds the abelianized presentation directly (split after `split` letters
/// when given) and counts.
AugResult augmentation_number(const BraidWord& b, Flavor flavor, std::uint32_t prime, std::uint32_t lam0,
                              std::uint32_t mu0, std::optional<std::uint32_t> u0 = std::nullopt,
                              std::optional<std::size_t> split = std::nullopt, const CountOptions& options = {},
                              std::optional<std::uint32_t> v0 = std::nullopt);

nlohmann::json to_json(const AugResult& r);

}  // namespace xverse
