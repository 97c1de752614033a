#pragma once

// Exhaustive zero counting for small systems over Z/p: every assignment of
// the system's variables is tested and those where all polynomials vanish are
// counted. One scalar reference kernel and one AVX2 kernel; they must agree.

#include <cstdint>
#include <string>
#include <vector>

#include "xverse/fp_poly.hpp"

namespace xverse {

struct KernelSystem {
  struct Factor {
    std::uint8_t var;
    std::uint8_t exp;
  };
  struct Term {
    std::uint16_t coeff;
    std::uint16_t nfactors;
    std::uint32_t first;  // index into factors
  };

  std::uint32_t p = 2;
  int nvars = 0;
  std::vector<Factor> factors;
  std::vector<Term> terms;
  std::vector<std::uint32_t> poly_end;  // terms of poly i are [poly_end[i-1], poly_end[i])

  std::size_t polys() const noexcept { return poly_end.size(); }
  /// p^nvars, saturating at UINT64_MAX.
  std::uint64_t assignments() const noexcept;
};

/// Packs polys over the variables set in mask, renumbered 0.. in bit order.
KernelSystem compile_system(const std::vector<FpPoly>& polys, std::uint32_t mask, std::uint32_t p);

enum class Kernel { Auto, Scalar, Avx2 };

bool avx2_available() noexcept;
/// Auto honors XVERSE_KERNEL=scalar|avx2, then the CPU. Requesting AVX2 on a
/// CPU without it throws InvalidInput.
Kernel resolve_kernel(Kernel requested);
std::string kernel_name(Kernel k);

std::uint64_t count_zeros_scalar(const KernelSystem& s);
std::uint64_t count_zeros_avx2(const KernelSystem& s);
std::uint64_t count_zeros(const KernelSystem& s, Kernel k);

}  // namespace xverse
