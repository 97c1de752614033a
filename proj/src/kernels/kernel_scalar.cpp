#include <cstdlib>
#include <cstring>

#include "xverse/error.hpp"
#include "xverse/kernels.hpp"

namespace xverse {

std::uint64_t KernelSystem::assignments() const noexcept {
  std::uint64_t n = 1;
  for (int i = 0; i < nvars; ++i) {
    if (n > UINT64_MAX / p) return UINT64_MAX;
    n *= p;
  }
  return n;
}

KernelSystem compile_system(const std::vector<FpPoly>& polys, std::uint32_t mask, std::uint32_t p) {
  KernelSystem s;
  s.p = p;
  int index[kFpMaxVars];
  for (int i = 0; i < kFpMaxVars; ++i) index[i] = (mask >> i) & 1u ? s.nvars++ : -1;
  for (const auto& poly : polys) {
    if (poly.mask() & ~mask) throw StructuralError("polynomial uses a variable outside the kernel mask");
    for (const auto& t : poly.terms()) {
      KernelSystem::Term kt{static_cast<std::uint16_t>(t.coeff), 0, static_cast<std::uint32_t>(s.factors.size())};
      for (int i = 0; i < kFpMaxVars; ++i) {
        const auto e = t.exps[static_cast<std::size_t>(i)];
        if (!e) continue;
        s.factors.push_back({static_cast<std::uint8_t>(index[i]), e});
        ++kt.nfactors;
      }
      s.terms.push_back(kt);
    }
    s.poly_end.push_back(static_cast<std::uint32_t>(s.terms.size()));
  }
  return s;
}

std::uint64_t count_zeros_scalar(const KernelSystem& s) {
  const std::uint32_t p = s.p;
  const int n = s.nvars;
  // pw[(var * p + value) * p + exp]
  std::vector<std::uint16_t> pw(static_cast<std::size_t>(n) * p * p);
  for (int v = 0; v < n; ++v)
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint32_t acc = 1;
      for (std::uint32_t e = 0; e < p; ++e) {
        pw[(static_cast<std::size_t>(v) * p + x) * p + e] = static_cast<std::uint16_t>(acc);
        acc = acc * x % p;
      }
    }

  std::vector<std::uint32_t> digit(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    std::uint32_t begin = 0;
    for (std::size_t i = 0; i < s.polys() && ok; ++i) {
      std::uint32_t acc = 0;
      for (std::uint32_t t = begin; t < s.poly_end[i]; ++t) {
        const auto& term = s.terms[t];
        std::uint32_t v = term.coeff;
        for (std::uint32_t f = 0; f < term.nfactors && v; ++f) {
          const auto& fac = s.factors[term.first + f];
          v = v * pw[(static_cast<std::size_t>(fac.var) * p + digit[fac.var]) * p + fac.exp] % p;
        }
        acc += v;
        if (acc >= p) acc -= p;
      }
      ok = acc == 0;
      begin = s.poly_end[i];
    }
    if (ok) ++count;

    int k = 0;
    while (k < n && ++digit[static_cast<std::size_t>(k)] == p) digit[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  return count;
}

bool avx2_available() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernel resolve_kernel(Kernel requested) {
  if (requested == Kernel::Auto) {
    if (const char* env = std::getenv("XVERSE_KERNEL")) {
      if (std::strcmp(env, "scalar") == 0) requested = Kernel::Scalar;
      else if (std::strcmp(env, "avx2") == 0) requested = Kernel::Avx2;
      else if (*env && std::strcmp(env, "auto") != 0)
        throw InvalidInput(std::string("XVERSE_KERNEL must be scalar, avx2 or auto, got ") + env);
    }
  }
  if (requested == Kernel::Auto) return avx2_available() ? Kernel::Avx2 : Kernel::Scalar;
  if (requested == Kernel::Avx2 && !avx2_available()) throw InvalidInput("the AVX2 kernel is not supported on this CPU");
  return requested;
}

std::string kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Auto: return "auto";
    case Kernel::Scalar: return "scalar";
    case Kernel::Avx2: return "avx2";
  }
  return "?";
}

std::uint64_t count_zeros(const KernelSystem& s, Kernel k) {
  return resolve_kernel(k) == Kernel::Avx2 ? count_zeros_avx2(s) : count_zeros_scalar(s);
}

}  // namespace xverse
