// Built with -mavx2; only reached after a runtime CPU check.

#include "xverse/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <array>

namespace xverse {

namespace {

// Lanes cover every assignment of the low variables; high variables are
// scalar per block. Residues and their products stay below 2^16.
constexpr int kLanes = 16;
constexpr int kMaxVecs = 16;

struct Packed {
  __m256i v;
};

struct Mod {
  __m256i p, magic;

  explicit Mod(std::uint32_t prime)
      : p(_mm256_set1_epi16(static_cast<short>(prime))),
        magic(_mm256_set1_epi16(static_cast<short>(65536u / prime))) {}

  __m256i reduce_once(__m256i r) const { return _mm256_min_epu16(r, _mm256_sub_epi16(r, p)); }

  __m256i mul(__m256i a, __m256i b) const {
    const __m256i x = _mm256_mullo_epi16(a, b);
    const __m256i q = _mm256_mulhi_epu16(x, magic);
    return reduce_once(_mm256_sub_epi16(x, _mm256_mullo_epi16(q, p)));
  }

  __m256i add(__m256i a, __m256i b) const { return reduce_once(_mm256_add_epi16(a, b)); }
};

}  // namespace

std::uint64_t count_zeros_avx2(const KernelSystem& s) {
  const std::uint32_t p = s.p;
  const int n = s.nvars;
  int m = 0;
  std::uint32_t lanes = 1;
  while (m < n && lanes * p <= static_cast<std::uint32_t>(kLanes * kMaxVecs)) {
    lanes *= p;
    ++m;
  }
  const int nvec = static_cast<int>((lanes + kLanes - 1) / kLanes);
  const Mod mod(p);

  // Per-lane powers of the low variables: lowpw[(var * p + exp) * nvec + k].
  std::vector<Packed> lowpw(static_cast<std::size_t>(m) * p * static_cast<std::size_t>(nvec));
  {
    alignas(32) std::array<std::uint16_t, kLanes> buf{};
    for (int v = 0; v < m; ++v)
      for (std::uint32_t e = 0; e < p; ++e)
        for (int k = 0; k < nvec; ++k) {
          for (int l = 0; l < kLanes; ++l) {
            std::uint32_t idx = static_cast<std::uint32_t>(k * kLanes + l), x = 0;
            if (idx < lanes) {
              for (int j = 0; j < v; ++j) idx /= p;
              x = idx % p;
            }
            std::uint32_t r = 1;
            for (std::uint32_t t = 0; t < e; ++t) r = r * x % p;
            buf[static_cast<std::size_t>(l)] = static_cast<std::uint16_t>(r);
          }
          lowpw[(static_cast<std::size_t>(v) * p + e) * static_cast<std::size_t>(nvec) + static_cast<std::size_t>(k)] =
              Packed{_mm256_load_si256(reinterpret_cast<const __m256i*>(buf.data()))};
        }
  }
  __m256i valid[kMaxVecs];
  for (int k = 0; k < nvec; ++k) {
    alignas(32) std::array<std::uint16_t, kLanes> buf{};
    for (int l = 0; l < kLanes; ++l)
      buf[static_cast<std::size_t>(l)] = static_cast<std::uint32_t>(k * kLanes + l) < lanes ? 0xFFFF : 0;
    valid[static_cast<std::size_t>(k)] = _mm256_load_si256(reinterpret_cast<const __m256i*>(buf.data()));
  }

  std::vector<std::uint32_t> spow(static_cast<std::size_t>(p) * p);
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint32_t r = 1;
    for (std::uint32_t e = 0; e < p; ++e) {
      spow[x * p + e] = r;
      r = r * x % p;
    }
  }

  const __m256i zero = _mm256_setzero_si256();
  std::vector<std::uint32_t> high(static_cast<std::size_t>(n - m), 0);
  std::uint64_t count = 0;
  __m256i alive[kMaxVecs], acc[kMaxVecs];
  while (true) {
    for (int k = 0; k < nvec; ++k) alive[static_cast<std::size_t>(k)] = valid[static_cast<std::size_t>(k)];
    std::uint32_t begin = 0;
    bool any = true;
    for (std::size_t i = 0; i < s.polys() && any; ++i) {
      for (int k = 0; k < nvec; ++k) acc[static_cast<std::size_t>(k)] = zero;
      for (std::uint32_t t = begin; t < s.poly_end[i]; ++t) {
        const auto& term = s.terms[t];
        std::uint32_t c = term.coeff;
        for (std::uint32_t f = 0; f < term.nfactors && c; ++f) {
          const auto& fac = s.factors[term.first + f];
          if (fac.var >= m) c = c * spow[high[static_cast<std::size_t>(fac.var - m)] * p + fac.exp] % p;
        }
        if (!c) continue;
        const __m256i cv = _mm256_set1_epi16(static_cast<short>(c));
        for (int k = 0; k < nvec; ++k) {
          __m256i x = cv;
          for (std::uint32_t f = 0; f < term.nfactors; ++f) {
            const auto& fac = s.factors[term.first + f];
            if (fac.var < m)
              x = mod.mul(x, lowpw[(static_cast<std::size_t>(fac.var) * p + fac.exp) * static_cast<std::size_t>(nvec) +
                                   static_cast<std::size_t>(k)].v);
          }
          acc[static_cast<std::size_t>(k)] = mod.add(acc[static_cast<std::size_t>(k)], x);
        }
      }
      __m256i live = zero;
      for (int k = 0; k < nvec; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        alive[kk] = _mm256_and_si256(alive[kk], _mm256_cmpeq_epi16(acc[kk], zero));
        live = _mm256_or_si256(live, alive[kk]);
      }
      any = !_mm256_testz_si256(live, live);
      begin = s.poly_end[i];
    }
    if (any)
      for (int k = 0; k < nvec; ++k)
        count += static_cast<std::uint64_t>(
                     __builtin_popcount(static_cast<unsigned>(_mm256_movemask_epi8(alive[static_cast<std::size_t>(k)])))) /
                 2;

    int j = 0;
    while (j < n - m && ++high[static_cast<std::size_t>(j)] == p) high[static_cast<std::size_t>(j++)] = 0;
    if (j == n - m) break;
  }
  return count;
}

}  // namespace xverse

#else

#include "xverse/error.hpp"

namespace xverse {

std::uint64_t count_zeros_avx2(const KernelSystem&) { throw InvalidInput("built without AVX2 support"); }

}  // namespace xverse

#endif
