#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace xverse {

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/p for small primes. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  /// Largest prime accepted; keeps products of two residues inside 16 bits,
  /// which the vector kernels rely on.
  static constexpr std::uint32_t kMaxPrime = 251;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t reduce(const mpz_class& x) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return (a * b) % p_; }

  /// Multiplicative inverse; throws InvalidInput for 0.
  std::uint32_t inv(std::uint32_t a) const;

  /// a^e for signed e; a zero base with a negative exponent throws
  /// InvalidInput("nonunit specialization").
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

 private:
  std::uint32_t p_;
};

}  // namespace xverse
