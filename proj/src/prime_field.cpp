#include "xverse/prime_field.hpp"

#include <string>

#include "xverse/error.hpp"

namespace xverse {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw InvalidInput("primes above " + std::to_string(kMaxPrime) + " are not supported");
}

std::uint32_t PrimeField::reduce(const mpz_class& x) const {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), p_));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw InvalidInput("nonunit specialization: 0 has no inverse");
  // Fermat; p is tiny.
  return pow(a, static_cast<std::int64_t>(p_) - 2);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::int64_t e) const {
  a %= p_;
  if (e < 0) {
    if (a == 0) throw InvalidInput("nonunit specialization: zero raised to a negative power");
    a = inv(a);
    e = -e;
  }
  std::uint32_t r = 1 % p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace xverse
