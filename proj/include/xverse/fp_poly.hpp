#pragma once

// Sparse commutative polynomials over Z/p in at most kFpMaxVars variables,
// viewed as functions on F_p^n: exponents are reduced with x^p = x.

#include <array>
#include <cstdint>
#include <vector>

#include "xverse/ncpoly.hpp"
#include "xverse/prime_field.hpp"

namespace xverse {

constexpr int kFpMaxVars = 32;

using FpExps = std::array<std::uint8_t, kFpMaxVars>;

struct FpTerm {
  FpExps exps{};
  std::uint32_t coeff = 0;
};

class FpPoly {
 public:
  FpPoly() = default;

  const std::vector<FpTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Bit i set when variable i occurs.
  std::uint32_t mask() const noexcept { return mask_; }
  bool is_constant() const noexcept { return mask_ == 0; }
  std::uint32_t constant_term() const noexcept;

  static FpPoly constant(std::uint32_t c);
  static FpPoly variable(int v);
  /// Sorts, merges and reduces exponents; drops zero coefficients.
  static FpPoly from_terms(std::vector<FpTerm> terms, const PrimeField& f);

  std::uint32_t evaluate(const std::vector<std::uint32_t>& values, const PrimeField& f) const;

  bool operator==(const FpPoly& o) const noexcept;

 private:
  void refresh_mask() noexcept;
  std::vector<FpTerm> terms_;
  std::uint32_t mask_ = 0;
};

FpPoly add(const FpPoly& a, const FpPoly& b, const PrimeField& f);
FpPoly mul(const FpPoly& a, const FpPoly& b, const PrimeField& f);
FpPoly scale(const FpPoly& a, std::uint32_t c, const PrimeField& f);

/// Substitutes variable v := value.
FpPoly substitute_value(const FpPoly& p, int v, std::uint32_t value, const PrimeField& f);

/// Substitutes variable v := q (q must not contain v).
FpPoly substitute_poly(const FpPoly& p, int v, const FpPoly& q, const PrimeField& f);

/// Substitutes every variable v := images[v] at once.
FpPoly compose(const FpPoly& p, const std::vector<FpPoly>& images, const PrimeField& f);

/// Abelianizes and evaluates the scalar part: generators map to variables
/// by their position in vars.
FpPoly to_fp_poly(const NCPoly& p, const std::vector<Generator>& vars, const PrimeField& f, const Scalars& s);

}  // namespace xverse
