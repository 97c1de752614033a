#pragma once

// Commutative Laurent polynomials over Z in lambda, mu, U, V and auxiliary
// variables x_1, x_2, ... Terms are kept in lex order lambda > mu > U > V > x_1 > ...

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace xverse {

constexpr int kCommVars = 8;
constexpr int kLam = 0, kMu = 1, kU = 2, kV = 3, kX0 = 4;

using CommExp = std::array<std::int16_t, kCommVars>;

class CommPoly {
 public:
  using TermMap = std::map<CommExp, mpz_class, std::greater<CommExp>>;

  CommPoly() = default;
  static CommPoly constant(const mpz_class& c);
  static CommPoly var(int i, int e = 1);
  static CommPoly monomial(const mpz_class& c, const CommExp& e);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_constant() const;

  /// Largest / smallest exponent of variable v; 0 for the zero polynomial.
  int degree(int v) const;
  int min_degree(int v) const;
  int total_degree() const;
  bool uses(int v) const;

  /// Coefficient of v^d as a polynomial in the other variables.
  CommPoly coeff(int v, int d) const;
  CommPoly substitute(int v, const mpz_class& value) const;

  /// Componentwise minimum of exponents.
  CommExp min_exponents() const;
  CommPoly shifted(const CommExp& e) const;
  mpz_class content() const;

  /// Exact quotient this / d, or nullopt when d does not divide.
  std::optional<CommPoly> divide_exact(const CommPoly& d) const;

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }

  /// Names: L, m, U, V, x1, x2, ...
  std::string to_string() const;

 private:
  void add_term(const CommExp& e, const mpz_class& c);
  TermMap terms_;
};

/// Strips the monomial gcd (so all exponents are nonnegative and some
/// exponent of each variable is zero), removes integer content and makes the
/// lex-leading coefficient positive.
CommPoly normalize_up_to_unit(const CommPoly& p);

/// Parses L, m, U, V, x1.. with ^ exponents; for tests and the CLI.
CommPoly parse_comm_poly(const std::string& text);

/// Sylvester resultant in variable v by fraction-free elimination, then
/// normalize_up_to_unit. Throws InvalidInput when both inputs are constant in v.
CommPoly sylvester_resultant(const CommPoly& f, const CommPoly& g, int v);

/// Determinant of the Sylvester matrix without normalization (inputs must have
/// nonnegative exponents).
CommPoly sylvester_determinant(const CommPoly& f, const CommPoly& g, int v);

}  // namespace xverse
