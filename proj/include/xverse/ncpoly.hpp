#pragma once

// Noncommutative polynomials over Z[lambda^{+-1}, mu^{+-1}][U, V] in the
// free algebra on the DGA generators a, b, c, d, e, f.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

#include "xverse/prime_field.hpp"

namespace xverse {

enum class Flavor { Minus, Hat, DoubleHat, Infinity };

std::string_view flavor_name(Flavor f) noexcept;
Flavor parse_flavor(std::string_view text);

/// lambda^lam * mu^mu * U^u * V^v. All exponents are signed; U and V are
/// only allowed negative exponents in the infinity flavor.
struct BaseMonomial {
  int lam = 0;
  int mu = 0;
  int u = 0;
  int v = 0;

  auto operator<=>(const BaseMonomial&) const = default;

  BaseMonomial operator*(const BaseMonomial& o) const noexcept {
    return {lam + o.lam, mu + o.mu, u + o.u, v + o.v};
  }
  BaseMonomial inverse() const noexcept { return {-lam, -mu, -u, -v}; }
  bool is_one() const noexcept { return lam == 0 && mu == 0 && u == 0 && v == 0; }
};

enum class Family : std::uint8_t { A = 0, B = 1, C = 2, D = 3, E = 4, F = 5 };

char family_letter(Family f) noexcept;
int family_degree(Family f) noexcept;

/// A free generator x_{row,col} of family a..f. Packed so that the integer
/// order is (family, row, col).
class Generator {
 public:
  constexpr Generator() = default;
  Generator(Family family, int row, int col);

  static Generator a(int i, int j) { return {Family::A, i, j}; }
  static Generator b(int i, int j) { return {Family::B, i, j}; }
  static Generator c(int i, int j) { return {Family::C, i, j}; }
  static Generator d(int i, int j) { return {Family::D, i, j}; }
  static Generator e(int i, int j) { return {Family::E, i, j}; }
  static Generator f(int i, int j) { return {Family::F, i, j}; }

  Family family() const noexcept { return static_cast<Family>(code_ >> 16); }
  int row() const noexcept { return static_cast<int>((code_ >> 8) & 0xff); }
  int col() const noexcept { return static_cast<int>(code_ & 0xff); }
  int degree() const noexcept { return family_degree(family()); }
  std::uint32_t code() const noexcept { return code_; }

  auto operator<=>(const Generator&) const = default;

  std::string to_string() const;

 private:
  std::uint32_t code_ = 0;
};

using Word = std::vector<Generator>;

struct Term {
  mpz_class coeff;
  BaseMonomial base;
  Word word;
};

/// Canonical term order: word length, then word (lexicographic on
/// generators), then base exponent tuple.
bool term_key_less(const Term& x, const Term& y) noexcept;
bool term_key_equal(const Term& x, const Term& y) noexcept;

/// Element of the free algebra in canonical form: sorted by term_key_less,
/// no repeated keys, no zero coefficients.
class NCPoly {
 public:
  NCPoly() = default;
  /// Normalizes the given terms.
  explicit NCPoly(std::vector<Term> terms);

  static NCPoly constant(long c);
  static NCPoly scalar(const mpz_class& c, BaseMonomial base);
  static NCPoly monomial(BaseMonomial base) { return scalar(1, base); }
  static NCPoly gen(Generator g);
  static NCPoly word(mpz_class c, BaseMonomial base, Word w);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Degree of the first term; -1 for zero.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// True when no term contains a generator.
  bool is_scalar() const noexcept;
  bool only_family(Family f) const noexcept;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  /// Multiplies every term by c * base (scalars are central).
  NCPoly scaled(const mpz_class& c, BaseMonomial base) const;

  bool operator==(const NCPoly& o) const;

  std::string to_string() const;

  /// Re-establishes canonical form after direct term manipulation.
  static std::vector<Term> normalize(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

std::string to_string(const BaseMonomial& m);

/// Parses the plain-text form produced by NCPoly::to_string:
/// integer coefficients, L, m, U, V with optional ^exponent, and generators
/// such as a12, c11 or a{10,2}, joined by '*', added/subtracted.
NCPoly parse_ncpoly(std::string_view text);

/// Substitutions: hat sets U=0,V=1; double-hat sets U=V=0; infinity
/// rewrites lambda -> lambda (U/V)^{-(sl+1)/2} and requires odd sl;
/// minus is the identity.
NCPoly specialize(const NCPoly& p, Flavor flavor, int sl);

struct Scalars {
  std::uint32_t lam = 1;
  std::uint32_t mu = 1;
  std::uint32_t u = 0;
  std::uint32_t v = 1;
};

/// Abelianized evaluation over Z/p. value_of maps a generator to a residue.
std::uint32_t evaluate_abelian(const NCPoly& p, const std::function<std::uint32_t(Generator)>& value_of,
                               const PrimeField& field, const Scalars& s);
std::uint32_t evaluate_abelian(const NCPoly& p, const std::map<Generator, std::uint32_t>& assign,
                               const PrimeField& field, const Scalars& s);

/// Evaluates the scalar part lambda^a mu^b U^c V^d * coeff in Z/p.
std::uint32_t evaluate_scalar(const mpz_class& coeff, const BaseMonomial& base, const PrimeField& field,
                              const Scalars& s);

/// op(x1...xk) = (-1)^{sum_{i<j}|xi||xj|} xk...x1, extended linearly.
NCPoly op_involution(const NCPoly& p);

nlohmann::json to_json(const NCPoly& p);
NCPoly ncpoly_from_json(const nlohmann::json& j);

/// n x n matrix of NCPoly entries, indexed from 1.
class GenMatrix {
 public:
  GenMatrix() = default;
  explicit GenMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  static GenMatrix identity(int n);
  static GenMatrix diagonal(std::span<const BaseMonomial> diag);

  int n() const noexcept { return n_; }
  NCPoly& at(int i, int j) { return entries_[idx(i, j)]; }
  const NCPoly& at(int i, int j) const { return entries_[idx(i, j)]; }

  GenMatrix& operator+=(const GenMatrix& o);
  GenMatrix& operator-=(const GenMatrix& o);
  friend GenMatrix operator+(GenMatrix a, const GenMatrix& b) { return a += b; }
  friend GenMatrix operator-(GenMatrix a, const GenMatrix& b) { return a -= b; }
  friend GenMatrix operator*(const GenMatrix& a, const GenMatrix& b);
  /// Entrywise left scalar multiple s * M.
  friend GenMatrix operator*(const NCPoly& s, const GenMatrix& m);
  bool operator==(const GenMatrix& o) const = default;

  GenMatrix map(const std::function<NCPoly(const NCPoly&)>& f) const;
  bool is_zero() const;

 private:
  std::size_t idx(int i, int j) const;
  int n_ = 0;
  std::vector<NCPoly> entries_;
};

nlohmann::json to_json(const GenMatrix& m);

}  // namespace xverse
