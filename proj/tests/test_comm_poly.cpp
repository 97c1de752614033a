#include "doctest.h"

#include <random>

#include "xverse/aug_poly.hpp"
#include "xverse/comm_poly.hpp"
#include "xverse/error.hpp"

using namespace xverse;

namespace {

CommPoly P(const char* s) { return parse_comm_poly(s); }
const CommPoly X = CommPoly::var(kX0);

CommPoly random_in_x(std::mt19937_64& rng, int deg, bool with_params) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 1);
  CommPoly p;
  for (int d = 0; d <= deg; ++d) {
    CommExp ex{};
    ex[kX0] = static_cast<std::int16_t>(d);
    if (with_params) {
      ex[kLam] = static_cast<std::int16_t>(e(rng));
      ex[kU] = static_cast<std::int16_t>(e(rng));
    }
    int k = c(rng);
    if (d == deg && k == 0) k = 1;
    p += CommPoly::monomial(k, ex);
    if (with_params && e(rng)) p += CommPoly::monomial(c(rng), CommExp{0, 1, 0, 0, static_cast<std::int16_t>(d)});
  }
  return p;
}

// Determinant by cofactor expansion along the first row.
CommPoly laplace(const std::vector<std::vector<CommPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return CommPoly::constant(1);
  CommPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<CommPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CommPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const CommPoly term = m[0][c] * laplace(minor);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

CommPoly sylvester_by_laplace(const CommPoly& f, const CommPoly& g) {
  const int m = f.degree(kX0), n = g.degree(kX0), N = m + n;
  std::vector<std::vector<CommPoly>> M(static_cast<std::size_t>(N), std::vector<CommPoly>(static_cast<std::size_t>(N)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(kX0, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeff(kX0, n - k);
  return laplace(M);
}

// Univariate gcd degree over Q.
int gcd_degree(const CommPoly& f, const CommPoly& g) {
  auto to_vec = [](const CommPoly& p) {
    std::vector<mpq_class> v(static_cast<std::size_t>(p.degree(kX0) + 1));
    for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e[kX0])] += mpq_class(c);
    return v;
  };
  auto trim = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  std::vector<mpq_class> a = to_vec(f), b = to_vec(g);
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const mpq_class q = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

TEST_CASE("comm poly basics") {
  const CommPoly a = P("L*m - 2*U^2*x1 + 3");
  CHECK(a.to_string() == "L*m - 2*U^2*x1 + 3");
  CHECK(P("L^-1*m + m^2") == CommPoly::monomial(1, CommExp{-1, 1}) + CommPoly::var(kMu, 2));
  CHECK(a.degree(kU) == 2);
  CHECK(a.total_degree() == 3);
  CHECK(a.coeff(kX0, 1) == P("-2*U^2"));
  CHECK(a.substitute(kU, 1) == P("L*m - 2*x1 + 3"));
  CHECK(normalize_up_to_unit(P("-4*L^2*m + 6*L*m^3")) == P("2*L - 3*m^2"));
  CHECK(normalize_up_to_unit(P("-L + 1")) == P("L - 1"));
  const CommPoly f = P("L*x1 + m"), g = P("x1^2 - U");
  auto q = (f * g).divide_exact(g);
  REQUIRE(q);
  CHECK(*q == f);
  CHECK_FALSE((f * g + CommPoly::constant(1)).divide_exact(g));
  CHECK_THROWS_AS(parse_comm_poly("L*"), ParseError);
}

TEST_CASE("resultant examples") {
  CHECK(sylvester_resultant(X - CommPoly::var(kLam), X - CommPoly::var(kMu), kX0) == P("L - m"));
  CHECK(sylvester_resultant(X * X - CommPoly::constant(1), X - CommPoly::constant(1), kX0).is_zero());
  CHECK_THROWS_AS(sylvester_resultant(P("L + 1"), P("m"), kX0), InvalidInput);
  // x^2 - L and x - m: m^2 - L
  CHECK(sylvester_resultant(X * X - CommPoly::var(kLam), X - CommPoly::var(kMu), kX0) == P("L - m^2"));
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const CommPoly f = random_in_x(rng, 1 + trial % 3, true), g = random_in_x(rng, 1 + (trial / 3) % 3, true);
    CHECK(sylvester_determinant(f, g, kX0) == sylvester_by_laplace(f, g));
  }
}

TEST_CASE("resultant vanishes exactly on a common root under specialization") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> val(-4, 4);
  int common = 0, generic = 0;
  for (int trial = 0; trial < 60; ++trial) {
    CommPoly f = random_in_x(rng, 1 + trial % 3, true), g = random_in_x(rng, 1 + (trial / 2) % 3, true);
    if (trial % 3 == 0) {
      const CommPoly root = X - CommPoly::constant(val(rng));
      f = f * root;
      g = g * root;
    }
    const CommPoly res = sylvester_determinant(f, g, kX0);
    for (int s = 0; s < 3; ++s) {
      const int lam = val(rng), mu = val(rng), u = val(rng);
      auto spec = [&](const CommPoly& p) { return p.substitute(kLam, lam).substitute(kMu, mu).substitute(kU, u); };
      const CommPoly fs = spec(f), gs = spec(g);
      if (fs.degree(kX0) != f.degree(kX0) || gs.degree(kX0) != g.degree(kX0)) continue;
      const CommPoly rs = spec(res);
      REQUIRE(rs.is_constant());
      CHECK(rs == sylvester_determinant(fs, gs, kX0));
      const bool shares = gcd_degree(fs, gs) > 0;
      CHECK(rs.is_zero() == shares);
      (shares ? common : generic)++;
    }
  }
  CHECK(common > 10);
  CHECK(generic > 10);
}

TEST_CASE("augmentation polynomial of the stabilized unknot") {
  const CommPoly unknot = normalize_up_to_unit(P("-1 - m*U + L + L*m"));
  const AugPolyResult r = augmentation_polynomial_index2(parse_braid("1"));
  CHECK(r.poly == unknot);
  CHECK_FALSE(r.squarefree_checked);
  CHECK(augmentation_polynomial_index2(parse_braid("-1")).poly == unknot);
}

TEST_CASE("augmentation polynomial of the trefoil") {
  const CommPoly expected = normalize_up_to_unit(
      P("L*m^4*U^3 - m^4*U^3 + L*m^3*U^2 - m^3*U^2 - 2*L*m^2*U^2 + 2*L*m^2*U + L*m*U + L*U - L^2*m - L^2"));
  const AugPolyResult r = augmentation_polynomial_index2(parse_braid("1 1 1"));
  CHECK(r.poly == expected);
  CHECK(r.variables_left == 1);
}

TEST_CASE("augmentation polynomial of the (2,5) torus knot") {
  const AugPolyResult r = augmentation_polynomial_index2(parse_braid("1 1 1 1 1"));
  CHECK(r.poly.degree(kU) >= 3);
  CHECK(r.poly ==
        P("L^3*m + L^3 - 2*L^2*m^6*U^4 - L^2*m^5*U^4 - L^2*m^5*U^3 - L^2*m^4*U^4 + 4*L^2*m^4*U^3 - 3*L^2*m^4*U^2 + "
          "2*L^2*m^3*U^3 - 2*L^2*m^3*U^2 + 2*L^2*m^2*U^3 - 2*L^2*m^2*U^2 - L^2*m*U^2 - L^2*U^2 + L*m^11*U^8 + "
          "L*m^10*U^7 - 2*L*m^9*U^7 + 2*L*m^9*U^6 - 2*L*m^8*U^6 + 2*L*m^8*U^5 + L*m^7*U^6 - 4*L*m^7*U^5 + "
          "3*L*m^7*U^4 + L*m^6*U^5 + L*m^6*U^4 + 2*L*m^5*U^4 - m^11*U^7 - m^10*U^6"));
  // every other eliminant is a multiple of the returned polynomial
  for (const auto& e : r.eliminants) CHECK(e.divide_exact(r.poly));
}

TEST_CASE("augmentation polynomial errors") {
  CHECK_THROWS_AS(augmentation_polynomial_index2(parse_braid("1 2", 3)), InvalidInput);
  CHECK_THROWS_AS(augmentation_polynomial_index2(parse_braid("1 1")), InvalidInput);
}
