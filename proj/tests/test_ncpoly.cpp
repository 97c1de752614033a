#include "doctest.h"

#include "support.hpp"
#include "xverse/error.hpp"
#include "xverse/ncpoly.hpp"

using namespace xverse;

namespace {

NCPoly P(const char* s) { return parse_ncpoly(s); }
NCPoly G(Family f, int i, int j) { return NCPoly::gen(Generator(f, i, j)); }

}  // namespace

TEST_CASE("prime field") {
  CHECK(is_prime(2));
  CHECK(is_prime(251));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_THROWS_AS(PrimeField(4), InvalidInput);
  PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, -1) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(mpz_class("-100000000000000000000")) == f.reduce(mpz_class("-100000000000000000000") % 7 + 7));
  CHECK_THROWS_WITH_AS(f.pow(0, -2), doctest::Contains("nonunit"), InvalidInput);
}

TEST_CASE("product keeps word order") {
  const NCPoly a12 = G(Family::A, 1, 2), a21 = G(Family::A, 2, 1);
  const NCPoly p = a12 * a21;
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].word == Word{Generator::a(1, 2), Generator::a(2, 1)});
  CHECK_FALSE(p == a21 * a12);
  CHECK((P("L + m") * P("L - m")) == P("L^2 - m^2"));
  CHECK((G(Family::B, 1, 2) * G(Family::C, 1, 1)).degree() == 2);
}

TEST_CASE("canonical printing and parsing") {
  const NCPoly c = P("-1 - m*U + L*V + L*m");
  CHECK(c.to_string() == "-1 - m*U + L*V + L*m");
  CHECK(P("L*m - 1 + L*V - U*m") == c);
  CHECK(P("3*L^-2*a12*a{10,2} - 2*b21").to_string() == "-2*b21 + 3*L^-2*a12*a{10,2}");
  CHECK(NCPoly().to_string() == "0");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("a11"), InvalidInput);
  CHECK_THROWS_AS(P("2 +"), ParseError);
  CHECK_THROWS_AS(P("q12"), ParseError);
}

TEST_CASE("specialize") {
  const NCPoly c = P("-1 - m*U + L*V + L*m");
  CHECK(specialize(c, Flavor::Hat, 0) == P("-1 + L + L*m"));
  CHECK(specialize(c, Flavor::DoubleHat, 0) == P("-1 + L*m"));
  CHECK(specialize(c, Flavor::Minus, 5) == c);
  CHECK(specialize(P("L*a12"), Flavor::Infinity, -1) == P("L*a12"));
  CHECK(specialize(P("L*a12"), Flavor::Infinity, 1) == P("L*U^-1*V*a12"));
  CHECK(specialize(P("L^-1"), Flavor::Infinity, 3) == P("L^-1*U^2*V^-2"));
  CHECK_THROWS_WITH_AS(specialize(c, Flavor::Infinity, 0), doctest::Contains("odd"), InvalidInput);
}

TEST_CASE("evaluate_abelian") {
  PrimeField f3(3);
  const NCPoly comm = P("a12*a21 - a21*a12");
  std::map<Generator, std::uint32_t> assign{{Generator::a(1, 2), 2}, {Generator::a(2, 1), 1}};
  CHECK(evaluate_abelian(comm, assign, f3, {}) == 0);
  CHECK(evaluate_abelian(P("-1 - m*U + L*V + L*m"), assign, f3, {2, 1, 0, 1}) == 0);
  CHECK(evaluate_abelian(P("L"), assign, f3, {2, 1, 0, 1}) == 2);
  CHECK(evaluate_abelian(P("L^-1"), assign, f3, {2, 1, 0, 1}) == 2);
  CHECK_THROWS_WITH_AS(evaluate_abelian(P("U^-1"), assign, f3, {1, 1, 0, 1}), doctest::Contains("nonunit"),
                       InvalidInput);
  CHECK_THROWS_AS(evaluate_abelian(P("a13"), assign, f3, {}), InvalidInput);
}

TEST_CASE("op involution") {
  CHECK(op_involution(P("b12*c13")) == P("-c13*b12"));
  CHECK(op_involution(P("a12*a13")) == P("a13*a12"));
  const NCPoly x = P("b12*c13*e11");
  CHECK(op_involution(op_involution(x)) == x);
}

TEST_CASE("json round trip") {
  const NCPoly p = P("-L*m*U*a12 + 12345678901234567890*V*c11*d{3,11}");
  const auto j = to_json(p);
  CHECK(j["terms"][0]["coeff"] == "-1");
  CHECK(ncpoly_from_json(j) == p);
}

TEST_CASE("algebraic properties on random inputs") {
  std::mt19937_64 rng(7);
  PrimeField f5(5);
  for (int iter = 0; iter < 200; ++iter) {
    const NCPoly p = testsupport::random_poly(rng, 3, 4, 3);
    const NCPoly q = testsupport::random_poly(rng, 3, 4, 3);
    const NCPoly r = testsupport::random_poly(rng, 3, 3, 2);
    CHECK(NCPoly(p.terms()) == p);
    CHECK(((p * q) * r) == (p * (q * r)));
    CHECK((p * (q + r)) == (p * q + p * r));
    CHECK(((p + q) * r) == (p * r + q * r));
    CHECK((p - p).is_zero());
    CHECK(specialize(specialize(p, Flavor::Minus, 1), Flavor::Hat, 1) == specialize(p, Flavor::Hat, 1));

    std::uniform_int_distribution<std::uint32_t> val(0, 4), unit(1, 4);
    auto value_of = [&](Generator g) { return static_cast<std::uint32_t>((g.code() * 2654435761u + iter) % 5); };
    const Scalars s{unit(rng), unit(rng), unit(rng), unit(rng)};
    CHECK(evaluate_abelian(p * q, value_of, f5, s) ==
          f5.mul(evaluate_abelian(p, value_of, f5, s), evaluate_abelian(q, value_of, f5, s)));
  }
  for (int iter = 0; iter < 100; ++iter) {
    std::uniform_int_distribution<int> deg(0, 3);
    const int dp = deg(rng), dq = deg(rng);
    const NCPoly p = testsupport::random_homogeneous(rng, 3, dp, 3);
    const NCPoly q = testsupport::random_homogeneous(rng, 3, dq, 3);
    const NCPoly lhs = op_involution(p * q);
    NCPoly rhs = op_involution(q) * op_involution(p);
    if ((dp * dq) % 2) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("matrices") {
  GenMatrix m(2);
  m.at(1, 2) = P("a12");
  m.at(2, 1) = P("a21");
  const GenMatrix id = GenMatrix::identity(2);
  CHECK(m * id == m);
  CHECK(id * m == m);
  const GenMatrix sq = m * m;
  CHECK(sq.at(1, 1) == P("a12*a21"));
  CHECK(sq.at(2, 2) == P("a21*a12"));
  CHECK(sq.at(1, 2).is_zero());
  CHECK(to_json(m)["n"] == 2);
}
