#include "doctest.h"

#include "support.hpp"
#include "xverse/dga.hpp"
#include "xverse/error.hpp"

using namespace xverse;

namespace {

NCPoly P(const char* s) { return parse_ncpoly(s); }

const Flavor kFlavors[] = {Flavor::Minus, Flavor::Hat, Flavor::DoubleHat, Flavor::Infinity};

}  // namespace

TEST_CASE("unknot differentials") {
  const DgaPresentation dga = build_dga(BraidWord::identity(1), Flavor::Minus);
  CHECK(dga.generators.size() == 4);
  CHECK(dga.d(Generator::c(1, 1)) == P("-1 - m*U + L*V + L*m"));
  CHECK(dga.d(Generator::d(1, 1)) == -P("L^-1") * P("-1 - m*U + L*V + L*m"));
  CHECK(dga.d(Generator::e(1, 1)) == P("-c11 - L*d11"));
  CHECK(dga.d(Generator::f(1, 1)) == P("-d11 - L^-1*c11"));
  CHECK(dga.d(Generator::c(1, 1)).to_string() == "-1 - m*U + L*V + L*m");
  CHECK(dga.d(Generator::d(1, 1)).to_string() == "L^-1 + L^-1*m*U - V - m");
  CHECK(dga.d(Generator::e(1, 1)).to_string() == "-c11 - L*d11");
  CHECK(dga.d(Generator::f(1, 1)).to_string() == "-L^-1*c11 - d11");
  CHECK(verify_d_squared(dga).ok());
}

TEST_CASE("differential of products") {
  const DgaPresentation dga = build_dga(BraidWord::identity(1), Flavor::Minus);
  const NCPoly c = P("c11");
  const NCPoly dc = dga.d(Generator::c(1, 1));
  CHECK(differential(dga, c * c) == dc * c - c * dc);
  CHECK(differential(dga, NCPoly::constant(1)).is_zero());

  const DgaPresentation t = build_dga(parse_braid("1 1 1"), Flavor::Minus);
  CHECK(differential(t, P("a12*b21")) == P("a12") * t.d(Generator::b(2, 1)));
  CHECK_THROWS_AS(differential(dga, P("a12")), InvalidInput);
}

TEST_CASE("trefoil infinity b21") {
  const DgaPresentation dga = build_dga(parse_braid("1 1 1"), Flavor::Infinity);
  CHECK(dga.d(Generator::b(2, 1)) == P("a21 - L^-1*m^3*U*V^-1*a12"));
  CHECK(dga.d(Generator::a(1, 2)).is_zero());
}

TEST_CASE("links are rejected") {
  CHECK_THROWS_WITH_AS(build_dga(parse_braid("1 1"), Flavor::Hat), doctest::Contains("links unsupported"),
                       InvalidInput);
  CHECK_THROWS_AS(build_modified_dga(parse_braid("1 -1"), Flavor::Hat), InvalidInput);
}

TEST_CASE("d squared and grading, trefoil all flavors") {
  for (Flavor f : kFlavors) {
    CAPTURE(flavor_name(f));
    const DgaPresentation dga = build_dga(parse_braid("1 1 1"), f);
    CHECK(verify_d_squared(dga).ok());
    CHECK(grading_violations(dga).empty());
    const DgaPresentation mod = build_modified_dga(parse_braid("1 1 1"), f);
    CHECK(verify_d_squared(mod).ok());
    CHECK(grading_violations(mod).empty());
  }
}

TEST_CASE("corrupted differential is detected") {
  DgaPresentation dga = build_dga(parse_braid("1 1 1"), Flavor::Minus);
  const StructuredMatrices m = structured_matrices(2, default_lambda(dga.braid, Flavor::Minus));
  std::vector<Generator> expected;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      dga.diff[Generator::e(i, j)] = dga.d(Generator::e(i, j)) - m.Bhat.at(i, j);
      if (!m.Bhat.at(i, j).is_zero()) expected.push_back(Generator::e(i, j));
    }
  const DSquaredReport r = verify_d_squared(dga);
  std::vector<Generator> failing;
  for (const auto& [g, dd] : r.failures) failing.push_back(g);
  CHECK(failing == expected);
}

TEST_CASE("modified dga generator counts") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Letter> l;
    for (int k = 1; k < n; ++k) l.push_back({k, 1});
    const DgaPresentation mod = build_modified_dga(BraidWord(n, l), Flavor::Minus);
    int counts[6] = {};
    for (const auto& g : mod.generators) ++counts[static_cast<int>(g.family())];
    CHECK(counts[0] == n * (n - 1));
    CHECK(counts[1] == 0);
    CHECK(counts[2] + counts[3] == 2 * n * n);
    CHECK(counts[4] == n * (n + 1) / 2);
    CHECK(counts[5] == n * (n + 1) / 2);
  }
  const DgaPresentation u = build_modified_dga(BraidWord::identity(1), Flavor::Minus);
  CHECK(u.d(Generator::e(1, 1)) == P("c11 + L*d11"));
  CHECK(u.d(Generator::f(1, 1)) == P("d11 + L^-1*c11"));
}

TEST_CASE("structured matrices") {
  const StructuredMatrices m = structured_matrices(3, default_lambda(parse_braid("1 2"), Flavor::Minus));
  CHECK(m.Acheck.at(2, 2) == P("-V - m"));
  CHECK(m.Ahat.at(2, 2) == P("-1 - m*U"));
  CHECK(m.A.at(1, 1) == NCPoly::constant(-2));
  CHECK(m.Lam.at(1, 1) == P("L*m^-2"));
  auto at_one = [](const NCPoly& p) {
    std::vector<Term> t = p.terms();
    for (auto& x : t) x.base = {x.base.lam, 0, 0, 0};
    return NCPoly(std::move(t));
  };
  CHECK(m.Bhat.map(at_one) == m.B);
  CHECK(m.Bcheck.map(at_one) == m.B);
  CHECK(m.Ahat.map(at_one) == m.Acheck.map(at_one));
}

TEST_CASE("lambda override validation") {
  const BraidWord b = parse_braid("1 2");
  const auto def = default_lambda(b, Flavor::Minus);
  CHECK_NOTHROW(check_lambda_override(b, Flavor::Minus, {{0, 0, 0, 0}, {1, -2, 0, 0}, {0, 0, 0, 0}}));
  CHECK_THROWS_WITH_AS(check_lambda_override(b, Flavor::Minus, {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                       doctest::Contains("det Lambda mismatch"), InvalidInput);
  CHECK_THROWS_AS(check_lambda_override(b, Flavor::Minus, {def[0]}), InvalidInput);
  CHECK_THROWS_AS(check_lambda_override(b, Flavor::Minus, {{1, -2, 1, 0}, {0, 0, -1, 0}, {}}), InvalidInput);
  CHECK(lambda_determinant(default_lambda(b, Flavor::Infinity)) == BaseMonomial{1, -2, 0, 0});
  CHECK(lambda_determinant(default_lambda(parse_braid("1 1 1"), Flavor::Infinity)) == BaseMonomial{1, -3, -1, 1});
}

TEST_CASE("infinity build equals specialized minus build") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 10; ++iter) {
    const BraidWord b = testsupport::random_knot_braid(rng, 3, 6);
    const int sl = braid_stats(b).self_linking;
    const DgaPresentation minus = build_dga(b, Flavor::Minus);
    const DgaPresentation inf = build_dga(b, Flavor::Infinity);
    const DgaPresentation hat = build_dga(b, Flavor::Hat);
    for (const auto& g : minus.generators) {
      CHECK(inf.d(g) == specialize(minus.d(g), Flavor::Infinity, sl));
      CHECK(hat.d(g) == specialize(minus.d(g), Flavor::Hat, sl));
    }
  }
}

TEST_CASE("phi factorization and degree-0 identities") {
  CHECK(verify_phi_factorization(parse_braid("1")).ok());
  CHECK(verify_phi_factorization(BraidWord::identity(3)).ok());
  CHECK(verify_degree0_identities(parse_braid("1 1 1")).ok());
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 10; ++iter) {
    const BraidWord b = testsupport::random_braid(rng, 4, 6);
    CHECK(verify_phi_factorization(b).ok());
    const BraidWord k = testsupport::random_knot_braid(rng, 3, 6);
    const IdentityReport r = verify_degree0_identities(k);
    for (const auto& f : r.failures) MESSAGE(k.to_string() << ": " << f);
    CHECK(r.ok());
  }
}

TEST_CASE("d squared on random braids, all flavors") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 8; ++iter) {
    const BraidWord b = testsupport::random_knot_braid(rng, 3, 6);
    for (Flavor f : kFlavors) {
      CAPTURE(b.to_string());
      CHECK(verify_d_squared(build_dga(b, f)).ok());
      CHECK(verify_d_squared(build_modified_dga(b, f)).ok());
    }
  }
}
