#include "doctest.h"

#include "support.hpp"
#include "xverse/braid_rep.hpp"
#include "xverse/error.hpp"

using namespace xverse;

namespace {

NCPoly P(const char* s) { return parse_ncpoly(s); }

}  // namespace

TEST_CASE("generator images") {
  CHECK(apply_phi(parse_braid("1"), P("a12")) == P("a21"));
  CHECK(apply_phi(parse_braid("1", 3), P("a13")) == P("-a23 - a21*a13"));
  CHECK(apply_phi(parse_braid("1", 3), P("a31")) == P("-a32 - a31*a12"));
  CHECK(apply_phi(parse_braid("1", 3), P("a23")) == P("a13"));
  const BraidWord id = parse_braid("1 -1", 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) CHECK(apply_phi(id, NCPoly::gen(Generator::a(i, j))) == NCPoly::gen(Generator::a(i, j)));
  CHECK_THROWS_AS(apply_phi(parse_braid("1"), P("b12")), InvalidInput);
  CHECK_THROWS_AS(apply_phi(parse_braid("1"), P("a13")), InvalidInput);
}

TEST_CASE("phi matrices of simple braids") {
  const PhiMatrices idm = phi_matrices(BraidWord::identity(3));
  CHECK(idm.left == GenMatrix::identity(3));
  CHECK(idm.right == GenMatrix::identity(3));

  for (int k = 1; k <= 3; ++k) {
    const BraidWord s(4, {{k, 1}});
    const PhiMatrices m = phi_matrices(s);
    GenMatrix expect = GenMatrix::identity(4);
    expect.at(k, k) = -NCPoly::gen(Generator::a(k + 1, k));
    expect.at(k, k + 1) = NCPoly::constant(-1);
    expect.at(k + 1, k) = NCPoly::constant(1);
    expect.at(k + 1, k + 1) = NCPoly();
    CHECK(m.left == expect);

    const PhiMatrices inv = phi_matrix_inverses(s);
    GenMatrix expect_inv = GenMatrix::identity(4);
    expect_inv.at(k, k) = NCPoly();
    expect_inv.at(k, k + 1) = NCPoly::constant(1);
    expect_inv.at(k + 1, k) = NCPoly::constant(-1);
    expect_inv.at(k + 1, k + 1) = -NCPoly::gen(Generator::a(k + 1, k));
    CHECK(inv.left == expect_inv);
    CHECK(m.left * inv.left == GenMatrix::identity(4));
  }
}

TEST_CASE("sigma_1 squared expanded directly") {
  // phi^ext(a13) for sigma_1^2 on three strands, expanded by hand:
  // sigma_1: a13 -> -a23 - a21 a13, and applying sigma_1 again to that image.
  const BraidWord s1(3, {{1, 1}});
  const PhiImage once = phi_image(s1, 3);
  const NCPoly direct = once.apply(P("-a23 - a21*a13"));
  const BraidWord sq = parse_braid("1 1");
  const PhiMatrices m = phi_matrices(sq);
  const NCPoly from_matrix = m.left.at(1, 1) * P("a13") + m.left.at(1, 2) * P("a23");
  CHECK(direct == from_matrix);

  const PhiMatrices one = phi_matrices(parse_braid("1"));
  const PhiImage phi1 = phi_image(parse_braid("1"));
  CHECK(m.left == phi1.apply(one.left) * one.left);
}

TEST_CASE("homomorphism, round trip and chain rules") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 60; ++iter) {
    std::uniform_int_distribution<int> nd(2, 4);
    const int n = nd(rng);
    const BraidWord b1 = testsupport::random_braid(rng, n, 4);
    const BraidWord b2 = testsupport::random_braid(rng, n, 4);
    const NCPoly p = testsupport::random_poly(rng, n, 3, 2, true);

    CHECK(apply_phi(b1 * b2, p) == apply_phi(b1, apply_phi(b2, p)));
    CHECK(apply_phi(b1, apply_phi(braid_transform(b1, TransformKind::Inverse), p)) == p);
    CHECK(apply_phi(braid_transform(b1, TransformKind::Inverse), apply_phi(b1, p)) == p);

    const PhiMatrices m1 = phi_matrices(b1), m2 = phi_matrices(b2), m12 = phi_matrices(b1 * b2);
    const PhiImage phi1 = phi_image(b1);
    CHECK(m12.left == phi1.apply(m2.left) * m1.left);
    CHECK(m12.right == m1.right * phi1.apply(m2.right));
  }
}

TEST_CASE("phi matrix inverses") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    const BraidWord b = testsupport::random_braid(rng, 3, 6);
    const PhiMatrices m = phi_matrices(b), inv = phi_matrix_inverses(b);
    CHECK(m.left * inv.left == GenMatrix::identity(3));
    CHECK(inv.left * m.left == GenMatrix::identity(3));
    CHECK(m.right * inv.right == GenMatrix::identity(3));
    CHECK(inv.right * m.right == GenMatrix::identity(3));
  }
  CHECK(phi_matrix_inverses(BraidWord::identity(2)).left == GenMatrix::identity(2));
}
