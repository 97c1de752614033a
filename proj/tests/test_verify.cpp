#include "doctest.h"

#include "support.hpp"
#include "xverse/error.hpp"
#include "xverse/verify.hpp"

using namespace xverse;

namespace {

CheckSpec spec_for(const BraidWord& b, CheckKind k, int samples = 3, std::uint64_t seed = 0) {
  CheckSpec s;
  s.braid = b;
  s.check = k;
  s.samples = samples;
  s.seed = seed;
  s.options.threads = 1;
  return s;
}

const CheckKind kAll[] = {CheckKind::Conjugation, CheckKind::StabPos,       CheckKind::StabNegInfinity,
                          CheckKind::Mirror,      CheckKind::OpSwap,        CheckKind::Rescale,
                          CheckKind::DoubleHatStab, CheckKind::LamOverride};

}  // namespace

TEST_CASE("names and grids") {
  for (CheckKind k : kAll) CHECK(parse_check(check_name(k)) == k);
  CHECK_THROWS_AS(parse_check("bogus"), InvalidInput);
  const auto g = parse_grid("2,1; 1,1 ;1,2,2,1");
  REQUIRE(g.size() == 3);
  CHECK(g[0] == GridPoint{2, 1, std::nullopt, std::nullopt});
  CHECK(g[2] == GridPoint{1, 2, 2u, 1u});
  CHECK(to_string(g[2]) == "1,2,2,1");
  CHECK_THROWS_AS(parse_grid("1"), ParseError);
  CHECK_THROWS_AS(parse_grid("1,x"), ParseError);
  CHECK_THROWS_AS(parse_grid("1,-1"), ParseError);
  CHECK_THROWS_AS(parse_grid(""), ParseError);
  CHECK(default_grid(Flavor::Hat, 3).size() == 4);
  CHECK(default_grid(Flavor::Hat, 2).size() == 1);
  CHECK(default_grid(Flavor::Infinity, 5)[1].u.has_value());
}

TEST_CASE("conjugation keeps the m76 count") {
  CheckSpec s = spec_for(parse_braid("1 -2 1 -2 -3 2 3 3 3"), CheckKind::Conjugation, 5);
  s.grid = {{2, 1, std::nullopt, std::nullopt}};
  const CheckReport r = run_check(s);
  CHECK(r.passed);
  REQUIRE(r.cases.size() == 5);
  for (const auto& c : r.cases) {
    CHECK(c.left == 5);
    CHECK(c.right == 5);
  }
}

TEST_CASE("double hat of a negative stabilization is empty") {
  const CheckReport r = run_check(spec_for(parse_braid("1 1 1"), CheckKind::DoubleHatStab));
  CHECK(r.passed);
  for (const auto& c : r.cases) CHECK(c.left == 0);
}

TEST_CASE("mirror on the 9_44 braid") {
  const BraidWord b = parse_braid("-2 -3 2 1 2 -3 -2 1 -2");
  CheckSpec s = spec_for(b, CheckKind::Mirror);
  s.grid = {{2, 1, std::nullopt, std::nullopt}};
  const CheckReport r = run_check(s);
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0].left == 0);
  CHECK(r.cases[0].right == 0);
  CHECK(r.cases[0].right ==
        augmentation_number(braid_transform(b, TransformKind::Reverse), Flavor::Hat, 3, 2, 1).count);
}

TEST_CASE("every check passes on small random braids") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const BraidWord b = testsupport::random_knot_braid(rng, 2 + trial % 2, 6);
    for (CheckKind k : kAll) {
      for (std::uint32_t p : {2u, 3u}) {
        CheckSpec s = spec_for(b, k, 2, static_cast<std::uint64_t>(trial));
        s.prime = p;
        const CheckReport r = run_check(s);
        CHECK_MESSAGE(r.passed, b.to_string(), " ", check_name(k), " p=", p);
        CHECK(!r.cases.empty());
      }
    }
  }
}

TEST_CASE("invariance under the minus and infinity flavors") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 4; ++trial) {
    const BraidWord b = testsupport::random_knot_braid(rng, 3, 6);
    for (Flavor fl : {Flavor::Minus, Flavor::Infinity})
      for (CheckKind k : {CheckKind::Conjugation, CheckKind::StabPos, CheckKind::LamOverride}) {
        CheckSpec s = spec_for(b, k, 2, 7);
        s.flavor = fl;
        CHECK_MESSAGE(run_check(s).passed, b.to_string(), " ", check_name(k), " ", flavor_name(fl));
      }
  }
}

TEST_CASE("reports are reproducible") {
  const BraidWord b = parse_braid("1 -2 1 -2 1 1");
  for (CheckKind k : {CheckKind::Conjugation, CheckKind::Rescale, CheckKind::LamOverride}) {
    CheckSpec s = spec_for(b, k, 4, 9);
    const auto a = to_json(run_check(s));
    s.options.threads = 3;
    CHECK(to_json(run_check(s)) == a);
    s.seed = 10;
    s.options.threads = 1;
    CHECK(run_check(s).passed);
  }
}

TEST_CASE("check errors") {
  CHECK_THROWS_AS(run_check(spec_for(parse_braid("1 1"), CheckKind::Mirror)), InvalidInput);
  CHECK_THROWS_AS(run_check(spec_for(parse_braid("1"), CheckKind::Mirror, 0)), InvalidInput);
  CheckSpec s = spec_for(parse_braid("1 1 1"), CheckKind::OpSwap);
  s.grid = {{1, 1, 0u, 1u}};
  CHECK_THROWS_AS(run_check(s), InvalidInput);
  s = spec_for(parse_braid("1 2 1 2", 3), CheckKind::Mirror);
  s.options.pruning = false;
  s.options.budget = 10;
  CHECK_THROWS_AS(run_check(s), BudgetExceeded);
}

TEST_CASE("table rows") {
  const auto& t = knot_table();
  CHECK(t.size() == 10);
  for (const auto& row : t) CHECK(row.braids.size() == row.expected.size());
  CountOptions o;
  o.threads = 1;
  const TableReport r = reproduce_table(3, {"m72"}, o);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.passed());
  CHECK(r.rows[0].entries[1].computed == std::optional<std::uint64_t>(5));
  CHECK_FALSE(r.rows[0].entries[0].split.has_value());

  const TableReport five = reproduce_table(3, {"m10_145"}, o);
  CHECK(five.passed());
  CHECK(five.rows[0].entries[0].split == std::optional<std::size_t>(6));

  CHECK_THROWS_AS(reproduce_table(3, {"nope"}), InvalidInput);
  CHECK_THROWS_AS(reproduce_table(5), InvalidInput);

  CountOptions tiny;
  tiny.budget = 5;
  tiny.pruning = false;
  const TableReport failed = reproduce_table(3, {"m76"}, tiny);
  CHECK_FALSE(failed.passed());
  CHECK_FALSE(failed.rows[0].entries[0].computed.has_value());
  CHECK(failed.rows[0].entries[0].error.find("budget") != std::string::npos);
  CHECK(to_json(failed).at("rows")[0].at("entries")[0].at("computed").is_null());
}
