#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "xverse/error.hpp"

using namespace xverse;

TEST_CASE("parse") {
  const BraidWord b = parse_braid("3 3 -2 3 2 1 1 2 -1");
  CHECK(b.strands() == 4);
  CHECK(b.length() == 9);
  CHECK(b.letters()[2] == Letter{2, -1});
  CHECK(b.to_string() == "3 3 -2 3 2 1 1 2 -1");

  const BraidWord id = parse_braid("", 1);
  CHECK(id.strands() == 1);
  CHECK(id.length() == 0);
  CHECK(parse_braid("").strands() == 1);
  CHECK(parse_braid("1 -1").strands() == 2);
  CHECK(parse_braid("1", 4).strands() == 4);

  CHECK_THROWS_AS(parse_braid("1 0 2"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 x"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 2.5"), ParseError);
  CHECK_THROWS_AS(parse_braid("3", 3), ParseError);
}

TEST_CASE("stats") {
  auto s = braid_stats(parse_braid("1 1 1"));
  CHECK(s.writhe == 3);
  CHECK(s.strands == 2);
  CHECK(s.self_linking == 1);
  CHECK(s.is_knot);

  s = braid_stats(parse_braid("-1"));
  CHECK(s.writhe == -1);
  CHECK(s.self_linking == -3);
  CHECK(s.is_knot);

  s = braid_stats(parse_braid("1 1"));
  CHECK(s.permutation == std::vector<int>{1, 2});
  CHECK(s.components == 2);
  CHECK_FALSE(s.is_knot);

  s = braid_stats(parse_braid("1 -1"));
  CHECK(s.writhe == 0);
  CHECK(s.self_linking == -2);
  CHECK_FALSE(s.is_knot);

  s = braid_stats(parse_braid("1 2"));
  CHECK(s.is_knot);
  CHECK(s.components == 1);
  s = braid_stats(BraidWord::identity(1));
  CHECK(s.is_knot);
  CHECK(s.self_linking == -1);
}

TEST_CASE("markov moves") {
  const BraidWord t = parse_braid("1 1 1");
  CHECK(markov_move(t, MarkovMove::conjugate(1, 1)).to_string() == "-1 1 1 1 1");
  CHECK(markov_move(t, MarkovMove::conjugate(1, -1)).to_string() == "1 1 1 1 -1");
  const BraidWord sp = markov_move(t, MarkovMove::stab_pos());
  CHECK(sp.strands() == 3);
  CHECK(sp.to_string() == "2 2 2 1");
  const BraidWord sn = markov_move(BraidWord::identity(1), MarkovMove::stab_neg());
  CHECK(sn == parse_braid("-1"));
  CHECK_THROWS_AS(markov_move(t, MarkovMove::conjugate(2, 1)), InvalidInput);
}

TEST_CASE("transforms") {
  CHECK(braid_transform(parse_braid("1 -2"), TransformKind::Reverse).to_string() == "-2 1");
  CHECK(braid_transform(parse_braid("1 2"), TransformKind::Star).to_string() == "-2 -1");
  CHECK(braid_transform(parse_braid("1 -2 2"), TransformKind::Inverse).to_string() == "-2 2 -1");
  CHECK(rotate(parse_braid("1 2 3"), 1).to_string() == "2 3 1");
}

TEST_CASE("move properties on random braids") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    std::uniform_int_distribution<int> nd(2, 5);
    const int n = nd(rng);
    const BraidWord b = testsupport::random_braid(rng, n, 10);
    const BraidStats s = braid_stats(b);
    std::uniform_int_distribution<int> kd(1, n - 1);
    const BraidStats c = braid_stats(markov_move(b, MarkovMove::conjugate(kd(rng), (iter % 2) ? 1 : -1)));
    CHECK(c.writhe == s.writhe);
    CHECK(c.strands == s.strands);
    CHECK(c.self_linking == s.self_linking);
    CHECK(c.components == s.components);
    auto cycle_type = [](const BraidStats& st) {
      std::vector<int> lengths;
      std::vector<bool> seen(st.strands, false);
      for (int i = 0; i < st.strands; ++i) {
        int len = 0;
        for (int j = i; !seen[j]; j = st.permutation[j] - 1, ++len) seen[j] = true;
        if (len) lengths.push_back(len);
      }
      std::sort(lengths.begin(), lengths.end());
      return lengths;
    };
    CHECK(cycle_type(c) == cycle_type(s));

    const BraidStats p = braid_stats(markov_move(b, MarkovMove::stab_pos()));
    CHECK(p.self_linking == s.self_linking);
    CHECK(p.components == s.components);
    const BraidStats q = braid_stats(markov_move(b, MarkovMove::stab_neg()));
    CHECK(q.self_linking == s.self_linking - 2);
    CHECK(q.writhe == s.writhe - 1);

    const BraidStats r = braid_stats(braid_transform(b, TransformKind::Reverse));
    CHECK(r.writhe == s.writhe);
    CHECK(r.self_linking == s.self_linking);
    CHECK(r.components == s.components);
    CHECK(cycle_type(r) == cycle_type(s));

    CHECK(braid_transform(braid_transform(braid_transform(braid_transform(b, TransformKind::Reverse),
                                                          TransformKind::Inverse),
                                          TransformKind::Reverse),
                          TransformKind::Inverse) == b);
  }
}
