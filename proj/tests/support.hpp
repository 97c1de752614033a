#pragma once

#include <random>
#include <vector>

#include "xverse/braid.hpp"
#include "xverse/ncpoly.hpp"

namespace testsupport {

using namespace xverse;

inline BraidWord random_braid(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, n - 1), sgn(0, 1);
  std::vector<Letter> l;
  const int L = len(rng);
  for (int i = 0; i < L; ++i) l.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return BraidWord(n, std::move(l));
}

// Random braid whose closure is a knot; retries until one is found.
inline BraidWord random_knot_braid(std::mt19937_64& rng, int n, int max_len) {
  for (;;) {
    BraidWord b = random_braid(rng, n, max_len);
    if (braid_stats(b).is_knot) return b;
  }
}

inline Generator random_generator(std::mt19937_64& rng, int n, bool a_only) {
  std::uniform_int_distribution<int> fam(0, a_only ? 0 : 5), idx(1, n);
  for (;;) {
    const Family f = static_cast<Family>(fam(rng));
    const int i = idx(rng), j = idx(rng);
    if ((f == Family::A || f == Family::B) && i == j) continue;
    return Generator(f, i, j);
  }
}

inline NCPoly random_poly(std::mt19937_64& rng, int n, int terms, int max_word, bool a_only = false) {
  std::uniform_int_distribution<int> coeff(-3, 3), wl(0, max_word), ex(-1, 1), ux(0, 1);
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Word w;
    const int L = wl(rng);
    for (int q = 0; q < L; ++q) w.push_back(random_generator(rng, n, a_only));
    t.push_back(Term{coeff(rng), {ex(rng), ex(rng), ux(rng), ux(rng)}, std::move(w)});
  }
  return NCPoly(std::move(t));
}

// Homogeneous polynomial of the given degree.
inline NCPoly random_homogeneous(std::mt19937_64& rng, int n, int degree, int terms) {
  std::vector<Term> t;
  std::uniform_int_distribution<int> coeff(1, 3);
  for (int k = 0; k < terms; ++k) {
    Word w;
    int d = 0;
    while (d < degree) {
      Generator g = random_generator(rng, n, false);
      if (d + g.degree() > degree) continue;
      d += g.degree();
      w.push_back(g);
    }
    t.push_back(Term{coeff(rng), {}, std::move(w)});
  }
  return NCPoly(std::move(t));
}

}  // namespace testsupport
