#pragma once

// The augmentation polynomial of a 2-braid, through one Sylvester resultant.

#include <vector>

#include "xverse/braid.hpp"
#include "xverse/comm_poly.hpp"
#include "xverse/ncpoly.hpp"

namespace xverse {

/// Abelianizes p: lambda, mu, U, V keep their roles and vars[k] becomes x_{k+1}.
/// Throws InvalidInput for generators outside vars or more than four of them.
CommPoly abelianize(const NCPoly& p, const std::vector<Generator>& vars);

struct AugPolyResult {
  CommPoly poly;                   // normalized, V = 1
  std::vector<CommPoly> relations; // abelianized reduced relations at V = 1
  std::vector<CommPoly> eliminants;
  int variables_left = 0;
  /// Repeated factors are never removed; the polynomial may not be squarefree.
  bool squarefree_checked = false;
};

/// Infinity-flavor presentation, reduced; V set to 1; the remaining
/// variable (if any) eliminated by resultants against the relation of least
/// positive degree. The eliminant of least degree is returned after
/// checking that it divides every other one; otherwise EliminationFailed.
AugPolyResult augmentation_polynomial_index2(const BraidWord& b);

}  // namespace xverse
