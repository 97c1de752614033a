#pragma once

// Degree-0 relations abelianized over Z/p at fixed scalars, computed
// directly in F_p[a_ij] (as functions, x^p = x). Augmentations into a field
// factor through the abelianization, so these relations have the same zero
// set as the noncommutative presentation evaluated at the same scalars; the
// free-algebra expansion of phi_B is never formed.

#include <vector>

#include "xverse/braid.hpp"
#include "xverse/dga.hpp"
#include "xverse/fp_poly.hpp"
#include "xverse/ht0.hpp"

namespace xverse {

struct AbelianPresentation {
  BraidWord braid;
  Flavor flavor = Flavor::Minus;
  std::uint32_t prime = 3;
  Scalars scalars;
  std::vector<Generator> variables;  // a_ij, row-major; variable k is variables[k]
  std::vector<FpPoly> relations;     // same order as Ht0Presentation::relations
};

/// Abelianized phi_B on a_ij, 1 <= i != j <= m, with the variable order of
/// fp_variable_order(n, m): the n-strand generators first.
std::vector<FpPoly> abelian_phi(const BraidWord& b, int m, const PrimeField& f);
std::vector<Generator> fp_variable_order(int n, int m);

/// Phi^L_B and Phi^R_B abelianized, as row-major n x n arrays.
struct AbelianPhiMatrices {
  std::vector<FpPoly> left;
  std::vector<FpPoly> right;
};
AbelianPhiMatrices abelian_phi_matrices(const BraidWord& b, const PrimeField& f);

AbelianPresentation abelian_relations(const BraidWord& b, Flavor flavor, const PrimeField& f, const Scalars& s,
                                      const DgaOptions& options = {});
AbelianPresentation abelian_relations_split(const BraidWord& b1, const BraidWord& b2, Flavor flavor,
                                            const PrimeField& f, const Scalars& s);
AbelianPresentation abelian_relations_cut(const BraidWord& b, std::size_t cut, Flavor flavor, const PrimeField& f,
                                          const Scalars& s);

/// Abelianizes an existing noncommutative presentation.
AbelianPresentation abelianize(const Ht0Presentation& p, const PrimeField& f, const Scalars& s);

}  // namespace xverse
