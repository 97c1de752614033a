#pragma once

// Degree-0 presentations: the a-generators modulo the entries of
// Ahat - Lam PhiL Acheck and Acheck - Ahat PhiR Lam^-1.

#include <optional>
#include <vector>

#include "xverse/braid.hpp"
#include "xverse/dga.hpp"
#include "xverse/ncpoly.hpp"

namespace xverse {

struct Ht0Presentation {
  BraidWord braid;
  Flavor flavor = Flavor::Minus;
  int self_linking = 0;
  std::vector<Generator> variables;  // a_ij, row-major
  std::vector<BaseMonomial> lam;     // diagonal of Lambda used
  std::vector<NCPoly> relations;     // C-block row-major, then D-block
};

Ht0Presentation ht0_relations(const BraidWord& b, Flavor flavor, const DgaOptions& options = {});

/// Presentation for B = B1 B2 built from Phi^L/R of B1^-1 and B2 only.
Ht0Presentation ht0_relations_split(const BraidWord& b1, const BraidWord& b2, Flavor flavor);

/// Splits b after the first `cut` letters.
Ht0Presentation ht0_relations_cut(const BraidWord& b, std::size_t cut, Flavor flavor);

/// Units of the coefficient ring for the flavor: +-lambda^a mu^b, and also
/// U, V in the infinity flavor.
bool is_unit(const BaseMonomial& m, Flavor flavor);

/// Multiplies p by a unit so that its first term has trivial unit part
/// and positive coefficient.
NCPoly normalize_up_to_unit(const NCPoly& p, Flavor flavor);

struct ReducedHt0 {
  std::vector<Generator> remaining;  // variables not eliminated
  std::vector<std::pair<Generator, NCPoly>> eliminated;  // x = expression, in elimination order
  std::vector<NCPoly> relations;  // normalized up to unit, deduplicated, no zeros
};

/// Off-diagonal entries of d(B) = A - Lam phi_B(A) Lam^-1, flavor-specialized.
/// They lie in the relation ideal.
std::vector<NCPoly> b_consequences(const Ht0Presentation& p);

/// Bounded simplification used for display and for the index-2 polynomial.
/// Starting from the relations plus b_consequences, alternates two steps
/// until nothing changes:
///  - elimination: some relation contains a variable x exactly once, as a
///    single-letter term u*x with u a unit; solve for x and substitute.
///  - division: a term of r contains the leading word of another relation s
///    (its unique longest term) with a compatible coefficient; subtract the
///    matching multiple of s. Replaced terms are strictly shorter, so this
///    terminates.
ReducedHt0 reduce_presentation(const Ht0Presentation& p);

nlohmann::json to_json(const Ht0Presentation& p);
nlohmann::json to_json(const ReducedHt0& r);

}  // namespace xverse
