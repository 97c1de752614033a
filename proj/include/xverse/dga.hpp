#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xverse/braid.hpp"
#include "xverse/braid_rep.hpp"
#include "xverse/ncpoly.hpp"

namespace xverse {

/// The fixed matrices built from a braid.
struct StructuredMatrices {
  int n = 0;
  GenMatrix A;        // a_ij off the diagonal, -2 on it
  GenMatrix B;        // b_ij off the diagonal, 0 on it
  GenMatrix A_lower;  // a_ij below the diagonal, -1 on it
  GenMatrix A_upper;  // a_ij above the diagonal, -1 on it
  GenMatrix Ahat;     // A_lower + mu U A_upper
  GenMatrix Acheck;   // V A_lower + mu A_upper
  GenMatrix Bhat;
  GenMatrix Bcheck;
  GenMatrix C, D, E, F;
  GenMatrix Lam;      // diag(lambda mu^{-w}, 1, ..., 1) or an override
  GenMatrix LamInv;
};

/// Lambda_B (or Lambda'_B for the infinity flavor) as a diagonal of monomials.
std::vector<BaseMonomial> default_lambda(const BraidWord& b, Flavor flavor);

/// Product of the diagonal entries.
BaseMonomial lambda_determinant(const std::vector<BaseMonomial>& diag);

/// Validates an override: same size, correct determinant, and no U/V
/// factors outside the infinity flavor. Throws InvalidInput("det Lambda mismatch").
void check_lambda_override(const BraidWord& b, Flavor flavor, const std::vector<BaseMonomial>& diag);

StructuredMatrices structured_matrices(int n, const std::vector<BaseMonomial>& lam);

struct DgaOptions {
  /// Replaces Lambda_B (Lambda'_B for infinity) by another diagonal with the
  /// same determinant.
  std::optional<std::vector<BaseMonomial>> lam_override;
};

struct DgaPresentation {
  BraidWord braid;
  Flavor flavor = Flavor::Minus;
  bool modified = false;
  int self_linking = 0;
  std::vector<Generator> generators;
  std::map<Generator, NCPoly> diff;
  GenMatrix lam_matrix;
  GenMatrix phi_l;
  GenMatrix phi_r;

  const NCPoly& d(Generator g) const;
};

/// Throws InvalidInput("links unsupported") unless the closure is a knot.
void require_knot(const BraidWord& b);

/// The transverse DGA: generators a, b (off-diagonal), c, d, e, f.
DgaPresentation build_dga(const BraidWord& b, Flavor flavor, const DgaOptions& options = {});

/// The reduced variant with generators a, c, d, e_{i<=j}, f_{j<=i}.
DgaPresentation build_modified_dga(const BraidWord& b, Flavor flavor, const DgaOptions& options = {});

/// Extends the generator differential as a derivation with Koszul signs:
/// d(xy) = d(x) y + (-1)^{|x|} x d(y).
NCPoly differential(const DgaPresentation& dga, const NCPoly& p);

struct DSquaredReport {
  std::vector<std::pair<Generator, NCPoly>> failures;  // (g, d(d(g))) with d(d(g)) != 0
  bool ok() const noexcept { return failures.empty(); }
};

DSquaredReport verify_d_squared(const DgaPresentation& dga);

/// Generators whose differential is not homogeneous of degree |g|-1.
std::vector<Generator> grading_violations(const DgaPresentation& dga);

struct IdentityReport {
  std::vector<std::string> failures;  // names of identities that did not hold
  bool ok() const noexcept { return failures.empty(); }
};

/// phi_B(M) = Phi^L_B M Phi^R_B for M in {A_lower, A_upper, Ahat, Acheck}.
IdentityReport verify_phi_factorization(const BraidWord& b);

/// The degree-0 identities behind the comparison of d(B) with the HT0
/// relations, including d(Bhat) = Ahat - Lam phi_B(Ahat) Lam^-1 and its
/// check counterpart.
IdentityReport verify_degree0_identities(const BraidWord& b);

}  // namespace xverse
