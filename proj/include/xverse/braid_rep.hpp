#pragma once

// The representation phi : B_n -> Aut(A_n) on the degree-0 generators a_ij
// and the matrices Phi^L_B, Phi^R_B it determines.
//
// Composition is a homomorphism: phi_{B1 B2} = phi_{B1} o phi_{B2}, so that
// Phi^L_{B sigma} = Phi^L_sigma(phi_B(A)) . Phi^L_B.

#include <vector>

#include "xverse/braid.hpp"
#include "xverse/ncpoly.hpp"

namespace xverse {

/// Images phi(a_ij) of every generator of A_m, for some m >= strands.
class PhiImage {
 public:
  /// The identity automorphism of A_m.
  explicit PhiImage(int m);

  int m() const noexcept { return m_; }
  const NCPoly& of(int i, int j) const { return images_[idx(i, j)]; }
  NCPoly& of(int i, int j) { return images_[idx(i, j)]; }

  /// Applies the automorphism to p (which may only contain a_ij, i,j <= m).
  NCPoly apply(const NCPoly& p) const;
  GenMatrix apply(const GenMatrix& mat) const;

  bool operator==(const PhiImage&) const = default;

 private:
  std::size_t idx(int i, int j) const;
  int m_;
  std::vector<NCPoly> images_;
};

/// phi_B on A_m with m >= B.strands() (extra strands are fixed).
PhiImage phi_image(const BraidWord& b, int m);
inline PhiImage phi_image(const BraidWord& b) { return phi_image(b, b.strands()); }

/// Closed form of phi_{sigma_k}^{+-1}(a_ij) on A_m.
NCPoly phi_generator_image(int k, int sign, int i, int j, int m);

/// phi_B(p); throws InvalidInput when p contains non-a generators or
/// indices beyond the strand count.
NCPoly apply_phi(const BraidWord& b, const NCPoly& p);

struct PhiMatrices {
  GenMatrix left;
  GenMatrix right;
};

/// Phi^L_B, Phi^R_B extracted from phi on the (n+1)-strand extension.
PhiMatrices phi_matrices(const BraidWord& b);

/// Phi^L_{B^-1}(phi_B(A)) and Phi^R_{B^-1}(phi_B(A)), the two-sided inverses
/// of Phi^L_B and Phi^R_B.
PhiMatrices phi_matrix_inverses(const BraidWord& b);

}  // namespace xverse
