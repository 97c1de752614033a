#include "xverse/braid_rep.hpp"

#include "xverse/error.hpp"

namespace xverse {

PhiImage::PhiImage(int m) : m_(m), images_(static_cast<std::size_t>(m) * m) {
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) of(i, j) = NCPoly::gen(Generator::a(i, j));
}

std::size_t PhiImage::idx(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > m_ || i == j) throw InvalidInput("phi index out of range");
  return static_cast<std::size_t>(i - 1) * m_ + (j - 1);
}

NCPoly PhiImage::apply(const NCPoly& p) const {
  NCPoly out;
  for (const auto& t : p.terms()) {
    NCPoly prod = NCPoly::scalar(t.coeff, t.base);
    for (const auto& g : t.word) {
      if (g.family() != Family::A) throw InvalidInput("phi acts only on a-generators, got " + g.to_string());
      if (g.row() > m_ || g.col() > m_)
        throw InvalidInput("generator " + g.to_string() + " exceeds the strand count");
      prod = prod * of(g.row(), g.col());
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

GenMatrix PhiImage::apply(const GenMatrix& mat) const {
  return mat.map([this](const NCPoly& p) { return apply(p); });
}

NCPoly phi_generator_image(int k, int sign, int i, int j, int m) {
  if (k < 1 || k >= m) throw InvalidInput("generator index out of range");
  auto a = [](int r, int c) { return NCPoly::gen(Generator::a(r, c)); };
  const int k1 = k + 1;
  if (sign > 0) {
    if (i == k && j == k1) return a(k1, k);
    if (i == k1 && j == k) return a(k, k1);
    if (i == k) return -a(k1, j) - a(k1, k) * a(k, j);
    if (j == k) return -a(i, k1) - a(i, k) * a(k, k1);
    if (i == k1) return a(k, j);
    if (j == k1) return a(i, k);
    return a(i, j);
  }
  // Inverse images, solved from the sigma_k images above.
  if (i == k && j == k1) return a(k1, k);
  if (i == k1 && j == k) return a(k, k1);
  if (i == k) return a(k1, j);
  if (i == k1) return -a(k, j) - a(k, k1) * a(k1, j);
  if (j == k) return a(i, k1);
  if (j == k1) return -a(i, k) - a(i, k1) * a(k1, k);
  return a(i, j);
}

PhiImage phi_image(const BraidWord& b, int m) {
  if (m < b.strands()) throw InvalidInput("phi_image needs m >= strands");
  PhiImage cur(m);
  for (const auto& letter : b.letters()) {
    // phi_{B sigma}(x) = phi_B(phi_sigma(x)); only generators touching k, k+1 change.
    PhiImage next = cur;
    const int k = letter.index;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (i == j) continue;
        if (i != k && i != k + 1 && j != k && j != k + 1) continue;
        next.of(i, j) = cur.apply(phi_generator_image(k, letter.sign, i, j, m));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

NCPoly apply_phi(const BraidWord& b, const NCPoly& p) { return phi_image(b).apply(p); }

PhiMatrices phi_matrices(const BraidWord& b) {
  const int n = b.strands();
  const int ext = n + 1;
  BraidWord extended(ext, b.letters());
  PhiImage img = phi_image(extended, ext);
  auto touches_ext = [ext](const Generator& g) { return g.row() == ext || g.col() == ext; };

  PhiMatrices out{GenMatrix(n), GenMatrix(n)};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<Term>> left_row(n + 1), right_col(n + 1);
    for (const auto& t : img.of(i, ext).terms()) {
      if (t.word.empty()) throw StructuralError("phi^ext(a_{i,n+1}) has a scalar term");
      const Generator last = t.word.back();
      if (last.col() != ext || last.row() == ext)
        throw StructuralError("phi^ext(a_{i,n+1}) term does not end in a_{l,n+1}");
      for (std::size_t q = 0; q + 1 < t.word.size(); ++q)
        if (touches_ext(t.word[q])) throw StructuralError("extra index-(n+1) generator in phi^ext(a_{i,n+1})");
      left_row[last.row()].push_back(Term{t.coeff, t.base, Word(t.word.begin(), t.word.end() - 1)});
    }
    for (const auto& t : img.of(ext, i).terms()) {
      if (t.word.empty()) throw StructuralError("phi^ext(a_{n+1,i}) has a scalar term");
      const Generator first = t.word.front();
      if (first.row() != ext || first.col() == ext)
        throw StructuralError("phi^ext(a_{n+1,i}) term does not start with a_{n+1,l}");
      for (std::size_t q = 1; q < t.word.size(); ++q)
        if (touches_ext(t.word[q])) throw StructuralError("extra index-(n+1) generator in phi^ext(a_{n+1,i})");
      right_col[first.col()].push_back(Term{t.coeff, t.base, Word(t.word.begin() + 1, t.word.end())});
    }
    for (int l = 1; l <= n; ++l) {
      out.left.at(i, l) = NCPoly(std::move(left_row[l]));
      out.right.at(l, i) = NCPoly(std::move(right_col[l]));
    }
  }
  return out;
}

PhiMatrices phi_matrix_inverses(const BraidWord& b) {
  PhiMatrices inv = phi_matrices(braid_transform(b, TransformKind::Inverse));
  PhiImage img = phi_image(b);
  return {img.apply(inv.left), img.apply(inv.right)};
}

}  // namespace xverse
