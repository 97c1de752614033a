#include "xverse/abelian.hpp"

#include <algorithm>

#include "xverse/braid_rep.hpp"
#include "xverse/error.hpp"

namespace xverse {

std::vector<Generator> fp_variable_order(int n, int m) {
  std::vector<Generator> v;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) v.push_back(Generator::a(i, j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j && (i > n || j > n)) v.push_back(Generator::a(i, j));
  return v;
}

std::vector<FpPoly> abelian_phi(const BraidWord& b, int m, const PrimeField& f) {
  if (m < b.strands()) throw InvalidInput("abelian_phi needs at least as many strands as the braid");
  const std::vector<Generator> order = fp_variable_order(b.strands(), m);
  if (order.size() > static_cast<std::size_t>(kFpMaxVars))
    throw InvalidInput("too many generators for the abelian builder (" + std::to_string(order.size()) + ")");
  const Scalars none;
  std::vector<FpPoly> img;
  for (std::size_t k = 0; k < order.size(); ++k) img.push_back(FpPoly::variable(static_cast<int>(k)));

  // phi_B = phi_{s_1} o ... o phi_{s_L}: apply the letters from the right,
  // substituting the short closed forms into the current images.
  std::vector<FpPoly> local(order.size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    const int k = it->index;
    for (std::size_t q = 0; q < order.size(); ++q) {
      const int i = order[q].row(), j = order[q].col();
      local[q] = (i != k && i != k + 1 && j != k && j != k + 1)
                     ? FpPoly::variable(static_cast<int>(q))
                     : to_fp_poly(phi_generator_image(k, it->sign, i, j, m), order, f, none);
    }
    for (auto& p : img) p = compose(p, local, f);
  }
  return img;
}

AbelianPhiMatrices abelian_phi_matrices(const BraidWord& b, const PrimeField& f) {
  const int n = b.strands(), ext = n + 1;
  const std::vector<Generator> order = fp_variable_order(n, ext);
  const std::vector<FpPoly> img = abelian_phi(b, ext, f);
  auto index = [&](int i, int j) {
    return static_cast<int>(std::find(order.begin(), order.end(), Generator::a(i, j)) - order.begin());
  };
  const std::uint32_t base_mask = (1u << (n * (n - 1))) - 1;

  // phi(a_{i,ext}) = sum_l PhiL_il a_{l,ext}: split by the extension variable.
  auto split_linear = [&](const FpPoly& p, bool ext_col, std::vector<FpPoly>& out, int fixed) {
    std::vector<std::vector<FpTerm>> parts(static_cast<std::size_t>(n));
    for (const auto& t : p.terms()) {
      int found = -1;
      FpTerm stripped = t;
      for (int l = 1; l <= n; ++l) {
        const int v = ext_col ? index(l, ext) : index(ext, l);
        const auto e = t.exps[static_cast<std::size_t>(v)];
        if (!e) continue;
        if (e != 1 || found >= 0) throw StructuralError("extension variables do not occur linearly in phi");
        found = l;
        stripped.exps[static_cast<std::size_t>(v)] = 0;
      }
      if (found < 0) throw StructuralError("phi of an extension generator has a term without one");
      parts[static_cast<std::size_t>(found - 1)].push_back(stripped);
    }
    for (int l = 1; l <= n; ++l) {
      FpPoly entry = FpPoly::from_terms(std::move(parts[static_cast<std::size_t>(l - 1)]), f);
      if (entry.mask() & ~base_mask) throw StructuralError("Phi entry involves extension variables");
      const int row = ext_col ? fixed : l, col = ext_col ? l : fixed;
      out[static_cast<std::size_t>((row - 1) * n + (col - 1))] = std::move(entry);
    }
  };

  AbelianPhiMatrices m{std::vector<FpPoly>(static_cast<std::size_t>(n * n)),
                       std::vector<FpPoly>(static_cast<std::size_t>(n * n))};
  for (int i = 1; i <= n; ++i) {
    split_linear(img[static_cast<std::size_t>(index(i, ext))], true, m.left, i);
    split_linear(img[static_cast<std::size_t>(index(ext, i))], false, m.right, i);
  }
  return m;
}

namespace {

using Mat = std::vector<FpPoly>;  // row-major n x n

Mat matmul(const Mat& a, const Mat& b, int n, const PrimeField& f) {
  Mat c(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<FpTerm> acc;
      for (int k = 0; k < n; ++k) {
        const FpPoly p = mul(a[static_cast<std::size_t>(i * n + k)], b[static_cast<std::size_t>(k * n + j)], f);
        acc.insert(acc.end(), p.terms().begin(), p.terms().end());
      }
      c[static_cast<std::size_t>(i * n + j)] = FpPoly::from_terms(std::move(acc), f);
    }
  return c;
}

Mat matsub(const Mat& a, const Mat& b, const PrimeField& f) {
  Mat c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = add(a[i], scale(b[i], f.neg(1), f), f);
  return c;
}

std::uint32_t eval_unit(const BaseMonomial& m, const PrimeField& f, const Scalars& s) {
  return evaluate_scalar(mpz_class(1), m, f, s);
}

struct Structured {
  Mat Ahat, Acheck, Lam, LamInv;
};

Structured structured(int n, const std::vector<BaseMonomial>& lam, const PrimeField& f, const Scalars& s) {
  Structured m{Mat(static_cast<std::size_t>(n * n)), Mat(static_cast<std::size_t>(n * n)),
               Mat(static_cast<std::size_t>(n * n)), Mat(static_cast<std::size_t>(n * n))};
  const std::uint32_t muU = f.mul(s.mu, s.u), minus1 = f.neg(1);
  int var = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto k = static_cast<std::size_t>((i - 1) * n + (j - 1));
      if (i == j) {
        // diagonal of A_lower and A_upper is -1
        m.Ahat[k] = FpPoly::constant(f.mul(minus1, f.add(1, muU)));
        m.Acheck[k] = FpPoly::constant(f.mul(minus1, f.add(s.v, s.mu)));
        const std::uint32_t l = eval_unit(lam[static_cast<std::size_t>(i - 1)], f, s);
        m.Lam[k] = FpPoly::constant(l);
        m.LamInv[k] = FpPoly::constant(f.inv(l));
        continue;
      }
      const FpPoly a = FpPoly::variable(var++);
      m.Ahat[k] = i > j ? a : scale(a, muU, f);
      m.Acheck[k] = i > j ? scale(a, s.v, f) : scale(a, s.mu, f);
    }
  return m;
}

AbelianPresentation shell(const BraidWord& b, Flavor flavor, const PrimeField& f, const Scalars& s) {
  require_knot(b);
  AbelianPresentation out;
  out.braid = b;
  out.flavor = flavor;
  out.prime = f.p();
  out.scalars = s;
  out.variables = fp_variable_order(b.strands(), b.strands());
  return out;
}

void append(AbelianPresentation& out, const Mat& c, const Mat& d) {
  out.relations.insert(out.relations.end(), c.begin(), c.end());
  out.relations.insert(out.relations.end(), d.begin(), d.end());
}

}  // namespace

AbelianPresentation abelian_relations(const BraidWord& b, Flavor flavor, const PrimeField& f, const Scalars& s,
                                      const DgaOptions& options) {
  AbelianPresentation out = shell(b, flavor, f, s);
  const int n = b.strands();
  std::vector<BaseMonomial> lam = default_lambda(b, flavor);
  if (options.lam_override) {
    check_lambda_override(b, flavor, *options.lam_override);
    lam = *options.lam_override;
  }
  const Structured m = structured(n, lam, f, s);
  const AbelianPhiMatrices phi = abelian_phi_matrices(b, f);
  append(out, matsub(m.Ahat, matmul(m.Lam, matmul(phi.left, m.Acheck, n, f), n, f), f),
         matsub(m.Acheck, matmul(m.Ahat, matmul(phi.right, m.LamInv, n, f), n, f), f));
  return out;
}

AbelianPresentation abelian_relations_split(const BraidWord& b1, const BraidWord& b2, Flavor flavor,
                                            const PrimeField& f, const Scalars& s) {
  if (b1.strands() != b2.strands()) throw InvalidInput("split factors have different strand counts");
  const BraidWord b = b1 * b2;
  AbelianPresentation out = shell(b, flavor, f, s);
  const int n = b.strands();
  const Structured m = structured(n, default_lambda(b, flavor), f, s);
  const AbelianPhiMatrices left = abelian_phi_matrices(braid_transform(b1, TransformKind::Inverse), f);
  const AbelianPhiMatrices right = abelian_phi_matrices(b2, f);
  append(out, matsub(matmul(left.left, m.Ahat, n, f), matmul(m.Lam, matmul(right.left, m.Acheck, n, f), n, f), f),
         matsub(matmul(m.Acheck, left.right, n, f), matmul(m.Ahat, matmul(right.right, m.LamInv, n, f), n, f), f));
  return out;
}

AbelianPresentation abelian_relations_cut(const BraidWord& b, std::size_t cut, Flavor flavor, const PrimeField& f,
                                          const Scalars& s) {
  if (cut > b.length())
    throw InvalidInput("split position " + std::to_string(cut) + " exceeds braid length " +
                       std::to_string(b.length()));
  return abelian_relations_split(b.slice(0, cut), b.slice(cut, b.length()), flavor, f, s);
}

AbelianPresentation abelianize(const Ht0Presentation& p, const PrimeField& f, const Scalars& s) {
  AbelianPresentation out;
  out.braid = p.braid;
  out.flavor = p.flavor;
  out.prime = f.p();
  out.scalars = s;
  out.variables = p.variables;
  for (const auto& r : p.relations) out.relations.push_back(to_fp_poly(r, p.variables, f, s));
  return out;
}

}  // namespace xverse
