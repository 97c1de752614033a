#include "xverse/dga.hpp"

#include "xverse/error.hpp"

namespace xverse {

namespace {

NCPoly gen_poly(Family f, int i, int j) { return NCPoly::gen(Generator(f, i, j)); }

NCPoly mono(int lam, int mu, int u, int v) { return NCPoly::monomial({lam, mu, u, v}); }

GenMatrix generator_matrix(Family f, int n) {
  GenMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j || (f != Family::A && f != Family::B)) m.at(i, j) = gen_poly(f, i, j);
  return m;
}

void add_generators(std::vector<Generator>& out, Family f, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j || (f != Family::A && f != Family::B)) out.emplace_back(f, i, j);
}

}  // namespace

const NCPoly& DgaPresentation::d(Generator g) const {
  auto it = diff.find(g);
  if (it == diff.end()) throw InvalidInput("unknown generator " + g.to_string());
  return it->second;
}

std::vector<BaseMonomial> default_lambda(const BraidWord& b, Flavor flavor) {
  const BraidStats s = braid_stats(b);
  std::vector<BaseMonomial> diag(static_cast<std::size_t>(b.strands()));
  diag[0] = {1, -s.writhe, 0, 0};
  if (flavor == Flavor::Infinity) {
    if (s.self_linking % 2 == 0) throw InvalidInput("infinity flavor needs odd self-linking number");
    const int shift = (s.self_linking + 1) / 2;
    diag[0].u = -shift;
    diag[0].v = shift;
  }
  return diag;
}

BaseMonomial lambda_determinant(const std::vector<BaseMonomial>& diag) {
  BaseMonomial d;
  for (const auto& m : diag) d = d * m;
  return d;
}

void check_lambda_override(const BraidWord& b, Flavor flavor, const std::vector<BaseMonomial>& diag) {
  if (static_cast<int>(diag.size()) != b.strands())
    throw InvalidInput("Lambda override has " + std::to_string(diag.size()) + " entries, expected " +
                       std::to_string(b.strands()));
  if (flavor != Flavor::Infinity)
    for (const auto& m : diag)
      if (m.u != 0 || m.v != 0) throw InvalidInput("Lambda override entries must be units of R");
  if (lambda_determinant(diag) != lambda_determinant(default_lambda(b, flavor)))
    throw InvalidInput("det Lambda mismatch: override determinant " + to_string(lambda_determinant(diag)) +
                       " != " + to_string(lambda_determinant(default_lambda(b, flavor))));
}

StructuredMatrices structured_matrices(int n, const std::vector<BaseMonomial>& lam) {
  StructuredMatrices s;
  s.n = n;
  s.A = generator_matrix(Family::A, n);
  s.B = generator_matrix(Family::B, n);
  s.C = generator_matrix(Family::C, n);
  s.D = generator_matrix(Family::D, n);
  s.E = generator_matrix(Family::E, n);
  s.F = generator_matrix(Family::F, n);
  s.A_lower = GenMatrix(n);
  s.A_upper = GenMatrix(n);
  s.Ahat = GenMatrix(n);
  s.Acheck = GenMatrix(n);
  s.Bhat = GenMatrix(n);
  s.Bcheck = GenMatrix(n);
  const NCPoly muU = mono(0, 1, 1, 0), mu = mono(0, 1, 0, 0), V = mono(0, 0, 0, 1);
  for (int i = 1; i <= n; ++i) {
    s.A.at(i, i) = NCPoly::constant(-2);
    s.A_lower.at(i, i) = NCPoly::constant(-1);
    s.A_upper.at(i, i) = NCPoly::constant(-1);
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const NCPoly a = gen_poly(Family::A, i, j), b = gen_poly(Family::B, i, j);
      if (i > j) {
        s.A_lower.at(i, j) = a;
        s.Bhat.at(i, j) = b;
        s.Bcheck.at(i, j) = V * b;
      } else {
        s.A_upper.at(i, j) = a;
        s.Bhat.at(i, j) = muU * b;
        s.Bcheck.at(i, j) = mu * b;
      }
    }
  }
  s.Ahat = s.A_lower + muU * s.A_upper;
  s.Acheck = V * s.A_lower + mu * s.A_upper;
  s.Lam = GenMatrix::diagonal(lam);
  std::vector<BaseMonomial> inv;
  for (const auto& m : lam) inv.push_back(m.inverse());
  s.LamInv = GenMatrix::diagonal(inv);
  return s;
}

void require_knot(const BraidWord& b) {
  const BraidStats s = braid_stats(b);
  if (!s.is_knot)
    throw InvalidInput("links unsupported: closure of '" + b.to_string() + "' has " +
                       std::to_string(s.components) + " components");
}

namespace {

struct Prepared {
  BraidStats stats;
  std::vector<BaseMonomial> lam;
  StructuredMatrices m;
  PhiMatrices phi;
  PhiImage image{1};
};

Prepared prepare(const BraidWord& b, Flavor flavor, const DgaOptions& options) {
  require_knot(b);
  Prepared p;
  p.stats = braid_stats(b);
  if (options.lam_override) {
    check_lambda_override(b, flavor, *options.lam_override);
    p.lam = *options.lam_override;
  } else {
    p.lam = default_lambda(b, flavor);
  }
  p.m = structured_matrices(b.strands(), p.lam);
  p.phi = phi_matrices(b);
  p.image = phi_image(b);
  return p;
}

// Lambda'_B already carries the infinity substitution, so only U/V
// specializations remain to be applied here.
NCPoly finish(const NCPoly& p, Flavor flavor, int sl) {
  if (flavor == Flavor::Infinity || flavor == Flavor::Minus) return p;
  return specialize(p, flavor, sl);
}

DgaPresentation skeleton(const BraidWord& b, Flavor flavor, const Prepared& p, bool modified) {
  DgaPresentation dga;
  dga.braid = b;
  dga.flavor = flavor;
  dga.modified = modified;
  dga.self_linking = p.stats.self_linking;
  dga.lam_matrix = p.m.Lam;
  dga.phi_l = p.phi.left;
  dga.phi_r = p.phi.right;
  return dga;
}

}  // namespace

DgaPresentation build_dga(const BraidWord& b, Flavor flavor, const DgaOptions& options) {
  const Prepared p = prepare(b, flavor, options);
  const StructuredMatrices& m = p.m;
  DgaPresentation dga = skeleton(b, flavor, p, false);
  const int n = b.strands();
  const int sl = p.stats.self_linking;

  const GenMatrix lam_phil = m.Lam * p.phi.left;
  const GenMatrix phir_laminv = p.phi.right * m.LamInv;
  const GenMatrix dB = m.A - m.Lam * p.image.apply(m.A) * m.LamInv;
  const GenMatrix dC = m.Ahat - lam_phil * m.Acheck;
  const GenMatrix dD = m.Acheck - m.Ahat * phir_laminv;
  const GenMatrix dE = m.Bhat - m.C - lam_phil * m.D;
  const GenMatrix dF = m.Bcheck - m.D - m.C * phir_laminv;
  for (int i = 1; i <= n; ++i)
    if (!dB.at(i, i).is_zero()) throw StructuralError("diagonal of d(B) is not zero");

  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F})
    add_generators(dga.generators, f, n);
  for (const auto& g : dga.generators) {
    const int i = g.row(), j = g.col();
    NCPoly img;
    switch (g.family()) {
      case Family::A: break;
      case Family::B: img = dB.at(i, j); break;
      case Family::C: img = dC.at(i, j); break;
      case Family::D: img = dD.at(i, j); break;
      case Family::E: img = dE.at(i, j); break;
      case Family::F: img = dF.at(i, j); break;
    }
    dga.diff.emplace(g, finish(img, flavor, sl));
  }
  return dga;
}

DgaPresentation build_modified_dga(const BraidWord& b, Flavor flavor, const DgaOptions& options) {
  const Prepared p = prepare(b, flavor, options);
  const StructuredMatrices& m = p.m;
  DgaPresentation dga = skeleton(b, flavor, p, true);
  const int n = b.strands();
  const int sl = p.stats.self_linking;
  const NCPoly U = mono(0, 0, 1, 0), V = mono(0, 0, 0, 1);

  const GenMatrix lam_phil_d = m.Lam * p.phi.left * m.D;
  const GenMatrix c_phir_laminv = m.C * p.phi.right * m.LamInv;
  const GenMatrix dC = m.Ahat - m.Lam * p.phi.left * m.Acheck;
  const GenMatrix dD = m.Acheck - m.Ahat * p.phi.right * m.LamInv;
  const GenMatrix e_diag = m.C + lam_phil_d;
  const GenMatrix e_upper = m.C - U * m.D + lam_phil_d - U * c_phir_laminv;
  const GenMatrix f_diag = m.D + c_phir_laminv;
  const GenMatrix f_lower = m.D - V * m.C + c_phir_laminv - V * lam_phil_d;

  add_generators(dga.generators, Family::A, n);
  add_generators(dga.generators, Family::C, n);
  add_generators(dga.generators, Family::D, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) dga.generators.push_back(Generator::e(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) dga.generators.push_back(Generator::f(i, j));

  for (const auto& g : dga.generators) {
    const int i = g.row(), j = g.col();
    NCPoly img;
    switch (g.family()) {
      case Family::A: break;
      case Family::C: img = dC.at(i, j); break;
      case Family::D: img = dD.at(i, j); break;
      case Family::E: img = i == j ? e_diag.at(i, j) : e_upper.at(i, j); break;
      case Family::F: img = i == j ? f_diag.at(i, j) : f_lower.at(i, j); break;
      case Family::B: throw StructuralError("modified DGA has no b generators");
    }
    dga.diff.emplace(g, finish(img, flavor, sl));
  }
  return dga;
}

NCPoly differential(const DgaPresentation& dga, const NCPoly& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int prefix_degree = 0;
    for (std::size_t pos = 0; pos < t.word.size(); ++pos) {
      const Generator g = t.word[pos];
      const NCPoly& dg = dga.d(g);
      const bool negative = prefix_degree % 2 == 1;
      for (const auto& s : dg.terms()) {
        Word w;
        w.reserve(t.word.size() + s.word.size());
        w.insert(w.end(), t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(pos));
        w.insert(w.end(), s.word.begin(), s.word.end());
        w.insert(w.end(), t.word.begin() + static_cast<std::ptrdiff_t>(pos) + 1, t.word.end());
        mpz_class c = t.coeff * s.coeff;
        if (negative) c = -c;
        out.push_back(Term{std::move(c), t.base * s.base, std::move(w)});
      }
      prefix_degree += g.degree();
    }
  }
  return NCPoly(std::move(out));
}

DSquaredReport verify_d_squared(const DgaPresentation& dga) {
  DSquaredReport r;
  for (const auto& g : dga.generators) {
    NCPoly dd = differential(dga, dga.d(g));
    if (!dd.is_zero()) r.failures.emplace_back(g, std::move(dd));
  }
  return r;
}

std::vector<Generator> grading_violations(const DgaPresentation& dga) {
  std::vector<Generator> bad;
  for (const auto& g : dga.generators) {
    const NCPoly& img = dga.d(g);
    if (img.is_zero()) continue;
    if (!img.is_homogeneous() || img.degree() != g.degree() - 1) bad.push_back(g);
  }
  return bad;
}

IdentityReport verify_phi_factorization(const BraidWord& b) {
  IdentityReport r;
  const StructuredMatrices m = structured_matrices(b.strands(), default_lambda(b, Flavor::Minus));
  const PhiMatrices phi = phi_matrices(b);
  const PhiImage img = phi_image(b);
  auto check = [&](const char* name, const GenMatrix& x) {
    if (!(img.apply(x) == phi.left * x * phi.right)) r.failures.emplace_back(name);
  };
  check("phi(A_lower) = PhiL A_lower PhiR", m.A_lower);
  check("phi(A_upper) = PhiL A_upper PhiR", m.A_upper);
  check("phi(Ahat) = PhiL Ahat PhiR", m.Ahat);
  check("phi(Acheck) = PhiL Acheck PhiR", m.Acheck);
  return r;
}

IdentityReport verify_degree0_identities(const BraidWord& b) {
  IdentityReport r;
  require_knot(b);
  const int n = b.strands();
  const StructuredMatrices m = structured_matrices(n, default_lambda(b, Flavor::Minus));
  const PhiMatrices phi = phi_matrices(b);
  const PhiImage img = phi_image(b);
  const GenMatrix rel_c = m.Ahat - m.Lam * phi.left * m.Acheck;
  const GenMatrix rel_d = m.Acheck - m.Ahat * phi.right * m.LamInv;
  const GenMatrix conj_hat = m.Ahat - m.Lam * img.apply(m.Ahat) * m.LamInv;
  const GenMatrix conj_check = m.Acheck - m.Lam * img.apply(m.Acheck) * m.LamInv;

  if (!(conj_hat == rel_c + m.Lam * phi.left * rel_d)) r.failures.emplace_back("Ahat decomposition");
  if (!(conj_check == rel_d + rel_c * phi.right * m.LamInv)) r.failures.emplace_back("Acheck decomposition");

  const DgaPresentation dga = build_dga(b, Flavor::Minus);
  const GenMatrix d_bhat = m.Bhat.map([&](const NCPoly& p) { return differential(dga, p); });
  const GenMatrix d_bcheck = m.Bcheck.map([&](const NCPoly& p) { return differential(dga, p); });
  if (!(d_bhat == conj_hat)) r.failures.emplace_back("d(Bhat) = Ahat - Lam phi(Ahat) Lam^-1");
  if (!(d_bcheck == conj_check)) r.failures.emplace_back("d(Bcheck) = Acheck - Lam phi(Acheck) Lam^-1");

  // d(B) is zero on the diagonal, matches the first matrix below it and
  // mu^-1 times the second above it.
  const NCPoly mu = NCPoly::monomial({0, 1, 0, 0});
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const NCPoly& db = dga.d(Generator::b(i, j));
      if (i > j && !(db == conj_hat.at(i, j))) {
        r.failures.push_back("d(b" + std::to_string(i) + std::to_string(j) + ") below diagonal");
      }
      if (i < j && !(mu * db == conj_check.at(i, j))) {
        r.failures.push_back("d(b" + std::to_string(i) + std::to_string(j) + ") above diagonal");
      }
    }
  }
  return r;
}

}  // namespace xverse
