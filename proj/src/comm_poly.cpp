#include "xverse/comm_poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

#include "xverse/error.hpp"

namespace xverse {

CommPoly CommPoly::constant(const mpz_class& c) { return monomial(c, CommExp{}); }

CommPoly CommPoly::var(int i, int e) {
  CommExp x{};
  x[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(e);
  return monomial(1, x);
}

CommPoly CommPoly::monomial(const mpz_class& c, const CommExp& e) {
  CommPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

void CommPoly::add_term(const CommExp& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool CommPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == CommExp{});
}

int CommPoly::degree(int v) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(v)]);
  return d;
}

int CommPoly::min_degree(int v) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min<int>(d, e[static_cast<std::size_t>(v)]);
  return d;
}

int CommPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool CommPoly::uses(int v) const {
  for (const auto& [e, c] : terms_)
    if (e[static_cast<std::size_t>(v)] != 0) return true;
  return false;
}

CommPoly CommPoly::coeff(int v, int d) const {
  CommPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(v)] != d) continue;
    CommExp f = e;
    f[static_cast<std::size_t>(v)] = 0;
    out.add_term(f, c);
  }
  return out;
}

CommPoly CommPoly::substitute(int v, const mpz_class& value) const {
  CommPoly out;
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(v)];
    mpz_class factor;
    if (k >= 0) {
      mpz_pow_ui(factor.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(k));
    } else {
      if (value != 1 && value != -1) throw InvalidInput("negative exponent at a non-unit value");
      factor = (value == -1 && (-k) % 2) ? -1 : 1;
    }
    CommExp f = e;
    f[static_cast<std::size_t>(v)] = 0;
    out.add_term(f, c * factor);
  }
  return out;
}

CommExp CommPoly::min_exponents() const {
  CommExp m{};
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

CommPoly CommPoly::shifted(const CommExp& s) const {
  CommPoly out;
  for (const auto& [e, c] : terms_) {
    CommExp f;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<std::int16_t>(e[i] + s[i]);
    out.terms_.emplace(f, c);
  }
  return out;
}

mpz_class CommPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::optional<CommPoly> CommPoly::divide_exact(const CommPoly& d) const {
  if (d.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (is_zero()) return CommPoly{};
  CommPoly rem = *this;
  CommPoly q;
  const auto& [de, dc] = *d.terms_.begin();
  // Lex leading terms; exponent differences may be negative for Laurent
  // inputs, so bound the loop by a monomial count guard instead.
  std::size_t guard = 0;
  const std::size_t max_steps = 1 + 4 * (size() + 1) * (d.size() + 1) * 64;
  while (!rem.is_zero()) {
    if (++guard > max_steps) return std::nullopt;
    const CommExp re = rem.terms_.begin()->first;
    const mpz_class rc = rem.terms_.begin()->second;
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    CommExp s;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::int16_t>(re[i] - de[i]);
    const CommPoly t = monomial(rc / dc, s);
    q += t;
    rem -= t * d;
    if (!rem.is_zero()) {
      // The new leading term must be strictly smaller, otherwise division fails.
      if (!(rem.terms_.begin()->first < re)) return std::nullopt;
    }
  }
  return q;
}

CommPoly CommPoly::operator-() const {
  CommPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      CommExp e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  return out;
}

namespace {

std::string var_name(int i) {
  switch (i) {
    case kLam: return "L";
    case kMu: return "m";
    case kU: return "U";
    case kV: return "V";
    default: return "x" + std::to_string(i - kX0 + 1);
  }
}

}  // namespace

std::string CommPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    std::vector<std::string> f;
    for (int i = 0; i < kCommVars; ++i) {
      const int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      f.push_back(k == 1 ? var_name(i) : var_name(i) + "^" + std::to_string(k));
    }
    std::string body;
    if (mag != 1 || f.empty()) body = mag.get_str();
    for (const auto& x : f) body += (body.empty() ? "" : "*") + x;
    if (first)
      s += (c < 0 ? "-" : "") + body;
    else
      s += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

CommPoly normalize_up_to_unit(const CommPoly& p) {
  if (p.is_zero()) return p;
  CommExp m = p.min_exponents();
  for (auto& x : m) x = static_cast<std::int16_t>(-x);
  CommPoly q = p.shifted(m);
  mpz_class g = q.content();
  if (q.terms().begin()->second < 0) g = -g;
  CommPoly out;
  for (const auto& [e, c] : q.terms()) out += CommPoly::monomial(c / g, e);
  return out;
}

CommPoly parse_comm_poly(const std::string& text) {
  CommPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> long {
    std::size_t j = i;
    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i || (j == i + 1 && !std::isdigit(static_cast<unsigned char>(text[i]))))
      throw ParseError("expected integer at position " + std::to_string(i));
    long v = std::stol(text.substr(i, j - i));
    i = j;
    return v;
  };
  skip();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected + or - at position " + std::to_string(i));
    }
    first = false;
    skip();
    mpz_class c = sign;
    CommExp e{};
    bool any = false;
    for (;;) {
      skip();
      if (i >= text.size()) {
        if (any) throw ParseError("dangling '*'");
        break;
      }
      const char ch = text[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        c *= mpz_class(text.substr(i, j - i));
        i = j;
      } else {
        int v;
        if (ch == 'L') v = kLam;
        else if (ch == 'm') v = kMu;
        else if (ch == 'U') v = kU;
        else if (ch == 'V') v = kV;
        else if (ch == 'x') {
          ++i;
          const long k = read_int();
          if (k < 1 || k > kCommVars - kX0) throw ParseError("auxiliary variable index out of range");
          v = kX0 + static_cast<int>(k) - 1;
          --i;
        } else {
          throw ParseError(std::string("unexpected character '") + ch + "'");
        }
        ++i;
        int k = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          k = static_cast<int>(read_int());
        }
        e[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(e[static_cast<std::size_t>(v)] + k);
      }
      any = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("empty term");
    out += CommPoly::monomial(c, e);
    skip();
  }
  return out;
}

CommPoly sylvester_determinant(const CommPoly& f, const CommPoly& g, int v) {
  const int m = f.degree(v), n = g.degree(v);
  if (f.min_degree(v) < 0 || g.min_degree(v) < 0) throw InvalidInput("negative exponent in the elimination variable");
  const int N = m + n;
  if (N == 0) return CommPoly::constant(1);
  std::vector<std::vector<CommPoly>> M(static_cast<std::size_t>(N), std::vector<CommPoly>(static_cast<std::size_t>(N)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(v, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeff(v, n - k);

  // Bareiss elimination with row swaps.
  bool negate = false;
  CommPoly prev = CommPoly::constant(1);
  for (int k = 0; k + 1 < N; ++k) {
    const auto K = static_cast<std::size_t>(k);
    if (M[K][K].is_zero()) {
      std::size_t p = K + 1;
      while (p < static_cast<std::size_t>(N) && M[p][K].is_zero()) ++p;
      if (p == static_cast<std::size_t>(N)) return CommPoly{};
      std::swap(M[p], M[K]);
      negate = !negate;
    }
    for (std::size_t i = K + 1; i < static_cast<std::size_t>(N); ++i) {
      for (std::size_t j = K + 1; j < static_cast<std::size_t>(N); ++j) {
        CommPoly num = M[i][j] * M[K][K] - M[i][K] * M[K][j];
        auto q = num.divide_exact(prev);
        if (!q) throw StructuralError("Bareiss step is not exact");
        M[i][j] = std::move(*q);
      }
      M[i][K] = CommPoly{};
    }
    prev = M[K][K];
  }
  CommPoly det = M[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
  return negate ? -det : det;
}

CommPoly sylvester_resultant(const CommPoly& f, const CommPoly& g, int v) {
  if (f.is_zero() || g.is_zero()) return CommPoly{};
  // Clear negative exponents by monomial factors; they only change the
  // result by a unit (up to normalization).
  auto clear = [](const CommPoly& p) {
    CommExp s = p.min_exponents();
    for (auto& x : s) x = static_cast<std::int16_t>(x < 0 ? -x : 0);
    return p.shifted(s);
  };
  const CommPoly F = clear(f), G = clear(g);
  if (F.degree(v) == 0 && G.degree(v) == 0) throw InvalidInput("both polynomials are constant in the elimination variable");
  return normalize_up_to_unit(sylvester_determinant(F, G, v));
}

}  // namespace xverse
