#include "xverse/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "xverse/error.hpp"

namespace xverse {

std::string_view flavor_name(Flavor f) noexcept {
  switch (f) {
    case Flavor::Minus: return "minus";
    case Flavor::Hat: return "hat";
    case Flavor::DoubleHat: return "doublehat";
    case Flavor::Infinity: return "infinity";
  }
  return "?";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "minus") return Flavor::Minus;
  if (text == "hat") return Flavor::Hat;
  if (text == "doublehat" || text == "double-hat") return Flavor::DoubleHat;
  if (text == "infinity" || text == "inf") return Flavor::Infinity;
  throw ParseError("unknown flavor '" + std::string(text) + "'");
}

char family_letter(Family f) noexcept { return static_cast<char>('a' + static_cast<int>(f)); }

int family_degree(Family f) noexcept {
  switch (f) {
    case Family::A: return 0;
    case Family::B:
    case Family::C:
    case Family::D: return 1;
    case Family::E:
    case Family::F: return 2;
  }
  return 0;
}

Generator::Generator(Family family, int row, int col) {
  if (row < 1 || row > 255 || col < 1 || col > 255)
    throw InvalidInput("generator index out of range");
  if ((family == Family::A || family == Family::B) && row == col)
    throw InvalidInput("a and b generators require row != col");
  code_ = (static_cast<std::uint32_t>(family) << 16) | (static_cast<std::uint32_t>(row) << 8) |
          static_cast<std::uint32_t>(col);
}

std::string Generator::to_string() const {
  std::string s(1, family_letter(family()));
  if (row() < 10 && col() < 10) {
    s += std::to_string(row());
    s += std::to_string(col());
  } else {
    s += "{" + std::to_string(row()) + "," + std::to_string(col()) + "}";
  }
  return s;
}

// ---------------------------------------------------------------------------

bool term_key_less(const Term& x, const Term& y) noexcept {
  if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
  for (std::size_t i = 0; i < x.word.size(); ++i) {
    if (x.word[i] != y.word[i]) return x.word[i] < y.word[i];
  }
  return x.base < y.base;
}

bool term_key_equal(const Term& x, const Term& y) noexcept {
  return x.base == y.base && x.word == y.word;
}

std::vector<Term> NCPoly::normalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_key_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && term_key_equal(out.back(), t)) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

NCPoly::NCPoly(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

NCPoly NCPoly::constant(long c) { return scalar(mpz_class(c), {}); }

NCPoly NCPoly::scalar(const mpz_class& c, BaseMonomial base) {
  NCPoly p;
  if (c != 0) p.terms_.push_back(Term{c, base, {}});
  return p;
}

NCPoly NCPoly::gen(Generator g) { return word(1, {}, Word{g}); }

NCPoly NCPoly::word(mpz_class c, BaseMonomial base, Word w) {
  NCPoly p;
  if (c != 0) p.terms_.push_back(Term{std::move(c), base, std::move(w)});
  return p;
}

int NCPoly::degree() const noexcept {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& g : terms_.front().word) d += g.degree();
  return d;
}

bool NCPoly::is_homogeneous() const noexcept {
  const int d0 = degree();
  for (const auto& t : terms_) {
    int d = 0;
    for (const auto& g : t.word) d += g.degree();
    if (d != d0) return false;
  }
  return true;
}

bool NCPoly::is_scalar() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.word.empty(); });
}

bool NCPoly::only_family(Family f) const noexcept {
  for (const auto& t : terms_)
    for (const auto& g : t.word)
      if (g.family() != f) return false;
  return true;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two canonical term lists; sign = +1 or -1 applied to b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_key_less(b[j], a[i])) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a[i].coeff + b[j].coeff) : mpz_class(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back(Term{std::move(c), a[i].base, a[i].word});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Word w;
      w.reserve(x.word.size() + y.word.size());
      w.insert(w.end(), x.word.begin(), x.word.end());
      w.insert(w.end(), y.word.begin(), y.word.end());
      prod.push_back(Term{x.coeff * y.coeff, x.base * y.base, std::move(w)});
    }
  }
  return NCPoly(std::move(prod));
}

NCPoly NCPoly::scaled(const mpz_class& c, BaseMonomial base) const {
  if (c == 0) return {};
  NCPoly r = *this;
  for (auto& t : r.terms_) {
    t.coeff *= c;
    t.base = t.base * base;
  }
  // Multiplying every base by the same monomial preserves the order.
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!term_key_equal(terms_[i], o.terms_[i]) || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void append_power(std::vector<std::string>& factors, const char* name, int e) {
  if (e == 0) return;
  if (e == 1)
    factors.emplace_back(name);
  else
    factors.push_back(std::string(name) + "^" + std::to_string(e));
}

std::vector<std::string> base_factors(const BaseMonomial& m) {
  std::vector<std::string> f;
  append_power(f, "L", m.lam);
  append_power(f, "m", m.mu);
  append_power(f, "U", m.u);
  append_power(f, "V", m.v);
  return f;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

}  // namespace

std::string to_string(const BaseMonomial& m) {
  auto f = base_factors(m);
  return f.empty() ? "1" : join(f, "*");
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    mpz_class mag = abs(t.coeff);
    auto factors = base_factors(t.base);
    for (const auto& g : t.word) factors.push_back(g.to_string());
    std::string body;
    if (factors.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = join(factors, "*");
    } else {
      body = mag.get_str() + "*" + join(factors, "*");
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  NCPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (s_.empty()) throw ParseError("empty polynomial text");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    }
    return NCPoly(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  int parse_exponent() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return static_cast<int>(parse_int());
    }
    return 1;
  }

  Term parse_term() {
    Term t{1, {}, {}};
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) fail("expected factor");
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        t.coeff *= mpz_class(std::string(s_.substr(start, pos_ - start)));
      } else if (ch == 'L' || ch == 'm' || ch == 'U' || ch == 'V') {
        ++pos_;
        int e = parse_exponent();
        if (ch == 'L') t.base.lam += e;
        if (ch == 'm') t.base.mu += e;
        if (ch == 'U') t.base.u += e;
        if (ch == 'V') t.base.v += e;
      } else if (ch >= 'a' && ch <= 'f') {
        ++pos_;
        auto fam = static_cast<Family>(ch - 'a');
        int row = 0, col = 0;
        if (pos_ < s_.size() && s_[pos_] == '{') {
          ++pos_;
          row = static_cast<int>(parse_int());
          skip_ws();
          if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ','");
          ++pos_;
          col = static_cast<int>(parse_int());
          skip_ws();
          if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
          ++pos_;
        } else {
          if (pos_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
              !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
            fail("expected two index digits");
          row = s_[pos_] - '0';
          col = s_[pos_ + 1] - '0';
          pos_ += 2;
        }
        int e = parse_exponent();
        if (e < 0) fail("negative generator exponent");
        for (int k = 0; k < e; ++k) t.word.emplace_back(fam, row, col);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------

NCPoly specialize(const NCPoly& p, Flavor flavor, int sl) {
  if (flavor == Flavor::Minus) return p;
  if (flavor == Flavor::Infinity && (sl % 2 == 0))
    throw InvalidInput("infinity flavor needs odd self-linking number (got " + std::to_string(sl) +
                       "); the closure is not a knot");
  std::vector<Term> out;
  out.reserve(p.size());
  const int shift = (sl + 1) / 2;
  for (const auto& t : p.terms()) {
    if (flavor != Flavor::Infinity && (t.base.u < 0 || t.base.v < 0))
      throw InvalidInput("negative U/V exponent outside the infinity flavor");
    Term r = t;
    switch (flavor) {
      case Flavor::Hat:
        if (t.base.u > 0) continue;
        r.base.v = 0;
        break;
      case Flavor::DoubleHat:
        if (t.base.u > 0 || t.base.v > 0) continue;
        break;
      case Flavor::Infinity:
        r.base.u -= t.base.lam * shift;
        r.base.v += t.base.lam * shift;
        break;
      case Flavor::Minus: break;
    }
    out.push_back(std::move(r));
  }
  return NCPoly(std::move(out));
}

std::uint32_t evaluate_scalar(const mpz_class& coeff, const BaseMonomial& base, const PrimeField& field,
                              const Scalars& s) {
  if (s.lam == 0 || s.mu == 0) throw InvalidInput("lambda and mu must be nonzero");
  std::uint32_t r = field.reduce(coeff);
  if (r == 0) return 0;
  r = field.mul(r, field.pow(s.lam, base.lam));
  r = field.mul(r, field.pow(s.mu, base.mu));
  if (base.u != 0) r = field.mul(r, field.pow(s.u, base.u));
  if (base.v != 0) r = field.mul(r, field.pow(s.v, base.v));
  return r;
}

std::uint32_t evaluate_abelian(const NCPoly& p, const std::function<std::uint32_t(Generator)>& value_of,
                               const PrimeField& field, const Scalars& s) {
  std::uint32_t acc = 0;
  for (const auto& t : p.terms()) {
    std::uint32_t x = evaluate_scalar(t.coeff, t.base, field, s);
    for (const auto& g : t.word) {
      if (x == 0) break;
      x = field.mul(x, field.reduce(static_cast<std::int64_t>(value_of(g))));
    }
    acc = field.add(acc, x);
  }
  return acc;
}

std::uint32_t evaluate_abelian(const NCPoly& p, const std::map<Generator, std::uint32_t>& assign,
                               const PrimeField& field, const Scalars& s) {
  return evaluate_abelian(
      p,
      [&](Generator g) -> std::uint32_t {
        auto it = assign.find(g);
        if (it == assign.end()) throw InvalidInput("generator " + g.to_string() + " is not assigned");
        return it->second;
      },
      field, s);
}

NCPoly op_involution(const NCPoly& p) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    // Only odd-odd pairs contribute, so the sign is (-1)^{k(k-1)/2}
    // with k the number of odd-degree letters.
    long odd = 0;
    for (const auto& g : t.word) odd += g.degree() % 2;
    Term r = t;
    std::reverse(r.word.begin(), r.word.end());
    if ((odd * (odd - 1) / 2) % 2 == 1) r.coeff = -r.coeff;
    out.push_back(std::move(r));
  }
  return NCPoly(std::move(out));
}

nlohmann::json to_json(const NCPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& g : t.word)
      word.push_back(nlohmann::json::array({std::string(1, family_letter(g.family())), g.row(), g.col()}));
    terms.push_back({{"coeff", t.coeff.get_str()},
                     {"lam", t.base.lam},
                     {"mu", t.base.mu},
                     {"u", t.base.u},
                     {"v", t.base.v},
                     {"word", std::move(word)}});
  }
  return {{"terms", std::move(terms)}};
}

NCPoly ncpoly_from_json(const nlohmann::json& j) {
  std::vector<Term> terms;
  try {
    for (const auto& t : j.at("terms")) {
      Term r;
      r.coeff = mpz_class(t.at("coeff").get<std::string>());
      r.base = {t.at("lam").get<int>(), t.at("mu").get<int>(), t.at("u").get<int>(), t.at("v").get<int>()};
      for (const auto& g : t.at("word")) {
        auto fam = g.at(0).get<std::string>();
        if (fam.size() != 1 || fam[0] < 'a' || fam[0] > 'f') throw ParseError("bad generator family");
        r.word.emplace_back(static_cast<Family>(fam[0] - 'a'), g.at(1).get<int>(), g.at(2).get<int>());
      }
      terms.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed coefficient in polynomial JSON");
  }
  return NCPoly(std::move(terms));
}

// ---------------------------------------------------------------------------

std::size_t GenMatrix::idx(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw InvalidInput("matrix index out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

GenMatrix GenMatrix::identity(int n) {
  GenMatrix m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = NCPoly::constant(1);
  return m;
}

GenMatrix GenMatrix::diagonal(std::span<const BaseMonomial> diag) {
  GenMatrix m(static_cast<int>(diag.size()));
  for (int i = 1; i <= m.n(); ++i) m.at(i, i) = NCPoly::monomial(diag[i - 1]);
  return m;
}

GenMatrix& GenMatrix::operator+=(const GenMatrix& o) {
  if (n_ != o.n_) throw InvalidInput("matrix size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

GenMatrix& GenMatrix::operator-=(const GenMatrix& o) {
  if (n_ != o.n_) throw InvalidInput("matrix size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

GenMatrix operator*(const GenMatrix& a, const GenMatrix& b) {
  if (a.n_ != b.n_) throw InvalidInput("matrix size mismatch");
  const int n = a.n_;
  GenMatrix r(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::vector<Term> acc;
      for (int l = 1; l <= n; ++l) {
        const NCPoly& x = a.at(i, l);
        const NCPoly& y = b.at(l, j);
        if (x.is_zero() || y.is_zero()) continue;
        for (const auto& tx : x.terms()) {
          for (const auto& ty : y.terms()) {
            Word w;
            w.reserve(tx.word.size() + ty.word.size());
            w.insert(w.end(), tx.word.begin(), tx.word.end());
            w.insert(w.end(), ty.word.begin(), ty.word.end());
            acc.push_back(Term{tx.coeff * ty.coeff, tx.base * ty.base, std::move(w)});
          }
        }
      }
      r.at(i, j) = NCPoly(std::move(acc));
    }
  }
  return r;
}

GenMatrix operator*(const NCPoly& s, const GenMatrix& m) {
  GenMatrix r(m.n_);
  for (std::size_t k = 0; k < m.entries_.size(); ++k) r.entries_[k] = s * m.entries_[k];
  return r;
}

GenMatrix GenMatrix::map(const std::function<NCPoly(const NCPoly&)>& f) const {
  GenMatrix r(n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = f(entries_[k]);
  return r;
}

bool GenMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const NCPoly& p) { return p.is_zero(); });
}

nlohmann::json to_json(const GenMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= m.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= m.n(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"rows", std::move(rows)}};
}

}  // namespace xverse
