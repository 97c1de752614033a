#include "xverse/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "xverse/error.hpp"

namespace xverse {

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidInput("a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw InvalidInput("letter index " + std::to_string(l.index) + " out of range for " +
                         std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw InvalidInput("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strands_ != o.strands_) throw InvalidInput("strand count mismatch in braid product");
  std::vector<Letter> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(strands_, std::move(l));
}

BraidWord BraidWord::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > letters_.size()) throw InvalidInput("braid slice out of range");
  return BraidWord(strands_, std::vector<Letter>(letters_.begin() + begin, letters_.begin() + end));
}

std::string BraidWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters_[i].index * letters_[i].sign);
  }
  return s;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  int max_index = 0;
  while (in >> tok) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') throw ParseError("braid letter '" + tok + "' is not an integer");
    if (v == 0) throw ParseError("braid letter 0 is not a generator");
    if (v > 1000 || v < -1000) throw ParseError("braid letter '" + tok + "' out of range");
    const int k = static_cast<int>(std::labs(v));
    letters.push_back({k, v > 0 ? 1 : -1});
    max_index = std::max(max_index, k);
  }
  int n = max_index + 1;
  if (strands) {
    if (*strands < n)
      throw ParseError("explicit strand count " + std::to_string(*strands) + " is smaller than " +
                       std::to_string(n));
    n = *strands;
  }
  return BraidWord(n, std::move(letters));
}

BraidStats braid_stats(const BraidWord& b) {
  BraidStats s;
  s.strands = b.strands();
  for (const auto& l : b.letters()) s.writhe += l.sign;
  s.self_linking = s.writhe - s.strands;
  // at_position[q] = strand currently at position q; letters act left to right.
  std::vector<int> at_position(s.strands + 1);
  for (int i = 1; i <= s.strands; ++i) at_position[i] = i;
  for (const auto& l : b.letters()) std::swap(at_position[l.index], at_position[l.index + 1]);
  s.permutation.assign(s.strands, 0);
  for (int q = 1; q <= s.strands; ++q) s.permutation[at_position[q] - 1] = q;
  std::vector<bool> seen(s.strands, false);
  s.components = 0;
  for (int i = 0; i < s.strands; ++i) {
    if (seen[i]) continue;
    ++s.components;
    for (int j = i; !seen[j]; j = s.permutation[j] - 1) seen[j] = true;
  }
  s.is_knot = s.components == 1;
  return s;
}

BraidWord markov_move(const BraidWord& b, const MarkovMove& move) {
  switch (move.kind) {
    case MoveKind::Conjugate: {
      if (move.k < 1 || move.k > b.strands() - 1)
        throw InvalidInput("conjugation index " + std::to_string(move.k) + " out of range");
      if (move.sign != 1 && move.sign != -1) throw InvalidInput("conjugation sign must be +1 or -1");
      std::vector<Letter> l;
      l.reserve(b.length() + 2);
      l.push_back({move.k, -move.sign});
      l.insert(l.end(), b.letters().begin(), b.letters().end());
      l.push_back({move.k, move.sign});
      return BraidWord(b.strands(), std::move(l));
    }
    case MoveKind::StabPos:
    case MoveKind::StabNeg: {
      std::vector<Letter> l;
      l.reserve(b.length() + 1);
      for (const auto& x : b.letters()) l.push_back({x.index + 1, x.sign});
      l.push_back({1, move.kind == MoveKind::StabPos ? 1 : -1});
      return BraidWord(b.strands() + 1, std::move(l));
    }
  }
  throw InvalidInput("unknown move");
}

BraidWord braid_transform(const BraidWord& b, TransformKind kind) {
  std::vector<Letter> l = b.letters();
  switch (kind) {
    case TransformKind::Reverse: std::reverse(l.begin(), l.end()); break;
    case TransformKind::Star:
      for (auto& x : l) x = {b.strands() - x.index, -x.sign};
      break;
    case TransformKind::Inverse:
      std::reverse(l.begin(), l.end());
      for (auto& x : l) x.sign = -x.sign;
      break;
  }
  return BraidWord(b.strands(), std::move(l));
}

BraidWord rotate(const BraidWord& b, std::size_t r) {
  if (b.length() == 0) return b;
  std::vector<Letter> l = b.letters();
  std::rotate(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(r % l.size()), l.end());
  return BraidWord(b.strands(), std::move(l));
}

}  // namespace xverse
