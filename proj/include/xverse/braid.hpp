#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xverse {

/// One Artin generator sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;

  bool operator==(const Letter&) const = default;
};

/// A braid word in B_n. Words are never freely reduced.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws InvalidInput when strands < 1 or a letter is out of range.
  BraidWord(int strands, std::vector<Letter> letters);

  /// The identity braid in B_n.
  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  /// Concatenation; strand counts must agree.
  BraidWord operator*(const BraidWord& o) const;
  /// Letters [begin, end) as a braid with the same strand count.
  BraidWord slice(std::size_t begin, std::size_t end) const;

  bool operator==(const BraidWord&) const = default;

  /// Space separated signed integers, "" for the identity.
  std::string to_string() const;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

/// Whitespace-separated nonzero integers, negatives are inverses. The strand
/// count is 1 + max|letter| unless a larger explicit count is given.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

struct BraidStats {
  int writhe = 0;
  int strands = 1;
  int self_linking = 0;
  /// permutation[i-1] = final position of the strand starting at i.
  std::vector<int> permutation;
  int components = 1;
  bool is_knot = true;
};

BraidStats braid_stats(const BraidWord& b);

enum class MoveKind { Conjugate, StabPos, StabNeg };

struct MarkovMove {
  MoveKind kind = MoveKind::Conjugate;
  int k = 1;      // conjugate only
  int sign = 1;   // conjugate: result is sigma_k^{-sign} B sigma_k^{sign}
  static MarkovMove conjugate(int k, int sign) { return {MoveKind::Conjugate, k, sign}; }
  static MarkovMove stab_pos() { return {MoveKind::StabPos, 1, 1}; }
  static MarkovMove stab_neg() { return {MoveKind::StabNeg, 1, -1}; }
};

/// Conjugation is literal concatenation. Stabilization shifts every index
/// up by one (new strand 1) and appends sigma_1^{+-1}.
BraidWord markov_move(const BraidWord& b, const MarkovMove& move);

enum class TransformKind { Reverse, Star, Inverse };

/// reverse: letters in reverse order. star: sigma_k -> sigma_{n-k}^{-1}.
/// inverse: reversed order with every sign flipped.
BraidWord braid_transform(const BraidWord& b, TransformKind kind);

/// Cyclic rotation by r letters (a conjugation).
BraidWord rotate(const BraidWord& b, std::size_t r);

}  // namespace xverse
