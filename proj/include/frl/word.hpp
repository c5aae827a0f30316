#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace frl {

/// Signed generator index: +g encodes the generator a_g, -g its inverse,
/// with g in 1..rank. Zero is never stored.
using Letter = std::int8_t;

constexpr int kMaxRank = 26; // generators print as a..z

/// Shortlex key of a single letter under the order a < a^-1 < b < b^-1 < ...
inline int letter_key(Letter l) {
  int g = l > 0 ? l : -l;
  return 2 * (g - 1) + (l < 0 ? 1 : 0);
}

/// A freely reduced word in the free group of some rank. The empty word is
/// the identity. Reduction happens eagerly at construction, so an
/// unreduced instance is unrepresentable.
class ReducedWord {
public:
  ReducedWord() = default;

  /// Builds the free reduction of the given letter sequence.
  static ReducedWord reduce(const std::vector<Letter>& letters);

  /// Single generator, g in 1..kMaxRank.
  static ReducedWord generator(int g, bool inverse = false);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  ReducedWord operator*(const ReducedWord& rhs) const;
  ReducedWord inverse() const;
  ReducedWord pow(long long n) const;

  bool operator==(const ReducedWord& rhs) const = default;

  /// Shortlex order: by length first, then letter keys left to right.
  std::strong_ordering operator<=>(const ReducedWord& rhs) const;

  /// Canonical text: `1` for the identity, otherwise `*`-joined letters
  /// with `^-1` marking inverse letters, e.g. `a*b^-1*a`.
  std::string str() const;

  /// Parses the word syntax (generators a..z, `^` with an integer
  /// exponent, `*`, identity `1`) and reduces. Throws std::invalid_argument
  /// on syntax errors or letters outside the rank.
  static ReducedWord parse(std::string_view text, int rank);

private:
  std::vector<Letter> letters_;
};

enum class WordOrder { One, Infinite };

/// Order of a free-group element: One for the identity, Infinite otherwise
/// (free groups are torsion-free).
inline WordOrder word_order(const ReducedWord& u) {
  return u.is_identity() ? WordOrder::One : WordOrder::Infinite;
}

/// All reduced words of length <= radius over the given rank, in shortlex
/// order. Cardinality is 1 + sum_{l=1..radius} 2k(2k-1)^(l-1).
std::vector<ReducedWord> ball(int rank, int radius);

/// Closed-form count matching ball()'s size.
unsigned long long ball_size(int rank, int radius);

} // namespace frl
