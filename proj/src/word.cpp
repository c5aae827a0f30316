#include "frl/word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace frl {

ReducedWord ReducedWord::reduce(const std::vector<Letter>& letters) {
  ReducedWord w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw std::invalid_argument("zero letter");
    if (!w.letters_.empty() && w.letters_.back() == static_cast<Letter>(-l))
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

ReducedWord ReducedWord::generator(int g, bool inverse) {
  if (g < 1 || g > kMaxRank) throw std::invalid_argument("generator index out of range");
  ReducedWord w;
  w.letters_.push_back(static_cast<Letter>(inverse ? -g : g));
  return w;
}

ReducedWord ReducedWord::operator*(const ReducedWord& rhs) const {
  ReducedWord w = *this;
  for (Letter l : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == static_cast<Letter>(-l))
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(static_cast<Letter>(-*it));
  return w;
}

ReducedWord ReducedWord::pow(long long n) const {
  if (n == 0 || letters_.empty()) return ReducedWord();
  ReducedWord base = n < 0 ? inverse() : *this;
  unsigned long long reps = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                                  : static_cast<unsigned long long>(n);
  // Cyclic reduction base = p * c * p^-1 makes the power p * c^reps * p^-1
  // with no cancellation at the seams, so the cost is linear in the output.
  const std::vector<Letter>& ls = base.letters_;
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == static_cast<Letter>(-ls[j - 1])) {
    ++i;
    --j;
  }
  if (2 * i + reps * (j - i) > 100'000'000)
    throw std::length_error("word power too large");
  std::vector<Letter> out(ls.begin(), ls.begin() + static_cast<long>(i));
  for (unsigned long long r = 0; r < reps; ++r)
    out.insert(out.end(), ls.begin() + static_cast<long>(i), ls.begin() + static_cast<long>(j));
  for (std::size_t k = i; k-- > 0;) out.push_back(static_cast<Letter>(-ls[k]));
  return reduce(out);
}

std::strong_ordering ReducedWord::operator<=>(const ReducedWord& rhs) const {
  if (letters_.size() != rhs.letters_.size())
    return letters_.size() <=> rhs.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    int a = letter_key(letters_[i]), b = letter_key(rhs.letters_[i]);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    Letter l = letters_[i];
    out += static_cast<char>('a' + (l > 0 ? l : -l) - 1);
    if (l < 0) out += "^-1";
  }
  return out;
}

namespace {

// factor := ('1' | letter) ('^' int)?
// word   := factor ('*' factor)*
struct WordParser {
  std::string_view text;
  std::size_t pos = 0;
  int rank;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("word syntax error at position " + std::to_string(pos) + ": " + what);
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer exponent");
    long long v = std::strtoll(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
    if (v > 1000000 || v < -1000000) fail("exponent out of range");
    return v;
  }

  ReducedWord parse_factor() {
    skip_ws();
    if (pos >= text.size()) fail("expected generator or 1");
    char c = text[pos];
    ReducedWord base;
    if (c == '1') {
      ++pos;
    } else if (c >= 'a' && c <= 'z') {
      int g = c - 'a' + 1;
      if (g > rank) fail(std::string("generator '") + c + "' outside rank");
      base = ReducedWord::generator(g);
      ++pos;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      base = base.pow(parse_int());
    }
    return base;
  }

  ReducedWord parse_word() {
    ReducedWord w = parse_factor();
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      w = w * parse_factor();
      skip_ws();
    }
    if (pos != text.size()) fail("trailing input");
    return w;
  }
};

} // namespace

ReducedWord ReducedWord::parse(std::string_view text, int rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  WordParser p{text, 0, rank};
  return p.parse_word();
}

std::vector<ReducedWord> ball(int rank, int radius) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  if (radius < 0) throw std::invalid_argument("negative radius");
  std::vector<Letter> ordered; // letters in shortlex key order
  for (int g = 1; g <= rank; ++g) {
    ordered.push_back(static_cast<Letter>(g));
    ordered.push_back(static_cast<Letter>(-g));
  }
  std::vector<ReducedWord> out{ReducedWord()};
  std::size_t level_begin = 0, level_end = 1;
  for (int l = 1; l <= radius; ++l) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Letter c : ordered) {
        const auto& w = out[i].letters();
        if (!w.empty() && w.back() == static_cast<Letter>(-c)) continue; // would cancel
        std::vector<Letter> ext = w;
        ext.push_back(c);
        out.push_back(ReducedWord::reduce(ext));
      }
    }
    level_begin = level_end;
    level_end = out.size();
  }
  return out;
}

unsigned long long ball_size(int rank, int radius) {
  unsigned long long total = 1, sphere = 2ull * rank;
  for (int l = 1; l <= radius; ++l) {
    total += sphere;
    sphere *= 2ull * rank - 1;
  }
  return total;
}

} // namespace frl
