#include "frl/groupring.hpp"

#include <cctype>
#include <cstdlib>

namespace frl {

FreeRingElem one_minus_product(const std::vector<ReducedWord>& gs) {
  FreeRingElem acc = free_ring_one();
  for (const ReducedWord& g : gs) {
    FreeRingElem factor = free_ring_one();
    factor.add_term(g, -1);
    acc = acc * factor;
  }
  return acc;
}

std::string ring_literal_str(const FreeRingElem& x) {
  if (x.is_zero()) return "[0]";
  std::string out = "[";
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    std::int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (g.is_identity())
      out += std::to_string(a);
    else if (a == 1)
      out += g.str();
    else
      out += std::to_string(a) + "*" + g.str();
  }
  out += ']';
  return out;
}

namespace {

struct LiteralParser {
  std::string_view text;
  std::size_t pos = 0;
  int rank;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("ring literal syntax error at position " + std::to_string(pos) +
                                ": " + what);
  }

  bool at_letter() {
    return pos < text.size() && text[pos] >= 'a' && text[pos] <= 'z';
  }

  long long parse_int() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::strtoll(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
  }

  long long parse_exponent() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    long long v = parse_int();
    if (v > 1000000) fail("exponent out of range");
    return neg ? -v : v;
  }

  // factor := ('1' | letter) ('^' int)?
  ReducedWord parse_factor() {
    skip_ws();
    ReducedWord base;
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
    } else if (at_letter()) {
      int g = text[pos] - 'a' + 1;
      if (g > rank) fail(std::string("generator '") + text[pos] + "' outside rank");
      base = ReducedWord::generator(g);
      ++pos;
    } else {
      fail("expected generator or 1");
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      base = base.pow(parse_exponent());
    }
    return base;
  }

  ReducedWord parse_word_tail(ReducedWord w) {
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      w = w * parse_factor();
      skip_ws();
    }
    return w;
  }

  // term := int ('*' word)? | word
  void parse_term(FreeRingElem& acc, std::int64_t sign) {
    skip_ws();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::int64_t c = parse_int();
      skip_ws();
      ReducedWord w;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        w = parse_word_tail(parse_factor());
      } else if (pos < text.size() && text[pos] == '^') {
        // something like 1^-1: the digit was the identity word
        if (c != 1) fail("only the identity word may be written as 1");
        ++pos;
        parse_exponent();
        w = parse_word_tail(ReducedWord());
      }
      acc.add_term(w, sign * c);
    } else if (at_letter()) {
      acc.add_term(parse_word_tail(parse_factor()), sign);
    } else {
      fail("expected term");
    }
  }

  FreeRingElem parse_literal() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    FreeRingElem acc;
    skip_ws();
    std::int64_t sign = 1;
    if (pos < text.size() && text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    parse_term(acc, sign);
    skip_ws();
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      parse_term(acc, sign);
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
    ++pos;
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return acc;
  }
};

} // namespace

FreeRingElem parse_ring_literal(std::string_view text, int rank) {
  LiteralParser p{text, 0, rank};
  return p.parse_literal();
}

std::string perm_ring_str(const PermRingElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    std::int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += std::to_string(a) + "*";
    out += g.str();
  }
  return out;
}

} // namespace frl
