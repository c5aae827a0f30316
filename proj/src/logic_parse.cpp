#include "frl/logic/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace frl::logic {

namespace {

struct Token {
  enum class Kind {
    Quant, Ident, Int, RingLit, PredG, PredP,
    Dot, LParen, RParen, Eq, Tilde, Amp, Pipe, Arrow,
    Star, Plus, Minus, Caret, End
  };
  Kind kind;
  std::string text;
  long long value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::size_t pos, std::string t = {}, long long v = 0) {
    out.push_back(Token{k, std::move(t), v, pos});
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == 'A' || c == 'E') {
      push(Token::Kind::Quant, start, std::string(1, c));
      ++i;
    } else if (c == 'G') {
      push(Token::Kind::PredG, start);
      ++i;
    } else if (c == 'P') {
      push(Token::Kind::PredP, start);
      ++i;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    } else if (std::islower(static_cast<unsigned char>(c))) {
      while (i < text.size() && (std::islower(static_cast<unsigned char>(text[i])) ||
                                 std::isdigit(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_'))
        ++i;
      push(Token::Kind::Ident, start, std::string(text.substr(start, i - start)));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string digits(text.substr(start, i - start));
      push(Token::Kind::Int, start, digits, std::strtoll(digits.c_str(), nullptr, 10));
    } else if (c == '[') {
      std::size_t close = text.find(']', i);
      if (close == std::string_view::npos) throw ParseError(start, "unterminated ring literal");
      push(Token::Kind::RingLit, start, std::string(text.substr(i, close - i + 1)));
      i = close + 1;
    } else if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        push(Token::Kind::Arrow, start);
        i += 2;
      } else {
        push(Token::Kind::Minus, start);
        ++i;
      }
    } else {
      Token::Kind k;
      switch (c) {
        case '.': k = Token::Kind::Dot; break;
        case '(': k = Token::Kind::LParen; break;
        case ')': k = Token::Kind::RParen; break;
        case '=': k = Token::Kind::Eq; break;
        case '~': k = Token::Kind::Tilde; break;
        case '&': k = Token::Kind::Amp; break;
        case '|': k = Token::Kind::Pipe; break;
        case '*': k = Token::Kind::Star; break;
        case '+': k = Token::Kind::Plus; break;
        case '^': k = Token::Kind::Caret; break;
        default: throw ParseError(start, std::string("unexpected character '") + c + "'");
      }
      push(k, start);
      ++i;
    }
  }
  push(Token::Kind::End, text.size());
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t idx = 0;
  Lang lang;
  int rank;
  const std::set<std::string>* vars;

  const Token& tok() const { return toks[idx]; }
  bool at(Token::Kind k) const { return tok().kind == k; }
  Token take() { return toks[idx++]; }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(tok().pos, what); }

  void expect(Token::Kind k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    ++idx;
  }

  // ---- terms ----

  long long exponent() {
    bool neg = false;
    if (at(Token::Kind::Minus) || at(Token::Kind::Plus)) {
      neg = at(Token::Kind::Minus);
      ++idx;
    }
    if (!at(Token::Kind::Int)) fail("expected integer exponent");
    Token t = take();
    if (t.value > 10000) throw ParseError(t.pos, "exponent out of range");
    return neg ? -t.value : t.value;
  }

  TermPtr atom_term() {
    switch (tok().kind) {
      case Token::Kind::Ident: {
        Token t = take();
        if (vars->count(t.text)) return t_var(t.text);
        if (t.text.size() == 1) {
          int g = t.text[0] - 'a' + 1;
          if (g >= 1 && g <= rank) return t_gen(g);
        }
        throw ParseError(t.pos, "unbound variable '" + t.text + "'");
      }
      case Token::Kind::Int: {
        Token t = take();
        if (t.value == 1) return t_one();
        if (t.value == 0) {
          if (lang == Lang::L0) throw ParseError(t.pos, "'0' is not an L0 term");
          return t_zero();
        }
        throw ParseError(t.pos, "integer terms other than 0 and 1 belong in ring literals");
      }
      case Token::Kind::RingLit: {
        Token t = take();
        if (lang == Lang::L0) throw ParseError(t.pos, "ring literals are not L0 terms");
        try {
          return t_ring(parse_ring_literal(t.text, rank));
        } catch (const std::invalid_argument& e) {
          throw ParseError(t.pos, e.what());
        }
      }
      case Token::Kind::LParen: {
        ++idx;
        TermPtr t = term();
        expect(Token::Kind::RParen, "')'");
        return t;
      }
      default: fail("expected term");
    }
  }

  TermPtr power() {
    TermPtr base = atom_term();
    while (at(Token::Kind::Caret)) {
      ++idx;
      base = t_pow(base, exponent());
    }
    return base;
  }

  TermPtr product() {
    TermPtr acc = power();
    while (at(Token::Kind::Star)) {
      ++idx;
      acc = t_mul(acc, power());
    }
    return acc;
  }

  TermPtr term() {
    bool lead_neg = false;
    if (at(Token::Kind::Minus)) {
      if (lang == Lang::L0) fail("'-' is not an L0 term operator");
      lead_neg = true;
      ++idx;
    }
    TermPtr acc = product();
    if (lead_neg) acc = t_neg(acc);
    while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
      if (lang == Lang::L0) fail("ring operations are not available in L0");
      bool minus = at(Token::Kind::Minus);
      ++idx;
      TermPtr rhs = product();
      acc = minus ? t_sub(acc, rhs) : t_add(acc, rhs);
    }
    return acc;
  }

  // ---- formulas ----

  FormulaPtr parse_atom() {
    if (at(Token::Kind::PredG) || at(Token::Kind::PredP)) {
      Token t = take();
      bool gamma = t.kind == Token::Kind::PredG;
      if (lang == Lang::L0)
        throw ParseError(t.pos, std::string("predicate ") + (gamma ? "G" : "P") + " is not in L0");
      expect(Token::Kind::LParen, "'('");
      TermPtr arg = term();
      expect(Token::Kind::RParen, "')'");
      return f_atom(gamma ? a_gamma(arg) : a_scalar(arg));
    }
    TermPtr l = term();
    expect(Token::Kind::Eq, "'='");
    TermPtr r = term();
    return f_atom(a_eq(l, r));
  }

  FormulaPtr primary() {
    // A '(' may open a parenthesized formula or a parenthesized term that
    // starts an equality atom; try the atom reading first and keep the
    // error that got further.
    std::size_t save = idx;
    ParseError atom_err(0, "");
    try {
      return parse_atom();
    } catch (const ParseError& e) {
      atom_err = e;
      idx = save;
    }
    try {
      expect(Token::Kind::LParen, "'(' or atom");
      FormulaPtr f = formula();
      expect(Token::Kind::RParen, "')'");
      return f;
    } catch (const ParseError& e) {
      throw e.position > atom_err.position ? e : atom_err;
    }
  }

  FormulaPtr negation() {
    if (at(Token::Kind::Tilde)) {
      ++idx;
      return f_not(negation());
    }
    return primary();
  }

  FormulaPtr conjunction() {
    std::vector<FormulaPtr> kids{negation()};
    while (at(Token::Kind::Amp)) {
      ++idx;
      kids.push_back(negation());
    }
    return f_and(std::move(kids));
  }

  FormulaPtr disjunction() {
    std::vector<FormulaPtr> kids{conjunction()};
    while (at(Token::Kind::Pipe)) {
      ++idx;
      kids.push_back(conjunction());
    }
    return f_or(std::move(kids));
  }

  FormulaPtr formula() {
    FormulaPtr l = disjunction();
    if (at(Token::Kind::Arrow)) {
      ++idx;
      return f_implies(l, formula()); // right-associative
    }
    return l;
  }
};

} // namespace

Sentence parse_sentence(std::string_view text, Lang lang, int rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  Sentence s;
  s.lang = lang;
  std::set<std::string> declared;
  Parser p{lex(text), 0, lang, rank, &declared};
  while (p.at(Token::Kind::Quant)) {
    bool universal = p.take().text == "A";
    if (!p.at(Token::Kind::Ident)) p.fail("expected variable after quantifier");
    std::string var = p.take().text;
    p.expect(Token::Kind::Dot, "'.'");
    declared.insert(var);
    s.prefix.push_back(Quantifier{universal, var});
  }
  s.matrix = p.formula();
  if (!p.at(Token::Kind::End)) p.fail("trailing input");
  return s;
}

FormulaPtr parse_matrix(std::string_view text, Lang lang, int rank,
                        const std::set<std::string>& declared_vars) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  Parser p{lex(text), 0, lang, rank, &declared_vars};
  FormulaPtr f = p.formula();
  if (!p.at(Token::Kind::End)) p.fail("trailing input");
  return f;
}

} // namespace frl::logic
