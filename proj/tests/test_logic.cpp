#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "frl/logic/ast.hpp"
#include "frl/logic/classify.hpp"
#include "frl/logic/parse.hpp"
#include "frl/logic/print.hpp"
#include "generators.hpp"

using namespace frl;
using namespace frl::logic;

namespace {

Sentence parse0(const std::string& text) { return parse_sentence(text, Lang::L0, 2); }
Sentence parse2(const std::string& text) { return parse_sentence(text, Lang::L2, 2); }

} // namespace

TEST_CASE("parsing the torsion shape") {
  Sentence s = parse0("A x . (x*x = 1 -> x = 1)");
  REQUIRE(s.prefix.size() == 1);
  CHECK(s.prefix[0].universal);
  REQUIRE(s.matrix->kind == Formula::Kind::Implies);
  const Atom& left = s.matrix->lhs->atom;
  CHECK(term_equal(left.lhs, t_mul(t_var("x"), t_var("x"))));
  CHECK(term_equal(left.rhs, t_one()));

  Sentence e = parse0("E x . ~(x = 1)");
  CHECK_FALSE(e.prefix[0].universal);
  CHECK(e.matrix->kind == Formula::Kind::Not);
}

TEST_CASE("wrong-language constructs are rejected with positions") {
  CHECK_THROWS_AS(parse0("A x . G(x)"), ParseError);
  CHECK_THROWS_AS(parse0("A x . P(x)"), ParseError);
  CHECK_THROWS_AS(parse0("A x . x + x = 1"), ParseError);
  CHECK_THROWS_AS(parse0("A x . [1 - a] = 1"), ParseError);
  CHECK_THROWS_AS(parse0("x = 1 & "), ParseError);
  CHECK_THROWS_AS(parse0("A x . y = 1"), ParseError); // unbound variable
  CHECK_THROWS_AS(parse2("A x . c = 1"), ParseError); // generator outside rank 2
  try {
    parse0("A x . (x*x = 1 -> x = ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position > 0);
  }
}

TEST_CASE("golden corpus prints bit-exactly and round-trips") {
  const std::vector<std::pair<Lang, std::string>> corpus = {
      {Lang::L0, "A x . (x^2 = 1 -> x = 1)"},
      {Lang::L0, "A x . (x^6 = 1 -> x = 1)"},
      {Lang::L2, "A x . ((G(x) & x^2 = 1) -> x = 1)"},
      {Lang::L2, "A x . ((P(x) & x^2 = 0) -> x = 0)"},
      {Lang::L2, "A x . A y . A z . ((~P(y) & x*y = y*x & y*z = z*y) -> x*z = z*x)"},
      {Lang::L0, "A x . A y . A z . ((~(y = 1) & x*y = y*x & y*z = z*y) -> x*z = z*x)"},
      {Lang::L0, "E x . (x*x = 1 & ~(x = 1))"},
      {Lang::L0, "E x . E y . (x*y = y*x & ~(x = 1) & ~(y = 1))"},
      {Lang::L2, "A x . ((G(x) & x*x = 1) -> 1 - x = 0)"},
      {Lang::L2, "A x . A y . ((G(x) & G(y)) -> (1 - x)*(1 - y) = 0)"},
      {Lang::L2, "A x . A y . ((G(x) & G(y) & x*y = 1) -> (1 - x*a)*(1 - y) = 0)"},
      {Lang::L0, "E x . ~(x = 1)"},
      {Lang::L0, "A x . x = 1"},
      {Lang::L0, "a*b = b*a"},
      {Lang::L2, "~(a*b = b*a)"},
      {Lang::L2, "a*a = [a*a]"},
      {Lang::L2, "1*1 = [1]"},
      {Lang::L2, "a + b = [a + b]"},
      {Lang::L2, "~(a = 1)"},
      {Lang::L2, "[3 + 2*a*b^-1] = [3 + 2*a*b^-1]"},
      {Lang::L2, "-a*b = [-a*b]"},
      {Lang::L2, "(1 - a)*(1 + a) = 1 - a^2"},
      {Lang::L0, "A x . A y . x*y^-1 = 1"},
      {Lang::L0, "E x . E y . (x*y*x^-1*y^-1 = 1 & ~(x*y = 1))"},
      {Lang::L2, "A x . (P(x) -> (x*x = 0 -> x = 0))"},
      {Lang::L2, "A x . A y . ((G(x) | P(y)) -> ~(x + y = 0))"},
      {Lang::L0, "A x . (x = 1 | ~(x*x = 1) | x*a = a*x)"},
      {Lang::L2, "E y . (y^2 + y = [2*b] & ~P(y))"},
      {Lang::L2, "A z . ~~(z = 0)"},
      {Lang::L0, "b^-1*a^-1*b*a = 1"},
  };
  for (const auto& [lang, text] : corpus) {
    Sentence s = parse_sentence(text, lang, 2);
    CHECK(print_sentence(s) == text);
    CHECK(sentence_equal(parse_sentence(print_sentence(s), lang, 2), s));
  }
}

TEST_CASE("zero-ary prefix prints the matrix only") {
  Sentence s = parse0("a*b = b*a");
  CHECK(s.prefix.empty());
  CHECK(print_sentence(s) == "a*b = b*a");
}

TEST_CASE("random ASTs round-trip through print and parse") {
  for (Lang lang : {Lang::L0, Lang::L2}) {
    testgen::AstGen gen{std::mt19937_64(lang == Lang::L0 ? 101 : 202), lang, {}};
    for (int i = 0; i < 1000; ++i) {
      Sentence s = gen.sentence();
      std::string text = print_sentence(s);
      CAPTURE(text);
      Sentence back = parse_sentence(text, lang, 2);
      CHECK(sentence_equal(back, s));
      CHECK(print_sentence(back) == text);
    }
  }
}

TEST_CASE("classification of the named axiom shapes") {
  Classification torsion0 = classify(parse0("A x . (x^2 = 1 -> x = 1)"));
  CHECK(torsion0.universal);
  CHECK(torsion0.quasi_identity);
  CHECK(torsion0.strict_universal_horn);
  CHECK(torsion0.horn);

  Classification torsion2 = classify(parse2("A x . ((G(x) & x^2 = 1) -> x = 1)"));
  CHECK(torsion2.strict_universal_horn);
  CHECK_FALSE(torsion2.quasi_identity); // G is not equational

  Classification rct =
      classify(parse2("A x . A y . A z . ((~P(y) & x*y = y*x & y*z = z*y) -> x*z = z*x)"));
  CHECK(rct.universal);
  CHECK_FALSE(rct.horn); // two positive atoms: P(y) and x*z = z*x
  CHECK_FALSE(rct.basic_horn);
  CHECK_FALSE(rct.strict_universal_horn);

  Classification prim = classify(parse0("E x . (x*x = 1 & ~(x = 1))"));
  CHECK(prim.existential);
  CHECK(prim.primitive);
  CHECK_FALSE(prim.universal);

  // disjunction of negated atoms: basic Horn but not strict
  Classification negs = classify(parse0("A x . (~(x = 1) | ~(x*a = a))"));
  CHECK(negs.basic_horn);
  CHECK_FALSE(negs.strict_basic_horn);

  // conjunction of two Horn clauses: Horn but not basic
  Classification conj = classify(parse0("A x . ((x = 1 -> x*a = a) & (x*a = a -> x = 1))"));
  CHECK(conj.horn);
  CHECK_FALSE(conj.basic_horn);

  // matrix whose normal form is not a clause conjunction gets no Horn flags
  Classification weird = classify(parse0("A x . (x = 1 | (x*a = a & x*b = b))"));
  CHECK_FALSE(weird.horn);
}

TEST_CASE("classification ignores vacuous quantifiers") {
  Classification base = classify(parse0("A x . (x^2 = 1 -> x = 1)"));
  Classification padded = classify(parse0("A y . A x . (x^2 = 1 -> x = 1)"));
  CHECK(base == padded);

  Classification ebase = classify(parse0("E x . ~(x = 1)"));
  Classification epadded = classify(parse0("E x . E y . ~(x = 1)"));
  CHECK(ebase == epadded);
}

TEST_CASE("empty prefix counts as both universal and existential") {
  Classification c = classify(parse0("a = 1"));
  CHECK(c.universal);
  CHECK(c.existential);
  CHECK(c.primitive);
  CHECK(c.strict_basic_horn); // single positive atom
  CHECK(c.quasi_identity);
}

TEST_CASE("clause normal form and double negation") {
  Sentence s = parse0("A x . ~~(x = 1)");
  auto clauses = clause_form(s.matrix);
  REQUIRE(clauses.has_value());
  REQUIRE(clauses->size() == 1);
  REQUIRE((*clauses)[0].size() == 1);
  CHECK((*clauses)[0][0].positive);

  // (A -> B) and (~A | B) normalize to the same clause
  auto c1 = clause_form(parse0("a*b = 1 -> a = 1").matrix);
  auto c2 = clause_form(parse0("~(a*b = 1) | a = 1").matrix);
  REQUIRE((c1.has_value() && c2.has_value()));
  REQUIRE(c1->size() == c2->size());
  for (std::size_t i = 0; i < (*c1)[0].size(); ++i) {
    CHECK((*c1)[0][i].positive == (*c2)[0][i].positive);
    CHECK(atom_equal((*c1)[0][i].atom, (*c2)[0][i].atom));
  }
}

TEST_CASE("negate_primitive produces the implication form") {
  Sentence s = parse0("E x . (x*x = 1 & ~(x = 1))");
  Sentence n = negate_primitive(s);
  CHECK(print_sentence(n) == "A x . (x*x = 1 -> x = 1)");

  Sentence only_neg = negate_primitive(parse0("E x . ~(x = 1)"));
  CHECK(print_sentence(only_neg) == "A x . x = 1");

  Sentence two = negate_primitive(parse0("E x . E y . (x*y = 1 & ~(x = 1) & ~(y = x))"));
  CHECK(print_sentence(two) == "A x . A y . (x*y = 1 -> (x = 1 | y = x))");

  CHECK_THROWS_AS(negate_primitive(parse0("E x . E y . x*y = y*x")), std::invalid_argument);
  CHECK_THROWS_AS(negate_primitive(parse0("A x . x = 1")), std::invalid_argument);
  CHECK_THROWS_AS(negate_primitive(parse0("E x . (x = 1 | a = 1)")), std::invalid_argument);
}
