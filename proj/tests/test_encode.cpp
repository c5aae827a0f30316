#include "doctest.h"

#include <random>
#include <stdexcept>

#include "frl/encode.hpp"
#include "frl/logic/classify.hpp"
#include "frl/logic/parse.hpp"
#include "frl/logic/print.hpp"
#include "frl/modelcheck.hpp"
#include "generators.hpp"

using namespace frl;
using namespace frl::logic;
using namespace frl::encode;

namespace {
Sentence parse0(const std::string& text) { return parse_sentence(text, Lang::L0, 2); }
} // namespace

TEST_CASE("primitive_to_horn: frozen translations") {
  CHECK(print_sentence(primitive_to_horn(parse0("E x . (x*x = 1 & ~(x = 1))"))) ==
        "A x . ((G(x) & x*x = 1) -> 1 - x = 0)");
  CHECK(print_sentence(primitive_to_horn(parse0("E x . E y . (~(x = 1) & ~(y = 1))"))) ==
        "A x . A y . ((G(x) & G(y)) -> (1 - x)*(1 - y) = 0)");
  // general negated atoms contribute 1 - t*s^-1
  CHECK(print_sentence(primitive_to_horn(parse0("E x . ~(x*a = a*x)"))) ==
        "A x . (G(x) -> 1 - x*a*(a*x)^-1 = 0)");
  CHECK_THROWS_AS(primitive_to_horn(parse0("E x . x = 1")), std::invalid_argument);
  CHECK_THROWS_AS(primitive_to_horn(parse0("A x . ~(x = 1)")), std::invalid_argument);
  CHECK_THROWS_AS(primitive_to_horn(parse_sentence("E x . ~(x = 1)", Lang::L2, 2)),
                  std::invalid_argument);
}

TEST_CASE("every translation is a strict universal Horn sentence over the same variables") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 200; ++i) {
    Sentence s = testgen::random_primitive(rng, 2, 2, 2);
    Sentence horn = primitive_to_horn(s);
    Classification c = classify(horn);
    CHECK(c.strict_universal_horn);
    CHECK(horn.lang == Lang::L2);
    REQUIRE(horn.prefix.size() == s.prefix.size());
    for (std::size_t v = 0; v < s.prefix.size(); ++v) {
      CHECK(horn.prefix[v].universal);
      CHECK(horn.prefix[v].var == s.prefix[v].var);
    }
    // and it parses back from its own print
    CHECK(sentence_equal(parse_sentence(print_sentence(horn), Lang::L2, 2), horn));
  }
}

TEST_CASE("rct axiom") {
  Sentence rct = rct_axiom();
  CHECK(print_sentence(rct) ==
        "A x . A y . A z . ((~P(y) & x*y = y*x & y*z = z*y) -> x*z = z*x)");
  Classification c = classify(rct);
  CHECK(c.universal);
  CHECK_FALSE(c.horn);
  CHECK(sentence_equal(parse_sentence(print_sentence(rct), Lang::L2, 2), rct));
}

TEST_CASE("group ct axiom") {
  Sentence ct = ct_axiom_group();
  CHECK(print_sentence(ct) ==
        "A x . A y . A z . ((~(y = 1) & x*y = y*x & y*z = z*y) -> x*z = z*x)");
  CHECK(classify(ct).universal);
  CHECK(ct.lang == Lang::L0);
}

TEST_CASE("torsion axioms") {
  auto [group_form, ring_form] = torsion_axiom(2);
  CHECK(print_sentence(group_form) == "A x . (x^2 = 1 -> x = 1)");
  CHECK(print_sentence(ring_form) == "A x . ((G(x) & x^2 = 1) -> x = 1)");
  for (int n = 2; n <= 6; ++n) {
    auto [g, r] = torsion_axiom(n);
    CHECK(classify(g).quasi_identity);
    CHECK(classify(r).strict_universal_horn);
    CHECK_FALSE(classify(r).quasi_identity);
  }
  CHECK_THROWS_AS(torsion_axiom(1), std::invalid_argument);
}

TEST_CASE("square-zero axiom") {
  Sentence sq = square_zero_axiom();
  CHECK(print_sentence(sq) == "A x . ((P(x) & x^2 = 0) -> x = 0)");
  CHECK(classify(sq).strict_universal_horn);
}

TEST_CASE("diagram fragments") {
  const ReducedWord a = ReducedWord::generator(1);
  const ReducedWord b = ReducedWord::generator(2);
  FreeRingElem one = free_ring_one();
  FreeRingElem ea = FreeRingElem::embed(a);
  FreeRingElem eb = FreeRingElem::embed(b);

  CHECK(diagram_fragment({}, 1).empty());
  CHECK_THROWS_AS(diagram_fragment({ea, ea}, 1), std::invalid_argument);

  std::vector<std::string> texts;
  for (const Sentence& s : diagram_fragment({ea, one}, 1)) texts.push_back(print_sentence(s));
  auto contains = [&](const std::string& t) {
    return std::find(texts.begin(), texts.end(), t) != texts.end();
  };
  CHECK(contains("a*a = [a*a]"));
  CHECK(contains("~(a = 1)"));
  CHECK(contains("a + 1 = [1 + a]"));
  CHECK(contains("a = a*1")); // same value, distinct terms

  texts.clear();
  for (const Sentence& s : diagram_fragment({ea, eb}, 1)) texts.push_back(print_sentence(s));
  CHECK(contains("~(a*b = b*a)"));

  // soundness: every emitted sentence evaluates true in Z[F]
  modelcheck::Model zf = modelcheck::Model::free_group_ring(2);
  for (const Sentence& s : diagram_fragment({ea, eb, one + ea}, 1)) {
    CAPTURE(print_sentence(s));
    CHECK(modelcheck::eval_qf(s.matrix, {}, zf));
  }
}

TEST_CASE("axiom bundle consistency") {
  AxiomBundle bundle;
  for (int n = 2; n <= 4; ++n) {
    auto [g, r] = torsion_axiom(n);
    bundle.add("torsion-" + std::to_string(n), g);
    bundle.add("torsion-" + std::to_string(n), r);
  }
  bundle.add("rct", rct_axiom());
  bundle.add("ct", ct_axiom_group());
  bundle.add("square-zero", square_zero_axiom());
  bundle.add("translated-horn", primitive_to_horn(parse0("E x . ~(x = 1)")));
  for (const Sentence& s : diagram_fragment({FreeRingElem::embed(ReducedWord::generator(1))}, 1))
    bundle.add("diagram-atom", s);
  CHECK(bundle.consistent());

  AxiomBundle broken;
  broken.add("square-zero", rct_axiom());
  CHECK_FALSE(broken.consistent());
}
