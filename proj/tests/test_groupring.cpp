#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "frl/groupring.hpp"
#include "frl/zerodivisor.hpp"
#include "generators.hpp"

using namespace frl;
using testgen::random_nonzero_ring_elem;
using testgen::random_ring_elem;
using testgen::random_word;

namespace {

const ReducedWord a = ReducedWord::generator(1);
const ReducedWord b = ReducedWord::generator(2);

FreeRingElem lit(const char* text) { return parse_ring_literal(text, 2); }

// Naive convolution by listing all cross terms and summing after a sort,
// a separate accumulation route from the map in GroupRingElement.
FreeRingElem naive_mul(const FreeRingElem& x, const FreeRingElem& y) {
  std::vector<std::pair<ReducedWord, std::int64_t>> cross;
  for (const auto& [g, c] : x.terms())
    for (const auto& [h, d] : y.terms()) cross.emplace_back(g * h, c * d);
  std::sort(cross.begin(), cross.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  FreeRingElem out;
  std::size_t i = 0;
  while (i < cross.size()) {
    std::int64_t total = 0;
    std::size_t j = i;
    while (j < cross.size() && cross[j].first == cross[i].first) total += cross[j++].second;
    if (total != 0) out.add_term(cross[i].first, total);
    i = j;
  }
  return out;
}

} // namespace

TEST_CASE("addition and negation") {
  FreeRingElem x = lit("[2*a + b]");
  CHECK((x + (-x)).is_zero());
  CHECK(lit("[2*a + b]") + lit("[-1*b]") == lit("[2*a]"));
  CHECK(lit("[a]") + lit("[a]") == lit("[2*a]"));
}

TEST_CASE("domain mismatch is rejected") {
  FreeRingElem x = lit("[a]");
  FreeRingElem y(CoeffDomain::mod(5));
  y.add_term(a, 1);
  CHECK_THROWS_AS(x + y, std::invalid_argument);
  CHECK_THROWS_AS(x * y, std::invalid_argument);
}

TEST_CASE("multiplication: frozen expansions") {
  CHECK(lit("[1 - a]") * lit("[1 + a + a^2]") == lit("[1 - a^3]"));
  FreeRingElem p = lit("[1 - a]") * lit("[1 - b]");
  CHECK(p == lit("[1 - a - b + a*b]"));
  CHECK_FALSE(p.is_zero());
  FreeRingElem x = lit("[2*a*b^-1 + 3]");
  CHECK(free_ring_one() * x == x);
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(512);
  for (int i = 0; i < 1000; ++i) {
    FreeRingElem x = random_ring_elem(rng, 2, 3, 3, 3);
    FreeRingElem y = random_ring_elem(rng, 2, 3, 3, 3);
    FreeRingElem z = random_ring_elem(rng, 2, 3, 3, 3);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x + FreeRingElem::zero() == x);
    CHECK(x * free_ring_one() == x);
    CHECK(x * y == naive_mul(x, y));
  }
}

TEST_CASE("augmentation") {
  CHECK(lit("[2*a + 3*b]").augmentation() == 5);
  CHECK(FreeRingElem::zero().augmentation() == 0);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    FreeRingElem x = random_ring_elem(rng, 2, 3, 3, 4);
    FreeRingElem y = random_ring_elem(rng, 2, 3, 3, 4);
    CHECK((x * y).augmentation() == x.augmentation() * y.augmentation());
  }
}

TEST_CASE("trivial units") {
  CHECK(is_trivial_unit(lit("[-1*a*b^-1]")));
  CHECK_FALSE(is_trivial_unit(lit("[1 + a]")));
  CHECK_FALSE(is_trivial_unit(lit("[2]")));
  CHECK_FALSE(is_trivial_unit(FreeRingElem::zero()));

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < 500; ++i) {
    FreeRingElem u = FreeRingElem::term(sign(rng) ? 1 : -1, random_word(rng, 2, 4));
    FreeRingElem v = FreeRingElem::term(sign(rng) ? 1 : -1, random_word(rng, 2, 4));
    CHECK(is_trivial_unit(u * v));
    CHECK(is_trivial_unit(trivial_unit_inverse(u)));
    CHECK(u * trivial_unit_inverse(u) == free_ring_one());
    std::int64_t aug = u.augmentation();
    CHECK((aug == 1 || aug == -1));
  }
}

TEST_CASE("one_minus_product vanishes exactly when a factor is trivial") {
  CHECK(one_minus_product({a, ReducedWord(), b}).is_zero());
  CHECK(one_minus_product({a, b}) == lit("[1 - a - b + a*b]"));
  CHECK(one_minus_product({}) == free_ring_one());

  // small exhaustive corollary check; the full q <= 3 sweep over ball(2)
  // is in the acceptance suite
  auto words = ball(2, 1);
  for (const ReducedWord& g1 : words) {
    for (const ReducedWord& g2 : words) {
      bool vanishes = one_minus_product({g1, g2}).is_zero();
      CHECK(vanishes == (g1.is_identity() || g2.is_identity()));
    }
  }
}

TEST_CASE("left and right translation") {
  CHECK(left_mul(a, FreeRingElem::zero()).is_zero());
  CHECK(left_mul(a, lit("[1 + b]")) == lit("[a + a*b]"));

  std::mt19937_64 rng(2718);
  for (int i = 0; i < 1000; ++i) {
    ReducedWord g = testgen::random_nonidentity_word(rng, 2, 2);
    FreeRingElem x = random_nonzero_ring_elem(rng, 2, 3, 3, 2);
    CHECK_FALSE(left_mul(g, x) == x);
    CHECK_FALSE(right_mul(x, g) == x);
  }
}

TEST_CASE("mod-m coefficients stay in [0, m)") {
  FreeRingElem x(CoeffDomain::mod(5));
  x.add_term(a, -1);
  CHECK(x.coeff(a) == 4);
  x.add_term(a, 1);
  CHECK(x.is_zero());
  CHECK_THROWS_AS(CoeffDomain::mod(1), std::invalid_argument);
}

TEST_CASE("ring literal syntax") {
  CHECK(lit("[1 - 1*a]") == free_ring_one() + FreeRingElem::term(-1, a));
  CHECK(lit("[2*a*b^-1 + 3]").coeff(a * b.inverse()) == 2);
  CHECK(lit("[2*a*b^-1 + 3]").coeff(ReducedWord()) == 3);
  CHECK(lit("[0*a]").is_zero());
  CHECK(lit("[0]").is_zero());
  CHECK(ring_literal_str(lit("[1 - 1*a]")) == "[1 - a]");
  CHECK(ring_literal_str(FreeRingElem::zero()) == "[0]");
  CHECK(ring_literal_str(lit("[ - 2*b + a ]")) == "[a - 2*b]");
  CHECK_THROWS_AS(lit("1 - a"), std::invalid_argument);
  CHECK_THROWS_AS(lit("[1 -]"), std::invalid_argument);
  CHECK_THROWS_AS(lit("[c]"), std::invalid_argument);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    FreeRingElem x = random_ring_elem(rng, 2, 3, 4, 5);
    CHECK(parse_ring_literal(ring_literal_str(x), 2) == x);
  }
}

TEST_CASE("zero divisor probe: 1 - g is not a zero divisor in Z[F]") {
  CHECK_FALSE(zero_divisor_probe(lit("[1 - a]"), 3, 2).has_value());
  CHECK_FALSE(zero_divisor_probe(lit("[1 - a*b]"), 2, 2).has_value());
  CHECK_THROWS_AS(zero_divisor_probe(FreeRingElem::zero(), 2, 2), std::invalid_argument);
}

TEST_CASE("zero divisor probe: 1 - g in Z[C_n] is annihilated by the norm element") {
  for (int n : {2, 3, 4, 6}) {
    auto group = cyclic_group(n);
    Permutation g = Permutation::cycle(n);
    PermRingElem u = PermRingElem::embed(Permutation(n)) - PermRingElem::embed(g);
    auto witness = zero_divisor_probe(u, group);
    REQUIRE(witness.has_value());
    CHECK((u * *witness).is_zero());
    // canonical witness is exactly 1 + g + ... + g^{n-1}
    PermRingElem norm(CoeffDomain::integers());
    for (const Permutation& h : group) norm.add_term(h, 1);
    CHECK(*witness == norm);
  }
}

TEST_CASE("zero divisor probe returns exact witnesses for composite elements") {
  // (1 - a)(1 + a) = 1 - a^2 has no annihilator at small radius either
  CHECK_FALSE(zero_divisor_probe(lit("[1 - a^2]"), 2, 2).has_value());
  // but in Z[C_2 x 1] embedded via permutations, (1 - g)(1 + g) = 0
  auto group = cyclic_group(2);
  Permutation g = Permutation::cycle(2);
  PermRingElem u = PermRingElem::embed(Permutation(2)) + PermRingElem::embed(g);
  auto witness = zero_divisor_probe(u, group);
  REQUIRE(witness.has_value());
  CHECK((u * *witness).is_zero());
}
