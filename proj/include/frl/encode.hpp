#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frl/groupring.hpp"
#include "frl/logic/ast.hpp"

namespace frl::encode {

using logic::Sentence;

/// The central translation: a primitive L0 sentence
///   E x... (/\ u_i = 1  &  /\ ~(w_j = 1))
/// becomes the strict universal Horn sentence of L2
///   A x... ((/\ G(x_v) & /\ u_i = 1) -> (1 - w_1)...(1 - w_q) = 0)
/// with one G guard per prefix variable. General negated atoms ~(t = s)
/// contribute the factor 1 - t*s^-1. Requires at least one negated atom;
/// q = 0 has no strict-Horn conclusion and is rejected.
Sentence primitive_to_horn(const Sentence& s);

/// Ring commutative transitivity:
///   A x,y,z ((~P(y) & x*y = y*x & y*z = z*y) -> x*z = z*x).
Sentence rct_axiom();

/// Group commutative transitivity (commuting is transitive on non-identity
/// elements), in L0.
Sentence ct_axiom_group();

/// The n-torsion quasi-identity A x (x^n = 1 -> x = 1) in L0 and its
/// G-guarded strict universal Horn form in L2. Requires n >= 2.
std::pair<Sentence, Sentence> torsion_axiom(int n);

/// A x ((P(x) & x^2 = 0) -> x = 0) in L2.
Sentence square_zero_axiom();

/// Finite fragment of the diagram of Z[F]: all atomic and negated atomic
/// sentences over the given constants and the terms obtained from them by
/// at most `depth` applications of + and *. Equalities are asserted when
/// they hold in Z[F], inequations otherwise, so every emitted sentence is
/// true there. Constants must be pairwise distinct after normalization.
std::vector<Sentence> diagram_fragment(const std::vector<FreeRingElem>& constants, int depth);

/// Term rendering of an element of Z[F]: embedded words multiplicatively
/// (products of generators), anything else as a bracket literal.
logic::TermPtr element_term(const FreeRingElem& value);

/// Named sentences with provenance labels (torsion-n, rct, ct,
/// square-zero, translated-horn, diagram-atom).
struct AxiomBundle {
  struct Entry {
    std::string label;
    Sentence sentence;
  };
  std::vector<Entry> entries;

  void add(std::string label, Sentence s) { entries.push_back({std::move(label), std::move(s)}); }

  /// Checks each member's classification against its label.
  bool consistent() const;
};

} // namespace frl::encode
