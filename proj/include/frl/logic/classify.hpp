#pragma once

#include <optional>
#include <vector>

#include "frl/logic/ast.hpp"

namespace frl::logic {

/// Syntactic classification flags. Horn-related flags are computed after
/// normalizing the matrix: implications rewritten as disjunctions,
/// negations pushed to the atoms, connectives flattened. A sentence whose
/// normal form is not a conjunction of literal clauses gets no Horn flags
/// (no distribution is attempted).
struct Classification {
  bool universal = false;           // every quantifier is A (empty prefix counts)
  bool existential = false;         // every quantifier is E
  bool primitive = false;           // existential, matrix a conjunction of literals
  bool basic_horn = false;          // single clause, <= 1 positive atom
  bool strict_basic_horn = false;   // single clause, exactly 1 positive atom
  bool horn = false;                // every clause has <= 1 positive atom
  bool strict_universal_horn = false;
  bool quasi_identity = false;      // strict universal Horn with equational atoms only

  bool operator==(const Classification&) const = default;
};

Classification classify(const Sentence& s);

struct Literal {
  bool positive = true;
  Atom atom;
};

/// Negation normal form of the matrix as a conjunction of disjunctions of
/// literals, when it has that shape; nullopt otherwise.
std::optional<std::vector<std::vector<Literal>>> clause_form(const FormulaPtr& matrix);

/// Splits a conjunction of literals into positive atoms u_i (the equations)
/// and negated atoms w_j; nullopt if the matrix is not such a conjunction.
struct PrimitiveParts {
  std::vector<Atom> positives;
  std::vector<Atom> negatives;
};
std::optional<PrimitiveParts> primitive_parts(const FormulaPtr& matrix);

/// The negation of a primitive sentence, in implication form:
///   A x... ((/\ u_i = 1) -> (\/ w_j = 1)).
/// Requires s primitive with at least one negated atom (the disjunctive
/// conclusion must be nonempty). Throws std::invalid_argument otherwise.
Sentence negate_primitive(const Sentence& s);

} // namespace frl::logic
