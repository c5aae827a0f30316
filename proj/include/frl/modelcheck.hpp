#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "frl/groupring.hpp"
#include "frl/logic/ast.hpp"
#include "frl/permutation.hpp"
#include "frl/word.hpp"

namespace frl::modelcheck {

/// Explicit models for quantifier-free evaluation: the free group F, the
/// free group ring Z[F], a finite symmetric group S_n, or a group ring
/// Z_m[S_n] (m >= 2; primality is up to the caller, which is what lets
/// Z_4[S_1]-style toy models exist).
struct Model {
  enum class Kind { FreeGroup, FreeGroupRing, SymmetricGroup, SymmetricGroupRing };
  Kind kind = Kind::FreeGroup;
  int rank = 2;             // free-group models
  int degree = 1;           // symmetric models
  std::int64_t modulus = 2; // SymmetricGroupRing coefficients

  static Model free_group(int rank) { return {Kind::FreeGroup, rank, 1, 2}; }
  static Model free_group_ring(int rank) { return {Kind::FreeGroupRing, rank, 1, 2}; }
  static Model symmetric(int degree) { return {Kind::SymmetricGroup, 2, degree, 2}; }
  static Model symmetric_ring(int degree, std::int64_t modulus) {
    return {Kind::SymmetricGroupRing, 2, degree, modulus};
  }

  bool group_sorted() const {
    return kind == Kind::FreeGroup || kind == Kind::SymmetricGroup;
  }
  logic::Lang lang() const { return group_sorted() ? logic::Lang::L0 : logic::Lang::L2; }
  std::string str() const;
};

using Value = std::variant<ReducedWord, Permutation, FreeRingElem, PermRingElem>;

/// Total map from the target formula's free variables to model values.
using Assignment = std::map<std::string, Value>;

std::string value_str(const Value& v);

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Standard truth evaluation of a quantifier-free matrix. G(t) holds iff
/// the value of t is a single group element with coefficient exactly +1;
/// P(t) holds iff the support is contained in {identity} (a scalar,
/// including 0). Throws EvalError on unbound variables and sort misuse.
bool eval_qf(const logic::FormulaPtr& matrix, const Assignment& sigma, const Model& model);

/// Enumeration bounds: group-sort variables range over ball(word_len)
/// (or the whole finite group), ring-sort variables over elements with
/// support size <= support_size and coefficients in [-coeff, coeff]
/// (nonzero residues capped by coeff in the mod-m case).
struct DomainBounds {
  int word_len = 2;
  int support_size = 2;
  std::int64_t coeff = 2;
};

/// The domain induced by the bounds, in canonical order: shortlex words
/// (or lexicographic permutations), then supports by size and index, then
/// lexicographic coefficient vectors (coefficient values ordered
/// 1, -1, 2, -2, ...); ring domains start at 0.
std::vector<Value> enumerate_domain(const Model& model, const DomainBounds& b);

struct Verdict {
  enum class Kind { HoldsAtBound, Refuted, Witness, NoWitnessAtBound };
  Kind kind;
  DomainBounds bounds;
  std::optional<Assignment> assignment; // Refuted / Witness

  bool holds() const { return kind == Kind::HoldsAtBound; }
  std::string kind_str() const;
};

/// Checks a universal prenex sentence over all assignments within bounds.
/// A refutation reports the canonically first falsifying assignment
/// (first prefix variable most significant). Bounded: holds-at-bound
/// never claims unbounded truth.
Verdict check_universal_bounded(const logic::Sentence& s, const DomainBounds& b,
                                const Model& model);

/// First witness of an existential prenex sentence in canonical order.
Verdict witness_search(const logic::Sentence& s, const DomainBounds& b, const Model& model);

/// For a primitive L0 sentence s, compares the matrix of negate_primitive(s)
/// in F against the matrix of the Horn translation in Z[F] under the
/// embedded assignment, over every group assignment within bounds. The
/// zero-divisor corollary makes disagreement impossible; any recorded
/// disagreement is a bug.
struct HarnessReport {
  unsigned long long total = 0;
  unsigned long long agreements = 0;
  std::vector<Assignment> disagreements;
  bool clean() const { return agreements == total; }
};
HarnessReport equivalence_harness(const logic::Sentence& s, const DomainBounds& b, int rank);

} // namespace frl::modelcheck
